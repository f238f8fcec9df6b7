#pragma once

#include "zec/certificate.hpp"
#include "zec/channels.hpp"
#include "zec/exact.hpp"
#include "zec/productdetect.hpp"
#include "zec/subspaces.hpp"

#include <utility>

namespace zec {

// Built-in 4x4 example: two mutually orthogonal rank-8 matrix subspaces
// with exact integer entries, symmetry pair (id, X).
struct ExampleData {
    std::vector<ExactMat> s1;      // spans M(S1)
    std::vector<ExactMat> s1perp;  // spans M(S1^perp)
};
ExampleData example_matrices();

ExactSubspace builtin_example_exact();
std::pair<StateSubspace, SymmetryPair> builtin_example();

// Conditions for one zero-error bit through the joint channel while each
// channel alone has zero one-shot zero-error capacity:
// (a) no product state in S^perp   (b) none in S
// (c) flip(S) = S                  (d) flip((U(x)V)S) = (U(x)V)S
// (e) PSD basis for M(S)           (f) PSD basis for M((U(x)V)S^perp)
Certificate verify_one_shot(const StateSubspace& s, const SymmetryPair& sym,
                            const DetectOptions& opts = {},
                            const ExactSubspace* exact_s = nullptr);

// (c)-(f) as above plus strong-unextendibility entries (a')/(b'):
// k = 1 exact (when in exact range), k = 2 attempted for d_A <= 3,
// higher k theory-cited only for UPB-route subspaces.
Certificate verify_asymptotic(const StateSubspace& s, const SymmetryPair& sym,
                              const DetectOptions& opts = {},
                              const ExactSubspace* exact_s = nullptr,
                              bool cite_unextendible_basis = false);

// S^(x)k with tensor factors reordered to (A^k) (x) (A'^k).
StateSubspace tensor_power_subspace(const StateSubspace& s, int k);

struct SuperactivationInstance {
    StateSubspace s;   // S1
    StateSubspace s2;  // transpose of (U(x)V) S1^perp
    SymmetryPair sym;
    SubspaceChannel e1, e2;
    Certificate certificate;
    Vector witness_phi, witness_psi;  // unit inputs on A (x) A
    double witness_overlap = 1.0;
    int schmidt_phi = 0, schmidt_psi = 0;
    bool witness_verified = false;
};

SuperactivationInstance build_superactivation_pair(const StateSubspace& s,
                                                   const SymmetryPair& sym);

// Rescaled maximally entangled inputs; numeric polish if the analytic
// candidates miss tolerance.
void find_joint_witness(SuperactivationInstance& inst);

// |tr[(E1(x)E2)(phi)^dag (E1(x)E2)(psi)]| through the composite Choi
// matrices (scales to large output dimension) and directly through the
// Kraus outputs (small dims only).
double joint_overlap(const SubspaceChannel& e1, const SubspaceChannel& e2,
                     const Vector& phi, const Vector& psi);
double joint_overlap_direct(const Channel& e1, const Channel& e2,
                            const Vector& phi, const Vector& psi);

struct Upb {
    int d_a = 0, d_b = 0, m = 0;
    std::vector<std::pair<ExactVec, ExactVec>> states;  // (a_i, b_i) pairs
    ExactSubspace span;
    bool verified = false;  // exact Empty verdict on the complement
};

Upb random_upb(int d_a, int d_b, int m, Rng& rng, int max_retries = 10,
               const DetectOptions& opts = {});

// Product states a (x) conj(a) whose coefficient matrices are Hermitian
// rank-1 and Hilbert-Schmidt-orthogonal to the antidiagonal X; used to
// build large symmetric subspaces. Unextendibility is generic but only
// checked numerically at this scale.
Upb random_symmetric_upb(int d_a, int m, Rng& rng);

// UPB span -> symmetrize -> pad inside F_d (with omega, avoiding (id(x)X)omega)
// to exactly d_target dimensions.
StateSubspace strongly_unextendible_in_fd(int d_a, int d_target, Rng& rng);

SuperactivationInstance theorem1_instance(uint64_t seed, int d_a = 16);

}  // namespace zec
