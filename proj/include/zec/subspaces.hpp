#pragma once

#include "zec/qmat.hpp"
#include "zec/rng.hpp"

#include <optional>
#include <vector>

namespace zec {

// local unitary pair (U on the first factor, V on the second)
struct SymmetryPair {
    Matrix u;
    Matrix v;

    // U = id, V = antidiagonal
    static SymmetryPair standard(int d);
    bool is_standard() const;
};

struct PsdBasis {
    std::vector<Matrix> elements;
    double shift = 0.0;
};

struct PsdBasisSearch {
    bool found = false;
    PsdBasis basis;
    double best_min_eig = 0.0;  // best lambda_min achieved for a unit-norm element
};

bool is_conjugate_symmetric(const StateSubspace& s, double tol = kTolAngle);

// Orthonormalize a family of Hermitian matrices over the reals
// (Hilbert-Schmidt inner product).
std::vector<Matrix> real_orthonormalize(const std::vector<Matrix>& mats,
                                        double tol = kTolRank);

// Hermitian bases of the +1 / -1 eigenspaces of H -> XHX (d_a even).
void conjugation_eigenbases(int d_a, std::vector<Matrix>& plus,
                            std::vector<Matrix>& minus);

// Hermitian matrices whose states span S with real coefficients.
// Requires S conjugate-symmetric; size equals dim(S).
std::vector<Matrix> hermitian_basis(const StateSubspace& s, double tol = kTolAngle);

PsdBasisSearch find_psd_basis(const StateSubspace& s);

StateSubspace apply_local_unitaries(const StateSubspace& s, const SymmetryPair& sym);

StateSubspace symmetrize(const StateSubspace& s, const SymmetryPair& sym);

struct FdSample {
    StateSubspace subspace;
    int k = 0;
    uint64_t seed = 0;
    bool contains_omega = false;
};

FdSample sample_fd(int d_a, int d, int k, Rng& rng);

// contains omega, orthogonal to (id (x) X) omega; k = floor(d/2)
FdSample sample_positive_seeded(int d_a, int d, Rng& rng);

}  // namespace zec
