// Deciding whether a bipartite subspace (or its complement) contains a
// product state: exact decision through Groebner bases over Q(i), and a
// numerical alternating-maximization search for witnesses and evidence.

#pragma once

#include <optional>

#include "zec/groebner.hpp"
#include "zec/qmat.hpp"

namespace zec {

enum class Target { InSpan, InComplement };

// Bilinear membership system in variables psi_0..psi_{dA-1}, phi_0..phi_{dB-1}.
// InComplement: one equation per basis element of S; InSpan: per element of
// the exact complement.
Ideal build_bilinear_system(const ExactSubspace& s, Target target);

// Rank-one formulation: all 2x2 minors of sum_k x_k M_k, M_k the coefficient
// matrices of the basis of S itself (use on the complement to decide InComplement).
Ideal build_minor_system(const ExactSubspace& s);

struct CaseEvidence {
    std::string label;          // pinned variables, e.g. "psi2=1,phi0=1"
    bool trivial_basis;         // Groebner basis == {1}
    bool complete;              // budget survived
    std::uint64_t steps;
    std::vector<std::string> basis_text;
};

struct DetectionResult {
    enum class Verdict { Empty, Witness, Unknown };
    Verdict verdict = Verdict::Unknown;
    std::string method;         // "exact" or "numeric"
    Vector witness_a, witness_b;
    double witness_residual = 1.0;
    double best_overlap = 0.0;  // from the numeric search, when run
    std::vector<CaseEvidence> cases;
};

struct DetectOptions {
    GroebnerBudget budget;
    int numeric_restarts = 64;
    int numeric_iters = 200;
    std::uint64_t seed = 1;
    bool keep_basis_text = false;
};

DetectionResult decide_product_states(const ExactSubspace& s, Target target,
                                      const DetectOptions& opts = {});

// Alternating maximization of |Pi (psi (x) phi)|^2 over unit product states,
// Pi the projector onto `space`. Returns best overlap and the best pair.
struct NumericSearchResult {
    double best_overlap = 0.0;
    Vector psi, phi;
};
NumericSearchResult numeric_product_search(const StateSubspace& space,
                                           int restarts, int iters, Rng& rng);

// Residual of psi(x)phi against membership in span(space): norm of the
// component outside the space, after normalization.
double product_membership_residual(const StateSubspace& space,
                                   const Vector& psi, const Vector& phi);

} // namespace zec
