#pragma once

#include "zec/qmat.hpp"
#include "zec/subspaces.hpp"

#include <vector>

namespace zec {

struct Channel {
    int d_a = 0;  // input dimension
    int d_b = 0;  // output dimension
    std::vector<Matrix> kraus;  // each d_b x d_a

    int kraus_count() const { return static_cast<int>(kraus.size()); }
    // || sum K_i^dag K_i - id ||
    double cpt_residual() const;
};

enum class ChoiKind { Standard, NonStandard };

// Operator on H_A (x) H_B, index (a,b) = a*d_b + b.
struct ChoiMatrix {
    Matrix m;
    int d_a = 0;
    int d_b = 0;
    ChoiKind kind = ChoiKind::Standard;
};

ChoiMatrix choi_from_channel(const Channel& e);
Channel channel_from_choi(const ChoiMatrix& s, double tol = kTolRank);

Matrix apply_channel(const Channel& e, const Matrix& rho);
// tr_A[sigma . rho^T (x) id], requires a standard Choi matrix
Matrix apply_channel_choi(const ChoiMatrix& s, const Matrix& rho);

// Kraus family {K_i^dag}; generally not trace-preserving
Channel adjoint_channel(const Channel& e);
ChoiMatrix choi_of_adjoint(const ChoiMatrix& s);

// Choi matrix of E*.E on H_A (x) H_A' via the tensor contraction
// sigma[(a,a'),(b,b')] = sum_{bc} rho[(a,b),(b,c)] conj(rho[(a',b),(b',c)]).
ChoiMatrix composite_choi(const ChoiMatrix& rho);
// Same map from the Kraus family; exploits row sparsity of the operators.
ChoiMatrix composite_choi_from_kraus(const Channel& e);

struct StandardizeResult {
    ChoiMatrix choi;
    Matrix rho_a;     // tr_B of the input
    Matrix rescale;   // rho_a^{-1/2}
    int support_dim = 0;
};

StandardizeResult standardize_choi(const ChoiMatrix& s, bool allow_shrink = false);

// Composite Choi matrices standardize symmetrically on both factors:
// sigma~ = (R (x) conj(R)) sigma (R (x) conj(R)), R = (tr_A' sigma)^{-1/2}.
StandardizeResult standardize_composite(const ChoiMatrix& s);

struct SubspaceChannel {
    Channel channel;
    std::vector<Vector> rho_vectors;  // rho_AB = sum_k v_k v_k^dag (unnormalised)
    ChoiMatrix sigma;                 // composite Choi on A (x) A', supp = S
    Matrix rho_a;                     // tr_B rho_AB = sum_k M_k
    Matrix rescale;                   // rho_a^{-1/2}
    Matrix rho_ab_matrix() const;     // assembled rho_AB (small dims only)
};

SubspaceChannel channel_from_subspace(const StateSubspace& s, const PsdBasis& psd);

struct NecessaryReport {
    bool conjugate_symmetric = false;
    double symmetry_distance = 0.0;
    bool psd_basis_found = false;
    double best_min_eig = 0.0;
    int support_dim = 0;
    bool passed() const { return conjugate_symmetric && psd_basis_found; }
};

StateSubspace support_subspace(const Matrix& psd, int d_a, int d_b, double tol = kTolRank);
NecessaryReport check_necessary(const ChoiMatrix& sigma);

}  // namespace zec
