// Dense complex linear-algebra core: bipartite states, coefficient
// matrices, the flip operation, subspaces, complements, partial traces.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

#include "zec/rng.hpp"

namespace zec {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kTolOrtho = 1e-10;
inline constexpr double kTolRank = 1e-9;   // relative to leading singular value
inline constexpr double kTolAngle = 1e-8;  // principal-angle subspace equality

// Unnormalised bipartite state on C^{d_a} (x) C^{d_b}, coefficients in
// lexicographic product-basis order: coeffs[i*d_b + j] multiplies |i>|j>.
struct StateVector {
    Vector coeffs;
    int d_a = 0;
    int d_b = 0;

    StateVector() = default;
    StateVector(Vector c, int da, int db) : coeffs(std::move(c)), d_a(da), d_b(db) {
        if (coeffs.size() != static_cast<long>(da) * db)
            throw std::invalid_argument("StateVector: length != d_a*d_b");
    }
    int dim() const { return d_a * d_b; }
};

// Subspace of a bipartite space, stored as orthonormal basis columns.
struct StateSubspace {
    Matrix basis;  // (d_a*d_b) x dim, orthonormal columns
    int d_a = 0;
    int d_b = 0;

    int dim() const { return static_cast<int>(basis.cols()); }
    int ambient() const { return d_a * d_b; }
};

// State <-> coefficient matrix isomorphism.
Matrix state_to_matrix(const StateVector& psi);
StateVector matrix_to_state(const Matrix& m);

// Flip: swap of the two subsystems composed with entrywise conjugation.
StateVector flip(const StateVector& psi);
// Operator flip on H_A (x) H_B with d_a == d_b: M -> swap * conj(M) * swap.
Matrix flip_operator(const Matrix& m, int d_a, int d_b);

int schmidt_rank(const StateVector& psi, double tol = kTolRank);

// Deterministic rank-revealing orthonormalization of the columns of `raw`.
StateSubspace make_subspace(const Matrix& raw, int d_a, int d_b, double tol = kTolRank);
StateSubspace subspace_from_states(const std::vector<StateVector>& states);
StateSubspace subspace_from_matrices(const std::vector<Matrix>& mats, int d_a, int d_b);

StateSubspace orthogonal_complement(const StateSubspace& s);

// Largest sine of a principal angle between span(a) and span(b); 0 when equal.
double subspace_distance(const Matrix& a, const Matrix& b);
bool same_subspace(const StateSubspace& a, const StateSubspace& b, double tol = kTolAngle);
// True when every column of `vecs` lies in span(s.basis) within tol.
bool contains(const StateSubspace& s, const Matrix& vecs, double tol = kTolAngle);

enum class Side { A, B };
Matrix partial_trace(const Matrix& m, int d_a, int d_b, Side traced_out);

Matrix hermitian_sqrt(const Matrix& m, double tol = 1e-12);
// Pseudo-inverse square root: eigenvalues below tol*max treated as kernel.
Matrix hermitian_inv_sqrt(const Matrix& m, double tol = 1e-12);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix random_unit_matrix(int rows, int cols, Rng& rng);
Vector random_unit_vector(int n, Rng& rng);
StateVector omega_state(int d);       // sum_i |i,i>, unnormalised
Matrix antidiagonal_unitary(int d);   // X: ones on the antidiagonal

} // namespace zec
