#include "zec/qmat.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace zec {

Matrix state_to_matrix(const StateVector& psi) {
    Matrix m(psi.d_a, psi.d_b);
    for (int i = 0; i < psi.d_a; ++i)
        for (int j = 0; j < psi.d_b; ++j)
            m(i, j) = psi.coeffs(i * psi.d_b + j);
    return m;
}

StateVector matrix_to_state(const Matrix& m) {
    const int da = static_cast<int>(m.rows()), db = static_cast<int>(m.cols());
    Vector v(static_cast<long>(da) * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j)
            v(i * db + j) = m(i, j);
    return StateVector(std::move(v), da, db);
}

StateVector flip(const StateVector& psi) {
    if (psi.d_a != psi.d_b)
        throw std::invalid_argument("flip: requires d_a == d_b");
    const int d = psi.d_a;
    Vector v(psi.dim());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            v(j * d + i) = std::conj(psi.coeffs(i * d + j));
    return StateVector(std::move(v), d, d);
}

Matrix flip_operator(const Matrix& m, int d_a, int d_b) {
    if (d_a != d_b || m.rows() != m.cols() || m.rows() != static_cast<long>(d_a) * d_b)
        throw std::invalid_argument("flip_operator: requires square bipartite layout with d_a == d_b");
    const int d = d_a;
    Matrix out(m.rows(), m.cols());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    out(j * d + i, l * d + k) = std::conj(m(i * d + j, k * d + l));
    return out;
}

int schmidt_rank(const StateVector& psi, double tol) {
    if (psi.coeffs.norm() == 0.0)
        throw std::invalid_argument("schmidt_rank: zero vector");
    Eigen::JacobiSVD<Matrix> svd(state_to_matrix(psi));
    const auto& sv = svd.singularValues();
    const double cut = tol * sv(0);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++r;
    return r;
}

StateSubspace make_subspace(const Matrix& raw, int d_a, int d_b, double tol) {
    if (raw.rows() != static_cast<long>(d_a) * d_b)
        throw std::invalid_argument("make_subspace: row count != d_a*d_b");
    if (raw.cols() == 0)
        throw std::invalid_argument("make_subspace: empty generating set");
    Eigen::ColPivHouseholderQR<Matrix> qr(raw);
    qr.setThreshold(tol);
    const int r = static_cast<int>(qr.rank());
    if (r == 0)
        throw std::invalid_argument("make_subspace: zero subspace");
    Matrix q = qr.householderQ() * Matrix::Identity(raw.rows(), r);
    StateSubspace s;
    s.basis = std::move(q);
    s.d_a = d_a;
    s.d_b = d_b;
    return s;
}

StateSubspace subspace_from_states(const std::vector<StateVector>& states) {
    if (states.empty()) throw std::invalid_argument("subspace_from_states: empty");
    Matrix raw(states[0].dim(), static_cast<long>(states.size()));
    for (size_t c = 0; c < states.size(); ++c) {
        if (states[c].d_a != states[0].d_a || states[c].d_b != states[0].d_b)
            throw std::invalid_argument("subspace_from_states: mixed dims");
        raw.col(static_cast<long>(c)) = states[c].coeffs;
    }
    return make_subspace(raw, states[0].d_a, states[0].d_b);
}

StateSubspace subspace_from_matrices(const std::vector<Matrix>& mats, int d_a, int d_b) {
    std::vector<StateVector> states;
    states.reserve(mats.size());
    for (const auto& m : mats) states.push_back(matrix_to_state(m));
    for (auto& st : states) {
        if (st.d_a != d_a || st.d_b != d_b)
            throw std::invalid_argument("subspace_from_matrices: shape mismatch");
    }
    return subspace_from_states(states);
}

StateSubspace orthogonal_complement(const StateSubspace& s) {
    const int n = s.ambient(), d = s.dim();
    if (d >= n)
        throw std::invalid_argument("orthogonal_complement: full space has empty complement");
    // Columns of Q beyond the first d span the complement exactly.
    Eigen::HouseholderQR<Matrix> qr(s.basis);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    StateSubspace out;
    out.basis = q.rightCols(n - d);
    out.d_a = s.d_a;
    out.d_b = s.d_b;
    // Orientation of the tail columns is arbitrary but deterministic; ensure
    // orthogonality to s within rounding.
    return out;
}

double subspace_distance(const Matrix& a, const Matrix& b) {
    // max over columns of a of the residual after projecting onto span(b),
    // symmetrised. Both inputs must have orthonormal columns.
    auto one_sided = [](const Matrix& u, const Matrix& v) {
        Matrix resid = u - v * (v.adjoint() * u);
        double worst = 0.0;
        for (long c = 0; c < resid.cols(); ++c)
            worst = std::max(worst, resid.col(c).norm());
        return worst;
    };
    return std::max(one_sided(a, b), one_sided(b, a));
}

bool same_subspace(const StateSubspace& a, const StateSubspace& b, double tol) {
    if (a.d_a != b.d_a || a.d_b != b.d_b || a.dim() != b.dim()) return false;
    return subspace_distance(a.basis, b.basis) <= tol;
}

bool contains(const StateSubspace& s, const Matrix& vecs, double tol) {
    for (long c = 0; c < vecs.cols(); ++c) {
        Vector v = vecs.col(c);
        const double n = v.norm();
        if (n == 0.0) continue;
        v /= n;
        Vector resid = v - s.basis * (s.basis.adjoint() * v);
        if (resid.norm() > tol) return false;
    }
    return true;
}

Matrix partial_trace(const Matrix& m, int d_a, int d_b, Side traced_out) {
    if (m.rows() != m.cols() || m.rows() != static_cast<long>(d_a) * d_b)
        throw std::invalid_argument("partial_trace: dims not factorizable");
    if (traced_out == Side::B) {
        Matrix out = Matrix::Zero(d_a, d_a);
        for (int i = 0; i < d_a; ++i)
            for (int j = 0; j < d_a; ++j)
                for (int b = 0; b < d_b; ++b)
                    out(i, j) += m(i * d_b + b, j * d_b + b);
        return out;
    }
    Matrix out = Matrix::Zero(d_b, d_b);
    for (int i = 0; i < d_b; ++i)
        for (int j = 0; j < d_b; ++j)
            for (int a = 0; a < d_a; ++a)
                out(i, j) += m(a * d_b + i, a * d_b + j);
    return out;
}

static void check_hermitian(const Matrix& m) {
    const double asym = (m - m.adjoint()).norm();
    const double scale = std::max(1.0, m.norm());
    if (asym > 1e-12 * scale)
        throw std::invalid_argument("hermitian_*: input not Hermitian");
}

Matrix hermitian_sqrt(const Matrix& m, double tol) {
    check_hermitian(m);
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    const auto& ev = es.eigenvalues();
    const double cut = tol * std::max(1.0, ev.cwiseAbs().maxCoeff());
    Eigen::VectorXd root(ev.size());
    for (int i = 0; i < ev.size(); ++i)
        root(i) = ev(i) > cut ? std::sqrt(ev(i)) : 0.0;
    return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix hermitian_inv_sqrt(const Matrix& m, double tol) {
    check_hermitian(m);
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    const auto& ev = es.eigenvalues();
    const double cut = tol * std::max(1.0, ev.cwiseAbs().maxCoeff());
    Eigen::VectorXd root(ev.size());
    for (int i = 0; i < ev.size(); ++i)
        root(i) = ev(i) > cut ? 1.0 / std::sqrt(ev(i)) : 0.0;
    return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix random_unit_matrix(int rows, int cols, Rng& rng) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = Cplx(rng.next_gaussian(), rng.next_gaussian());
    m /= m.norm();
    return m;
}

Vector random_unit_vector(int n, Rng& rng) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = Cplx(rng.next_gaussian(), rng.next_gaussian());
    v /= v.norm();
    return v;
}

StateVector omega_state(int d) {
    Vector v = Vector::Zero(static_cast<long>(d) * d);
    for (int i = 0; i < d; ++i) v(i * d + i) = 1.0;
    return StateVector(std::move(v), d, d);
}

Matrix antidiagonal_unitary(int d) {
    Matrix x = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) x(i, d - 1 - i) = 1.0;
    return x;
}

} // namespace zec
