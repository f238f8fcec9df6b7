#include "zec/subspaces.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>

namespace zec {

namespace {

RealVector real_vectorize(const Matrix& m) {
    const long n = m.rows() * m.cols();
    RealVector v(2 * n);
    for (long c = 0, idx = 0; c < m.cols(); ++c)
        for (long r = 0; r < m.rows(); ++r, ++idx) {
            v(idx) = m(r, c).real();
            v(idx + n) = m(r, c).imag();
        }
    return v;
}

Matrix real_unvectorize(const RealVector& v, int rows, int cols) {
    const long n = static_cast<long>(rows) * cols;
    Matrix m(rows, cols);
    for (long c = 0, idx = 0; c < cols; ++c)
        for (long r = 0; r < rows; ++r, ++idx)
            m(r, c) = Cplx(v(idx), v(idx + n));
    return m;
}

}  // namespace

std::vector<Matrix> real_orthonormalize(const std::vector<Matrix>& mats, double tol) {
    if (mats.empty()) return {};
    const int rows = static_cast<int>(mats[0].rows());
    const int cols = static_cast<int>(mats[0].cols());
    RealMatrix raw(2L * rows * cols, static_cast<long>(mats.size()));
    for (size_t i = 0; i < mats.size(); ++i) raw.col(static_cast<long>(i)) = real_vectorize(mats[i]);
    Eigen::ColPivHouseholderQR<RealMatrix> qr(raw);
    qr.setThreshold(tol * std::max(1.0, raw.norm()));
    const long rank = qr.rank();
    RealMatrix q = qr.householderQ() * RealMatrix::Identity(raw.rows(), rank);
    std::vector<Matrix> out;
    out.reserve(rank);
    for (long i = 0; i < rank; ++i) out.push_back(real_unvectorize(q.col(i), rows, cols));
    return out;
}

namespace {

double min_eigenvalue(const Matrix& h, Vector* evec = nullptr) {
    Eigen::SelfAdjointEigenSolver<Matrix> es((h + h.adjoint()) / 2.0);
    if (evec) *evec = es.eigenvectors().col(0);
    return es.eigenvalues()(0);
}

}  // namespace

SymmetryPair SymmetryPair::standard(int d) {
    return SymmetryPair{Matrix::Identity(d, d), antidiagonal_unitary(d)};
}

bool SymmetryPair::is_standard() const {
    const int d = static_cast<int>(u.rows());
    return (u - Matrix::Identity(d, d)).norm() < 1e-12 &&
           (v - antidiagonal_unitary(d)).norm() < 1e-12;
}

bool is_conjugate_symmetric(const StateSubspace& s, double tol) {
    if (s.d_a != s.d_b) throw std::invalid_argument("is_conjugate_symmetric: dims not square");
    Matrix flipped(s.basis.rows(), s.basis.cols());
    for (int c = 0; c < s.dim(); ++c) {
        StateVector psi(s.basis.col(c), s.d_a, s.d_b);
        flipped.col(c) = flip(psi).coeffs;
    }
    return subspace_distance(s.basis, flipped) <= tol;
}

std::vector<Matrix> hermitian_basis(const StateSubspace& s, double tol) {
    if (!is_conjugate_symmetric(s, tol))
        throw std::invalid_argument("hermitian_basis: subspace not conjugate-symmetric");
    std::vector<Matrix> candidates;
    for (int c = 0; c < s.dim(); ++c) {
        Matrix m = state_to_matrix(StateVector(s.basis.col(c), s.d_a, s.d_b));
        candidates.push_back((m + m.adjoint()) / 2.0);
        candidates.push_back((m - m.adjoint()) / Cplx(0, 2));
    }
    std::vector<Matrix> ortho = real_orthonormalize(candidates);
    if (static_cast<int>(ortho.size()) != s.dim())
        throw std::runtime_error("hermitian_basis: Hermitian span dimension mismatch");
    return ortho;
}

PsdBasisSearch find_psd_basis(const StateSubspace& s) {
    PsdBasisSearch out;
    if (!is_conjugate_symmetric(s)) return out;
    std::vector<Matrix> h = hermitian_basis(s);
    const int d = static_cast<int>(h.size());
    const int da = s.d_a;

    auto combo = [&](const RealVector& c) {
        Matrix p = Matrix::Zero(da, da);
        for (int i = 0; i < d; ++i) p += c(i) * h[i];
        return p;
    };

    // candidate 1: projection of the identity onto the span
    RealVector c_id(d);
    for (int i = 0; i < d; ++i) c_id(i) = h[i].trace().real();
    RealVector best_c = c_id;
    double best = -1e300;
    if (c_id.norm() > 1e-14) {
        best_c = c_id / c_id.norm();
        best = min_eigenvalue(combo(best_c));
    }

    // candidate 2: eigenvalue ascent from random span elements
    Rng rng(0x9d5bf1, 77);
    for (int trial = 0; trial < 32; ++trial) {
        RealVector c(d);
        for (int i = 0; i < d; ++i) c(i) = rng.next_gaussian();
        c.normalize();
        double cur = min_eigenvalue(combo(c));
        double step = 0.2;
        for (int it = 0; it < 200; ++it) {
            Vector u;
            min_eigenvalue(combo(c), &u);
            RealVector g(d);
            for (int i = 0; i < d; ++i) g(i) = (u.adjoint() * h[i] * u)(0).real();
            g -= g.dot(c) * c;
            if (g.norm() < 1e-13) break;
            RealVector c2 = (c + step * g / g.norm()).normalized();
            double v2 = min_eigenvalue(combo(c2));
            if (v2 > cur) {
                c = c2;
                cur = v2;
            } else {
                step /= 2;
                if (step < 1e-6) break;
            }
        }
        if (cur > best) {
            best = cur;
            best_c = c;
        }
    }

    out.best_min_eig = best;
    if (best <= 1e-8) return out;

    Matrix p = combo(best_c);
    int pivot = 0;
    for (int i = 1; i < d; ++i)
        if (std::abs(best_c(i)) > std::abs(best_c(pivot))) pivot = i;

    double worst = 0.0;
    for (int i = 0; i < d; ++i)
        if (i != pivot) worst = std::max(worst, std::abs(min_eigenvalue(h[i])));
    double c_shift = 1.0 + worst / best;

    out.basis.shift = c_shift;
    out.basis.elements.push_back(p);
    for (int i = 0; i < d; ++i)
        if (i != pivot) out.basis.elements.push_back(h[i] + c_shift * p);
    for (const Matrix& m : out.basis.elements)
        if (min_eigenvalue(m) < -1e-10) throw std::runtime_error("find_psd_basis: shifted element not PSD");
    StateSubspace span = subspace_from_matrices(out.basis.elements, da, da);
    if (span.dim() != d) throw std::runtime_error("find_psd_basis: span dimension lost");
    out.found = true;
    return out;
}

StateSubspace apply_local_unitaries(const StateSubspace& s, const SymmetryPair& sym) {
    if (sym.u.rows() != s.d_a || sym.v.rows() != s.d_b)
        throw std::invalid_argument("apply_local_unitaries: dims mismatch");
    Matrix op = kron(sym.u, sym.v);
    return make_subspace(op * s.basis, s.d_a, s.d_b);
}

StateSubspace symmetrize(const StateSubspace& s, const SymmetryPair& sym) {
    if (!sym.is_standard())
        throw std::invalid_argument("symmetrize: only the (id, X) pair is supported");
    const Matrix x = antidiagonal_unitary(s.d_a);
    std::vector<Matrix> gens;
    for (int c = 0; c < s.dim(); ++c) {
        Matrix m = state_to_matrix(StateVector(s.basis.col(c), s.d_a, s.d_b));
        gens.push_back(m);
        gens.push_back(m.adjoint());
        gens.push_back(x * m * x);
        gens.push_back(x * m.adjoint() * x);
    }
    return subspace_from_matrices(gens, s.d_a, s.d_b);
}

void conjugation_eigenbases(int d_a, std::vector<Matrix>& plus, std::vector<Matrix>& minus) {
    const Matrix x = antidiagonal_unitary(d_a);
    std::vector<Matrix> herm;
    for (int i = 0; i < d_a; ++i) {
        Matrix m = Matrix::Zero(d_a, d_a);
        m(i, i) = 1;
        herm.push_back(m);
    }
    const double s = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < d_a; ++i)
        for (int j = i + 1; j < d_a; ++j) {
            Matrix m = Matrix::Zero(d_a, d_a);
            m(i, j) = s;
            m(j, i) = s;
            herm.push_back(m);
            m(i, j) = Cplx(0, s);
            m(j, i) = Cplx(0, -s);
            herm.push_back(m);
        }
    std::vector<Matrix> p_raw, m_raw;
    for (const Matrix& h : herm) {
        Matrix conj_h = x * h * x;
        Matrix hp = (h + conj_h) / 2.0, hm = (h - conj_h) / 2.0;
        if (hp.norm() > 1e-12) p_raw.push_back(hp);
        if (hm.norm() > 1e-12) m_raw.push_back(hm);
    }
    plus = real_orthonormalize(p_raw);
    minus = real_orthonormalize(m_raw);
    if (static_cast<int>(plus.size()) != d_a * d_a / 2 ||
        static_cast<int>(minus.size()) != d_a * d_a / 2)
        throw std::runtime_error("conjugation_eigenbases: unexpected eigenspace dimensions");
}

namespace {

// random k-dim real-orthonormal subset of the real span of `basis`
std::vector<Matrix> random_real_subspace(const std::vector<Matrix>& basis, int k, Rng& rng) {
    const int n = static_cast<int>(basis.size());
    std::vector<Matrix> combos;
    for (int c = 0; c < k; ++c) {
        Matrix m = Matrix::Zero(basis[0].rows(), basis[0].cols());
        for (int i = 0; i < n; ++i) m += rng.next_gaussian() * basis[i];
        combos.push_back(m);
    }
    std::vector<Matrix> ortho = real_orthonormalize(combos);
    if (static_cast<int>(ortho.size()) != k)
        throw std::runtime_error("random_real_subspace: degenerate draw");
    return ortho;
}

FdSample assemble_fd(const std::vector<Matrix>& mats, int d_a, int k, uint64_t seed, bool has_omega) {
    FdSample out;
    out.subspace = subspace_from_matrices(mats, d_a, d_a);
    if (out.subspace.dim() != static_cast<int>(mats.size()))
        throw std::runtime_error("sample_fd: basis collapse");
    out.k = k;
    out.seed = seed;
    out.contains_omega = has_omega;
    return out;
}

}  // namespace

FdSample sample_fd(int d_a, int d, int k, Rng& rng) {
    if (d_a % 2 != 0) throw std::invalid_argument("sample_fd: d_a must be even");
    if (k < 0 || k > d || k > d_a * d_a / 2 || d - k > d_a * d_a / 2)
        throw std::invalid_argument("sample_fd: k out of range");
    std::vector<Matrix> plus, minus;
    conjugation_eigenbases(d_a, plus, minus);
    std::vector<Matrix> picked;
    if (k > 0) picked = random_real_subspace(plus, k, rng);
    if (d - k > 0) {
        std::vector<Matrix> neg = random_real_subspace(minus, d - k, rng);
        picked.insert(picked.end(), neg.begin(), neg.end());
    }
    return assemble_fd(picked, d_a, k, rng.seed(), false);
}

FdSample sample_positive_seeded(int d_a, int d, Rng& rng) {
    if (d_a % 2 != 0) throw std::invalid_argument("sample_positive_seeded: d_a must be even");
    const int k = d / 2;
    if (k < 1 || k > d_a * d_a / 2 - 1 || d - k > d_a * d_a / 2)
        throw std::invalid_argument("sample_positive_seeded: dimension constraints violated");
    std::vector<Matrix> plus, minus;
    conjugation_eigenbases(d_a, plus, minus);

    // deflate the identity and antidiagonal directions out of the + eigenspace
    const Matrix id_dir = Matrix::Identity(d_a, d_a) / std::sqrt(double(d_a));
    const Matrix x_dir = antidiagonal_unitary(d_a) / std::sqrt(double(d_a));
    std::vector<Matrix> deflated;
    for (const Matrix& p : plus) {
        Matrix q = p - (id_dir.adjoint() * p).trace() * id_dir - (x_dir.adjoint() * p).trace() * x_dir;
        if (q.norm() > 1e-10) deflated.push_back(q);
    }
    deflated = real_orthonormalize(deflated);
    if (static_cast<int>(deflated.size()) != d_a * d_a / 2 - 2)
        throw std::runtime_error("sample_positive_seeded: deflation dimension mismatch");

    std::vector<Matrix> picked;
    picked.push_back(id_dir);
    if (k - 1 > 0) {
        std::vector<Matrix> extra = random_real_subspace(deflated, k - 1, rng);
        picked.insert(picked.end(), extra.begin(), extra.end());
    }
    if (d - k > 0) {
        std::vector<Matrix> neg = random_real_subspace(minus, d - k, rng);
        picked.insert(picked.end(), neg.begin(), neg.end());
    }
    return assemble_fd(picked, d_a, k, rng.seed(), true);
}

}  // namespace zec
