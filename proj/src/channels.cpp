#include "zec/channels.hpp"

#include <Eigen/Eigenvalues>

#include <map>
#include <utility>

namespace zec {

double Channel::cpt_residual() const {
    Matrix acc = Matrix::Zero(d_a, d_a);
    for (const Matrix& k : kraus) acc += k.adjoint() * k;
    return (acc - Matrix::Identity(d_a, d_a)).norm();
}

namespace {

// w[(a,b)] = K[b,a]
Vector choi_vector(const Matrix& k, int d_a, int d_b) {
    Vector w(static_cast<long>(d_a) * d_b);
    for (int a = 0; a < d_a; ++a)
        for (int b = 0; b < d_b; ++b) w(static_cast<long>(a) * d_b + b) = k(b, a);
    return w;
}

// row-major vec of a d x d matrix, index (a,a') = a*d + a'
Vector vec_rm(const Matrix& c) {
    const int d = static_cast<int>(c.rows());
    Vector v(static_cast<long>(d) * d);
    for (int a = 0; a < d; ++a)
        for (int a2 = 0; a2 < d; ++a2) v(static_cast<long>(a) * d + a2) = c(a, a2);
    return v;
}

}  // namespace

ChoiMatrix choi_from_channel(const Channel& e) {
    if (e.cpt_residual() > kTolOrtho)
        throw std::invalid_argument("choi_from_channel: Kraus family not trace-preserving");
    const long n = static_cast<long>(e.d_a) * e.d_b;
    Matrix sigma = Matrix::Zero(n, n);
    for (const Matrix& k : e.kraus) {
        Vector w = choi_vector(k, e.d_a, e.d_b);
        sigma += w * w.adjoint();
    }
    return ChoiMatrix{std::move(sigma), e.d_a, e.d_b, ChoiKind::Standard};
}

Channel channel_from_choi(const ChoiMatrix& s, double tol) {
    Matrix tr_b = partial_trace(s.m, s.d_a, s.d_b, Side::B);
    if ((tr_b - Matrix::Identity(s.d_a, s.d_a)).norm() > 1e-9)
        throw std::invalid_argument("channel_from_choi: not a standard Choi matrix");
    Eigen::SelfAdjointEigenSolver<Matrix> es((s.m + s.m.adjoint()) / 2.0);
    const double top = es.eigenvalues().cwiseAbs().maxCoeff();
    Channel e;
    e.d_a = s.d_a;
    e.d_b = s.d_b;
    for (long i = 0; i < es.eigenvalues().size(); ++i) {
        double lam = es.eigenvalues()(i);
        if (lam <= tol * top) continue;
        Vector w = std::sqrt(lam) * es.eigenvectors().col(i);
        Matrix k(s.d_b, s.d_a);
        for (int a = 0; a < s.d_a; ++a)
            for (int b = 0; b < s.d_b; ++b) k(b, a) = w(static_cast<long>(a) * s.d_b + b);
        e.kraus.push_back(std::move(k));
    }
    return e;
}

Matrix apply_channel(const Channel& e, const Matrix& rho) {
    if (rho.rows() != e.d_a || rho.cols() != e.d_a)
        throw std::invalid_argument("apply_channel: dimension mismatch");
    Matrix out = Matrix::Zero(e.d_b, e.d_b);
    for (const Matrix& k : e.kraus) out += k * rho * k.adjoint();
    return out;
}

Matrix apply_channel_choi(const ChoiMatrix& s, const Matrix& rho) {
    if (rho.rows() != s.d_a || rho.cols() != s.d_a)
        throw std::invalid_argument("apply_channel_choi: dimension mismatch");
    Matrix big = s.m * kron(rho.transpose(), Matrix::Identity(s.d_b, s.d_b));
    return partial_trace(big, s.d_a, s.d_b, Side::A);
}

Channel adjoint_channel(const Channel& e) {
    Channel adj;
    adj.d_a = e.d_b;
    adj.d_b = e.d_a;
    for (const Matrix& k : e.kraus) adj.kraus.push_back(k.adjoint());
    return adj;
}

ChoiMatrix choi_of_adjoint(const ChoiMatrix& s) {
    const long n = static_cast<long>(s.d_a) * s.d_b;
    Matrix out(n, n);
    for (int a = 0; a < s.d_a; ++a)
        for (int b = 0; b < s.d_b; ++b)
            for (int a2 = 0; a2 < s.d_a; ++a2)
                for (int b2 = 0; b2 < s.d_b; ++b2)
                    out(static_cast<long>(b) * s.d_a + a, static_cast<long>(b2) * s.d_a + a2) =
                        std::conj(s.m(static_cast<long>(a) * s.d_b + b,
                                      static_cast<long>(a2) * s.d_b + b2));
    return ChoiMatrix{std::move(out), s.d_b, s.d_a, s.kind};
}

ChoiMatrix composite_choi(const ChoiMatrix& rho) {
    const int da = rho.d_a, db = rho.d_b;
    const long n = static_cast<long>(da) * da;
    Matrix sigma = Matrix::Zero(n, n);
    Matrix block(da, da);
    for (int beta = 0; beta < db; ++beta)
        for (int gamma = 0; gamma < db; ++gamma) {
            for (int a = 0; a < da; ++a)
                for (int b = 0; b < da; ++b)
                    block(a, b) = rho.m(static_cast<long>(a) * db + beta,
                                        static_cast<long>(b) * db + gamma);
            if (block.norm() < 1e-300) continue;
            sigma += kron(block, block.conjugate());
        }
    return ChoiMatrix{std::move(sigma), da, da, ChoiKind::NonStandard};
}

ChoiMatrix composite_choi_from_kraus(const Channel& e) {
    const int da = e.d_a, db = e.d_b;
    const int n = e.kraus_count();
    // nonzero rows per Kraus operator
    std::vector<std::vector<int>> live(db);
    for (int k = 0; k < n; ++k)
        for (int b = 0; b < db; ++b)
            if (e.kraus[k].row(b).norm() > 0) live[b].push_back(k);
    // C_{kl} = K_k^T conj(K_l), accumulated over shared rows
    std::map<std::pair<int, int>, Matrix> blocks;
    for (int b = 0; b < db; ++b)
        for (int k : live[b])
            for (int l : live[b]) {
                auto it = blocks.find({k, l});
                if (it == blocks.end())
                    it = blocks.emplace(std::make_pair(k, l), Matrix::Zero(da, da)).first;
                it->second += e.kraus[k].row(b).transpose() * e.kraus[l].row(b).conjugate();
            }
    const long nn = static_cast<long>(da) * da;
    Matrix sigma = Matrix::Zero(nn, nn);
    for (const auto& [kl, c] : blocks) {
        Vector w = vec_rm(c);
        sigma += w * w.adjoint();
    }
    return ChoiMatrix{std::move(sigma), da, da, ChoiKind::NonStandard};
}

StandardizeResult standardize_choi(const ChoiMatrix& s, bool allow_shrink) {
    StandardizeResult out;
    out.rho_a = partial_trace(s.m, s.d_a, s.d_b, Side::B);
    Eigen::SelfAdjointEigenSolver<Matrix> es((out.rho_a + out.rho_a.adjoint()) / 2.0);
    const double top = es.eigenvalues().cwiseAbs().maxCoeff();
    out.support_dim = 0;
    for (long i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) > kTolRank * top) ++out.support_dim;
    if (out.support_dim < s.d_a && !allow_shrink)
        throw std::invalid_argument("standardize_choi: tr_B rank-deficient");
    out.rescale = hermitian_inv_sqrt(out.rho_a);
    Matrix op = kron(out.rescale, Matrix::Identity(s.d_b, s.d_b));
    out.choi = ChoiMatrix{op * s.m * op, s.d_a, s.d_b, ChoiKind::Standard};
    return out;
}

StandardizeResult standardize_composite(const ChoiMatrix& s) {
    if (s.d_a != s.d_b)
        throw std::invalid_argument("standardize_composite: expects A (x) A' layout");
    StandardizeResult out;
    out.rho_a = partial_trace(s.m, s.d_a, s.d_b, Side::B);
    out.support_dim = s.d_a;
    out.rescale = hermitian_inv_sqrt(out.rho_a);
    Matrix op = kron(out.rescale, out.rescale.conjugate());
    out.choi = ChoiMatrix{op * s.m * op, s.d_a, s.d_b, ChoiKind::NonStandard};
    return out;
}

Matrix SubspaceChannel::rho_ab_matrix() const {
    const long n = rho_vectors.empty() ? 0 : rho_vectors[0].size();
    Matrix rho = Matrix::Zero(n, n);
    for (const Vector& v : rho_vectors) rho += v * v.adjoint();
    return rho;
}

SubspaceChannel channel_from_subspace(const StateSubspace& s, const PsdBasis& psd) {
    const int da = s.d_a;
    const int de = static_cast<int>(psd.elements.size());
    if (s.d_a != s.d_b) throw std::invalid_argument("channel_from_subspace: dims not square");
    if (de != s.dim())
        throw std::invalid_argument("channel_from_subspace: PSD basis size != dim S");
    if (!same_subspace(subspace_from_matrices(psd.elements, da, da), s))
        throw std::invalid_argument("channel_from_subspace: PSD basis does not span S");
    const int db = da * de;

    // spectral vectors of each basis element, eigenvalues absorbed
    std::vector<std::vector<Vector>> psis(de);
    for (int k = 0; k < de; ++k) {
        const Matrix& m = psd.elements[k];
        Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
        const double top = es.eigenvalues().cwiseAbs().maxCoeff();
        for (long i = 0; i < es.eigenvalues().size(); ++i) {
            double lam = es.eigenvalues()(i);
            if (lam < -1e-10 * std::max(1.0, top))
                throw std::invalid_argument("channel_from_subspace: basis element not PSD");
            if (lam > kTolRank * top)
                psis[k].push_back(std::sqrt(lam) * es.eigenvectors().col(i));
        }
        if (static_cast<int>(psis[k].size()) > da)
            throw std::runtime_error("channel_from_subspace: rank overflow");
    }

    SubspaceChannel out;
    out.rho_a = Matrix::Zero(da, da);
    for (int k = 0; k < de; ++k) out.rho_a += psd.elements[k];
    Eigen::SelfAdjointEigenSolver<Matrix> es((out.rho_a + out.rho_a.adjoint()) / 2.0);
    if (es.eigenvalues()(0) < kTolRank * es.eigenvalues()(da - 1))
        throw std::invalid_argument("channel_from_subspace: tr_A' support deficient");
    out.rescale = hermitian_inv_sqrt(out.rho_a);

    out.rho_vectors.reserve(de);
    out.channel.d_a = da;
    out.channel.d_b = db;
    const long nn = static_cast<long>(da) * da;
    Matrix sigma = Matrix::Zero(nn, nn);
    for (int k = 0; k < de; ++k) {
        Vector v = Vector::Zero(static_cast<long>(da) * db);
        Vector sv = Vector::Zero(nn);
        Matrix kr = Matrix::Zero(db, da);
        for (size_t i = 0; i < psis[k].size(); ++i) {
            const Vector& psi = psis[k][i];
            const int b = k * da + static_cast<int>(i);
            for (int a = 0; a < da; ++a) v(static_cast<long>(a) * db + b) = psi(a);
            Vector scaled = out.rescale * psi;
            kr.row(b) = scaled.transpose();
            for (int a = 0; a < da; ++a)
                for (int a2 = 0; a2 < da; ++a2)
                    sv(static_cast<long>(a) * da + a2) += psi(a) * std::conj(psi(a2));
        }
        out.rho_vectors.push_back(std::move(v));
        out.channel.kraus.push_back(std::move(kr));
        sigma += sv * sv.adjoint();
    }
    out.sigma = ChoiMatrix{std::move(sigma), da, da, ChoiKind::NonStandard};
    if (out.channel.cpt_residual() > kTolOrtho)
        throw std::runtime_error("channel_from_subspace: CPT residual out of tolerance");
    return out;
}

StateSubspace support_subspace(const Matrix& psd, int d_a, int d_b, double tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> es((psd + psd.adjoint()) / 2.0);
    const double top = es.eigenvalues().cwiseAbs().maxCoeff();
    std::vector<long> keep;
    for (long i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) > tol * top) keep.push_back(i);
    Matrix basis(psd.rows(), static_cast<long>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i) basis.col(static_cast<long>(i)) = es.eigenvectors().col(keep[i]);
    StateSubspace out;
    out.basis = std::move(basis);
    out.d_a = d_a;
    out.d_b = d_b;
    return out;
}

NecessaryReport check_necessary(const ChoiMatrix& sigma) {
    NecessaryReport rep;
    StateSubspace supp = support_subspace(sigma.m, sigma.d_a, sigma.d_b);
    rep.support_dim = supp.dim();
    Matrix flipped(supp.basis.rows(), supp.basis.cols());
    for (int c = 0; c < supp.dim(); ++c)
        flipped.col(c) = flip(StateVector(supp.basis.col(c), supp.d_a, supp.d_b)).coeffs;
    rep.symmetry_distance = subspace_distance(supp.basis, flipped);
    rep.conjugate_symmetric = rep.symmetry_distance <= kTolAngle;
    if (rep.conjugate_symmetric) {
        PsdBasisSearch search = find_psd_basis(supp);
        rep.psd_basis_found = search.found;
        rep.best_min_eig = search.best_min_eig;
    }
    return rep;
}

}  // namespace zec
