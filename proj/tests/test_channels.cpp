#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zec/channels.hpp"
#include "zec/pipeline.hpp"

#include <Eigen/QR>

using namespace zec;

namespace {

// random channel through a Stinespring isometry
Channel random_channel(int d_a, int d_b, int n_kraus, Rng& rng) {
    Matrix g(static_cast<long>(n_kraus) * d_b, d_a);
    for (long r = 0; r < g.rows(); ++r)
        for (int c = 0; c < d_a; ++c) g(r, c) = Cplx(rng.next_gaussian(), rng.next_gaussian());
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(g.rows(), d_a);
    Channel e;
    e.d_a = d_a;
    e.d_b = d_b;
    for (int k = 0; k < n_kraus; ++k) e.kraus.push_back(q.middleRows(static_cast<long>(k) * d_b, d_b));
    return e;
}

Matrix random_density(int d, Rng& rng) {
    Matrix g = random_unit_matrix(d, d, rng);
    Matrix rho = g * g.adjoint();
    return rho / rho.trace();
}

}  // namespace

TEST_CASE("identity channel has the maximally entangled Choi matrix") {
    Channel id;
    id.d_a = id.d_b = 3;
    id.kraus = {Matrix::Identity(3, 3)};
    ChoiMatrix s = choi_from_channel(id);
    Vector omega = omega_state(3).coeffs;
    CHECK((s.m - omega * omega.adjoint()).norm() < 1e-14);
}

TEST_CASE("choi round trip and channel application") {
    Rng rng(21);
    Channel e = random_channel(3, 4, 5, rng);
    CHECK(e.cpt_residual() < 1e-12);
    ChoiMatrix s = choi_from_channel(e);
    // trace-preserving: tr_B of the Choi matrix is the identity
    Matrix ta = partial_trace(s.m, 3, 4, Side::B);
    CHECK((ta - Matrix::Identity(3, 3)).norm() < 1e-12);

    Matrix rho = random_density(3, rng);
    Matrix direct = apply_channel(e, rho);
    CHECK(std::abs(direct.trace() - Cplx(1.0, 0.0)) < 1e-12);
    CHECK((direct - apply_channel_choi(s, rho)).norm() < 1e-12);

    // Kraus recovered from the Choi matrix give the same channel
    Channel back = channel_from_choi(s);
    CHECK((apply_channel(back, rho) - direct).norm() < 1e-10);
}

TEST_CASE("adjoint channel satisfies the duality identity") {
    Rng rng(22);
    Channel e = random_channel(3, 4, 4, rng);
    Channel adj = adjoint_channel(e);
    Matrix rho = random_density(3, rng), sigma = random_density(4, rng);
    Cplx lhs = (apply_channel(e, rho) * sigma).trace();
    Cplx rhs = (rho * apply_channel(adj, sigma)).trace();
    CHECK(std::abs(lhs - rhs) < 1e-12);
    // and through the Choi matrices
    ChoiMatrix s = choi_from_channel(e);
    ChoiMatrix t = choi_of_adjoint(s);
    Cplx rhs2 = (rho * apply_channel_choi(t, sigma)).trace();
    CHECK(std::abs(lhs - rhs2) < 1e-12);
}

TEST_CASE("composite Choi: contraction and Kraus route agree") {
    Rng rng(23);
    Channel e = random_channel(3, 5, 4, rng);
    ChoiMatrix s = choi_from_channel(e);
    ChoiMatrix c1 = composite_choi(s);
    ChoiMatrix c2 = composite_choi_from_kraus(e);
    CHECK((c1.m - c2.m).norm() < 1e-11);
    CHECK(c1.d_a == 3);
    CHECK(c1.d_b == 3);
    // composite Choi matrices are Hermitian PSD (generally non-standard)
    CHECK((c1.m - c1.m.adjoint()).norm() < 1e-11);
    Eigen::SelfAdjointEigenSolver<Matrix> es(c1.m);
    CHECK(es.eigenvalues().minCoeff() > -1e-11);

    // identity channel: composite Choi is the maximally entangled projector
    Channel id;
    id.d_a = id.d_b = 3;
    id.kraus = {Matrix::Identity(3, 3)};
    Vector omega = omega_state(3).coeffs;
    CHECK((composite_choi_from_kraus(id).m - omega * omega.adjoint()).norm() < 1e-13);
}

TEST_CASE("standardization yields identity reduced state") {
    Rng rng(24);
    // a non-standard Choi matrix: conjugate a standard one by G (x) id
    Channel e = random_channel(3, 4, 3, rng);
    ChoiMatrix s = choi_from_channel(e);
    Matrix g = random_unit_matrix(3, 3, rng) + 2.0 * Matrix::Identity(3, 3);
    Matrix lift = kron(g, Matrix::Identity(4, 4));
    ChoiMatrix ns{lift * s.m * lift.adjoint(), 3, 4, ChoiKind::NonStandard};
    StandardizeResult res = standardize_choi(ns);
    Matrix ta = partial_trace(res.choi.m, 3, 4, Side::B);
    CHECK((ta - Matrix::Identity(3, 3)).norm() < 1e-9);
    CHECK(res.support_dim == 3);
}

TEST_CASE("channel from subspace reproduces the subspace as composite support") {
    auto [s, sym] = builtin_example();
    PsdBasisSearch psd = find_psd_basis(s);
    REQUIRE(psd.found);
    SubspaceChannel sc = channel_from_subspace(s, psd.basis);
    CHECK(sc.channel.d_a == 4);
    CHECK(sc.channel.d_b == 4 * s.dim());
    CHECK(sc.channel.cpt_residual() < 1e-10);

    StateSubspace supp = support_subspace(sc.sigma.m, 4, 4);
    CHECK(same_subspace(supp, s, 1e-7));

    // sigma agrees with the contraction of the assembled rho_AB
    ChoiMatrix rho{sc.rho_ab_matrix(), 4, sc.channel.d_b, ChoiKind::NonStandard};
    ChoiMatrix via = composite_choi(rho);
    CHECK((via.m - sc.sigma.m).norm() < 1e-9);
}

TEST_CASE("necessary-condition report on the built-in example") {
    auto [s, sym] = builtin_example();
    PsdBasisSearch psd = find_psd_basis(s);
    REQUIRE(psd.found);
    SubspaceChannel sc = channel_from_subspace(s, psd.basis);
    NecessaryReport rep = check_necessary(sc.sigma);
    CHECK(rep.conjugate_symmetric);
    CHECK(rep.psd_basis_found);
    CHECK(rep.support_dim == s.dim());
    CHECK(rep.passed());
}

TEST_CASE("necessary-condition report rejects an asymmetric support") {
    Rng rng(25);
    // random rank-3 PSD sigma: support almost surely not flip-invariant
    Matrix g = random_unit_matrix(9, 3, rng);
    ChoiMatrix sigma{g * g.adjoint(), 3, 3, ChoiKind::NonStandard};
    NecessaryReport rep = check_necessary(sigma);
    CHECK(!rep.conjugate_symmetric);
    CHECK(!rep.passed());
}
