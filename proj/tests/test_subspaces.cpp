#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zec/pipeline.hpp"
#include "zec/subspaces.hpp"

using namespace zec;

TEST_CASE("conjugate symmetry detection") {
    auto [s, sym] = builtin_example();
    CHECK(is_conjugate_symmetric(s));
    Rng rng(31);
    Matrix raw(16, 3);
    for (int c = 0; c < 3; ++c) raw.col(c) = random_unit_vector(16, rng);
    CHECK(!is_conjugate_symmetric(make_subspace(raw, 4, 4)));
}

TEST_CASE("hermitian basis spans the subspace with flip-invariant elements") {
    auto [s, sym] = builtin_example();
    std::vector<Matrix> h = hermitian_basis(s);
    CHECK(static_cast<int>(h.size()) == s.dim());
    std::vector<Matrix> mats(h.begin(), h.end());
    StateSubspace span = subspace_from_matrices(mats, 4, 4);
    CHECK(same_subspace(span, s));
    for (const Matrix& m : h) CHECK((m - m.adjoint()).norm() < 1e-10);
}

TEST_CASE("psd basis for the built-in example") {
    auto [s, sym] = builtin_example();
    PsdBasisSearch res = find_psd_basis(s);
    REQUIRE(res.found);
    CHECK(static_cast<int>(res.basis.elements.size()) == s.dim());
    std::vector<Matrix> mats = res.basis.elements;
    CHECK(same_subspace(subspace_from_matrices(mats, 4, 4), s));
    for (const Matrix& m : mats) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(m);
        CHECK(es.eigenvalues().minCoeff() > -1e-10);
    }
}

TEST_CASE("local unitaries act as expected") {
    auto [s, sym] = builtin_example();
    StateSubspace t = apply_local_unitaries(s, sym);
    CHECK(t.dim() == s.dim());
    // (id (x) X) applied twice is the identity
    CHECK(same_subspace(apply_local_unitaries(t, sym), s));
}

TEST_CASE("symmetrize closes both symmetries within the 4x bound") {
    Rng rng(32);
    for (int d_a : {3, 4, 5}) {
        SymmetryPair sym = SymmetryPair::standard(d_a);
        for (int trial = 0; trial < 5; ++trial) {
            int dim = 1 + static_cast<int>(rng.next_below(3));
            Matrix raw(d_a * d_a, dim);
            for (int c = 0; c < dim; ++c) raw.col(c) = random_unit_vector(d_a * d_a, rng);
            StateSubspace s = make_subspace(raw, d_a, d_a);
            StateSubspace sym_s = symmetrize(s, sym);
            CHECK(sym_s.dim() <= 4 * s.dim());
            CHECK(contains(sym_s, s.basis));
            CHECK(is_conjugate_symmetric(sym_s));
            CHECK(is_conjugate_symmetric(apply_local_unitaries(sym_s, sym)));
        }
    }
}

TEST_CASE("fd samples satisfy the structural invariants") {
    Rng rng(33);
    const int d_a = 4, d = 8;
    const Matrix x = antidiagonal_unitary(d_a);
    for (int trial = 0; trial < 10; ++trial) {
        int k = 1 + static_cast<int>(rng.next_below(6));
        FdSample f = sample_fd(d_a, d, k, rng);
        CHECK(f.subspace.dim() == d);
        CHECK(f.k == k);
        CHECK(is_conjugate_symmetric(f.subspace));
        // X-twist invariance: (id (x) X) S = S^T ... the matrix picture:
        // every element H satisfies XHX in the span, so the span is X-closed
        SymmetryPair sym = SymmetryPair::standard(d_a);
        CHECK(symmetrize(f.subspace, sym).dim() == d);
    }
}

TEST_CASE("positive-seeded samples contain omega and avoid the twisted omega") {
    Rng rng(34);
    const int d_a = 4, d = 8;
    FdSample f = sample_positive_seeded(d_a, d, rng);
    CHECK(f.contains_omega);
    CHECK(f.k == d / 2);
    Vector omega = omega_state(d_a).coeffs;
    CHECK(contains(f.subspace, omega / omega.norm()));
    Vector twisted = kron(Matrix::Identity(d_a, d_a), antidiagonal_unitary(d_a)) * omega;
    CHECK((f.subspace.basis.adjoint() * twisted).norm() < 1e-10);
}

TEST_CASE("conjugation eigenbases split the hermitian space in half") {
    std::vector<Matrix> plus, minus;
    conjugation_eigenbases(4, plus, minus);
    CHECK(plus.size() == 8);
    CHECK(minus.size() == 8);
    Matrix x = antidiagonal_unitary(4);
    for (const Matrix& p : plus) CHECK((x * p * x - p).norm() < 1e-12);
    for (const Matrix& m : minus) CHECK((x * m * x + m).norm() < 1e-12);
}
