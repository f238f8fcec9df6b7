#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zec/qmat.hpp"

using namespace zec;

TEST_CASE("state and coefficient matrix are inverse maps") {
    Rng rng(11);
    StateVector psi(random_unit_vector(12, rng), 3, 4);
    Matrix m = state_to_matrix(psi);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 4);
    CHECK(m(1, 2) == psi.coeffs(1 * 4 + 2));
    StateVector back = matrix_to_state(m);
    CHECK((back.coeffs - psi.coeffs).norm() == doctest::Approx(0.0));
}

TEST_CASE("flip conjugate-transposes the coefficient matrix") {
    Rng rng(12);
    StateVector psi(random_unit_vector(16, rng), 4, 4);
    Matrix flipped = state_to_matrix(flip(psi));
    CHECK((flipped - state_to_matrix(psi).adjoint()).norm() < 1e-14);
    // involution, isometry
    StateVector twice = flip(flip(psi));
    CHECK((twice.coeffs - psi.coeffs).norm() < 1e-14);
    CHECK(flip(psi).coeffs.norm() == doctest::Approx(1.0));
}

TEST_CASE("schmidt rank") {
    CHECK(schmidt_rank(omega_state(4)) == 4);
    Vector prod = Vector::Zero(9);
    prod(0) = 1.0;
    CHECK(schmidt_rank(StateVector(prod, 3, 3)) == 1);
    // |00> + |11> has rank 2
    Vector two = Vector::Zero(9);
    two(0) = two(4) = 1.0;
    CHECK(schmidt_rank(StateVector(two, 3, 3)) == 2);
}

TEST_CASE("omega has identity coefficient matrix") {
    Matrix m = state_to_matrix(omega_state(5));
    CHECK((m - Matrix::Identity(5, 5)).norm() == doctest::Approx(0.0));
}

TEST_CASE("antidiagonal unitary is a Hermitian involution") {
    Matrix x = antidiagonal_unitary(6);
    CHECK((x * x - Matrix::Identity(6, 6)).norm() == doctest::Approx(0.0));
    CHECK((x - x.adjoint()).norm() == doctest::Approx(0.0));
    CHECK(std::abs(x.trace()) == doctest::Approx(0.0));
}

TEST_CASE("subspace construction and complement") {
    Rng rng(13);
    Matrix raw(12, 5);
    for (int c = 0; c < 5; ++c) raw.col(c) = random_unit_vector(12, rng);
    raw.col(4) = raw.col(0) + raw.col(1);  // dependent
    StateSubspace s = make_subspace(raw, 3, 4);
    CHECK(s.dim() == 4);
    CHECK((s.basis.adjoint() * s.basis - Matrix::Identity(4, 4)).norm() < 1e-12);

    StateSubspace comp = orthogonal_complement(s);
    CHECK(comp.dim() == 8);
    CHECK((comp.basis.adjoint() * s.basis).norm() < 1e-12);
    CHECK(contains(s, raw.leftCols(2)));
    CHECK(!contains(comp, raw.leftCols(1)));
    CHECK(same_subspace(s, s));
    CHECK(!same_subspace(s, comp));
    CHECK(subspace_distance(s.basis, s.basis) < 1e-12);
}

TEST_CASE("partial trace") {
    Rng rng(14);
    Vector a = random_unit_vector(3, rng), b = random_unit_vector(4, rng);
    Vector prod(12);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) prod(i * 4 + j) = a(i) * b(j);
    Matrix rho = prod * prod.adjoint();
    Matrix ta = partial_trace(rho, 3, 4, Side::B);
    CHECK((ta - a * a.adjoint()).norm() < 1e-13);
    Matrix tb = partial_trace(rho, 3, 4, Side::A);
    CHECK((tb - b * b.adjoint()).norm() < 1e-13);
    CHECK(std::abs(ta.trace() - rho.trace()) < 1e-13);
}

TEST_CASE("hermitian square roots") {
    Rng rng(15);
    Matrix g = random_unit_matrix(4, 4, rng);
    Matrix p = g * g.adjoint() + 0.1 * Matrix::Identity(4, 4);
    Matrix r = hermitian_sqrt(p);
    CHECK((r * r - p).norm() < 1e-11);
    Matrix ri = hermitian_inv_sqrt(p);
    CHECK((r * ri - Matrix::Identity(4, 4)).norm() < 1e-10);
    // pseudo-inverse on a singular input: identity on the support only
    Matrix sing = p;
    sing.col(0).setZero();
    sing.row(0).setZero();
    Matrix si = hermitian_inv_sqrt(sing);
    Matrix proj = hermitian_sqrt(sing) * si;
    CHECK((proj * sing - sing).norm() < 1e-10);
}

TEST_CASE("kron multiplicativity") {
    Rng rng(16);
    Matrix a = random_unit_matrix(2, 3, rng), b = random_unit_matrix(3, 2, rng);
    Matrix c = random_unit_matrix(3, 2, rng), d = random_unit_matrix(2, 3, rng);
    CHECK((kron(a, b) * kron(c, d) - kron(Matrix(a * c), Matrix(b * d))).norm() < 1e-12);
}

TEST_CASE("flip operator agrees with flip on rank-one projectors") {
    Rng rng(17);
    StateVector psi(random_unit_vector(16, rng), 4, 4);
    Matrix rho = psi.coeffs * psi.coeffs.adjoint();
    Vector fpsi = flip(psi).coeffs;
    CHECK((flip_operator(rho, 4, 4) - fpsi * fpsi.adjoint()).norm() < 1e-13);
}
