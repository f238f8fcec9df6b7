#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zec/exact.hpp"

using namespace zec;

TEST_CASE("gaussian rational arithmetic") {
    GaussRational a = gauss_from_int(1, 2), b = gauss_from_int(3, -1);
    CHECK((a * b) == gauss_from_int(5, 5));
    CHECK((a + b) == gauss_from_int(4, 1));
    CHECK(a.conj() == gauss_from_int(1, -2));
    GaussRational q = a / b;
    CHECK(q * b == a);
    CHECK((a - a).is_zero());
    CHECK(a.to_complex() == Cplx(1.0, 2.0));
}

TEST_CASE("exact rank and nullspace") {
    ExactMat rows = {
        {gauss_from_int(1), gauss_from_int(0), gauss_from_int(2)},
        {gauss_from_int(0), gauss_from_int(1), gauss_from_int(3)},
        {gauss_from_int(1), gauss_from_int(1), gauss_from_int(5)},  // sum of the first two
    };
    CHECK(exact_rank(rows) == 2);
    auto ns = exact_nullspace(rows, 3);
    REQUIRE(ns.size() == 1);
    for (const auto& row : rows) {
        GaussRational dot;
        for (int j = 0; j < 3; ++j) dot += row[j] * ns[0][j];
        CHECK(dot.is_zero());
    }
}

TEST_CASE("complement and span comparison") {
    ExactSubspace s;
    s.d_a = 2;
    s.d_b = 2;
    s.basis = {{gauss_from_int(1), gauss_from_int(0), gauss_from_int(0), gauss_from_int(1)},
               {gauss_from_int(0), gauss_from_int(1, 1), gauss_from_int(0), gauss_from_int(0)}};
    ExactSubspace comp = exact_complement(s);
    CHECK(comp.dim() == 2);
    for (const auto& u : s.basis)
        for (const auto& v : comp.basis) {
            GaussRational dot;
            for (size_t j = 0; j < u.size(); ++j) dot += u[j].conj() * v[j];
            CHECK(dot.is_zero());
        }
    // complement of the complement spans the original
    CHECK(exact_same_span(exact_complement(comp), s));
    CHECK(exact_contains(s, s.basis[0]));
    CHECK(!exact_contains(s, comp.basis[0]));
}

TEST_CASE("exact state and matrix round trip") {
    ExactMat m = {{gauss_from_int(1), gauss_from_int(2, 1)},
                  {gauss_from_int(0, -3), gauss_from_int(4)}};
    ExactVec v = exact_matrix_to_state(m);
    REQUIRE(v.size() == 4);
    CHECK(v[1] == gauss_from_int(2, 1));
    CHECK(exact_state_to_matrix(v, 2, 2) == m);
}

TEST_CASE("rationalization") {
    CHECK(rationalize_real(0.5) == mpq_class(1, 2));
    CHECK(rationalize_real(-2.0) == mpq_class(-2));
    mpq_class third = rationalize_real(1.0 / 3.0);
    CHECK(third == mpq_class(1, 3));
    GaussRational z = rationalize(Cplx(0.25, -0.75));
    CHECK(z == GaussRational(mpq_class(1, 4), mpq_class(-3, 4)));
}

TEST_CASE("rationalize a numeric subspace back to its exact span") {
    ExactSubspace s;
    s.d_a = 2;
    s.d_b = 2;
    s.basis = {{gauss_from_int(1), gauss_from_int(0), gauss_from_int(0), gauss_from_int(-1)},
               {gauss_from_int(0), gauss_from_int(2, 1), gauss_from_int(1), gauss_from_int(0)}};
    StateSubspace numeric = exact_to_subspace(s);
    RationalizedSubspace rs = rationalize_subspace(numeric);
    CHECK(rs.span_residual < 1e-7);
    CHECK(exact_same_span(rs.subspace, s));
}
