#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zec/productdetect.hpp"

using namespace zec;

namespace {

ExactSubspace antisymmetric_2x2() {
    // span{ |01> - |10> }: famously product-free
    ExactSubspace s;
    s.d_a = 2;
    s.d_b = 2;
    s.basis = {{gauss_from_int(0), gauss_from_int(1), gauss_from_int(-1), gauss_from_int(0)}};
    return s;
}

}  // namespace

TEST_CASE("antisymmetric line has no product state") {
    DetectionResult res = decide_product_states(antisymmetric_2x2(), Target::InSpan);
    CHECK(res.verdict == DetectionResult::Verdict::Empty);
    CHECK(res.method == "exact");
}

TEST_CASE("its complement holds product states") {
    DetectionResult res = decide_product_states(antisymmetric_2x2(), Target::InComplement);
    CHECK(res.verdict == DetectionResult::Verdict::Witness);
    CHECK(res.witness_residual <= 1e-9);
}

TEST_CASE("span with a planted product state yields a witness") {
    // span{ |00>, |11>, |01>+|10> } contains |00> among others
    ExactSubspace s;
    s.d_a = 2;
    s.d_b = 2;
    s.basis = {{gauss_from_int(1), gauss_from_int(0), gauss_from_int(0), gauss_from_int(0)},
               {gauss_from_int(0), gauss_from_int(0), gauss_from_int(0), gauss_from_int(1)},
               {gauss_from_int(0), gauss_from_int(1), gauss_from_int(1), gauss_from_int(0)}};
    DetectionResult res = decide_product_states(s, Target::InSpan);
    CHECK(res.verdict == DetectionResult::Verdict::Witness);
    CHECK(res.witness_residual <= 1e-9);
    // complement is span{ |01>-|10> }: product-free
    DetectionResult comp = decide_product_states(s, Target::InComplement);
    CHECK(comp.verdict == DetectionResult::Verdict::Empty);
}

TEST_CASE("numeric search finds a planted product direction") {
    Rng rng(77);
    Vector a = random_unit_vector(3, rng), b = random_unit_vector(3, rng);
    Vector prod(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) prod(i * 3 + j) = a(i) * b(j);
    Matrix raw(9, 3);
    raw.col(0) = prod;
    raw.col(1) = random_unit_vector(9, rng);
    raw.col(2) = random_unit_vector(9, rng);
    StateSubspace space = make_subspace(raw, 3, 3);
    NumericSearchResult res = numeric_product_search(space, 16, 200, rng);
    CHECK(res.best_overlap > 1.0 - 1e-9);
    CHECK(product_membership_residual(space, res.psi, res.phi) < 1e-7);
}

TEST_CASE("bilinear systems have the right shape") {
    ExactSubspace s = antisymmetric_2x2();
    Ideal in_span = build_bilinear_system(s, Target::InSpan);
    // one equation per element of the exact complement, 4 variables
    CHECK(in_span.generators.size() == 3);
    CHECK(in_span.nvars() == 4);
    Ideal in_comp = build_bilinear_system(s, Target::InComplement);
    CHECK(in_comp.generators.size() == 1);
}

TEST_CASE("full space and zero-dimensional edge cases") {
    // S = everything: complement empty, exact verdict
    ExactSubspace full;
    full.d_a = 2;
    full.d_b = 2;
    full.basis = {{gauss_from_int(1), gauss_from_int(0), gauss_from_int(0), gauss_from_int(0)},
                  {gauss_from_int(0), gauss_from_int(1), gauss_from_int(0), gauss_from_int(0)},
                  {gauss_from_int(0), gauss_from_int(0), gauss_from_int(1), gauss_from_int(0)},
                  {gauss_from_int(0), gauss_from_int(0), gauss_from_int(0), gauss_from_int(1)}};
    DetectionResult comp = decide_product_states(full, Target::InComplement);
    CHECK(comp.verdict == DetectionResult::Verdict::Empty);
    DetectionResult span = decide_product_states(full, Target::InSpan);
    CHECK(span.verdict == DetectionResult::Verdict::Witness);
}

TEST_CASE("budget starvation reports unknown") {
    // a subspace needing real work, with an absurdly small step budget
    ExactSubspace s;
    s.d_a = 3;
    s.d_b = 3;
    s.basis = {
        {gauss_from_int(1), gauss_from_int(0), gauss_from_int(0), gauss_from_int(0),
         gauss_from_int(1), gauss_from_int(0), gauss_from_int(0), gauss_from_int(0),
         gauss_from_int(1)},
        {gauss_from_int(0), gauss_from_int(1), gauss_from_int(2), gauss_from_int(-1),
         gauss_from_int(0), gauss_from_int(3), gauss_from_int(-2), gauss_from_int(-3),
         gauss_from_int(0)},
    };
    DetectOptions opts;
    opts.budget.max_reduction_steps = 1;
    opts.numeric_restarts = 2;
    opts.numeric_iters = 5;
    DetectionResult res = decide_product_states(s, Target::InSpan, opts);
    // with no budget the engine must not claim Empty
    CHECK(res.verdict != DetectionResult::Verdict::Empty);
}
