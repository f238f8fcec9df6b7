// Buchberger's algorithm with the Gebauer-Moeller pair criteria.

#pragma once

#include <optional>

#include "zec/poly.hpp"

namespace zec {

struct GroebnerBudget {
    std::uint64_t max_reduction_steps = 10'000'000;
    // Abort (reporting an incomplete basis) when any rational coefficient
    // component grows past this many bits; exact elimination can otherwise
    // stall for hours inside a single reduction.
    std::size_t max_coefficient_bits = 1 << 16;
};

struct GroebnerResult {
    std::vector<Polynomial> basis;  // reduced, monic
    bool complete = true;           // false when the budget ran out
    std::uint64_t reduction_steps = 0;

    bool is_trivial() const {
        return complete && basis.size() == 1 && basis[0].term_count() == 1 &&
               total_degree(basis[0].leading_monomial()) == 0;
    }
};

// Normal form of p modulo the (not necessarily Groebner) set G.
// Each leading-term cancellation counts one step against *steps; the
// reduction also aborts (setting *exhausted) if a leading coefficient
// outgrows max_coeff_bits.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& g,
                  std::uint64_t* steps, std::uint64_t max_steps, bool* exhausted,
                  std::size_t max_coeff_bits = SIZE_MAX);

GroebnerResult buchberger(const Ideal& ideal, const GroebnerBudget& budget = {});

// Exact verification: every S-polynomial of `basis` reduces to zero.
bool is_groebner_basis(const std::vector<Polynomial>& basis);

} // namespace zec
