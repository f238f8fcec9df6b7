#include "zec/groebner.hpp"

#include <algorithm>
#include <list>

namespace zec {

namespace {

std::size_t rational_bits(const mpq_class& q) {
    return std::max(mpz_sizeinbase(q.get_num().get_mpz_t(), 2),
                    mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
}

std::size_t coeff_bits(const GaussRational& c) {
    return std::max(rational_bits(c.re), rational_bits(c.im));
}

}  // namespace

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& g,
                  std::uint64_t* steps, std::uint64_t max_steps, bool* exhausted,
                  std::size_t max_coeff_bits) {
    Polynomial rem(p.nvars());
    Polynomial cur = p;
    while (!cur.is_zero()) {
        if (*steps >= max_steps || coeff_bits(cur.leading_coeff()) > max_coeff_bits) {
            if (exhausted) *exhausted = true;
            return rem + cur;
        }
        const Monomial& lm = cur.leading_monomial();
        bool cancelled = false;
        for (const auto& divisor : g) {
            if (divisor.is_zero()) continue;
            if (!divides(divisor.leading_monomial(), lm)) continue;
            GaussRational factor = cur.leading_coeff() / divisor.leading_coeff();
            Monomial shift = mono_div(lm, divisor.leading_monomial());
            cur = cur - divisor.term_mul(factor, shift);
            ++*steps;
            cancelled = true;
            break;
        }
        if (!cancelled) {
            // move the irreducible leading term to the remainder
            rem.add_term(lm, cur.leading_coeff());
            Polynomial head(p.nvars());
            head.add_term(lm, cur.leading_coeff());
            cur = cur - head;
        }
    }
    return rem;
}

static Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.term_mul(GaussRational(1) / f.leading_coeff(),
                              mono_div(l, f.leading_monomial()));
    Polynomial b = g.term_mul(GaussRational(1) / g.leading_coeff(),
                              mono_div(l, g.leading_monomial()));
    return a - b;
}

namespace {

struct Pair {
    int i, j;
    Monomial lcm;
    int deg;
};

bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] > 0 && b[k] > 0) return false;
    return true;
}

// Gebauer-Moeller update: fold generator t into the pair set.
void update_pairs(std::list<Pair>& pairs, const std::vector<Polynomial>& basis, int t) {
    const Monomial& lmt = basis[t].leading_monomial();
    std::list<Pair> fresh;
    for (int i = 0; i < t; ++i) {
        if (basis[i].is_zero()) continue;
        Monomial l = mono_lcm(basis[i].leading_monomial(), lmt);
        fresh.push_back({i, t, l, total_degree(l)});
    }
    // criterion M: drop (i,t) when some (j,t) has a strictly smaller lcm dividing it
    for (auto it = fresh.begin(); it != fresh.end();) {
        bool drop = false;
        for (auto jt = fresh.begin(); jt != fresh.end(); ++jt) {
            if (jt == it) continue;
            if (jt->lcm != it->lcm && divides(jt->lcm, it->lcm)) { drop = true; break; }
        }
        it = drop ? fresh.erase(it) : std::next(it);
    }
    // criterion F: keep a single pair per lcm value
    for (auto it = fresh.begin(); it != fresh.end(); ++it) {
        for (auto jt = std::next(it); jt != fresh.end();) {
            jt = (jt->lcm == it->lcm) ? fresh.erase(jt) : std::next(jt);
        }
    }
    // Buchberger's coprimality criterion
    for (auto it = fresh.begin(); it != fresh.end();) {
        const Monomial& lmi = basis[it->i].leading_monomial();
        it = coprime(lmi, lmt) ? fresh.erase(it) : std::next(it);
    }
    // prune old pairs made redundant by t
    for (auto it = pairs.begin(); it != pairs.end();) {
        const Monomial& lmi = basis[it->i].leading_monomial();
        const Monomial& lmj = basis[it->j].leading_monomial();
        bool drop = divides(lmt, it->lcm) &&
                    mono_lcm(lmi, lmt) != it->lcm &&
                    mono_lcm(lmj, lmt) != it->lcm;
        it = drop ? pairs.erase(it) : std::next(it);
    }
    pairs.splice(pairs.end(), fresh);
}

}  // namespace

GroebnerResult buchberger(const Ideal& ideal, const GroebnerBudget& budget) {
    GroebnerResult out;
    std::vector<Polynomial> basis;
    std::list<Pair> pairs;
    for (const auto& g : ideal.generators) {
        if (g.is_zero()) continue;
        Polynomial p = g;
        p.make_monic();
        basis.push_back(std::move(p));
        update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1);
    }

    GrevlexGreater cmp;
    bool exhausted = false;
    while (!pairs.empty() && !exhausted) {
        // select the pair with the smallest lcm (normal strategy)
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            if (cmp(best->lcm, it->lcm)) best = it;  // it->lcm smaller than best->lcm
        }
        Pair sel = *best;
        pairs.erase(best);

        Polynomial s = s_polynomial(basis[sel.i], basis[sel.j]);
        Polynomial r = reduce(s, basis, &out.reduction_steps,
                              budget.max_reduction_steps, &exhausted,
                              budget.max_coefficient_bits);
        if (exhausted) break;
        if (r.is_zero()) continue;
        r.make_monic();
        basis.push_back(std::move(r));
        update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1);
    }
    out.complete = !exhausted;

    // inter-reduce: drop generators with redundant leading monomials,
    // then fully reduce each tail (auto-reduction)
    if (out.complete) {
        std::vector<Polynomial> minimal;
        for (size_t i = 0; i < basis.size(); ++i) {
            bool redundant = false;
            for (size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                if (!divides(basis[j].leading_monomial(), basis[i].leading_monomial())) continue;
                if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i) continue;
                redundant = true;
                break;
            }
            if (!redundant) minimal.push_back(basis[i]);
        }
        std::vector<Polynomial> reduced;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            bool ex2 = false;
            std::uint64_t extra = 0;
            Polynomial r = reduce(minimal[i], others, &extra, budget.max_reduction_steps, &ex2,
                                  budget.max_coefficient_bits);
            out.reduction_steps += extra;
            if (ex2) { out.complete = false; break; }
            if (!r.is_zero()) {
                r.make_monic();
                reduced.push_back(std::move(r));
            }
        }
        if (out.complete) {
            std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
                return cmp(b.leading_monomial(), a.leading_monomial());
            });
            out.basis = std::move(reduced);
            return out;
        }
    }
    out.basis = std::move(basis);
    return out;
}

bool is_groebner_basis(const std::vector<Polynomial>& basis) {
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            Polynomial s = s_polynomial(basis[i], basis[j]);
            std::uint64_t steps = 0;
            bool exhausted = false;
            Polynomial r = reduce(s, basis, &steps, 100'000'000ULL, &exhausted);
            if (exhausted || !r.is_zero()) return false;
        }
    }
    return true;
}

} // namespace zec
