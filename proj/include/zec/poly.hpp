// Multivariate polynomials over Q(i) with graded-reverse-lex term order.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zec/exact.hpp"

namespace zec {

using Monomial = std::vector<std::uint16_t>;  // exponent vector

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

// grevlex: higher total degree wins; ties broken by the *smallest* exponent
// in the last variable where they differ.
struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

inline bool divides(const Monomial& a, const Monomial& b) {
    // true when a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    return m;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = static_cast<std::uint16_t>(a[i] - b[i]);
    return m;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussRational, GrevlexGreater>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial variable(int nvars, int idx);
    static Polynomial constant(int nvars, GaussRational c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const GaussRational& leading_coeff() const { return terms_.begin()->second; }

    void add_term(const Monomial& m, const GaussRational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const GaussRational& c) const;
    // p * c * x^m
    Polynomial term_mul(const GaussRational& c, const Monomial& m) const;

    void make_monic();
    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    GaussRational evaluate(const std::vector<GaussRational>& point) const;

    std::string str(const std::vector<std::string>& var_names = {}) const;

private:
    int nvars_;
    TermMap terms_;
};

struct Ideal {
    std::vector<Polynomial> generators;
    std::vector<std::string> var_names;
    int nvars() const { return generators.empty() ? 0 : generators.front().nvars(); }
};

} // namespace zec
