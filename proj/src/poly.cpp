#include "zec/poly.hpp"

#include <sstream>

namespace zec {

Polynomial Polynomial::variable(int nvars, int idx) {
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[idx] = 1;
    p.terms_[m] = GaussRational(1);
    return p;
}

Polynomial Polynomial::constant(int nvars, GaussRational c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_[Monomial(nvars, 0)] = std::move(c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const GaussRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
}

Polynomial Polynomial::scaled(const GaussRational& c) const {
    Polynomial out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) out.terms_[m] = coeff * c;
    return out;
}

Polynomial Polynomial::term_mul(const GaussRational& c, const Monomial& m) const {
    Polynomial out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [mm, coeff] : terms_) out.terms_[mono_mul(mm, m)] = coeff * c;
    return out;
}

void Polynomial::make_monic() {
    if (terms_.empty()) return;
    GaussRational inv = GaussRational(1) / leading_coeff();
    for (auto& [m, c] : terms_) c = c * inv;
}

GaussRational Polynomial::evaluate(const std::vector<GaussRational>& point) const {
    GaussRational acc;
    for (const auto& [m, c] : terms_) {
        GaussRational t = c;
        for (size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) t = t * point[i];
        acc += t;
    }
    return acc;
}

std::string Polynomial::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            os << "*";
            if (i < var_names.size()) os << var_names[i];
            else os << "x" << i;
            if (m[i] > 1) os << "^" << static_cast<int>(m[i]);
        }
    }
    return os.str();
}

} // namespace zec
