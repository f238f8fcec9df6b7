// Exact arithmetic over Q(i): coefficient field for the polynomial-system
// route, plus exact linear algebra on subspace bases (nullspace, rank,
// span comparison) and rationalization of numeric data.

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "zec/qmat.hpp"

namespace zec {

struct GaussRational {
    mpq_class re, im;

    GaussRational() : re(0), im(0) {}
    GaussRational(long r) : re(r), im(0) {}
    GaussRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussRational conj() const { return {re, -im}; }

    GaussRational operator-() const { return {-re, -im}; }
    GaussRational operator+(const GaussRational& o) const { return {re + o.re, im + o.im}; }
    GaussRational operator-(const GaussRational& o) const { return {re - o.re, im - o.im}; }
    GaussRational operator*(const GaussRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRational operator/(const GaussRational& o) const;
    GaussRational& operator+=(const GaussRational& o) { re += o.re; im += o.im; return *this; }
    GaussRational& operator-=(const GaussRational& o) { re -= o.re; im -= o.im; return *this; }
    bool operator==(const GaussRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRational& o) const { return !(*this == o); }

    Cplx to_complex() const { return {re.get_d(), im.get_d()}; }
    std::string str() const;  // "p/q+r/s*i" form
};

GaussRational gauss_from_int(long re, long im = 0);

using ExactVec = std::vector<GaussRational>;
using ExactMat = std::vector<ExactVec>;  // row-major list of rows

// Exact bipartite subspace: basis rows need not be orthonormal.
struct ExactSubspace {
    std::vector<ExactVec> basis;  // each of length d_a*d_b
    int d_a = 0;
    int d_b = 0;

    int dim() const { return static_cast<int>(basis.size()); }
    int ambient() const { return d_a * d_b; }
};

int exact_rank(ExactMat rows);
// Nullspace of the matrix whose rows are `rows` (right nullspace).
std::vector<ExactVec> exact_nullspace(const ExactMat& rows, int ncols);
// Complement with respect to the Hermitian inner product <u,v> = sum conj(u_i) v_i.
ExactSubspace exact_complement(const ExactSubspace& s);
bool exact_same_span(const ExactSubspace& a, const ExactSubspace& b);
bool exact_contains(const ExactSubspace& s, const ExactVec& v);

Vector exact_to_numeric(const ExactVec& v);
StateSubspace exact_to_subspace(const ExactSubspace& s);

// 4x4-style coefficient matrix of the exact state, row-major d_a x d_b.
ExactMat exact_state_to_matrix(const ExactVec& v, int d_a, int d_b);
ExactVec exact_matrix_to_state(const ExactMat& m);

// Continued-fraction rationalization with a denominator bound.
mpq_class rationalize_real(double x, unsigned long max_denominator = 1000000UL);
GaussRational rationalize(Cplx z, unsigned long max_denominator = 1000000UL);
// Rationalize an orthonormal numeric basis; fails (empty optional semantics via
// thrown error) is avoided: caller checks the returned residual.
struct RationalizedSubspace {
    ExactSubspace subspace;
    double span_residual;  // principal-angle distance to the numeric input
};
RationalizedSubspace rationalize_subspace(const StateSubspace& s,
                                          unsigned long max_denominator = 1000000UL);

} // namespace zec
