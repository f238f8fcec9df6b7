#include "zec/exact.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zec {

GaussRational GaussRational::operator/(const GaussRational& o) const {
    if (o.is_zero()) throw std::domain_error("GaussRational: division by zero");
    mpq_class n = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

std::string GaussRational::str() const {
    std::ostringstream os;
    if (im == 0) {
        os << re.get_str();
    } else if (re == 0) {
        os << im.get_str() << "*i";
    } else {
        os << re.get_str();
        if (im > 0) os << "+";
        os << im.get_str() << "*i";
    }
    return os.str();
}

GaussRational gauss_from_int(long re, long im) {
    return {mpq_class(re), mpq_class(im)};
}

// Gaussian elimination with partial pivoting by "first nonzero".
// Returns reduced row-echelon form in place, and the pivot columns.
static std::vector<int> rref(ExactMat& rows, int ncols) {
    std::vector<int> pivots;
    int r = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int p = -1;
        for (int i = r; i < nrows; ++i) {
            if (!rows[i][c].is_zero()) { p = i; break; }
        }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        GaussRational inv = GaussRational(1) / rows[r][c];
        for (int j = c; j < ncols; ++j) rows[r][j] = rows[r][j] * inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            GaussRational f = rows[i][c];
            for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r, ExactVec(ncols));
    return pivots;
}

int exact_rank(ExactMat rows) {
    if (rows.empty()) return 0;
    return static_cast<int>(rref(rows, static_cast<int>(rows[0].size())).size());
}

std::vector<ExactVec> exact_nullspace(const ExactMat& rows, int ncols) {
    ExactMat m = rows;
    std::vector<int> pivots = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<ExactVec> null_basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        ExactVec v(ncols);
        v[free] = GaussRational(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        null_basis.push_back(std::move(v));
    }
    return null_basis;
}

ExactSubspace exact_complement(const ExactSubspace& s) {
    if (s.dim() >= s.ambient())
        throw std::invalid_argument("exact_complement: full space");
    ExactMat conj_rows;
    conj_rows.reserve(s.basis.size());
    for (const auto& row : s.basis) {
        ExactVec c(row.size());
        for (size_t j = 0; j < row.size(); ++j) c[j] = row[j].conj();
        conj_rows.push_back(std::move(c));
    }
    ExactSubspace out;
    out.basis = exact_nullspace(conj_rows, s.ambient());
    out.d_a = s.d_a;
    out.d_b = s.d_b;
    return out;
}

bool exact_same_span(const ExactSubspace& a, const ExactSubspace& b) {
    if (a.d_a != b.d_a || a.d_b != b.d_b) return false;
    ExactMat stacked = a.basis;
    stacked.insert(stacked.end(), b.basis.begin(), b.basis.end());
    int ra = exact_rank(a.basis);
    int rb = exact_rank(b.basis);
    return ra == rb && exact_rank(stacked) == ra;
}

bool exact_contains(const ExactSubspace& s, const ExactVec& v) {
    int r = exact_rank(s.basis);
    ExactMat stacked = s.basis;
    stacked.push_back(v);
    return exact_rank(stacked) == r;
}

Vector exact_to_numeric(const ExactVec& v) {
    Vector out(static_cast<long>(v.size()));
    for (size_t i = 0; i < v.size(); ++i) out(static_cast<long>(i)) = v[i].to_complex();
    return out;
}

StateSubspace exact_to_subspace(const ExactSubspace& s) {
    Matrix raw(s.ambient(), s.dim());
    for (int c = 0; c < s.dim(); ++c) raw.col(c) = exact_to_numeric(s.basis[c]);
    return make_subspace(raw, s.d_a, s.d_b);
}

ExactMat exact_state_to_matrix(const ExactVec& v, int d_a, int d_b) {
    if (static_cast<int>(v.size()) != d_a * d_b)
        throw std::invalid_argument("exact_state_to_matrix: length mismatch");
    ExactMat m(d_a, ExactVec(d_b));
    for (int i = 0; i < d_a; ++i)
        for (int j = 0; j < d_b; ++j)
            m[i][j] = v[i * d_b + j];
    return m;
}

ExactVec exact_matrix_to_state(const ExactMat& m) {
    ExactVec v;
    for (const auto& row : m)
        for (const auto& e : row) v.push_back(e);
    return v;
}

mpq_class rationalize_real(double x, unsigned long max_denominator) {
    if (!std::isfinite(x)) throw std::invalid_argument("rationalize_real: non-finite");
    bool neg = x < 0;
    double a = std::fabs(x);
    // continued-fraction convergents p/q with q bounded
    unsigned long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = a;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(v);
        if (fl > 1e18) break;
        unsigned long ai = static_cast<unsigned long>(fl);
        unsigned long p2 = ai * p1 + p0;
        unsigned long q2 = ai * q1 + q0;
        if (q2 > max_denominator) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) { p1 = p0; q1 = q0; }
    mpq_class q(static_cast<long>(p1), static_cast<long>(q1));
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

GaussRational rationalize(Cplx z, unsigned long max_denominator) {
    return {rationalize_real(z.real(), max_denominator),
            rationalize_real(z.imag(), max_denominator)};
}

RationalizedSubspace rationalize_subspace(const StateSubspace& s, unsigned long max_denominator) {
    ExactSubspace ex;
    ex.d_a = s.d_a;
    ex.d_b = s.d_b;
    for (int c = 0; c < s.dim(); ++c) {
        ExactVec v(s.ambient());
        for (int i = 0; i < s.ambient(); ++i)
            v[i] = rationalize(s.basis(i, c), max_denominator);
        ex.basis.push_back(std::move(v));
    }
    StateSubspace back = exact_to_subspace(ex);
    RationalizedSubspace out;
    out.span_residual = (back.dim() == s.dim()) ? subspace_distance(back.basis, s.basis) : 1.0;
    out.subspace = std::move(ex);
    return out;
}

} // namespace zec
