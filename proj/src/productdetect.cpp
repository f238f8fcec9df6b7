#include "zec/productdetect.hpp"

#include <Eigen/Eigenvalues>

#include <sstream>

namespace zec {

namespace {

std::vector<std::string> bilinear_var_names(int d_a, int d_b) {
    std::vector<std::string> names;
    for (int i = 0; i < d_a; ++i) names.push_back("psi" + std::to_string(i));
    for (int j = 0; j < d_b; ++j) names.push_back("phi" + std::to_string(j));
    return names;
}

// one bilinear equation  sum_ij conj(B[i][j]) psi_i phi_j  per basis element
Ideal bilinear_from_basis(const std::vector<ExactVec>& basis, int d_a, int d_b) {
    Ideal ideal;
    ideal.var_names = bilinear_var_names(d_a, d_b);
    const int n = d_a + d_b;
    for (const auto& b : basis) {
        Polynomial p(n);
        for (int i = 0; i < d_a; ++i) {
            for (int j = 0; j < d_b; ++j) {
                const GaussRational& c = b[i * d_b + j];
                if (c.is_zero()) continue;
                Monomial m(n, 0);
                m[i] = 1;
                m[d_a + j] = 1;
                p.add_term(m, c.conj());
            }
        }
        ideal.generators.push_back(std::move(p));
    }
    return ideal;
}

Polynomial substitute_one(const Polynomial& p, int var) {
    Polynomial out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m;
        mm[var] = 0;
        out.add_term(mm, c);
    }
    return out;
}

}  // namespace

Ideal build_bilinear_system(const ExactSubspace& s, Target target) {
    if (target == Target::InComplement)
        return bilinear_from_basis(s.basis, s.d_a, s.d_b);
    ExactSubspace comp = exact_complement(s);
    return bilinear_from_basis(comp.basis, s.d_a, s.d_b);
}

Ideal build_minor_system(const ExactSubspace& s) {
    const int d = s.dim();
    Ideal ideal;
    for (int k = 0; k < d; ++k) ideal.var_names.push_back("x" + std::to_string(k));
    // entries of sum_k x_k M_k as degree-1 polynomials
    std::vector<std::vector<Polynomial>> entry(
        s.d_a, std::vector<Polynomial>(s.d_b, Polynomial(d)));
    for (int k = 0; k < d; ++k) {
        ExactMat mk = exact_state_to_matrix(s.basis[k], s.d_a, s.d_b);
        for (int i = 0; i < s.d_a; ++i)
            for (int j = 0; j < s.d_b; ++j) {
                if (mk[i][j].is_zero()) continue;
                Monomial m(d, 0);
                m[k] = 1;
                entry[i][j].add_term(m, mk[i][j]);
            }
    }
    for (int r1 = 0; r1 < s.d_a; ++r1)
        for (int r2 = r1 + 1; r2 < s.d_a; ++r2)
            for (int c1 = 0; c1 < s.d_b; ++c1)
                for (int c2 = c1 + 1; c2 < s.d_b; ++c2) {
                    Polynomial minor = entry[r1][c1] * entry[r2][c2] -
                                       entry[r1][c2] * entry[r2][c1];
                    if (!minor.is_zero()) ideal.generators.push_back(std::move(minor));
                }
    if (ideal.generators.empty()) {
        // every 2x2 minor vanishes identically: rank <= 1 everywhere
        ideal.generators.push_back(Polynomial(d));
    }
    return ideal;
}

NumericSearchResult numeric_product_search(const StateSubspace& space,
                                           int restarts, int iters, Rng& rng) {
    const int d_a = space.d_a, d_b = space.d_b, dim = space.dim();
    NumericSearchResult best;
    if (dim == 0) return best;
    // conjugated coefficient matrices of the orthonormal basis
    std::vector<Matrix> c(dim);
    for (int k = 0; k < dim; ++k) {
        StateVector sv(space.basis.col(k), d_a, d_b);
        c[k] = state_to_matrix(sv).conjugate();
    }
    for (int r = 0; r < restarts; ++r) {
        Vector psi = random_unit_vector(d_a, rng);
        Vector phi = random_unit_vector(d_b, rng);
        double overlap = 0.0;
        for (int it = 0; it < iters; ++it) {
            // best psi for fixed phi
            Matrix w = Matrix::Zero(d_a, d_a);
            for (int k = 0; k < dim; ++k) {
                Vector wk = c[k] * phi;
                w += wk * wk.adjoint();
            }
            Eigen::SelfAdjointEigenSolver<Matrix> es_a(w);
            psi = es_a.eigenvectors().col(d_a - 1).conjugate();
            // best phi for fixed psi
            Matrix z = Matrix::Zero(d_b, d_b);
            for (int k = 0; k < dim; ++k) {
                Vector zk = c[k].transpose() * psi;
                z += zk * zk.adjoint();
            }
            Eigen::SelfAdjointEigenSolver<Matrix> es_b(z);
            phi = es_b.eigenvectors().col(d_b - 1).conjugate();
            double next = es_b.eigenvalues()(d_b - 1);
            if (next - overlap < 1e-14 && it > 2) { overlap = next; break; }
            overlap = next;
        }
        if (overlap > best.best_overlap) {
            best.best_overlap = overlap;
            best.psi = psi;
            best.phi = phi;
        }
    }
    return best;
}

double product_membership_residual(const StateSubspace& space,
                                   const Vector& psi, const Vector& phi) {
    Vector prod(static_cast<long>(psi.size()) * phi.size());
    for (long i = 0; i < psi.size(); ++i)
        for (long j = 0; j < phi.size(); ++j)
            prod(i * phi.size() + j) = psi(i) * phi(j);
    prod /= prod.norm();
    Vector resid = prod - space.basis * (space.basis.adjoint() * prod);
    return resid.norm();
}

DetectionResult decide_product_states(const ExactSubspace& s, Target target,
                                      const DetectOptions& opts) {
    DetectionResult out;
    StateSubspace numeric_s = exact_to_subspace(s);

    // numeric search space: where the product state is supposed to live
    StateSubspace search_space;
    bool search_space_empty = false;
    if (target == Target::InSpan) {
        search_space = numeric_s;
    } else if (s.dim() < s.ambient()) {
        search_space = orthogonal_complement(numeric_s);
    } else {
        search_space_empty = true;
    }

    if (search_space_empty) {
        out.verdict = DetectionResult::Verdict::Empty;
        out.method = "exact";
        return out;
    }
    if (target == Target::InSpan && s.dim() == s.ambient()) {
        out.verdict = DetectionResult::Verdict::Witness;
        out.method = "exact";
        out.witness_a = Vector::Unit(s.d_a, 0);
        out.witness_b = Vector::Unit(s.d_b, 0);
        out.witness_residual = 0.0;
        return out;
    }

    Rng rng(opts.seed, 0xdecade);
    NumericSearchResult ns = numeric_product_search(search_space, opts.numeric_restarts,
                                                    opts.numeric_iters, rng);
    out.best_overlap = ns.best_overlap;
    if (ns.best_overlap >= 1.0 - 1e-7) {
        double resid = product_membership_residual(search_space, ns.psi, ns.phi);
        if (resid <= 1e-9) {
            out.verdict = DetectionResult::Verdict::Witness;
            out.method = "numeric";
            out.witness_a = ns.psi;
            out.witness_b = ns.phi;
            out.witness_residual = resid;
            return out;
        }
    }

    // exact decision by projective case split
    Ideal full = build_bilinear_system(s, target);
    const int n_a = s.d_a, n_b = s.d_b;
    bool all_trivial = true;
    bool any_exhausted = false;
    for (int a = 0; a < n_a && all_trivial; ++a) {
        for (int b = 0; b < n_b && all_trivial; ++b) {
            Ideal cs;
            cs.var_names = full.var_names;
            for (const auto& g : full.generators) {
                Polynomial p = substitute_one(substitute_one(g, a), n_a + b);
                cs.generators.push_back(std::move(p));
            }
            GroebnerResult gr = buchberger(cs, opts.budget);
            CaseEvidence ev;
            ev.label = "psi" + std::to_string(a) + "=1,phi" + std::to_string(b) + "=1";
            ev.complete = gr.complete;
            ev.steps = gr.reduction_steps;
            ev.trivial_basis = gr.is_trivial();
            if (opts.keep_basis_text)
                for (const auto& p : gr.basis) ev.basis_text.push_back(p.str(full.var_names));
            out.cases.push_back(std::move(ev));
            if (!gr.complete) { any_exhausted = true; all_trivial = false; }
            else if (!gr.is_trivial()) all_trivial = false;
        }
    }

    if (all_trivial) {
        out.verdict = DetectionResult::Verdict::Empty;
        out.method = "exact";
        return out;
    }
    if (!any_exhausted) {
        // variety provably nonempty in some chart; hunt harder for a witness
        NumericSearchResult hard = numeric_product_search(
            search_space, 4 * opts.numeric_restarts, 2 * opts.numeric_iters, rng);
        if (hard.best_overlap > out.best_overlap) out.best_overlap = hard.best_overlap;
        double resid = hard.psi.size()
                           ? product_membership_residual(search_space, hard.psi, hard.phi)
                           : 1.0;
        if (hard.best_overlap >= 1.0 - 1e-7 && resid <= 1e-9) {
            out.verdict = DetectionResult::Verdict::Witness;
            out.method = "numeric";
            out.witness_a = hard.psi;
            out.witness_b = hard.phi;
            out.witness_residual = resid;
            return out;
        }
    }
    out.verdict = DetectionResult::Verdict::Unknown;
    out.method = any_exhausted ? "exact(budget)" : "numeric";
    return out;
}

} // namespace zec
