#pragma once

// Derivations of an n-Hom-Lie algebra:
//   D[x_1..x_n]_g = sum_i [a(x_1),..,(Ad_{a^{-1}}D)(x_i),..,a(x_n)]_g.
// Der(g) is computed as an exact nullspace; the operator bracket [.,.]_beta
// and Ad_beta give the ambient Hom-Lie algebra structure on gl(V).

#include <string>
#include <vector>

#include "nhl/algebra.hpp"

namespace nhl {

// twist context for [.,.]_beta and Ad_beta on gl(V)
template <Field K>
struct OperatorContext {
    Matrix<K> beta;
    Matrix<K> beta_inv;

    explicit OperatorContext(Matrix<K> b) : beta(std::move(b)) {
        auto inv = beta.inverse();
        if (!inv) throw input_error("operator context requires invertible beta");
        beta_inv = std::move(*inv);
    }
};

// Ad_beta(A) = beta A beta^{-1}
template <Field K>
Matrix<K> op_ad(const OperatorContext<K>& ctx, const Matrix<K>& a) {
    return ctx.beta * a * ctx.beta_inv;
}

// [A,B]_beta = beta A beta^{-1} B beta^{-1} - beta B beta^{-1} A beta^{-1}
template <Field K>
Matrix<K> op_bracket(const OperatorContext<K>& ctx, const Matrix<K>& a, const Matrix<K>& b) {
    if (!a.same_shape(b) || a.rows() != a.cols() || a.rows() != ctx.beta.rows())
        throw input_error("operator bracket shape mismatch");
    return ctx.beta * a * ctx.beta_inv * b * ctx.beta_inv -
           ctx.beta * b * ctx.beta_inv * a * ctx.beta_inv;
}

// defect of the derivation identity at one basis combo
template <Field K>
Vec<K> derivation_defect(const NHomLieAlgebra<K>& alg, const Matrix<K>& d_map,
                         const Matrix<K>& ad_inv_d, const Combo& c) {
    Vec<K> lhs = d_map.apply(alg.bracket_basis(c));
    for (int i = 0; i < alg.arity(); ++i) {
        std::vector<Vec<K>> args;
        args.reserve(c.size());
        for (int j = 0; j < alg.arity(); ++j) {
            Index idx = c[static_cast<std::size_t>(j)];
            args.push_back(j == i ? ad_inv_d.col(idx) : alg.alpha().col(idx));
        }
        Vec<K> t = alg.bracket_eval(args);
        for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] -= t[k];
    }
    return lhs;
}

template <Field K>
Report is_derivation(const NHomLieAlgebra<K>& alg, const Matrix<K>& d_map) {
    if (d_map.rows() != alg.dim() || d_map.cols() != alg.dim())
        throw input_error("derivation candidate must be dim x dim");
    Report rep;
    rep.check = "is_derivation";
    Matrix<K> ad_inv_d = alg.alpha_power(-1) * d_map * alg.alpha();
    for (const Combo& c : increasing_combos(alg.dim(), alg.arity())) {
        Vec<K> defect = derivation_defect(alg, d_map, ad_inv_d, c);
        if (!vec_is_zero(defect))
            rep.add_defect("combo=" + combo_str(c), vec_str(zero_vec<K>(alg.dim())), vec_str(defect));
    }
    rep.sort_defects();
    return rep;
}

namespace detail {
// flatten row-major; the unknown order fixing all rank computations
template <Field K>
Vec<K> flatten(const Matrix<K>& m) {
    Vec<K> v;
    v.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

template <Field K>
Matrix<K> unflatten(const Vec<K>& v, int rows, int cols) {
    Matrix<K> m(rows, cols);
    std::size_t k = 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = v[k++];
    return m;
}
} // namespace detail

// Basis of Der(g), reproducible: unknowns D_{uv} ordered row-major, nullspace
// basis from the canonical RREF.
template <Field K>
std::vector<Matrix<K>> derivation_basis(const NHomLieAlgebra<K>& alg) {
    const int d = alg.dim();
    auto combos = increasing_combos(d, alg.arity());
    std::vector<Vec<K>> rows;
    // residual is linear in D; one matrix row per (combo, component)
    for (const Combo& c : combos) {
        std::vector<Vec<K>> unit_defects;
        unit_defects.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
        for (int u = 0; u < d; ++u) {
            for (int v = 0; v < d; ++v) {
                Matrix<K> e_uv(d, d);
                e_uv(u, v) = K(1L);
                Matrix<K> ad_inv_d = alg.alpha_power(-1) * e_uv * alg.alpha();
                unit_defects.push_back(derivation_defect(alg, e_uv, ad_inv_d, c));
            }
        }
        for (int comp = 0; comp < d; ++comp) {
            Vec<K> row;
            row.reserve(unit_defects.size());
            for (const Vec<K>& def : unit_defects) row.push_back(def[static_cast<std::size_t>(comp)]);
            rows.push_back(std::move(row));
        }
    }
    std::vector<Matrix<K>> basis;
    if (rows.empty()) {
        // no combos at all (d < n): every map is a derivation
        for (int u = 0; u < d; ++u)
            for (int v = 0; v < d; ++v) {
                Matrix<K> m(d, d);
                m(u, v) = K(1L);
                basis.push_back(std::move(m));
            }
        return basis;
    }
    for (const Vec<K>& v : Matrix<K>::from_rows(rows).nullspace())
        basis.push_back(detail::unflatten(v, d, d));
    return basis;
}

// matrix of ad_Y for a fundamental element Y; always a derivation
template <Field K>
Matrix<K> inner_derivation(const NHomLieAlgebra<K>& alg, const WedgeElement<K>& y) {
    if (y.degree != alg.arity() - 1)
        throw input_error("inner derivation requires a degree n-1 element");
    return alg.ad_matrix(y);
}

// Der(g) is a Hom-Lie subalgebra of (gl(g), [.,.]_alpha, Ad_alpha):
// closure under Ad_alpha and under [.,.]_alpha, tested by exact rank
// membership against the computed basis.
template <Field K>
Report check_der_subalgebra(const NHomLieAlgebra<K>& alg) {
    Report rep;
    rep.check = "check_der_subalgebra";
    OperatorContext<K> ctx(alg.alpha());
    std::vector<Matrix<K>> basis = derivation_basis(alg);
    std::vector<Vec<K>> span;
    span.reserve(basis.size());
    for (const Matrix<K>& b : basis) span.push_back(detail::flatten(b));
    rep.metrics["dim_der"] = std::to_string(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Matrix<K> ad = op_ad(ctx, basis[i]);
        if (!in_row_span(span, detail::flatten(ad)))
            rep.add_defect("Ad_alpha D" + std::to_string(i), "in Der(g)", "outside");
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            Matrix<K> br = op_bracket(ctx, basis[i], basis[j]);
            if (!in_row_span(span, detail::flatten(br)))
                rep.add_defect("[D" + std::to_string(i) + ",D" + std::to_string(j) + "]_alpha",
                               "in Der(g)", "outside");
        }
    rep.sort_defects();
    return rep;
}

// Inn(g) is an ideal: both identities
//   Ad_alpha ad_X = ad_{a~X}
//   [D, ad_X]_alpha = ad_{sum_i a(x_1)^..^D(x_i)^..^a(x_{n-1})}
// as exact matrix equalities, for wedge-basis X and all basis derivations D.
template <Field K>
Report check_inn_ideal(const NHomLieAlgebra<K>& alg) {
    Report rep;
    rep.check = "check_inn_ideal";
    OperatorContext<K> ctx(alg.alpha());
    std::vector<Matrix<K>> basis = derivation_basis(alg);
    for (const Combo& xc : increasing_combos(alg.dim(), alg.arity() - 1)) {
        WedgeElement<K> X = WedgeElement<K>::basis(xc);
        Matrix<K> ad_x = alg.ad_matrix(X);
        Matrix<K> lhs1 = op_ad(ctx, ad_x);
        Matrix<K> rhs1 = alg.ad_matrix(alg.alpha_tilde(X));
        if (lhs1 != rhs1)
            rep.add_defect("Ad_alpha ad_X X=" + combo_str(xc), mat_str(rhs1),
                           mat_str(lhs1));
        for (std::size_t di = 0; di < basis.size(); ++di) {
            Matrix<K> lhs2 = op_bracket(ctx, basis[di], ad_x);
            WedgeElement<K> w = WedgeElement<K>::zero(alg.arity() - 1);
            for (int i = 0; i < alg.arity() - 1; ++i) {
                std::vector<Vec<K>> factors;
                for (int j = 0; j < alg.arity() - 1; ++j) {
                    Index idx = xc[static_cast<std::size_t>(j)];
                    factors.push_back(j == i ? basis[di].col(idx) : alg.alpha().col(idx));
                }
                w += wedge_of_vectors(factors, alg.dim());
            }
            Matrix<K> rhs2 = alg.ad_matrix(w);
            if (lhs2 != rhs2)
                rep.add_defect("[D" + std::to_string(di) + ",ad_X]_alpha X=" + combo_str(xc),
                               mat_str(rhs2), mat_str(lhs2));
        }
    }
    rep.sort_defects();
    return rep;
}

} // namespace nhl
