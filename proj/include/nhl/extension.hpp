#pragma once

// Generalized derivations D: wedge^{n-1} g -> g and the one-dimensional
// extension g (+) K.D they induce. The extension theorem is an iff: the
// extended bracket satisfies the Hom-Fundamental identity exactly when D
// satisfies conditions (i)-(iv), so extend() never rejects its input and the
// equivalence is surfaced through the validity checks.

#include <string>
#include <utility>
#include <vector>

#include "nhl/algebra.hpp"

namespace nhl {

template <Field K>
struct GeneralizedDerivation {
    std::map<Combo, Vec<K>> table; // increasing (n-1)-combo -> vector in g

    Vec<K> at(const Combo& c, int dim) const {
        auto it = table.find(c);
        return it == table.end() ? zero_vec<K>(dim) : it->second;
    }

    // linear extension over the wedge basis
    Vec<K> eval_wedge(const WedgeElement<K>& w, int dim) const {
        Vec<K> out = zero_vec<K>(dim);
        for (const auto& [c, coef] : w.coeffs) {
            auto it = table.find(c);
            if (it != table.end()) vec_axpy(out, coef, it->second);
        }
        return out;
    }

    // multilinear alternating extension to n-1 vectors
    Vec<K> eval_vectors(const std::vector<Vec<K>>& vs, int dim) const {
        return eval_wedge(wedge_of_vectors(vs, dim), dim);
    }
};

namespace detail {
template <Field K>
void validate_gd(const NHomLieAlgebra<K>& alg, const GeneralizedDerivation<K>& gd) {
    for (const auto& [c, v] : gd.table) {
        if (static_cast<int>(c.size()) != alg.arity() - 1)
            throw input_error("generalized derivation key " + combo_str(c) + " has wrong arity");
        wedge_normalize(c, alg.dim());
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            if (c[i] >= c[i + 1])
                throw input_error("generalized derivation key " + combo_str(c) +
                                  " is not strictly increasing");
        if (static_cast<int>(v.size()) != alg.dim())
            throw input_error("generalized derivation value at " + combo_str(c) +
                              " has wrong dimension");
    }
}
} // namespace detail

// conditions (i)-(iv) of the generalized derivation definition
template <Field K>
Report is_generalized_derivation(const NHomLieAlgebra<K>& alg, const GeneralizedDerivation<K>& gd) {
    detail::validate_gd(alg, gd);
    check_hom_fundamental(alg).require_pass();
    Report rep;
    rep.check = "is_generalized_derivation";
    const int n = alg.arity(), d = alg.dim();
    auto fund = increasing_combos(d, n - 1);

    // (i) alpha o D = D o a~
    for (const Combo& x : fund) {
        Vec<K> lhs = alg.alpha().apply(gd.at(x, d));
        Vec<K> rhs = gd.eval_wedge(alg.alpha_tilde(WedgeElement<K>::basis(x)), d);
        if (lhs != rhs)
            rep.add_defect("cond=i X=" + combo_str(x), vec_str(rhs), vec_str(lhs));
    }

    // (ii) [aX, D(Y)] - [aY, D(X)] = sum_i D(a y_1,..,[x, y_i]_g,..,a y_{n-1})
    for (const Combo& xc : fund) {
        std::vector<Vec<K>> xs, axs;
        for (Index i : xc) { xs.push_back(alg.e(i)); axs.push_back(alg.alpha().col(i)); }
        for (const Combo& yc : fund) {
            std::vector<Vec<K>> ys, ays;
            for (Index i : yc) { ys.push_back(alg.e(i)); ays.push_back(alg.alpha().col(i)); }
            std::vector<Vec<K>> largs = axs;
            largs.push_back(gd.at(yc, d));
            Vec<K> lhs = alg.bracket_eval(largs);
            largs = ays;
            largs.push_back(gd.at(xc, d));
            Vec<K> sub = alg.bracket_eval(largs);
            for (std::size_t s = 0; s < lhs.size(); ++s) lhs[s] -= sub[s];
            Vec<K> rhs = zero_vec<K>(d);
            for (int i = 0; i < n - 1; ++i) {
                std::vector<Vec<K>> inner = xs;
                inner.push_back(ys[static_cast<std::size_t>(i)]);
                std::vector<Vec<K>> args = ays;
                args[static_cast<std::size_t>(i)] = alg.bracket_eval(inner);
                vec_axpy(rhs, K(1L), gd.eval_vectors(args, d));
            }
            if (lhs != rhs)
                rep.add_defect("cond=ii X=" + combo_str(xc) + " Y=" + combo_str(yc),
                               vec_str(rhs), vec_str(lhs));
        }
    }

    // (iii) D(a x_1,..,a x_{n-2},[y]_g) = sum_i [a y_1,..,D(x, y_i),..,a y_n]_g
    for (const Combo& xc : increasing_combos(d, n - 2)) {
        std::vector<Vec<K>> xs, axs;
        for (Index i : xc) { xs.push_back(alg.e(i)); axs.push_back(alg.alpha().col(i)); }
        for (const Combo& yc : increasing_combos(d, n)) {
            std::vector<Vec<K>> ys, ays;
            for (Index i : yc) { ys.push_back(alg.e(i)); ays.push_back(alg.alpha().col(i)); }
            std::vector<Vec<K>> dargs = axs;
            dargs.push_back(alg.bracket_eval(ys));
            Vec<K> lhs = gd.eval_vectors(dargs, d);
            Vec<K> rhs = zero_vec<K>(d);
            for (int i = 0; i < n; ++i) {
                std::vector<Vec<K>> inner = xs;
                inner.push_back(ys[static_cast<std::size_t>(i)]);
                std::vector<Vec<K>> args = ays;
                args[static_cast<std::size_t>(i)] = gd.eval_vectors(inner, d);
                vec_axpy(rhs, K(1L), alg.bracket_eval(args));
            }
            if (lhs != rhs)
                rep.add_defect("cond=iii x=" + combo_str(xc) + " y=" + combo_str(yc),
                               vec_str(rhs), vec_str(lhs));
        }
    }

    // (iv) D(a x_1,..,a x_{n-2},D(Y)) = sum_i D(a y_1,..,D(x, y_i),..,a y_{n-1})
    for (const Combo& xc : increasing_combos(d, n - 2)) {
        std::vector<Vec<K>> xs, axs;
        for (Index i : xc) { xs.push_back(alg.e(i)); axs.push_back(alg.alpha().col(i)); }
        for (const Combo& yc : fund) {
            std::vector<Vec<K>> ys, ays;
            for (Index i : yc) { ys.push_back(alg.e(i)); ays.push_back(alg.alpha().col(i)); }
            std::vector<Vec<K>> dargs = axs;
            dargs.push_back(gd.at(yc, d));
            Vec<K> lhs = gd.eval_vectors(dargs, d);
            Vec<K> rhs = zero_vec<K>(d);
            for (int i = 0; i < n - 1; ++i) {
                std::vector<Vec<K>> inner = xs;
                inner.push_back(ys[static_cast<std::size_t>(i)]);
                std::vector<Vec<K>> args = ays;
                args[static_cast<std::size_t>(i)] = gd.eval_vectors(inner, d);
                vec_axpy(rhs, K(1L), gd.eval_vectors(args, d));
            }
            if (lhs != rhs)
                rep.add_defect("cond=iv x=" + combo_str(xc) + " Y=" + combo_str(yc),
                               vec_str(rhs), vec_str(lhs));
        }
    }
    rep.sort_defects();
    return rep;
}

// ad_x(y_1,..,y_{n-1}) = [x, y_1,..,y_{n-1}]_g for an alpha-fixed x
template <Field K>
GeneralizedDerivation<K> inner_generalized_derivation(const NHomLieAlgebra<K>& alg,
                                                      const Vec<K>& x) {
    if (static_cast<int>(x.size()) != alg.dim())
        throw input_error("inner generalized derivation argument has wrong dimension");
    if (alg.alpha().apply(x) != x)
        throw input_error("inner generalized derivation requires alpha(x) = x");
    GeneralizedDerivation<K> gd;
    for (const Combo& c : increasing_combos(alg.dim(), alg.arity() - 1)) {
        std::vector<Vec<K>> args;
        args.push_back(x);
        for (Index i : c) args.push_back(alg.e(i));
        Vec<K> v = alg.bracket_eval(args);
        if (!vec_is_zero(v)) gd.table.emplace(c, std::move(v));
    }
    return gd;
}

// Extension g (+) K.D of dimension d+1 (the D direction is basis index d):
//   [x_1+k_1 D,..] = [x]_g + sum_i (-1)^{i-1} k_i D(x_1,..,^x_i,..,x_n),
//   alpha_D = diag(alpha, 1).
// Always constructs; validity of the result is equivalent to D being a
// generalized derivation.
template <Field K>
NHomLieAlgebra<K> extend(const NHomLieAlgebra<K>& alg, const GeneralizedDerivation<K>& gd) {
    detail::validate_gd(alg, gd);
    const int n = alg.arity(), d = alg.dim();
    BracketTable<K> table;
    for (const Combo& c : increasing_combos(d + 1, n)) {
        Vec<K> value = zero_vec<K>(d + 1);
        if (c.back() < d) {
            Vec<K> v = alg.bracket_basis(c);
            for (int i = 0; i < d; ++i) value[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)];
        } else {
            // k_n = 1 slot: sign (-1)^{n-1}
            Combo sub(c.begin(), c.end() - 1);
            Vec<K> v = gd.at(sub, d);
            for (int i = 0; i < d; ++i) {
                value[static_cast<std::size_t>(i)] =
                    ((n - 1) % 2 == 0) ? v[static_cast<std::size_t>(i)] : -v[static_cast<std::size_t>(i)];
            }
        }
        if (!vec_is_zero(value)) table.emplace(c, std::move(value));
    }
    Matrix<K> twist(d + 1, d + 1);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) twist(i, j) = alg.alpha()(i, j);
    twist(d, d) = K(1L);
    return NHomLieAlgebra<K>(n, d + 1, std::move(table), std::move(twist));
}

// Conditions (i) and (iv) are exactly the arity-(n-1) axioms: a valid D is
// itself an (n-1)-Hom-Lie bracket on g.
template <Field K>
NHomLieAlgebra<K> reduce_arity(const NHomLieAlgebra<K>& alg, const GeneralizedDerivation<K>& gd) {
    if (alg.arity() < 3)
        throw input_error("arity reduction needs n >= 3");
    is_generalized_derivation(alg, gd).require_pass();
    BracketTable<K> table;
    for (const auto& [c, v] : gd.table)
        if (!vec_is_zero(v)) table.emplace(c, v);
    return NHomLieAlgebra<K>(alg.arity() - 1, alg.dim(), std::move(table), alg.alpha());
}

template <Field K>
struct ExtensionIsomorphism {
    Matrix<K> theta; // (d+1) x (d+1), maps the D1-extension to the D2-extension
    Report report;   // morphism equations, checked exactly
};

// For D1 = D2 + ad_x with alpha(x) = x, theta = [[Id, x],[0, 1]] is an
// isomorphism extend(alg, D1) -> extend(alg, D2). Both morphism equations
// are verified on all basis combos.
template <Field K>
ExtensionIsomorphism<K> extension_isomorphism(const NHomLieAlgebra<K>& alg,
                                              const GeneralizedDerivation<K>& gd1,
                                              const GeneralizedDerivation<K>& gd2,
                                              const Vec<K>& x) {
    const int n = alg.arity(), d = alg.dim();
    if (static_cast<int>(x.size()) != d) throw input_error("x has wrong dimension");
    if (alg.alpha().apply(x) != x)
        throw input_error("extension isomorphism requires alpha(x) = x");
    GeneralizedDerivation<K> ad_x = inner_generalized_derivation(alg, x);
    for (const Combo& c : increasing_combos(d, n - 1)) {
        Vec<K> diff = gd1.at(c, d);
        Vec<K> rhs = gd2.at(c, d);
        vec_axpy(rhs, K(1L), ad_x.at(c, d));
        if (diff != rhs)
            throw input_error("extension isomorphism requires D1 = D2 + ad_x (differs at " +
                              combo_str(c) + ")");
    }

    ExtensionIsomorphism<K> out{Matrix<K>::identity(d + 1), Report{}};
    for (int i = 0; i < d; ++i) out.theta(i, d) = x[static_cast<std::size_t>(i)];
    out.report.check = "extension_isomorphism";

    NHomLieAlgebra<K> e1 = extend(alg, gd1);
    NHomLieAlgebra<K> e2 = extend(alg, gd2);
    if (out.theta * e1.alpha() != e2.alpha() * out.theta)
        out.report.add_defect("twist", "theta o alpha_D1 = alpha_D2 o theta", "differs");
    for (const Combo& c : increasing_combos(d + 1, n)) {
        Vec<K> lhs = out.theta.apply(e1.bracket_basis(c));
        std::vector<Vec<K>> args;
        for (Index i : c) args.push_back(out.theta.col(i));
        Vec<K> rhs = e2.bracket_eval(args);
        if (lhs != rhs)
            out.report.add_defect("combo=" + combo_str(c), vec_str(rhs), vec_str(lhs));
    }
    out.report.sort_defects();
    return out;
}

} // namespace nhl
