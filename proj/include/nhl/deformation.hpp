#pragma once

// (n-1)-order one-parameter deformations omega_lambda = sum_i lambda^i
// omega_i of an n-Hom-Lie algebra, Hom-Nijenhuis operators generating
// trivial deformations, and Hom-O-operators with their block lift to the
// semidirect product.
//
// Each omega_i is an alternating n-ary bracket candidate and reuses the
// algebra's sparse table storage, so omega_0 (the original bracket) is
// handled uniformly.

#include <string>
#include <utility>
#include <vector>

#include "nhl/representation.hpp"

namespace nhl {

template <Field K>
struct DeformationFamily {
    std::vector<BracketTable<K>> omegas; // omega_1 .. omega_{n-1}
};

namespace detail {

// omega(X, z) for a fundamental wedge element X and a vector z
template <Field K>
Vec<K> nary_eval_wedge(const NHomLieAlgebra<K>& alg, const BracketTable<K>& table,
                       const WedgeElement<K>& x, const Vec<K>& z) {
    Vec<K> out = zero_vec<K>(alg.dim());
    for (const auto& [c, coef] : x.coeffs) {
        std::vector<Vec<K>> args;
        args.reserve(c.size() + 1);
        for (Index i : c) args.push_back(alg.e(i));
        args.push_back(z);
        vec_axpy(out, coef, nary_eval(table, alg.arity(), alg.dim(), alg.dim(), std::span<const Vec<K>>(args)));
    }
    return out;
}

// omega_j(X,.)*Y = sum_l alpha(y_1) ^ .. ^ omega_j(X, y_l) ^ .. ^ alpha(y_{n-1})
template <Field K>
WedgeElement<K> star_insert(const NHomLieAlgebra<K>& alg, const BracketTable<K>& w_j,
                            const WedgeElement<K>& x, const WedgeElement<K>& y) {
    const int n = alg.arity();
    WedgeElement<K> out = WedgeElement<K>::zero(n - 1);
    for (const auto& [yc, ycoef] : y.coeffs) {
        std::vector<Vec<K>> alpha_y;
        alpha_y.reserve(yc.size());
        for (Index i : yc) alpha_y.push_back(alg.alpha().col(i));
        for (int l = 0; l < n - 1; ++l) {
            std::vector<Vec<K>> factors = alpha_y;
            factors[static_cast<std::size_t>(l)] =
                nary_eval_wedge(alg, w_j, x, alg.e(yc[static_cast<std::size_t>(l)]));
            out.add_scaled(wedge_of_vectors(factors, alg.dim()), ycoef);
        }
    }
    return out;
}

} // namespace detail

// The composition entering the deformation equations:
//   (w_i o w_j)(X, Y, z) = w_i(w_j(X,.)*Y, alpha z) - w_i(a~X, w_j(Y,z))
//                          + w_i(a~Y, w_j(X,z))
template <Field K>
Vec<K> omega_compose(const NHomLieAlgebra<K>& alg, const BracketTable<K>& w_i,
                     const BracketTable<K>& w_j, const WedgeElement<K>& x,
                     const WedgeElement<K>& y, const Vec<K>& z) {
    if (x.degree != alg.arity() - 1 || y.degree != alg.arity() - 1)
        throw input_error("omega composition requires degree n-1 wedge arguments");
    if (static_cast<int>(z.size()) != alg.dim())
        throw input_error("omega composition argument dimension mismatch");
    Vec<K> out = detail::nary_eval_wedge(alg, w_i, detail::star_insert(alg, w_j, x, y),
                                         alg.alpha().apply(z));
    Vec<K> t = detail::nary_eval_wedge(alg, w_i, alg.alpha_tilde(x),
                                       detail::nary_eval_wedge(alg, w_j, y, z));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= t[i];
    t = detail::nary_eval_wedge(alg, w_i, alg.alpha_tilde(y),
                                detail::nary_eval_wedge(alg, w_j, x, z));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += t[i];
    return out;
}

// Deformation equations: equivariance omega_i o alpha^{(x)n} = alpha o omega_i
// for i = 1..n-1, and sum_{i+j=k} omega_i o omega_j = 0 for k = 1..2n-2 on
// all basis (X, Y, z) tuples.
template <Field K>
Report check_deformation(const NHomLieAlgebra<K>& alg, const DeformationFamily<K>& fam) {
    const int n = alg.arity(), d = alg.dim();
    if (static_cast<int>(fam.omegas.size()) != n - 1)
        throw input_error("deformation family must have exactly n-1 brackets");
    check_hom_fundamental(alg).require_pass();
    Report rep;
    rep.check = "check_deformation";

    std::vector<const BracketTable<K>*> omegas;
    omegas.push_back(&alg.bracket());
    for (const auto& t : fam.omegas) omegas.push_back(&t);

    for (int i = 1; i <= n - 1; ++i) {
        const BracketTable<K>& w = *omegas[static_cast<std::size_t>(i)];
        for (const Combo& c : increasing_combos(d, n)) {
            std::vector<Vec<K>> args;
            for (Index t : c) args.push_back(alg.alpha().col(t));
            Vec<K> lhs = nary_eval(w, n, d, d, std::span<const Vec<K>>(args));
            auto it = w.find(c);
            Vec<K> rhs = (it == w.end()) ? zero_vec<K>(d) : alg.alpha().apply(it->second);
            if (lhs != rhs)
                rep.add_defect("equivariance i=" + std::to_string(i) + " combo=" + combo_str(c),
                               vec_str(rhs), vec_str(lhs));
        }
    }

    auto fund = increasing_combos(d, n - 1);
    for (int k = 1; k <= 2 * n - 2; ++k) {
        for (const Combo& xc : fund) {
            WedgeElement<K> x = WedgeElement<K>::basis(xc);
            for (const Combo& yc : fund) {
                WedgeElement<K> y = WedgeElement<K>::basis(yc);
                for (int z = 0; z < d; ++z) {
                    Vec<K> acc = zero_vec<K>(d);
                    for (int i = 0; i <= n - 1; ++i) {
                        int j = k - i;
                        if (j < 0 || j > n - 1) continue;
                        Vec<K> t = omega_compose(alg, *omegas[static_cast<std::size_t>(i)],
                                                 *omegas[static_cast<std::size_t>(j)], x, y, alg.e(z));
                        for (std::size_t s = 0; s < acc.size(); ++s) acc[s] += t[s];
                    }
                    if (!vec_is_zero(acc))
                        rep.add_defect("k=" + std::to_string(k) + " X=" + combo_str(xc) +
                                           " Y=" + combo_str(yc) + " z=" + std::to_string(z),
                                       vec_str(zero_vec<K>(d)), vec_str(acc));
                }
            }
        }
    }
    rep.sort_defects();
    return rep;
}

namespace detail {
// tables [.]_N^1 .. [.]_N^{upto}; requires N alpha = alpha N
template <Field K>
std::vector<BracketTable<K>> nijenhuis_tables(const NHomLieAlgebra<K>& alg, const Matrix<K>& nmap,
                                              int upto) {
    const int n = alg.arity(), d = alg.dim();
    Matrix<K> ainv = alg.alpha_power(-1);
    Matrix<K> n_ainv = nmap * ainv;
    std::vector<BracketTable<K>> tables;
    for (int i = 1; i <= upto; ++i) {
        BracketTable<K> tab;
        for (const Combo& c : increasing_combos(d, n)) {
            Vec<K> acc = zero_vec<K>(d);
            // sum over i-element subsets of slots receiving N alpha^{-1}
            for (const Combo& subset : increasing_combos(n, i)) {
                std::vector<Vec<K>> args;
                args.reserve(static_cast<std::size_t>(n));
                std::size_t si = 0;
                for (int slot = 0; slot < n; ++slot) {
                    Index idx = c[static_cast<std::size_t>(slot)];
                    if (si < subset.size() && subset[si] == slot) {
                        args.push_back(n_ainv.col(idx));
                        ++si;
                    } else {
                        args.push_back(alg.e(idx));
                    }
                }
                vec_axpy(acc, K(1L), alg.bracket_eval(args));
            }
            // - N [alpha^{-1} x]_N^{i-1}
            std::vector<Vec<K>> prev_args;
            prev_args.reserve(static_cast<std::size_t>(n));
            for (Index idx : c) prev_args.push_back(ainv.col(idx));
            Vec<K> prev = (i == 1)
                              ? alg.bracket_eval(prev_args)
                              : nary_eval(tables.back(), n, d, d, std::span<const Vec<K>>(prev_args));
            vec_axpy(acc, K(-1L), nmap.apply(prev));
            if (!vec_is_zero(acc)) tab.emplace(c, std::move(acc));
        }
        tables.push_back(std::move(tab));
    }
    return tables;
}
} // namespace detail

// the i-th Nijenhuis-deformed bracket [.]_N^i (defined for commuting N only)
template <Field K>
BracketTable<K> nijenhuis_bracket(const NHomLieAlgebra<K>& alg, const Matrix<K>& nmap, int i) {
    if (i < 1 || i > alg.arity() - 1)
        throw input_error("nijenhuis bracket order must be in 1..n-1");
    if (nmap.rows() != alg.dim() || nmap.cols() != alg.dim())
        throw input_error("N must be dim x dim");
    if (nmap * alg.alpha() != alg.alpha() * nmap)
        throw input_error("nijenhuis bracket requires N o alpha = alpha o N");
    return detail::nijenhuis_tables(alg, nmap, i).back();
}

// Hom-Nijenhuis: N alpha = alpha N and [Nx_1,..,Nx_n]_g = N([x]_N^{n-1})
template <Field K>
Report is_hom_nijenhuis(const NHomLieAlgebra<K>& alg, const Matrix<K>& nmap) {
    if (nmap.rows() != alg.dim() || nmap.cols() != alg.dim())
        throw input_error("N must be dim x dim");
    Report rep;
    rep.check = "is_hom_nijenhuis";
    if (nmap * alg.alpha() != alg.alpha() * nmap) {
        rep.add_defect("commutation", "N o alpha = alpha o N", "N o alpha != alpha o N");
        return rep; // the recursive brackets are undefined without it
    }
    BracketTable<K> last = detail::nijenhuis_tables(alg, nmap, alg.arity() - 1).back();
    for (const Combo& c : increasing_combos(alg.dim(), alg.arity())) {
        std::vector<Vec<K>> args;
        for (Index i : c) args.push_back(nmap.col(i));
        Vec<K> lhs = alg.bracket_eval(args);
        auto it = last.find(c);
        Vec<K> rhs = nmap.apply(it == last.end() ? zero_vec<K>(alg.dim()) : it->second);
        if (lhs != rhs)
            rep.add_defect("combo=" + combo_str(c), vec_str(rhs), vec_str(lhs));
    }
    rep.sort_defects();
    return rep;
}

// omega_i = [.]_N^i for a certified Hom-Nijenhuis operator
template <Field K>
DeformationFamily<K> deform_from_nijenhuis(const NHomLieAlgebra<K>& alg, const Matrix<K>& nmap) {
    is_hom_nijenhuis(alg, nmap).require_pass();
    DeformationFamily<K> fam;
    fam.omegas = detail::nijenhuis_tables(alg, nmap, alg.arity() - 1);
    return fam;
}

// bracket omega_0 + sum_i lambda^i omega_i, same twist
template <Field K>
NHomLieAlgebra<K> deformed_algebra(const NHomLieAlgebra<K>& alg, const DeformationFamily<K>& fam,
                                   const K& lambda) {
    if (static_cast<int>(fam.omegas.size()) != alg.arity() - 1)
        throw input_error("deformation family must have exactly n-1 brackets");
    BracketTable<K> table = alg.bracket();
    K lp = K(1L);
    for (const BracketTable<K>& w : fam.omegas) {
        lp = lp * lambda;
        for (const auto& [c, v] : w) {
            auto it = table.find(c);
            if (it == table.end()) it = table.emplace(c, zero_vec<K>(alg.dim())).first;
            vec_axpy(it->second, lp, v);
            if (vec_is_zero(it->second)) table.erase(it);
        }
    }
    return NHomLieAlgebra<K>(alg.arity(), alg.dim(), std::move(table), alg.alpha());
}

// Triviality of a deformation wrt T_lambda = alpha + lambda N.
// Mode (a), lambda-free expanded conditions on every basis n-combo:
//   con1: alpha w_1 + N w_0 = sum_i [a x_1,..,N x_i,..,a x_n]_g
//   con3: alpha w_i + N w_{i-1} = sum_{|S|=i} [.., N on S, .., alpha off S]_g
//   con2: N w_{n-1} = [N x_1,..,N x_n]_g
// Mode (b), sampled: T_lambda o alpha = alpha o T_lambda and
//   T_lambda [x]_lambda = [T_lambda x]_g for each requested lambda.
template <Field K>
Report check_trivial(const NHomLieAlgebra<K>& alg, const DeformationFamily<K>& fam,
                     const Matrix<K>& nmap, const std::vector<K>& lambdas) {
    const int n = alg.arity(), d = alg.dim();
    if (static_cast<int>(fam.omegas.size()) != n - 1)
        throw input_error("deformation family must have exactly n-1 brackets");
    if (nmap.rows() != d || nmap.cols() != d) throw input_error("N must be dim x dim");
    Report rep;
    rep.check = "check_trivial";

    std::vector<const BracketTable<K>*> omegas;
    omegas.push_back(&alg.bracket());
    for (const auto& t : fam.omegas) omegas.push_back(&t);
    auto omega_at = [&](int i, const Combo& c) -> Vec<K> {
        auto it = omegas[static_cast<std::size_t>(i)]->find(c);
        return it == omegas[static_cast<std::size_t>(i)]->end() ? zero_vec<K>(d) : it->second;
    };

    for (const Combo& c : increasing_combos(d, n)) {
        for (int i = 1; i <= n - 1; ++i) {
            // con1 (i=1), con3 (2<=i<=n-1)
            Vec<K> lhs = alg.alpha().apply(omega_at(i, c));
            Vec<K> nw = nmap.apply(omega_at(i - 1, c));
            for (std::size_t s = 0; s < lhs.size(); ++s) lhs[s] += nw[s];
            Vec<K> rhs = zero_vec<K>(d);
            for (const Combo& subset : increasing_combos(n, i)) {
                std::vector<Vec<K>> args;
                std::size_t si = 0;
                for (int slot = 0; slot < n; ++slot) {
                    Index idx = c[static_cast<std::size_t>(slot)];
                    if (si < subset.size() && subset[si] == slot) {
                        args.push_back(nmap.col(idx));
                        ++si;
                    } else {
                        args.push_back(alg.alpha().col(idx));
                    }
                }
                vec_axpy(rhs, K(1L), alg.bracket_eval(args));
            }
            if (lhs != rhs)
                rep.add_defect("con" + std::string(i == 1 ? "1" : "3") + " i=" + std::to_string(i) +
                                   " combo=" + combo_str(c),
                               vec_str(rhs), vec_str(lhs));
        }
        // con2
        Vec<K> lhs = nmap.apply(omega_at(n - 1, c));
        std::vector<Vec<K>> args;
        for (Index idx : c) args.push_back(nmap.col(idx));
        Vec<K> rhs = alg.bracket_eval(args);
        if (lhs != rhs)
            rep.add_defect("con2 combo=" + combo_str(c), vec_str(rhs), vec_str(lhs));
    }

    for (std::size_t li = 0; li < lambdas.size(); ++li) {
        const K& lam = lambdas[li];
        Matrix<K> t_lam = alg.alpha() + lam * nmap;
        std::string loc = "lambda[" + std::to_string(li) + "]=" + lam.str();
        if (t_lam * alg.alpha() != alg.alpha() * t_lam)
            rep.add_defect(loc + " T o alpha", "alpha o T", "differs");
        NHomLieAlgebra<K> deformed = deformed_algebra(alg, fam, lam);
        for (const Combo& c : increasing_combos(d, n)) {
            Vec<K> lhs = t_lam.apply(deformed.bracket_basis(c));
            std::vector<Vec<K>> args;
            for (Index idx : c) args.push_back(t_lam.col(idx));
            Vec<K> rhs = alg.bracket_eval(args);
            if (lhs != rhs)
                rep.add_defect(loc + " combo=" + combo_str(c), vec_str(rhs), vec_str(lhs));
        }
    }
    rep.sort_defects();
    return rep;
}

// Hom-O-operator T: V -> g for a representation (V, rho, beta):
//   o1: T o beta = alpha o T
//   o2: [Tv_1,..,Tv_n]_g = T sum_i (-1)^{n-i} rho(T b^{-1}v_1,..,^i..,T b^{-1}v_n)(v_i)
template <Field K>
Report is_hom_o_operator(const NHomLieAlgebra<K>& alg, const Representation<K>& rep,
                         const Matrix<K>& t_map) {
    if (t_map.rows() != alg.dim() || t_map.cols() != rep.dimV())
        throw input_error("T must map V (dimV columns) into g (dim rows)");
    check_representation(rep).require_pass();
    Report out;
    out.check = "is_hom_o_operator";
    const int n = alg.arity(), dv = rep.dimV();
    if (t_map * rep.beta() != alg.alpha() * t_map)
        out.add_defect("o1", "T o beta = alpha o T", "differs");
    auto binv = rep.beta().inverse();
    if (!binv) throw structural_error("beta is singular");
    Matrix<K> tb = t_map * (*binv);
    for (const Combo& c : increasing_combos(dv, n)) {
        std::vector<Vec<K>> targs;
        for (Index i : c) targs.push_back(t_map.col(i));
        Vec<K> lhs = alg.bracket_eval(targs);
        Vec<K> acc = zero_vec<K>(dv);
        for (int i = 0; i < n; ++i) {
            std::vector<Vec<K>> rargs;
            for (int m = 0; m < n; ++m)
                if (m != i) rargs.push_back(tb.col(c[static_cast<std::size_t>(m)]));
            Vec<K> term = rep.rho_vectors(rargs).apply(unit_vec<K>(dv, c[static_cast<std::size_t>(i)]));
            if ((n - 1 - i) % 2 == 0)
                vec_axpy(acc, K(1L), term);
            else
                vec_axpy(acc, K(-1L), term);
        }
        Vec<K> rhs = t_map.apply(acc);
        if (lhs != rhs)
            out.add_defect("o2 combo=" + combo_str(c), vec_str(rhs), vec_str(lhs));
    }
    out.sort_defects();
    return out;
}

// block lift T" = [[0, T], [0, 0]] on g (+) V; Nijenhuis on the semidirect
// product exactly when T is a Hom-O-operator
template <Field K>
Matrix<K> o_operator_lift(const NHomLieAlgebra<K>& alg, const Representation<K>& rep,
                          const Matrix<K>& t_map) {
    if (t_map.rows() != alg.dim() || t_map.cols() != rep.dimV())
        throw input_error("T must map V (dimV columns) into g (dim rows)");
    const int d = alg.dim(), dv = rep.dimV();
    Matrix<K> lift(d + dv, d + dv);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < dv; ++j) lift(i, d + j) = t_map(i, j);
    return lift;
}

} // namespace nhl
