#pragma once

// n-Hom-Lie algebras by structure constants: an alternating n-ary bracket
// stored on increasing basis combos, together with a twist map alpha.
// Multilinear/alternating extension is done at evaluation time through
// wedge_normalize, so the stored data can never break alternation.
//
// Structural validity (alpha an automorphism of the bracket, the
// Hom-Fundamental identity) is *checked*, not assumed: the type holds
// candidate data and the check_* functions return defect reports.

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nhl/combinatorics.hpp"
#include "nhl/matrix.hpp"
#include "nhl/report.hpp"
#include "nhl/wedge.hpp"

namespace nhl {

template <Field K>
using BracketTable = std::map<Combo, Vec<K>>; // increasing combo(k) -> value in g

template <Field K>
std::string vec_str(const Vec<K>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + "]";
}

// Multilinear alternating extension of a sparse table to arbitrary vector
// arguments. `arity` is the number of slots, `dim` the coordinate dimension
// of both the arguments and (independently) the stored values.
template <Field K>
Vec<K> nary_eval(const BracketTable<K>& table, int arity, int dim, int value_dim,
                 std::span<const Vec<K>> args) {
    if (static_cast<int>(args.size()) != arity) throw input_error("wrong number of bracket arguments");
    for (const Vec<K>& a : args)
        if (static_cast<int>(a.size()) != dim) throw input_error("bracket argument has wrong dimension");
    Vec<K> out = zero_vec<K>(value_dim);
    if (table.empty()) return out;
    Combo idx(static_cast<std::size_t>(arity));
    // depth-first over nonzero coordinates of each slot
    auto rec = [&](auto&& self, int slot, const K& coef) -> void {
        if (slot == arity) {
            WedgeNorm n = wedge_normalize(idx, dim);
            if (n.sign == 0) return;
            auto it = table.find(n.combo);
            if (it == table.end()) return;
            K c = (n.sign > 0) ? coef : -coef;
            vec_axpy(out, c, it->second);
            return;
        }
        const Vec<K>& a = args[static_cast<std::size_t>(slot)];
        for (int b = 0; b < dim; ++b) {
            const K& ab = a[static_cast<std::size_t>(b)];
            if (ab.is_zero()) continue;
            idx[static_cast<std::size_t>(slot)] = b;
            self(self, slot + 1, coef * ab);
        }
    };
    rec(rec, 0, K(1L));
    return out;
}

template <Field K>
class NHomLieAlgebra {
public:
    NHomLieAlgebra(int n, int dim, BracketTable<K> bracket, Matrix<K> alpha)
        : n_(n), dim_(dim), bracket_(std::move(bracket)), alpha_(std::move(alpha)) {
        if (n_ < 2) throw input_error("arity must be at least 2");
        if (dim_ < n_ - 1) throw input_error("dimension must be at least arity-1");
        if (alpha_.rows() != dim_ || alpha_.cols() != dim_)
            throw input_error("alpha must be " + std::to_string(dim_) + "x" + std::to_string(dim_));
        for (auto it = bracket_.begin(); it != bracket_.end();) {
            const Combo& c = it->first;
            if (static_cast<int>(c.size()) != n_)
                throw input_error("bracket key " + combo_str(c) + " has wrong arity");
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] < 0 || c[i] >= dim_)
                    throw input_error("bracket key " + combo_str(c) + " out of range");
                if (i + 1 < c.size() && c[i] >= c[i + 1])
                    throw input_error("bracket key " + combo_str(c) + " is not strictly increasing");
            }
            if (static_cast<int>(it->second.size()) != dim_)
                throw input_error("bracket value at " + combo_str(c) + " has wrong dimension");
            if (vec_is_zero(it->second)) it = bracket_.erase(it);
            else ++it;
        }
    }

    int arity() const { return n_; }
    int dim() const { return dim_; }
    const BracketTable<K>& bracket() const { return bracket_; }
    const Matrix<K>& alpha() const { return alpha_; }

    Vec<K> e(int i) const { return unit_vec<K>(dim_, i); }

    // [v_1, ..., v_n]_g
    Vec<K> bracket_eval(std::span<const Vec<K>> args) const {
        return nary_eval(bracket_, n_, dim_, dim_, args);
    }
    Vec<K> bracket_eval(const std::vector<Vec<K>>& args) const {
        return bracket_eval(std::span<const Vec<K>>(args));
    }

    Vec<K> bracket_basis(const Combo& c) const {
        WedgeNorm n = wedge_normalize(c, dim_);
        if (n.sign == 0) return zero_vec<K>(dim_);
        auto it = bracket_.find(n.combo);
        if (it == bracket_.end()) return zero_vec<K>(dim_);
        Vec<K> v = it->second;
        if (n.sign < 0)
            for (auto& x : v) x = -x;
        return v;
    }

    // ad_X(z) = [x_1, ..., x_{n-1}, z]_g for a fundamental element X
    Vec<K> ad_eval(const WedgeElement<K>& X, const Vec<K>& z) const {
        if (X.degree != n_ - 1) throw input_error("ad requires a fundamental element of degree n-1");
        Vec<K> out = zero_vec<K>(dim_);
        for (const auto& [combo, coef] : X.coeffs) {
            std::vector<Vec<K>> args;
            args.reserve(static_cast<std::size_t>(n_));
            for (Index i : combo) args.push_back(e(i));
            args.push_back(z);
            vec_axpy(out, coef, bracket_eval(args));
        }
        return out;
    }

    // matrix of ad_X acting on g
    Matrix<K> ad_matrix(const WedgeElement<K>& X) const {
        Matrix<K> m(dim_, dim_);
        for (int j = 0; j < dim_; ++j) {
            Vec<K> v = ad_eval(X, e(j));
            for (int i = 0; i < dim_; ++i) m(i, j) = v[static_cast<std::size_t>(i)];
        }
        return m;
    }

    // exact alpha^k, k may be negative
    Matrix<K> alpha_power(int k) const { return alpha_.pow(k); }

    // induced map on wedge^{deg} applied to a wedge element
    WedgeElement<K> alpha_tilde(const WedgeElement<K>& w, int k = 1) const {
        return map_wedge(alpha_power(k), w);
    }

    // [X, Y]_F = sum_i alpha(y_1) ^ ... ^ [x_1..x_{n-1}, y_i]_g ^ ... ^ alpha(y_{n-1})
    WedgeElement<K> fundamental_bracket(const WedgeElement<K>& X, const WedgeElement<K>& Y) const {
        if (X.degree != n_ - 1 || Y.degree != n_ - 1)
            throw input_error("fundamental bracket requires degree n-1 elements");
        WedgeElement<K> out = WedgeElement<K>::zero(n_ - 1);
        for (const auto& [yc, ycoef] : Y.coeffs) {
            std::vector<Vec<K>> alpha_y;
            alpha_y.reserve(yc.size());
            for (Index i : yc) alpha_y.push_back(alpha_.col(i));
            for (int i = 0; i < n_ - 1; ++i) {
                std::vector<Vec<K>> factors = alpha_y;
                factors[static_cast<std::size_t>(i)] = ad_eval(X, e(yc[static_cast<std::size_t>(i)]));
                out.add_scaled(wedge_of_vectors(factors, dim_), ycoef);
            }
        }
        return out;
    }

    // defect of HF_{x, y}: [a(x_1)..a(x_{n-1}), [y]_g] - sum_i [a(y_1).., [x, y_i]_g, ..a(y_n)]
    Vec<K> hom_fundamental_defect(const Combo& xc, const Combo& yc) const {
        std::vector<Vec<K>> xs, ys, axs, ays;
        for (Index i : xc) { xs.push_back(e(i)); axs.push_back(alpha_.col(i)); }
        for (Index i : yc) { ys.push_back(e(i)); ays.push_back(alpha_.col(i)); }
        std::vector<Vec<K>> largs = axs;
        largs.push_back(bracket_eval(ys));
        Vec<K> defect = bracket_eval(largs);
        for (int i = 0; i < n_; ++i) {
            std::vector<Vec<K>> inner = xs;
            inner.push_back(ys[static_cast<std::size_t>(i)]);
            std::vector<Vec<K>> args = ays;
            args[static_cast<std::size_t>(i)] = bracket_eval(inner);
            Vec<K> t = bracket_eval(args);
            for (int j = 0; j < dim_; ++j) defect[static_cast<std::size_t>(j)] -= t[static_cast<std::size_t>(j)];
        }
        return defect;
    }

    friend bool operator==(const NHomLieAlgebra& a, const NHomLieAlgebra& b) {
        return a.n_ == b.n_ && a.dim_ == b.dim_ && a.bracket_ == b.bracket_ && a.alpha_ == b.alpha_;
    }

private:
    int n_;
    int dim_;
    BracketTable<K> bracket_;
    Matrix<K> alpha_;
};

// alpha is invertible and alpha[e_c]_g = [alpha e_{c_1}, ..., alpha e_{c_n}]_g
// on every increasing n-combo
template <Field K>
Report check_automorphism(const NHomLieAlgebra<K>& alg) {
    Report rep;
    rep.check = "check_automorphism";
    if (!alg.alpha().is_invertible())
        rep.add_defect("alpha", "invertible", "singular");
    for (const Combo& c : increasing_combos(alg.dim(), alg.arity())) {
        Vec<K> lhs = alg.alpha().apply(alg.bracket_basis(c));
        std::vector<Vec<K>> args;
        for (Index i : c) args.push_back(alg.alpha().col(i));
        Vec<K> rhs = alg.bracket_eval(args);
        if (lhs != rhs)
            rep.add_defect("combo=" + combo_str(c), vec_str(lhs), vec_str(rhs));
    }
    rep.metrics["combos_checked"] = std::to_string(binomial(alg.dim(), alg.arity()));
    rep.sort_defects();
    return rep;
}

// Hom-Fundamental identity on all (increasing (n-1)-combo, increasing n-combo)
// pairs; multilinearity plus per-group alternation makes these tuples
// sufficient. Requires check_automorphism to pass.
template <Field K>
Report check_hom_fundamental(const NHomLieAlgebra<K>& alg) {
    check_automorphism(alg).require_pass();
    Report rep;
    rep.check = "check_hom_fundamental";
    for (const Combo& xc : increasing_combos(alg.dim(), alg.arity() - 1)) {
        for (const Combo& yc : increasing_combos(alg.dim(), alg.arity())) {
            Vec<K> defect = alg.hom_fundamental_defect(xc, yc);
            if (!vec_is_zero(defect))
                rep.add_defect("x=" + combo_str(xc) + " y=" + combo_str(yc),
                               vec_str(zero_vec<K>(alg.dim())), vec_str(defect));
        }
    }
    rep.metrics["tuples_checked"] = std::to_string(
        binomial(alg.dim(), alg.arity() - 1) * binomial(alg.dim(), alg.arity()));
    rep.sort_defects();
    return rep;
}

// Hom-Leibniz identity of [.,.]_F on wedge-basis triples:
// [a~X, [Y,Z]_F]_F = [[X,Y]_F, a~Z]_F + [a~Y, [X,Z]_F]_F.
// Requires check_hom_fundamental to pass.
template <Field K>
Report check_hom_leibniz_F(const NHomLieAlgebra<K>& alg) {
    check_hom_fundamental(alg).require_pass();
    Report rep;
    rep.check = "check_hom_leibniz_F";
    auto combos = increasing_combos(alg.dim(), alg.arity() - 1);
    for (const Combo& xc : combos) {
        WedgeElement<K> X = WedgeElement<K>::basis(xc);
        WedgeElement<K> aX = alg.alpha_tilde(X);
        for (const Combo& yc : combos) {
            WedgeElement<K> Y = WedgeElement<K>::basis(yc);
            WedgeElement<K> aY = alg.alpha_tilde(Y);
            for (const Combo& zc : combos) {
                WedgeElement<K> Z = WedgeElement<K>::basis(zc);
                WedgeElement<K> lhs = alg.fundamental_bracket(aX, alg.fundamental_bracket(Y, Z));
                WedgeElement<K> rhs = alg.fundamental_bracket(alg.fundamental_bracket(X, Y), alg.alpha_tilde(Z));
                rhs += alg.fundamental_bracket(aY, alg.fundamental_bracket(X, Z));
                WedgeElement<K> diff = lhs;
                diff.add_scaled(rhs, K(-1L));
                if (!diff.is_zero())
                    rep.add_defect("X=" + combo_str(xc) + " Y=" + combo_str(yc) + " Z=" + combo_str(zc),
                                   "0", diff.str());
            }
        }
    }
    rep.sort_defects();
    return rep;
}

// Transport of structure along an invertible f with alpha o f = f o gamma:
// new bracket f^{-1}[f u_1, ..., f u_n]_g, new twist gamma.
template <Field K>
NHomLieAlgebra<K> transport_structure(const NHomLieAlgebra<K>& alg, const Matrix<K>& f,
                                      const Matrix<K>& gamma) {
    if (f.rows() != alg.dim() || f.cols() != alg.dim() || gamma.rows() != alg.dim() ||
        gamma.cols() != alg.dim())
        throw input_error("transport maps must be dim x dim");
    auto finv = f.inverse();
    if (!finv) throw input_error("transport requires invertible f");
    if (alg.alpha() * f != f * gamma)
        throw input_error("transport requires alpha o f = f o gamma");
    BracketTable<K> table;
    for (const Combo& c : increasing_combos(alg.dim(), alg.arity())) {
        std::vector<Vec<K>> args;
        for (Index i : c) args.push_back(f.col(i));
        Vec<K> v = finv->apply(alg.bracket_eval(args));
        if (!vec_is_zero(v)) table.emplace(c, std::move(v));
    }
    return NHomLieAlgebra<K>(alg.arity(), alg.dim(), std::move(table), gamma);
}

} // namespace nhl
