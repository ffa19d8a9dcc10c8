#pragma once

// Representations (V, rho, beta) of an n-Hom-Lie algebra. rho maps
// fundamental elements (degree n-1) to operators on V and is stored on
// increasing combos; beta is an invertible twist on V. Validity is the
// three-condition check below, run on basis combos (sufficient by
// multilinearity and alternation).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nhl/algebra.hpp"

namespace nhl {

template <Field K>
class Representation {
public:
    Representation(NHomLieAlgebra<K> alg, int dimV, std::map<Combo, Matrix<K>> rho, Matrix<K> beta)
        : alg_(std::move(alg)), dimV_(dimV), rho_(std::move(rho)), beta_(std::move(beta)) {
        if (dimV_ < 1) throw input_error("representation space must have positive dimension");
        if (beta_.rows() != dimV_ || beta_.cols() != dimV_)
            throw input_error("beta must be dimV x dimV");
        for (const auto& [c, m] : rho_) {
            if (static_cast<int>(c.size()) != alg_.arity() - 1)
                throw input_error("rho key " + combo_str(c) + " has wrong arity");
            wedge_normalize(c, alg_.dim()); // range check
            for (std::size_t i = 0; i + 1 < c.size(); ++i)
                if (c[i] >= c[i + 1])
                    throw input_error("rho key " + combo_str(c) + " is not strictly increasing");
            if (m.rows() != dimV_ || m.cols() != dimV_)
                throw input_error("rho matrix at " + combo_str(c) + " has wrong shape");
        }
    }

    const NHomLieAlgebra<K>& algebra() const { return alg_; }
    int dimV() const { return dimV_; }
    const Matrix<K>& beta() const { return beta_; }
    const std::map<Combo, Matrix<K>>& rho() const { return rho_; }

    Matrix<K> rho_combo(const Combo& c) const {
        auto it = rho_.find(c);
        if (it == rho_.end()) return Matrix<K>(dimV_, dimV_);
        return it->second;
    }

    // linear extension over the combo basis
    Matrix<K> rho_wedge(const WedgeElement<K>& w) const {
        Matrix<K> out(dimV_, dimV_);
        for (const auto& [c, coef] : w.coeffs) {
            auto it = rho_.find(c);
            if (it == rho_.end()) continue;
            out += coef * it->second;
        }
        return out;
    }

    // multilinear alternating extension to n-1 arbitrary vectors
    Matrix<K> rho_vectors(const std::vector<Vec<K>>& vs) const {
        return rho_wedge(wedge_of_vectors(vs, alg_.dim()));
    }

private:
    NHomLieAlgebra<K> alg_;
    int dimV_;
    std::map<Combo, Matrix<K>> rho_;
    Matrix<K> beta_;
};

// Conditions (i)-(iii) of the representation definition:
//   (i)   rho(a~X) o beta = beta o rho(X)
//   (ii)  rho(a~X) rho(Y) - rho(a~Y) rho(X) = rho([X,Y]_F) o beta
//   (iii) rho(a x_1,..,a x_{n-2}, [y_1..y_n]_g) o beta
//           = sum_i (-1)^{n-i} rho(a y_1,..,^y_i,..,a y_n) o rho(x, y_i)
// Requires the underlying algebra to pass check_hom_fundamental.
template <Field K>
Report check_representation(const Representation<K>& rep) {
    const NHomLieAlgebra<K>& alg = rep.algebra();
    check_hom_fundamental(alg).require_pass();
    if (!rep.beta().is_invertible()) throw structural_error("beta is singular");
    Report out;
    out.check = "check_representation";
    const int n = alg.arity(), d = alg.dim();
    auto fund = increasing_combos(d, n - 1);

    for (const Combo& X : fund) {
        WedgeElement<K> aX = alg.alpha_tilde(WedgeElement<K>::basis(X));
        Matrix<K> lhs = rep.rho_wedge(aX) * rep.beta();
        Matrix<K> rhs = rep.beta() * rep.rho_combo(X);
        if (lhs != rhs)
            out.add_defect("cond=i X=" + combo_str(X), mat_str(rhs), mat_str(lhs));
    }

    for (const Combo& X : fund) {
        WedgeElement<K> aX = alg.alpha_tilde(WedgeElement<K>::basis(X));
        for (const Combo& Y : fund) {
            WedgeElement<K> aY = alg.alpha_tilde(WedgeElement<K>::basis(Y));
            Matrix<K> lhs = rep.rho_wedge(aX) * rep.rho_combo(Y) - rep.rho_wedge(aY) * rep.rho_combo(X);
            WedgeElement<K> fb =
                alg.fundamental_bracket(WedgeElement<K>::basis(X), WedgeElement<K>::basis(Y));
            Matrix<K> rhs = rep.rho_wedge(fb) * rep.beta();
            if (lhs != rhs)
                out.add_defect("cond=ii X=" + combo_str(X) + " Y=" + combo_str(Y),
                               mat_str(rhs), mat_str(lhs));
        }
    }

    for (const Combo& xc : increasing_combos(d, n - 2)) {
        std::vector<Vec<K>> ax, xs;
        for (Index i : xc) { ax.push_back(alg.alpha().col(i)); xs.push_back(alg.e(i)); }
        for (const Combo& yc : increasing_combos(d, n)) {
            std::vector<Vec<K>> ay, ys;
            for (Index i : yc) { ay.push_back(alg.alpha().col(i)); ys.push_back(alg.e(i)); }
            std::vector<Vec<K>> largs = ax;
            largs.push_back(alg.bracket_eval(ys));
            Matrix<K> lhs = rep.rho_vectors(largs) * rep.beta();
            Matrix<K> rhs(rep.dimV(), rep.dimV());
            for (int i = 0; i < n; ++i) {
                std::vector<Vec<K>> hat;
                for (int j = 0; j < n; ++j)
                    if (j != i) hat.push_back(ay[static_cast<std::size_t>(j)]);
                std::vector<Vec<K>> inner = xs;
                inner.push_back(ys[static_cast<std::size_t>(i)]);
                Matrix<K> term = rep.rho_vectors(hat) * rep.rho_vectors(inner);
                if ((n - 1 - i) % 2 == 0) rhs += term;
                else rhs -= term;
            }
            if (lhs != rhs)
                out.add_defect("cond=iii x=" + combo_str(xc) + " y=" + combo_str(yc),
                               mat_str(rhs), mat_str(lhs));
        }
    }
    out.sort_defects();
    return out;
}

// adjoint representation: V = g, rho(X) = ad_X, beta = alpha
template <Field K>
Representation<K> adjoint(const NHomLieAlgebra<K>& alg) {
    std::map<Combo, Matrix<K>> rho;
    for (const Combo& c : increasing_combos(alg.dim(), alg.arity() - 1)) {
        Matrix<K> m = alg.ad_matrix(WedgeElement<K>::basis(c));
        if (!m.is_zero()) rho.emplace(c, std::move(m));
    }
    return Representation<K>(alg, alg.dim(), std::move(rho), alg.alpha());
}

// Semidirect product g x| V: bracket
//   [x_1+u_1,..,x_n+u_n] = [x]_g + sum_i (-1)^{n-i} rho(x_1,..,^x_i,..,x_n) u_i,
// twist alpha (+) beta. The input representation must be valid.
template <Field K>
NHomLieAlgebra<K> semidirect_product(const Representation<K>& rep) {
    check_representation(rep).require_pass();
    const NHomLieAlgebra<K>& alg = rep.algebra();
    const int n = alg.arity(), d = alg.dim(), dv = rep.dimV(), D = d + dv;
    BracketTable<K> table;
    for (const Combo& c : increasing_combos(D, n)) {
        int nv = 0;
        for (Index i : c)
            if (i >= d) ++nv;
        if (nv >= 2) continue; // every term needs at least n-1 g-arguments
        Vec<K> value = zero_vec<K>(D);
        if (nv == 0) {
            Vec<K> v = alg.bracket_basis(c);
            for (int i = 0; i < d; ++i) value[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)];
        } else {
            // single V index; increasing order puts it last, so the sign is (-1)^{n-n} = +1
            Combo gpart(c.begin(), c.end() - 1);
            int u = c.back() - d;
            Matrix<K> m = rep.rho_combo(gpart);
            for (int t = 0; t < dv; ++t) value[static_cast<std::size_t>(d + t)] = m(t, u);
        }
        if (!vec_is_zero(value)) table.emplace(c, std::move(value));
    }
    Matrix<K> twist(D, D);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) twist(i, j) = alg.alpha()(i, j);
    for (int i = 0; i < dv; ++i)
        for (int j = 0; j < dv; ++j) twist(d + i, d + j) = rep.beta()(i, j);
    return NHomLieAlgebra<K>(n, D, std::move(table), std::move(twist));
}

// Dual representation on V*: rho'(X) = -(beta^{-2} rho(a~X))^T with twist
// (beta^{-1})^T. Coordinates on V* are the dual basis, so the pairing is the
// standard one and adjoints are transposes.
template <Field K>
Representation<K> dual_representation(const Representation<K>& rep) {
    auto binv = rep.beta().inverse();
    if (!binv) throw structural_error("dual representation requires invertible beta");
    const NHomLieAlgebra<K>& alg = rep.algebra();
    Matrix<K> b2inv = (*binv) * (*binv);
    std::map<Combo, Matrix<K>> rho;
    for (const Combo& c : increasing_combos(alg.dim(), alg.arity() - 1)) {
        WedgeElement<K> aX = alg.alpha_tilde(WedgeElement<K>::basis(c));
        Matrix<K> m = -(b2inv * rep.rho_wedge(aX)).transpose();
        if (!m.is_zero()) rho.emplace(c, std::move(m));
    }
    return Representation<K>(alg, rep.dimV(), std::move(rho), binv->transpose());
}

// The naive dual rho*(X) = -rho(X)^T with twist (beta^{-1})^T. Generally NOT
// a representation (that is the point); returned unchecked so callers can
// demonstrate the failure with check_representation.
template <Field K>
Representation<K> naive_dual(const Representation<K>& rep) {
    auto binv = rep.beta().inverse();
    if (!binv) throw structural_error("naive dual requires invertible beta");
    const NHomLieAlgebra<K>& alg = rep.algebra();
    std::map<Combo, Matrix<K>> rho;
    for (const auto& [c, m] : rep.rho()) {
        Matrix<K> t = -m.transpose();
        if (!t.is_zero()) rho.emplace(c, std::move(t));
    }
    return Representation<K>(alg, rep.dimV(), std::move(rho), binv->transpose());
}

} // namespace nhl
