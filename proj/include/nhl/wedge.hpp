#pragma once

// Sparse elements of wedge^k(g) over the increasing-combo basis. Only
// nonzero coefficients are stored; insertion goes through wedge_normalize so
// alternation is structural.

#include <map>
#include <span>
#include <string>

#include "nhl/combinatorics.hpp"
#include "nhl/matrix.hpp"

namespace nhl {

template <Field K>
struct WedgeElement {
    int degree = 0;
    std::map<Combo, K> coeffs; // increasing combos only, no zero values

    static WedgeElement zero(int degree) {
        WedgeElement w;
        w.degree = degree;
        return w;
    }

    // e_{c_1} ^ ... ^ e_{c_k} for an increasing combo
    static WedgeElement basis(const Combo& c) {
        WedgeElement w;
        w.degree = static_cast<int>(c.size());
        w.coeffs.emplace(c, K(1L));
        return w;
    }

    bool is_zero() const { return coeffs.empty(); }

    // accumulate c * (e_{idx_1} ^ ... ^ e_{idx_k}), idx in any order
    void add_term(std::span<const Index> idx, const K& c, int dim) {
        if (c.is_zero()) return;
        WedgeNorm n = wedge_normalize(idx, dim);
        if (n.sign == 0) return;
        K v = (n.sign > 0) ? c : -c;
        auto it = coeffs.find(n.combo);
        if (it == coeffs.end()) {
            coeffs.emplace(std::move(n.combo), std::move(v));
        } else {
            it->second += v;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }

    void add_scaled(const WedgeElement& o, const K& c) {
        if (c.is_zero()) return;
        for (const auto& [combo, coef] : o.coeffs) {
            K v = c * coef;
            if (v.is_zero()) continue;
            auto it = coeffs.find(combo);
            if (it == coeffs.end()) {
                coeffs.emplace(combo, std::move(v));
            } else {
                it->second += v;
                if (it->second.is_zero()) coeffs.erase(it);
            }
        }
    }

    WedgeElement& operator+=(const WedgeElement& o) {
        add_scaled(o, K(1L));
        return *this;
    }

    friend bool operator==(const WedgeElement& a, const WedgeElement& b) {
        return a.degree == b.degree && a.coeffs == b.coeffs;
    }

    std::string str() const {
        if (coeffs.empty()) return "0";
        std::string s;
        for (const auto& [combo, coef] : coeffs) {
            if (!s.empty()) s += " + ";
            s += coef.str() + "*e" + combo_str(combo);
        }
        return s;
    }
};

// v_1 ^ v_2 ^ ... ^ v_k expanded over the combo basis
template <Field K>
WedgeElement<K> wedge_of_vectors(std::span<const Vec<K>> vs, int dim) {
    WedgeElement<K> acc;
    acc.degree = 0;
    acc.coeffs.emplace(Combo{}, K(1L));
    for (const Vec<K>& v : vs) {
        if (static_cast<int>(v.size()) != dim) throw input_error("wedge factor has wrong dimension");
        WedgeElement<K> next;
        next.degree = acc.degree + 1;
        for (const auto& [combo, coef] : acc.coeffs) {
            for (int b = 0; b < dim; ++b) {
                const K& vb = v[static_cast<std::size_t>(b)];
                if (vb.is_zero()) continue;
                Combo idx = combo;
                idx.push_back(b);
                next.add_term(idx, coef * vb, dim);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

template <Field K>
WedgeElement<K> wedge_of_vectors(const std::vector<Vec<K>>& vs, int dim) {
    return wedge_of_vectors(std::span<const Vec<K>>(vs), dim);
}

// componentwise image of a wedge basis element under a linear map
template <Field K>
WedgeElement<K> map_wedge_basis(const Matrix<K>& m, const Combo& c) {
    std::vector<Vec<K>> cols;
    cols.reserve(c.size());
    for (Index i : c) cols.push_back(m.col(i));
    return wedge_of_vectors(cols, m.rows());
}

// linear extension of map_wedge_basis
template <Field K>
WedgeElement<K> map_wedge(const Matrix<K>& m, const WedgeElement<K>& w) {
    WedgeElement<K> out = WedgeElement<K>::zero(w.degree);
    for (const auto& [combo, coef] : w.coeffs)
        out.add_scaled(map_wedge_basis(m, combo), coef);
    return out;
}

} // namespace nhl
