#pragma once

// Cochain complex of an n-Hom-Lie algebra with coefficients in a
// representation (V, rho, beta).
//
// Shapes.  C^1 = linear maps g -> V.  For p >= 2 a p-cochain has p-2 free
// wedge^{n-1} slots and one final block consisting of the last fundamental
// slot wedged with the extra g argument; that block is fully alternating,
// i.e. it is a wedge^n slot.  Basis keys are therefore
//     p = 1 : (j)                      one basis index
//     p >= 2: (C_1,..,C_{p-2}, F)      increasing (n-1)-combos and one
//                                      increasing n-combo
// ordered lexicographically, with the V coordinate fastest:
//     flat index = key_position * dimV + v.
// Coboundary matrices, ranks and every dimension below are relative to this
// fixed order, so results are reproducible bit for bit.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "nhl/representation.hpp"

namespace nhl {

using CochainKey = std::vector<Combo>;

template <Field K>
struct Cochain {
    int p = 1;
    std::map<CochainKey, Vec<K>> values; // nonzero V-vectors only

    bool is_zero() const {
        for (const auto& [k, v] : values)
            if (!vec_is_zero(v)) return false;
        return true;
    }
};

template <Field K>
std::vector<CochainKey> cochain_keys(const NHomLieAlgebra<K>& alg, int p) {
    if (p < 1) throw input_error("cochain degree must be >= 1");
    std::vector<CochainKey> keys;
    if (p == 1) {
        for (int j = 0; j < alg.dim(); ++j) keys.push_back(CochainKey{Combo{j}});
        return keys;
    }
    auto fund = increasing_combos(alg.dim(), alg.arity() - 1);
    auto fin = increasing_combos(alg.dim(), alg.arity());
    CochainKey cur(static_cast<std::size_t>(p - 1));
    auto rec = [&](auto&& self, int slot) -> void {
        if (slot == p - 2) {
            for (const Combo& f : fin) {
                cur[static_cast<std::size_t>(p - 2)] = f;
                keys.push_back(cur);
            }
            return;
        }
        for (const Combo& c : fund) {
            cur[static_cast<std::size_t>(slot)] = c;
            self(self, slot + 1);
        }
    };
    rec(rec, 0);
    return keys;
}

template <Field K>
long long cochain_space_dim(const NHomLieAlgebra<K>& alg, int dimV, int p) {
    if (p < 1) throw input_error("cochain degree must be >= 1");
    if (p == 1) return static_cast<long long>(alg.dim()) * dimV;
    long long keys = binomial(alg.dim(), alg.arity());
    for (int i = 0; i < p - 2; ++i) keys *= binomial(alg.dim(), alg.arity() - 1);
    return keys * dimV;
}

// f evaluated on p-1 wedge arguments and a final vector; the last wedge slot
// and the final vector are merged into the alternating wedge^n block.
template <Field K>
Vec<K> cochain_eval(const NHomLieAlgebra<K>& alg, int dimV, const Cochain<K>& f,
                    std::span<const WedgeElement<K>> wargs, const Vec<K>& fin) {
    if (static_cast<int>(wargs.size()) != f.p - 1)
        throw input_error("cochain evaluation arity mismatch");
    if (static_cast<int>(fin.size()) != alg.dim())
        throw input_error("cochain final argument has wrong dimension");
    Vec<K> out = zero_vec<K>(dimV);
    if (f.p == 1) {
        for (int j = 0; j < alg.dim(); ++j) {
            const K& c = fin[static_cast<std::size_t>(j)];
            if (c.is_zero()) continue;
            auto it = f.values.find(CochainKey{Combo{j}});
            if (it != f.values.end()) vec_axpy(out, c, it->second);
        }
        return out;
    }
    const int p = f.p;
    CochainKey key(static_cast<std::size_t>(p - 1));
    auto rec = [&](auto&& self, int slot, const K& coef) -> void {
        if (slot == p - 2) {
            for (const auto& [c, wc] : wargs[static_cast<std::size_t>(p - 2)].coeffs) {
                for (int b = 0; b < alg.dim(); ++b) {
                    const K& fb = fin[static_cast<std::size_t>(b)];
                    if (fb.is_zero()) continue;
                    Combo idx = c;
                    idx.push_back(b);
                    WedgeNorm nrm = wedge_normalize(idx, alg.dim());
                    if (nrm.sign == 0) continue;
                    key[static_cast<std::size_t>(p - 2)] = nrm.combo;
                    auto it = f.values.find(key);
                    if (it == f.values.end()) continue;
                    K c2 = coef * wc * fb;
                    if (nrm.sign < 0) c2 = -c2;
                    vec_axpy(out, c2, it->second);
                }
            }
            return;
        }
        for (const auto& [c, wc] : wargs[static_cast<std::size_t>(slot)].coeffs) {
            key[static_cast<std::size_t>(slot)] = c;
            self(self, slot + 1, coef * wc);
        }
    };
    rec(rec, 0, K(1L));
    return out;
}

// Raw coboundary evaluation of the four term groups on literal argument
// tuples: each X_i is given as its n-1 component vectors, z as a vector.
// Nothing here assumes alternation of the final (X_p, z) block; that delta
// preserves it is a checkable property (and a test) rather than an input
// constraint.
template <Field K>
Vec<K> coboundary_eval(const NHomLieAlgebra<K>& alg, const Representation<K>& rep,
                       const Cochain<K>& f, const std::vector<std::vector<Vec<K>>>& xlists,
                       const Vec<K>& z) {
    const int n = alg.arity(), p = f.p, dv = rep.dimV();
    if (static_cast<int>(xlists.size()) != p)
        throw input_error("coboundary needs p wedge-slot arguments");
    for (const auto& xs : xlists)
        if (static_cast<int>(xs.size()) != n - 1)
            throw input_error("each wedge slot takes n-1 vectors");
    Matrix<K> a1 = alg.alpha_power(-1);
    Matrix<K> a2 = a1 * a1;

    std::vector<WedgeElement<K>> at1, at2;
    at1.reserve(static_cast<std::size_t>(p));
    at2.reserve(static_cast<std::size_t>(p));
    for (const auto& xs : xlists) {
        std::vector<Vec<K>> m1, m2;
        for (const Vec<K>& v : xs) {
            m1.push_back(a1.apply(v));
            m2.push_back(a2.apply(v));
        }
        at1.push_back(wedge_of_vectors(m1, alg.dim()));
        at2.push_back(wedge_of_vectors(m2, alg.dim()));
    }
    Vec<K> a1z = a1.apply(z);
    Vec<K> a2z = a2.apply(z);

    Vec<K> out = zero_vec<K>(dv);
    auto accumulate = [&](const Vec<K>& v, bool negate) {
        for (std::size_t t = 0; t < out.size(); ++t)
            out[t] += negate ? -v[t] : v[t];
    };

    // group 1: F-bracket inserted in slot k, slot i removed
    for (int i = 0; i < p; ++i) {
        for (int k = i + 1; k < p; ++k) {
            std::vector<WedgeElement<K>> wargs;
            wargs.reserve(static_cast<std::size_t>(p - 1));
            for (int m = 0; m < p; ++m) {
                if (m == i) continue;
                if (m == k)
                    wargs.push_back(alg.fundamental_bracket(at2[static_cast<std::size_t>(i)],
                                                            at2[static_cast<std::size_t>(k)]));
                else
                    wargs.push_back(at1[static_cast<std::size_t>(m)]);
            }
            Vec<K> v = rep.beta().apply(cochain_eval(alg, dv, f, std::span<const WedgeElement<K>>(wargs), a1z));
            accumulate(v, i % 2 == 0); // (-1)^i for 1-based i
        }
    }

    // group 2: ad of slot i moved into the final argument
    for (int i = 0; i < p; ++i) {
        std::vector<WedgeElement<K>> wargs;
        for (int m = 0; m < p; ++m)
            if (m != i) wargs.push_back(at1[static_cast<std::size_t>(m)]);
        Vec<K> fin = alg.ad_eval(at2[static_cast<std::size_t>(i)], a2z);
        Vec<K> v = rep.beta().apply(cochain_eval(alg, dv, f, std::span<const WedgeElement<K>>(wargs), fin));
        accumulate(v, i % 2 == 0);
    }

    // group 3: rho(X_i) acting on f with slot i removed
    for (int i = 0; i < p; ++i) {
        std::vector<WedgeElement<K>> wargs;
        for (int m = 0; m < p; ++m)
            if (m != i) wargs.push_back(at1[static_cast<std::size_t>(m)]);
        Vec<K> v = cochain_eval(alg, dv, f, std::span<const WedgeElement<K>>(wargs), a1z);
        v = rep.rho_vectors(xlists[static_cast<std::size_t>(i)]).apply(v);
        accumulate(v, i % 2 == 1); // (-1)^{i+1}, 1-based
    }

    // group 4: components of the last slot X_p paired against z
    {
        const std::vector<Vec<K>>& xp = xlists[static_cast<std::size_t>(p - 1)];
        std::vector<WedgeElement<K>> wargs(at1.begin(), at1.end() - 1);
        for (int i = 0; i < n - 1; ++i) {
            std::vector<Vec<K>> rargs;
            rargs.reserve(static_cast<std::size_t>(n - 1));
            for (int m = 0; m < n - 1; ++m)
                if (m != i) rargs.push_back(xp[static_cast<std::size_t>(m)]);
            rargs.push_back(z);
            Vec<K> v = cochain_eval(alg, dv, f, std::span<const WedgeElement<K>>(wargs),
                                    a1.apply(xp[static_cast<std::size_t>(i)]));
            v = rep.rho_vectors(rargs).apply(v);
            accumulate(v, (n + p - i) % 2 == 1); // (-1)^{n+p-i} for 0-based i
        }
    }
    return out;
}

// delta f, stored on the constrained (alternating) basis of C^{p+1}
template <Field K>
Cochain<K> coboundary(const NHomLieAlgebra<K>& alg, const Representation<K>& rep,
                      const Cochain<K>& f) {
    const int n = alg.arity();
    Cochain<K> out;
    out.p = f.p + 1;
    for (const CochainKey& key : cochain_keys(alg, out.p)) {
        std::vector<std::vector<Vec<K>>> xlists;
        xlists.reserve(static_cast<std::size_t>(f.p));
        for (std::size_t s = 0; s + 1 < key.size(); ++s) {
            std::vector<Vec<K>> comp;
            for (Index i : key[s]) comp.push_back(alg.e(i));
            xlists.push_back(std::move(comp));
        }
        const Combo& fin = key.back();
        std::vector<Vec<K>> last;
        for (int i = 0; i < n - 1; ++i) last.push_back(alg.e(fin[static_cast<std::size_t>(i)]));
        xlists.push_back(std::move(last));
        Vec<K> z = alg.e(fin[static_cast<std::size_t>(n - 1)]);
        Vec<K> v = coboundary_eval(alg, rep, f, xlists, z);
        if (!vec_is_zero(v)) out.values.emplace(key, std::move(v));
    }
    return out;
}

template <Field K>
Vec<K> cochain_to_flat(const NHomLieAlgebra<K>& alg, int dimV, const Cochain<K>& f) {
    auto keys = cochain_keys(alg, f.p);
    Vec<K> flat = zero_vec<K>(static_cast<int>(keys.size()) * dimV);
    for (std::size_t k = 0; k < keys.size(); ++k) {
        auto it = f.values.find(keys[k]);
        if (it == f.values.end()) continue;
        for (int v = 0; v < dimV; ++v)
            flat[k * static_cast<std::size_t>(dimV) + static_cast<std::size_t>(v)] =
                it->second[static_cast<std::size_t>(v)];
    }
    return flat;
}

template <Field K>
Cochain<K> cochain_from_flat(const NHomLieAlgebra<K>& alg, int dimV, int p, const Vec<K>& flat) {
    auto keys = cochain_keys(alg, p);
    if (flat.size() != keys.size() * static_cast<std::size_t>(dimV))
        throw input_error("flat cochain has wrong length");
    Cochain<K> f;
    f.p = p;
    for (std::size_t k = 0; k < keys.size(); ++k) {
        Vec<K> v(flat.begin() + static_cast<long>(k) * dimV,
                 flat.begin() + static_cast<long>(k + 1) * dimV);
        if (!vec_is_zero(v)) f.values.emplace(keys[k], std::move(v));
    }
    return f;
}

// matrix of delta: C^p -> C^{p+1} in the documented basis order
template <Field K>
Matrix<K> coboundary_matrix(const NHomLieAlgebra<K>& alg, const Representation<K>& rep, int p) {
    const int dv = rep.dimV();
    auto kin = cochain_keys(alg, p);
    auto kout = cochain_keys(alg, p + 1);
    Matrix<K> m(static_cast<int>(kout.size()) * dv, static_cast<int>(kin.size()) * dv);
    for (std::size_t ci = 0; ci < kin.size(); ++ci) {
        for (int v = 0; v < dv; ++v) {
            Cochain<K> basis;
            basis.p = p;
            basis.values.emplace(kin[ci], unit_vec<K>(dv, v));
            Cochain<K> img = coboundary(alg, rep, basis);
            int col = static_cast<int>(ci) * dv + v;
            for (std::size_t ro = 0; ro < kout.size(); ++ro) {
                auto it = img.values.find(kout[ro]);
                if (it == img.values.end()) continue;
                for (int t = 0; t < dv; ++t)
                    m(static_cast<int>(ro) * dv + t, col) = it->second[static_cast<std::size_t>(t)];
            }
        }
    }
    return m;
}

// dim ker delta_p (exact rank over the scalar field)
template <Field K>
long long cocycle_dim(const NHomLieAlgebra<K>& alg, const Representation<K>& rep, int p) {
    if (p < 1) throw input_error("cocycle degree must be >= 1");
    long long dim_cp = cochain_space_dim(alg, rep.dimV(), p);
    if (dim_cp == 0) return 0;
    return dim_cp - coboundary_matrix(alg, rep, p).rank();
}

// dim im delta_{p-1}; B^1 := 0 (the complex starts at p = 1)
template <Field K>
long long coboundary_dim(const NHomLieAlgebra<K>& alg, const Representation<K>& rep, int p) {
    if (p < 1) throw input_error("coboundary degree must be >= 1");
    if (p == 1) return 0;
    return coboundary_matrix(alg, rep, p - 1).rank();
}

template <Field K>
long long cohomology_dim(const NHomLieAlgebra<K>& alg, const Representation<K>& rep, int p) {
    long long z = cocycle_dim(alg, rep, p);
    long long b = coboundary_dim(alg, rep, p);
    if (z < b)
        throw structural_error("negative cohomology dimension: delta^2 != 0 for p=" +
                               std::to_string(p));
    return z - b;
}

// identification of C^1(g; g) with d x d matrices, columns f(e_j)
template <Field K>
Matrix<K> one_cochain_matrix(const NHomLieAlgebra<K>& alg, int dimV, const Vec<K>& flat) {
    Matrix<K> m(dimV, alg.dim());
    for (int j = 0; j < alg.dim(); ++j)
        for (int v = 0; v < dimV; ++v)
            m(v, j) = flat[static_cast<std::size_t>(j) * static_cast<std::size_t>(dimV) +
                           static_cast<std::size_t>(v)];
    return m;
}

} // namespace nhl
