#pragma once

// Built-in demo algebras, all over the rationals.
//   FIX-A: abelian, n = 3, d = 3, alpha = I
//   FIX-B: n = 3, d = 3, [e1,e2,e3] = e1, alpha = diag(1, 2, 1/2)
//   FIX-C: n = 3, d = 4, the simple four-dimensional 3-Lie algebra
//          [e_i,e_j,e_k] = eps(i,j,k,l) e_l with alpha = I

#include <string>

#include "nhl/algebra.hpp"

namespace nhl {

inline NHomLieAlgebra<Rational> fix_a() {
    return NHomLieAlgebra<Rational>(3, 3, {}, Matrix<Rational>::identity(3));
}

inline NHomLieAlgebra<Rational> fix_b() {
    BracketTable<Rational> br;
    Vec<Rational> v = zero_vec<Rational>(3);
    v[0] = Rational(1);
    br.emplace(Combo{0, 1, 2}, v);
    Matrix<Rational> alpha(3, 3);
    alpha(0, 0) = Rational(1);
    alpha(1, 1) = Rational(2);
    alpha(2, 2) = Rational(1, 2);
    return NHomLieAlgebra<Rational>(3, 3, std::move(br), std::move(alpha));
}

inline NHomLieAlgebra<Rational> fix_c() {
    BracketTable<Rational> br;
    auto put = [&](Combo c, int target, long s) {
        Vec<Rational> v = zero_vec<Rational>(4);
        v[static_cast<std::size_t>(target)] = Rational(s);
        br.emplace(std::move(c), std::move(v));
    };
    put({0, 1, 2}, 3, 1);
    put({0, 1, 3}, 2, -1);
    put({0, 2, 3}, 1, 1);
    put({1, 2, 3}, 0, -1);
    return NHomLieAlgebra<Rational>(3, 4, std::move(br), Matrix<Rational>::identity(4));
}

inline NHomLieAlgebra<Rational> fixture_by_name(const std::string& name) {
    if (name == "fix-a" || name == "FIX-A") return fix_a();
    if (name == "fix-b" || name == "FIX-B") return fix_b();
    if (name == "fix-c" || name == "FIX-C") return fix_c();
    throw input_error("unknown fixture '" + name + "' (expected fix-a, fix-b or fix-c)");
}

} // namespace nhl
