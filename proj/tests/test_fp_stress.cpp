#include "doctest.h"

#include "nhl/algebra.hpp"
#include "support/oracles.hpp"

// Randomized cross-field stress: the same small-integer structure data is
// checked over Q and over F_p; with entries this small a nonzero defect can
// never vanish mod 1000003, so the verdicts must agree exactly.

using namespace nhl;
using F = Fp<1000003>;

namespace {

Matrix<F> to_fp(const Matrix<Rational>& m) {
    Matrix<F> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& r = m(i, j);
            F num(r.num().get_si());
            F den(r.den().get_si());
            out(i, j) = num / den;
        }
    return out;
}

BracketTable<F> to_fp(const BracketTable<Rational>& table) {
    BracketTable<F> out;
    for (const auto& [c, v] : table) {
        Vec<F> w;
        for (const Rational& r : v) w.push_back(F(r.num().get_si()) / F(r.den().get_si()));
        out.emplace(c, std::move(w));
    }
    return out;
}

} // namespace

TEST_SUITE("fp_stress") {

TEST_CASE("hom-fundamental verdicts agree between Q and F_p on random candidates") {
    oracle::Rng rng(61u);
    int pass_count = 0, fail_count = 0;
    for (int trial = 0; trial < 30; ++trial) {
        int d = (trial % 2 == 0) ? 3 : 4;
        BracketTable<Rational> table = rng.sparse_table(3, d, 1 + trial % 3);
        NHomLieAlgebra<Rational> over_q(3, d, table, Matrix<Rational>::identity(d));
        NHomLieAlgebra<F> over_fp(3, d, to_fp(table), Matrix<F>::identity(d));
        bool vq = check_hom_fundamental(over_q).pass();
        bool vf = check_hom_fundamental(over_fp).pass();
        CHECK(vq == vf);
        (vq ? pass_count : fail_count) += 1;
    }
    // the sample must exercise both outcomes
    CHECK(pass_count > 0);
    CHECK(fail_count > 0);
}

TEST_CASE("twisted fixture verdicts agree between the two fields") {
    // FIX-B carries a genuine 1/2 in alpha; its F_p image passes as well,
    // and flipping one argument scaling breaks it in both fields.
    Matrix<Rational> alpha(3, 3);
    alpha(0, 0) = Rational(1);
    alpha(1, 1) = Rational(2);
    alpha(2, 2) = Rational(1, 2);
    BracketTable<Rational> br;
    Vec<Rational> v = zero_vec<Rational>(3);
    v[0] = Rational(1);
    br.emplace(Combo{0, 1, 2}, v);
    NHomLieAlgebra<Rational> bq(3, 3, br, alpha);
    NHomLieAlgebra<F> bf(3, 3, to_fp(br), to_fp(alpha));
    CHECK(check_hom_fundamental(bq).pass());
    CHECK(check_hom_fundamental(bf).pass());

    Matrix<Rational> bad = alpha;
    bad(2, 2) = Rational(2);
    NHomLieAlgebra<Rational> wq(3, 3, br, bad);
    NHomLieAlgebra<F> wf(3, 3, to_fp(br), to_fp(bad));
    CHECK(check_automorphism(wq).pass() == check_automorphism(wf).pass());
    CHECK(!check_automorphism(wq).pass());
}

} // TEST_SUITE
