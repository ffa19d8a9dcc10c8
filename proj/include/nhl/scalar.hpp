#pragma once

// Exact scalars. Rational is the working field of the whole kernel: every
// identity checked by this library is a polynomial identity with rational
// coefficients, so all verdicts are zero-tolerance equalities. Fp<P> is a
// prime-field drop-in used only by randomized stress tests.

#include <concepts>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "nhl/errors.hpp"

namespace nhl {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (canonical form is re-established after every mutation).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw input_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "p", "p/q", optional leading '-'. Rejects zero denominators.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                mpq_class v(mpz_class(s), 1);
                return Rational(v);
            }
            mpz_class num(s.substr(0, slash));
            mpz_class den(s.substr(slash + 1));
            if (den == 0) throw input_error("rational '" + s + "' has zero denominator");
            mpq_class v(num, den);
            return Rational(v);
        } catch (const std::invalid_argument&) {
            throw input_error("malformed rational '" + s + "'");
        }
    }

    // Canonical "p/q" form, denominator always printed ("3" -> "3/1").
    std::string str() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    bool is_zero() const { return v_ == 0; }
    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw input_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
    mpq_class v_;
};

// Prime field Z/P for odd prime P < 2^31. Stress-test scalar only.
template <std::uint64_t P>
class Fp {
    static_assert(P > 2 && P < (1ull << 31), "modulus out of range");

public:
    Fp() : v_(0) {}
    Fp(long n) {
        long long r = n % static_cast<long long>(P);
        if (r < 0) r += P;
        v_ = static_cast<std::uint64_t>(r);
    }

    bool is_zero() const { return v_ == 0; }
    std::uint64_t value() const { return v_; }
    std::string str() const { return std::to_string(v_); }

    Fp operator-() const { return from_raw(v_ == 0 ? 0 : P - v_); }
    Fp& operator+=(Fp o) { v_ += o.v_; if (v_ >= P) v_ -= P; return *this; }
    Fp& operator-=(Fp o) { v_ += P - o.v_; if (v_ >= P) v_ -= P; return *this; }
    Fp& operator*=(Fp o) { v_ = (v_ * o.v_) % P; return *this; }
    Fp& operator/=(Fp o) {
        if (o.is_zero()) throw input_error("prime-field division by zero");
        return *this *= o.inverse();
    }

    Fp inverse() const {
        if (is_zero()) throw input_error("prime-field inverse of zero");
        // Fermat: v^(P-2)
        std::uint64_t base = v_, acc = 1, e = P - 2;
        while (e) {
            if (e & 1) acc = (acc * base) % P;
            base = (base * base) % P;
            e >>= 1;
        }
        return from_raw(acc);
    }

    friend Fp operator+(Fp a, Fp b) { return a += b; }
    friend Fp operator-(Fp a, Fp b) { return a -= b; }
    friend Fp operator*(Fp a, Fp b) { return a *= b; }
    friend Fp operator/(Fp a, Fp b) { return a /= b; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

private:
    static Fp from_raw(std::uint64_t v) {
        Fp r;
        r.v_ = v;
        return r;
    }
    std::uint64_t v_;
};

template <class K>
concept Field = requires(K a, K b) {
    K();
    K(1L);
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
};

} // namespace nhl
