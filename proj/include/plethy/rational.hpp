#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "plethy/errors.hpp"

namespace plethy {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator; zero is 0/1. Thin wrapper over GMP's mpq_class that
// enforces canonical form on every constructor path (mpq arithmetic
// already keeps results canonical).
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long num, long den) : q_(num, den) {
        if (den == 0) throw Error("Rational: zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpz_class& z) : q_(z) {}
    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        if (den == 0) throw Error("Rational: zero denominator");
        q_.canonicalize();
    }

    // Accepts "n" or "n/d".
    static Rational from_string(std::string_view s) {
        mpq_class q;
        if (q.set_str(std::string(s), 10) != 0)
            throw Error("Rational: cannot parse '" + std::string(s) + "'");
        if (q.get_den() == 0) throw Error("Rational: zero denominator");
        q.canonicalize();
        Rational r;
        r.q_ = q;
        return r;
    }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_negative() const { return sgn(q_) < 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    Rational operator-() const {
        Rational r;
        r.q_ = -q_;
        return r;
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    Rational inverse() const {
        if (is_zero()) throw Error("Rational: inverse of zero");
        Rational r;
        r.q_ = 1 / q_;
        return r;
    }

    Rational pow(unsigned e) const {
        Rational acc(1), base = *this;
        while (e) {
            if (e & 1u) acc *= base;
            base *= base;
            e >>= 1u;
        }
        return acc;
    }

    // "n" for integers, "n/d" otherwise.
    std::string str() const { return q_.get_str(); }
    // Always "n/d" (the canonical JSON coefficient encoding).
    std::string str_frac() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    mpq_class q_;
};

inline mpz_class factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline mpz_class int_pow(unsigned base, unsigned e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), base, e);
    return p;
}

} // namespace plethy
