#pragma once

#include <map>
#include <string>
#include <utility>

#include "plethy/rational.hpp"

namespace plethy {

// Monomial u^eu * v^ev, non-negative exponents only.
struct Mono2 {
    int u = 0;
    int v = 0;

    friend bool operator==(const Mono2&, const Mono2&) = default;
};

// Display ordering: graded lexicographic with u before v, leading term
// first. This is the canonical term order everywhere (text, LaTeX, JSON).
struct Mono2Order {
    bool operator()(const Mono2& a, const Mono2& b) const {
        const int da = a.u + a.v, db = b.u + b.v;
        if (da != db) return da > db;
        if (a.u != b.u) return a.u > b.u;
        return a.v > b.v;
    }
};

class PolyX;

// Sparse exact polynomial in u, v over Q. Canonical form: no stored
// coefficient is zero, so structural equality is polynomial equality.
class Poly2 {
public:
    using TermMap = std::map<Mono2, Rational, Mono2Order>;

    Poly2() = default;
    Poly2(const Rational& c) { add_term(0, 0, c); }
    Poly2(long c) { add_term(0, 0, Rational(c)); }

    static Poly2 monomial(int eu, int ev, const Rational& c = Rational(1));
    static Poly2 var_u() { return monomial(1, 0); }
    static Poly2 var_v() { return monomial(0, 1); }
    // x = uv, the balanced variable.
    static Poly2 var_x() { return monomial(1, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_integral() const;
    Rational coeff(int eu, int ev) const;
    Rational constant_term() const { return coeff(0, 0); }
    int total_degree() const; // -1 for the zero polynomial

    void add_term(int eu, int ev, const Rational& c);

    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    Poly2 operator-() const;

    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Rational& c, const Poly2& p);

    Poly2 pow(unsigned e) const;

    friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

private:
    TermMap terms_;
};

// p(u^h, v^h): exponent pair (a,b) becomes (ha, hb). Requires h >= 1.
Poly2 substitute_powers(const Poly2& p, int h);

Rational eval(const Poly2& p, const Rational& u0, const Rational& v0);

// Sparse exact polynomial in x over Q, x standing for the product uv.
class PolyX {
public:
    using TermMap = std::map<int, Rational, std::greater<int>>;

    PolyX() = default;
    PolyX(const Rational& c) { add_term(0, c); }
    PolyX(long c) { add_term(0, Rational(c)); }

    static PolyX monomial(int e, const Rational& c = Rational(1));
    static PolyX var_x() { return monomial(1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_integral() const;
    Rational coeff(int e) const;

    void add_term(int e, const Rational& c);

    // Injective embedding x |-> uv.
    Poly2 to_poly2() const;

    PolyX& operator+=(const PolyX& o);
    PolyX& operator-=(const PolyX& o);
    PolyX operator-() const;

    friend PolyX operator+(PolyX a, const PolyX& b) { return a += b; }
    friend PolyX operator-(PolyX a, const PolyX& b) { return a -= b; }
    friend PolyX operator*(const PolyX& a, const PolyX& b);
    friend PolyX operator*(const Rational& c, const PolyX& p);

    PolyX pow(unsigned e) const;

    friend bool operator==(const PolyX& a, const PolyX& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PolyX& a, const PolyX& b) { return !(a == b); }

private:
    TermMap terms_;
};

// p(x^h). Requires h >= 1.
PolyX substitute_powers(const PolyX& p, int h);

Rational eval(const PolyX& p, const Rational& x0);

// Signals a polynomial that is not of balanced (Hodge-Tate) shape:
// some monomial has e_u != e_v. Carries the first offending monomial
// in display order.
struct BalanceError : Error {
    Mono2 offending;

    BalanceError(const std::string& what, Mono2 m) : Error(what), offending(m) {}
};

// Succeeds iff every monomial of p has e_u == e_v; throws BalanceError
// otherwise.
PolyX to_x_form(const Poly2& p);
bool is_balanced(const Poly2& p);

// Highest exponent and its coefficient; throws on the zero polynomial.
std::pair<int, Rational> leading_total(const PolyX& p);

std::string to_string(const Poly2& p);
std::string to_string(const PolyX& p);
std::string to_latex(const Poly2& p);
std::string to_latex(const PolyX& p);

} // namespace plethy
