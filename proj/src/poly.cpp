#include "plethy/poly.hpp"

#include <limits>
#include <sstream>

namespace plethy {

namespace {

int checked_add(int a, int b) {
    const long s = static_cast<long>(a) + b;
    if (s > std::numeric_limits<int>::max())
        throw Error("exponent overflow in polynomial product");
    return static_cast<int>(s);
}

int checked_mul(int a, int h) {
    const long p = static_cast<long>(a) * h;
    if (p > std::numeric_limits<int>::max())
        throw Error("exponent overflow in power substitution");
    return static_cast<int>(p);
}

} // namespace

Poly2 Poly2::monomial(int eu, int ev, const Rational& c) {
    if (eu < 0 || ev < 0) throw Error("Poly2: negative exponent");
    Poly2 p;
    p.add_term(eu, ev, c);
    return p;
}

void Poly2::add_term(int eu, int ev, const Rational& c) {
    if (eu < 0 || ev < 0) throw Error("Poly2: negative exponent");
    if (c.is_zero()) return;
    const Mono2 m{eu, ev};
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Poly2::is_integral() const {
    for (const auto& [m, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

Rational Poly2::coeff(int eu, int ev) const {
    auto it = terms_.find(Mono2{eu, ev});
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly2::total_degree() const {
    if (terms_.empty()) return -1;
    // Leading term first under the display order.
    const Mono2& m = terms_.begin()->first;
    return m.u + m.v;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m.u, m.v, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m.u, m.v, -c);
    return *this;
}

Poly2 Poly2::operator-() const {
    Poly2 r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(checked_add(ma.u, mb.u), checked_add(ma.v, mb.v), ca * cb);
    return r;
}

Poly2 operator*(const Rational& c, const Poly2& p) {
    Poly2 r;
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

Poly2 Poly2::pow(unsigned e) const {
    Poly2 acc(1), base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

Poly2 substitute_powers(const Poly2& p, int h) {
    if (h < 1) throw Error("substitute_powers: h must be >= 1");
    if (h == 1) return p;
    Poly2 r;
    for (const auto& [m, c] : p.terms())
        r.add_term(checked_mul(m.u, h), checked_mul(m.v, h), c);
    return r;
}

Rational eval(const Poly2& p, const Rational& u0, const Rational& v0) {
    Rational acc(0);
    for (const auto& [m, c] : p.terms())
        acc += c * u0.pow(static_cast<unsigned>(m.u)) * v0.pow(static_cast<unsigned>(m.v));
    return acc;
}

PolyX PolyX::monomial(int e, const Rational& c) {
    if (e < 0) throw Error("PolyX: negative exponent");
    PolyX p;
    p.add_term(e, c);
    return p;
}

void PolyX::add_term(int e, const Rational& c) {
    if (e < 0) throw Error("PolyX: negative exponent");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool PolyX::is_integral() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

Rational PolyX::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Poly2 PolyX::to_poly2() const {
    Poly2 r;
    for (const auto& [e, c] : terms_) r.add_term(e, e, c);
    return r;
}

PolyX& PolyX::operator+=(const PolyX& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PolyX& PolyX::operator-=(const PolyX& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PolyX PolyX::operator-() const {
    PolyX r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

PolyX operator*(const PolyX& a, const PolyX& b) {
    PolyX r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(checked_add(ea, eb), ca * cb);
    return r;
}

PolyX operator*(const Rational& c, const PolyX& p) {
    PolyX r;
    if (c.is_zero()) return r;
    for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
    return r;
}

PolyX PolyX::pow(unsigned e) const {
    PolyX acc(1), base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

PolyX substitute_powers(const PolyX& p, int h) {
    if (h < 1) throw Error("substitute_powers: h must be >= 1");
    if (h == 1) return p;
    PolyX r;
    for (const auto& [e, c] : p.terms()) r.add_term(checked_mul(e, h), c);
    return r;
}

Rational eval(const PolyX& p, const Rational& x0) {
    Rational acc(0);
    for (const auto& [e, c] : p.terms()) acc += c * x0.pow(static_cast<unsigned>(e));
    return acc;
}

PolyX to_x_form(const Poly2& p) {
    PolyX r;
    for (const auto& [m, c] : p.terms()) {
        if (m.u != m.v)
            throw BalanceError("not balanced: monomial u^" + std::to_string(m.u) +
                                   " v^" + std::to_string(m.v) + " has e_u != e_v",
                               m);
        r.add_term(m.u, c);
    }
    return r;
}

bool is_balanced(const Poly2& p) {
    for (const auto& [m, c] : p.terms())
        if (m.u != m.v) return false;
    return true;
}

std::pair<int, Rational> leading_total(const PolyX& p) {
    if (p.is_zero()) throw Error("leading_total: zero polynomial");
    const auto& [e, c] = *p.terms().begin();
    return {e, c};
}

namespace {

// Shared term formatter. `mono` is the rendered monomial part ("" for the
// constant term); coefficients print as "n" or "n/d", fractions in LaTeX
// as \frac{n}{d}.
void append_term(std::ostringstream& out, bool first, const Rational& c,
                 const std::string& mono, bool latex) {
    const Rational a = c.is_negative() ? -c : c;
    if (first) {
        if (c.is_negative()) out << "-";
    } else {
        out << (c.is_negative() ? " - " : " + ");
    }
    const bool unit = a.is_one() && !mono.empty();
    if (!unit) {
        if (latex && !a.is_integer())
            out << "\\frac{" << a.numerator().get_str() << "}{" << a.denominator().get_str() << "}";
        else
            out << a.str();
        if (!mono.empty() && !latex && !a.is_integer()) out << " ";
    }
    out << mono;
}

std::string mono2_str(const Mono2& m, bool latex) {
    std::ostringstream s;
    auto var = [&](const char* name, int e) {
        if (e == 0) return;
        s << name;
        if (e != 1) {
            if (latex)
                s << "^{" << e << "}";
            else
                s << "^" << e;
        }
    };
    var("u", m.u);
    var("v", m.v);
    return s.str();
}

std::string monox_str(int e, bool latex) {
    if (e == 0) return "";
    std::ostringstream s;
    s << "x";
    if (e != 1) {
        if (latex)
            s << "^{" << e << "}";
        else
            s << "^" << e;
    }
    return s.str();
}

template <typename Terms, typename MonoFn>
std::string render(const Terms& terms, MonoFn mono, bool latex) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        append_term(out, first, c, mono(m, latex), latex);
        first = false;
    }
    return out.str();
}

} // namespace

std::string to_string(const Poly2& p) {
    return render(p.terms(), [](const Mono2& m, bool l) { return mono2_str(m, l); }, false);
}

std::string to_latex(const Poly2& p) {
    return render(p.terms(), [](const Mono2& m, bool l) { return mono2_str(m, l); }, true);
}

std::string to_string(const PolyX& p) {
    return render(p.terms(), [](int e, bool l) { return monox_str(e, l); }, false);
}

std::string to_latex(const PolyX& p) {
    return render(p.terms(), [](int e, bool l) { return monox_str(e, l); }, true);
}

} // namespace plethy
