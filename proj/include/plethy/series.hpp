#pragma once

#include <vector>

#include "plethy/poly.hpp"

namespace plethy {

// Raised on s_exp / s_log / adams precondition violations; carries the
// offending constant (t^0) coefficient.
struct SeriesDomainError : Error {
    Poly2 constant_term;

    SeriesDomainError(const std::string& what, Poly2 c0)
        : Error(what), constant_term(std::move(c0)) {}
};

// Truncated formal power series in t with Poly2 coefficients. The
// truncation order is explicit data: exactly order+1 coefficients are
// stored and operations on two series truncate to the min of the orders.
class TruncSeries {
public:
    explicit TruncSeries(int order) : order_(check_order(order)), c_(order + 1) {}
    TruncSeries(int order, std::vector<Poly2> coeffs);

    static TruncSeries constant(int order, const Poly2& c);
    static TruncSeries one(int order) { return constant(order, Poly2(1)); }
    // p * t^k, zero elsewhere.
    static TruncSeries monomial(int order, const Poly2& p, int k);

    int order() const { return order_; }
    const Poly2& coeff(int n) const;
    void set_coeff(int n, Poly2 p);

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

private:
    static int check_order(int order);

    int order_;
    std::vector<Poly2> c_;
};

TruncSeries s_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries s_sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries s_mul(const TruncSeries& a, const TruncSeries& b);
Poly2 s_coeff(const TruncSeries& s, int n);

// t^n coefficients become t^{jn}; order is preserved. Realizes the
// g(t^j) factors of the formal-product expansion.
TruncSeries stretch(const TruncSeries& s, int j);

// exp(s); requires constant term 0.
TruncSeries s_exp(const TruncSeries& s);
// log(s); requires constant term 1.
TruncSeries s_log(const TruncSeries& s);

} // namespace plethy
