#include "plethy/series.hpp"

#include <algorithm>

namespace plethy {

int TruncSeries::check_order(int order) {
    if (order < 0) throw Error("TruncSeries: negative order");
    return order;
}

TruncSeries::TruncSeries(int order, std::vector<Poly2> coeffs)
    : order_(check_order(order)), c_(std::move(coeffs)) {
    if (c_.size() != static_cast<size_t>(order_) + 1)
        throw Error("TruncSeries: need exactly order+1 coefficients");
}

TruncSeries TruncSeries::constant(int order, const Poly2& c) {
    TruncSeries s(order);
    s.c_[0] = c;
    return s;
}

TruncSeries TruncSeries::monomial(int order, const Poly2& p, int k) {
    TruncSeries s(order);
    if (k < 0) throw Error("TruncSeries: negative t-power");
    if (k <= order) s.c_[k] = p;
    return s;
}

const Poly2& TruncSeries::coeff(int n) const {
    if (n < 0 || n > order_) throw Error("TruncSeries: coefficient index out of range");
    return c_[n];
}

void TruncSeries::set_coeff(int n, Poly2 p) {
    if (n < 0 || n > order_) throw Error("TruncSeries: coefficient index out of range");
    c_[n] = std::move(p);
}

TruncSeries s_add(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncSeries r(n);
    for (int i = 0; i <= n; ++i) r.set_coeff(i, a.coeff(i) + b.coeff(i));
    return r;
}

TruncSeries s_sub(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncSeries r(n);
    for (int i = 0; i <= n; ++i) r.set_coeff(i, a.coeff(i) - b.coeff(i));
    return r;
}

TruncSeries s_mul(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncSeries r(n);
    for (int i = 0; i <= n; ++i) {
        Poly2 acc;
        for (int k = 0; k <= i; ++k) acc += a.coeff(k) * b.coeff(i - k);
        r.set_coeff(i, acc);
    }
    return r;
}

Poly2 s_coeff(const TruncSeries& s, int n) { return s.coeff(n); }

TruncSeries stretch(const TruncSeries& s, int j) {
    if (j < 1) throw Error("stretch: j must be >= 1");
    TruncSeries r(s.order());
    for (int n = 0; n * j <= s.order(); ++n) r.set_coeff(n * j, s.coeff(n));
    return r;
}

TruncSeries s_exp(const TruncSeries& s) {
    if (!s.coeff(0).is_zero())
        throw SeriesDomainError("s_exp: constant term must be 0", s.coeff(0));
    const int n = s.order();
    // F = exp(f) satisfies n*F_n = sum_{k=1..n} k f_k F_{n-k}.
    TruncSeries r(n);
    r.set_coeff(0, Poly2(1));
    for (int m = 1; m <= n; ++m) {
        Poly2 acc;
        for (int k = 1; k <= m; ++k) acc += Rational(k) * (s.coeff(k) * r.coeff(m - k));
        r.set_coeff(m, Rational(1, m) * acc);
    }
    return r;
}

TruncSeries s_log(const TruncSeries& s) {
    if (s.coeff(0) != Poly2(1))
        throw SeriesDomainError("s_log: constant term must be 1", s.coeff(0));
    const int n = s.order();
    // g = log(s) satisfies n*s_n = sum_{k=1..n} k g_k s_{n-k}.
    TruncSeries g(n);
    for (int m = 1; m <= n; ++m) {
        Poly2 acc = s.coeff(m);
        for (int k = 1; k < m; ++k) acc -= Rational(k, m) * (g.coeff(k) * s.coeff(m - k));
        g.set_coeff(m, acc);
    }
    return g;
}

} // namespace plethy
