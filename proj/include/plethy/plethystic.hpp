#pragma once

#include <vector>

#include "plethy/series.hpp"

namespace plethy {

// A series known to lie in the image of the Adams operator; the t^0
// coefficient is zero by construction.
struct AdamsImage {
    TruncSeries series;

    explicit AdamsImage(TruncSeries s);
};

// Adams operator: Psi(f) = sum_{l>=1} f(u^l, v^l, t^l)/l, truncated at
// the order of f. Requires zero constant term (the sum would otherwise
// not terminate).
AdamsImage adams(const TruncSeries& f);

// Inverse Adams operator via Moebius inversion:
// Psi^{-1}(g) = sum_{l>=1} mu(l) g(u^l, v^l, t^l)/l.
TruncSeries adams_inverse(const TruncSeries& g);
TruncSeries adams_inverse(const AdamsImage& g);

// Plethystic exponential PExp(f) = exp(Psi(f)); constant term of the
// result is 1.
TruncSeries pexp(const TruncSeries& f);

// Plethystic logarithm, inverse of pexp: Psi^{-1}(log s). Requires
// constant term 1.
TruncSeries plog(const TruncSeries& s);

// PExp(g t) as the product expansion
//   prod_{p,q} (1 - u^p v^q t)^{-a_{p,q}},  g = sum a_{p,q} u^p v^q,
// each factor expanded binomially to the requested order. A constant
// term a_{0,0} contributes the genuine factor (1 - t)^{-a_{0,0}}.
TruncSeries pexp_linear_product(const Poly2& g, int order);

// PExp(g t) as the partition sum
//   sum_n ( sum_{[k] in P_n} prod_j g(u^j,v^j)^{k_j} / (k_j! j^{k_j}) ) t^n.
TruncSeries pexp_linear_partitions(const Poly2& g, int order);

// PExp(sum_l b_l t^l) via the two closed forms: the divisor-sum
// partition form and the rectangular-partition form. Both are computed
// and must agree exactly; a mismatch throws InternalCheckError.
// b[l-1] supplies b_l and must cover l = 1..order.
TruncSeries pexp_rect(const std::vector<Poly2>& b, int order);

// Generating series of symmetric products: coefficient of t^n is
// E(Sym^n X) when e is E(X). Equals pexp(e * t).
TruncSeries sym_series(const Poly2& e, int order);

// Moebius mu by trial factorization; inputs stay at truncation-order
// scale.
int mobius(int n);

} // namespace plethy
