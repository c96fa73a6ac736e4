#include "plethy/plethystic.hpp"

#include <functional>
#include <sstream>

#include "plethy/partitions.hpp"

namespace plethy {

namespace {

// sum_{l>=1} w(l) * f(u^l, v^l, t^l), truncated at the order of f.
// Terminates because f has no t^0 part: l is bounded by order.
TruncSeries twisted_sum(const TruncSeries& f, const std::function<Rational(int)>& w) {
    const int order = f.order();
    TruncSeries r(order);
    for (int l = 1; l <= order; ++l) {
        const Rational wl = w(l);
        if (wl.is_zero()) continue;
        for (int n = 1; n * l <= order; ++n) {
            if (f.coeff(n).is_zero()) continue;
            r.set_coeff(n * l, r.coeff(n * l) + wl * substitute_powers(f.coeff(n), l));
        }
    }
    return r;
}

void require_zero_constant(const TruncSeries& f, const char* who) {
    if (!f.coeff(0).is_zero())
        throw SeriesDomainError(std::string(who) + ": constant term must be 0", f.coeff(0));
}

} // namespace

AdamsImage::AdamsImage(TruncSeries s) : series(std::move(s)) {
    require_zero_constant(series, "AdamsImage");
}

AdamsImage adams(const TruncSeries& f) {
    require_zero_constant(f, "adams");
    return AdamsImage(twisted_sum(f, [](int l) { return Rational(1, l); }));
}

TruncSeries adams_inverse(const TruncSeries& g) {
    require_zero_constant(g, "adams_inverse");
    return twisted_sum(g, [](int l) { return Rational(mobius(l), l); });
}

TruncSeries adams_inverse(const AdamsImage& g) { return adams_inverse(g.series); }

TruncSeries pexp(const TruncSeries& f) { return s_exp(adams(f).series); }

TruncSeries plog(const TruncSeries& s) {
    if (s.coeff(0) != Poly2(1))
        throw SeriesDomainError("plog: constant term must be 1", s.coeff(0));
    return adams_inverse(s_log(s));
}

TruncSeries pexp_linear_product(const Poly2& g, int order) {
    TruncSeries r = TruncSeries::one(order);
    for (const auto& [m, a] : g.terms()) {
        // (1 - u^p v^q t)^{-a} = sum_k binom(a+k-1, k) (u^p v^q)^k t^k,
        // with the generalized binomial prod_{i<k} (a+i) / k!.
        TruncSeries factor = TruncSeries::one(order);
        const Poly2 mono = Poly2::monomial(m.u, m.v);
        Poly2 mono_pow(1);
        Rational binom(1);
        for (int k = 1; k <= order; ++k) {
            binom *= (a + Rational(k - 1)) / Rational(k);
            mono_pow = mono_pow * mono;
            factor.set_coeff(k, binom * mono_pow);
        }
        r = s_mul(r, factor);
    }
    return r;
}

TruncSeries pexp_linear_partitions(const Poly2& g, int order) {
    TruncSeries r = TruncSeries::one(order);
    // g(u^j, v^j) for j = 1..order, computed once.
    std::vector<Poly2> gj;
    gj.reserve(order);
    for (int j = 1; j <= order; ++j) gj.push_back(substitute_powers(g, j));
    for (int n = 1; n <= order; ++n) {
        Poly2 an;
        for (const auto& part : enum_partitions(n)) {
            Poly2 term(1);
            mpz_class denom = 1;
            for (int j = 1; j <= n; ++j) {
                const int kj = part.k(j);
                if (kj == 0) continue;
                term = term * gj[j - 1].pow(static_cast<unsigned>(kj));
                denom *= factorial(static_cast<unsigned>(kj)) *
                         int_pow(static_cast<unsigned>(j), static_cast<unsigned>(kj));
            }
            an += Rational(mpz_class(1), denom) * term;
        }
        r.set_coeff(n, an);
    }
    return r;
}

TruncSeries pexp_rect(const std::vector<Poly2>& b, int order) {
    if (static_cast<int>(b.size()) < order)
        throw Error("pexp_rect: b must be supplied for l = 1..order");

    // b_l(u^h, v^h), cached.
    std::vector<std::vector<Poly2>> bsub(order + 1);
    for (int l = 1; l <= order; ++l) {
        bsub[l].resize(order + 1);
        for (int h = 1; l * h <= order; ++h) bsub[l][h] = substitute_powers(b[l - 1], h);
    }

    // Divisor-sum form: C_j = sum_{d|j} b_d(u^{j/d}, v^{j/d}) / (j/d),
    // then a_n = sum_{[k]} prod_j C_j^{k_j} / k_j!.
    std::vector<Poly2> c(order + 1);
    for (int j = 1; j <= order; ++j)
        for (int d = 1; d <= j; ++d)
            if (j % d == 0) c[j] += Rational(d, j) * bsub[d][j / d];

    TruncSeries divisor_form = TruncSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        Poly2 an;
        for (const auto& part : enum_partitions(n)) {
            Poly2 term(1);
            mpz_class denom = 1;
            for (int j = 1; j <= n; ++j) {
                const int kj = part.k(j);
                if (kj == 0) continue;
                term = term * c[j].pow(static_cast<unsigned>(kj));
                denom *= factorial(static_cast<unsigned>(kj));
            }
            an += Rational(mpz_class(1), denom) * term;
        }
        divisor_form.set_coeff(n, an);
    }

    // Rectangular-partition form:
    // a_n = sum_{[[k]]} prod_{l,h} b_l(u^h, v^h)^{k_{l,h}} / (k_{l,h}! h^{k_{l,h}}).
    TruncSeries rect_form = TruncSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        Poly2 an;
        for (const auto& rp : enum_rect_partitions(n)) {
            Poly2 term(1);
            mpz_class denom = 1;
            for (const auto& [lh, k] : rp.mult) {
                const auto [l, h] = lh;
                term = term * bsub[l][h].pow(static_cast<unsigned>(k));
                denom *= factorial(static_cast<unsigned>(k)) *
                         int_pow(static_cast<unsigned>(h), static_cast<unsigned>(k));
            }
            an += Rational(mpz_class(1), denom) * term;
        }
        rect_form.set_coeff(n, an);
    }

    for (int n = 0; n <= order; ++n) {
        if (divisor_form.coeff(n) != rect_form.coeff(n)) {
            std::ostringstream msg;
            msg << "pexp_rect: closed forms disagree at t^" << n;
            throw InternalCheckError(msg.str(),
                                     to_string(divisor_form.coeff(n) - rect_form.coeff(n)));
        }
    }
    return rect_form;
}

TruncSeries sym_series(const Poly2& e, int order) {
    return pexp(TruncSeries::monomial(order, e, 1));
}

int mobius(int n) {
    if (n < 1) throw Error("mobius: n must be >= 1");
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

} // namespace plethy
