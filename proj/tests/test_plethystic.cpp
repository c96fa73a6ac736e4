#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "plethy/plethystic.hpp"
#include "plethy/verify.hpp"

using namespace plethy;

namespace {

const Poly2 X2 = Poly2::var_x();
const PolyX X = PolyX::var_x();

Poly2 xpow(int n) { return Poly2::var_x().pow(static_cast<unsigned>(n)); }

} // namespace

TEST_CASE("mobius") {
    const int mu[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (int n = 1; n <= 12; ++n) CHECK(mobius(n) == mu[n - 1]);
}

TEST_CASE("adams on x t") {
    const auto a = adams(TruncSeries::monomial(3, X2, 1)).series;
    CHECK(a.coeff(1) == xpow(1));
    CHECK(a.coeff(2) == Rational(1, 2) * xpow(2));
    CHECK(a.coeff(3) == Rational(1, 3) * xpow(3));
}

TEST_CASE("adams on (x-1) t") {
    const auto a = adams(TruncSeries::monomial(4, X2 - Poly2(1), 1)).series;
    CHECK(a.coeff(2) == Rational(1, 2) * (xpow(2) - Poly2(1)));
}

TEST_CASE("adams on t + t^2") {
    TruncSeries f(4);
    f.set_coeff(1, Poly2(1));
    f.set_coeff(2, Poly2(1));
    const auto a = adams(f).series;
    CHECK(a.coeff(2) == Poly2(Rational(3, 2)));
}

TEST_CASE("adams rejects a nonzero constant term") {
    CHECK_THROWS_AS(adams(TruncSeries::constant(3, Poly2(1))), SeriesDomainError);
    CHECK_THROWS_AS(adams_inverse(TruncSeries::constant(3, X2)), SeriesDomainError);
}

TEST_CASE("adams_inverse examples") {
    // inverts adams(x t)
    TruncSeries g(3);
    g.set_coeff(1, xpow(1));
    g.set_coeff(2, Rational(1, 2) * xpow(2));
    g.set_coeff(3, Rational(1, 3) * xpow(3));
    CHECK(adams_inverse(g) == TruncSeries::monomial(3, X2, 1));

    // adams_inverse(t) has t^2 coefficient mu(2)/2 = -1/2
    const auto f = adams_inverse(TruncSeries::monomial(4, Poly2(1), 1));
    CHECK(f.coeff(2) == Poly2(Rational(-1, 2)));
    // and applying adams recovers t exactly
    CHECK(adams(f).series == TruncSeries::monomial(4, Poly2(1), 1));
}

TEST_CASE("adams_inverse(adams(f)) == f on random series") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 30; ++i) {
        const TruncSeries f = verify::random_series(rng, 8, 2, 3, true);
        CHECK(adams_inverse(adams(f)) == f);
    }
}

TEST_CASE("pexp basics") {
    CHECK(pexp(TruncSeries(4)) == TruncSeries::one(4));
    // abelian GL_2 stratum of the torus knot: x^2 - x
    const auto s = pexp(TruncSeries::monomial(4, X2 - Poly2(1), 1));
    CHECK(s.coeff(0) == Poly2(1));
    CHECK(s.coeff(2) == xpow(2) - xpow(1));
}

TEST_CASE("pexp of B1 t + B2 t^2 reproduces the rank-2 closed form") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 10; ++i) {
        const Poly2 b1p = verify::random_poly2(rng, 3, 3);
        const Poly2 b2p = verify::random_poly2(rng, 3, 3);
        TruncSeries f(3);
        f.set_coeff(1, b1p);
        f.set_coeff(2, b2p);
        const Poly2 want = Rational(1, 2) * substitute_powers(b1p, 2) +
                           Rational(1, 2) * b1p * b1p + b2p;
        CHECK(pexp(f).coeff(2) == want);
    }
}

TEST_CASE("pexp is a homomorphism from sums to products") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 15; ++i) {
        const TruncSeries f1 = verify::random_series(rng, 6, 2, 3, true);
        const TruncSeries f2 = verify::random_series(rng, 6, 2, 3, true);
        CHECK(pexp(s_add(f1, f2)) == s_mul(pexp(f1), pexp(f2)));
    }
}

TEST_CASE("plog basics") {
    CHECK(plog(TruncSeries::one(5)) == TruncSeries(5));
    CHECK_THROWS_AS(plog(TruncSeries(5)), SeriesDomainError);

    // PExp(t) = 1/(1-t), so plog of the all-ones series is exactly t.
    TruncSeries ones(6);
    for (int n = 0; n <= 6; ++n) ones.set_coeff(n, Poly2(1));
    CHECK(plog(ones) == TruncSeries::monomial(6, Poly2(1), 1));
}

TEST_CASE("plog and pexp are mutually inverse") {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 30; ++i) {
        const TruncSeries f = verify::random_series(rng, 8, 2, 3, true);
        CHECK(plog(pexp(f)) == f);
        const TruncSeries s = verify::random_series(rng, 8, 2, 3, false);
        CHECK(pexp(plog(s)) == s);
    }
}

TEST_CASE("pexp_linear_product on E(C*) gives the symmetric products of C*") {
    const auto s = pexp_linear_product(X2 - Poly2(1), 6);
    CHECK(s.coeff(0) == Poly2(1));
    for (int n = 1; n <= 6; ++n) CHECK(s.coeff(n) == xpow(n) - xpow(n - 1));
}

TEST_CASE("pexp_linear_product with constant g") {
    // g = 1: PExp(t) = (1-t)^{-1}
    const auto s = pexp_linear_product(Poly2(1), 5);
    for (int n = 0; n <= 5; ++n) CHECK(s.coeff(n) == Poly2(1));
    // g = x - 1 at n = 2: x^2 - x, the a_{0,0} = -1 factor is (1 - t)^{+1}
    CHECK(pexp_linear_product(X2 - Poly2(1), 2).coeff(2) == xpow(2) - xpow(1));
}

TEST_CASE("pexp_linear_partitions examples") {
    std::mt19937_64 rng(25);
    // n = 1 coefficient is g itself
    for (int i = 0; i < 5; ++i) {
        const Poly2 g = verify::random_poly2(rng, 3, 3);
        CHECK(pexp_linear_partitions(g, 3).coeff(1) == g);
    }
    // g = x - 1, n = 3: (x^3-1)/3 + (x^2-1)(x-1)/2 + (x-1)^3/6
    const Poly2 g = X2 - Poly2(1);
    const Poly2 want = Rational(1, 3) * (xpow(3) - Poly2(1)) +
                       Rational(1, 2) * (xpow(2) - Poly2(1)) * g +
                       Rational(1, 6) * g.pow(3);
    CHECK(pexp_linear_partitions(g, 3).coeff(3) == want);
}

TEST_CASE("three-path agreement on random inputs") {
    std::mt19937_64 rng(26);
    for (int i = 0; i < 25; ++i) {
        const Poly2 g = verify::random_poly2(rng, 3, 3);
        const auto via_exp = pexp(TruncSeries::monomial(6, g, 1));
        CHECK(via_exp == pexp_linear_product(g, 6));
        CHECK(via_exp == pexp_linear_partitions(g, 6));
    }
}

TEST_CASE("pexp_rect agrees with pexp and validates its closed forms") {
    std::mt19937_64 rng(27);
    for (int i = 0; i < 10; ++i) {
        std::vector<Poly2> b;
        TruncSeries f(4);
        for (int l = 1; l <= 4; ++l) {
            b.push_back(verify::random_poly2(rng, 2, 3));
            f.set_coeff(l, b.back());
        }
        CHECK(pexp_rect(b, 4) == pexp(f));
    }
    CHECK_THROWS_AS(pexp_rect(std::vector<Poly2>{Poly2(1)}, 3), Error);
}

TEST_CASE("pexp_rect rank-2 coefficient") {
    std::mt19937_64 rng(28);
    const Poly2 b1p = verify::random_poly2(rng, 3, 3);
    const Poly2 b2p = verify::random_poly2(rng, 3, 3);
    const auto s = pexp_rect({b1p, b2p}, 2);
    CHECK(s.coeff(2) == Rational(1, 2) * substitute_powers(b1p, 2) +
                            Rational(1, 2) * b1p * b1p + b2p);
}

TEST_CASE("sym_series") {
    // Sym^n C*: (uv)^{n-1}(uv - 1)
    const auto s = sym_series(X2 - Poly2(1), 5);
    for (int n = 1; n <= 5; ++n) CHECK(s.coeff(n) == xpow(n - 1) * (X2 - Poly2(1)));

    // n = 1 coefficient is E(X) itself
    const Poly2 e = X2.pow(2) * (Poly2(1) - Poly2::var_u()).pow(2) *
                    (Poly2(1) - Poly2::var_v()).pow(2);
    CHECK(sym_series(e, 2).coeff(1) == e);

    // torsion N: coefficients of PExp(N (x-1)^r t)
    const Poly2 b = Rational(3) * (X2 - Poly2(1)).pow(2);
    const auto abel = sym_series(b, 3);
    const Poly2 want2 = Rational(3, 2) * substitute_powers((X2 - Poly2(1)).pow(2), 2) +
                        Rational(9, 2) * (X2 - Poly2(1)).pow(4);
    CHECK(abel.coeff(2) == want2);
}
