#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "plethy/json_io.hpp"
#include "plethy/series.hpp"
#include "plethy/verify.hpp"

#include <nlohmann/json.hpp>

using namespace plethy;

namespace {

const Poly2 U = Poly2::var_u();
const Poly2 V = Poly2::var_v();
const Poly2 X2 = Poly2::var_x(); // uv
const PolyX X = PolyX::var_x();

} // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6).is_negative());
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0).str_frac() == "0/1");
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational::from_string("-7/2") == Rational(-7, 2));
    CHECK(Rational::from_string("5") == Rational(5));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(1, 7) + Rational(6, 7) == Rational(1));
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational(1).inverse() / Rational(0), Error);
}

TEST_CASE("poly2 add: cancellation and E(C) = E(C*) + E(point)") {
    CHECK((X2 - Poly2(1)) + Poly2(1) == X2);
    const PolyX two_x_minus_2 = (X - 1) + (X - 1);
    CHECK(two_x_minus_2 == Rational(2) * X - PolyX(2));
    // E(C*) + E(point) = uv
    CHECK((X2 - Poly2(1)) + Poly2(1) == Poly2::monomial(1, 1));
}

TEST_CASE("poly2 mul: product formula examples") {
    const Poly2 cstar = X2 - Poly2(1);
    CHECK(cstar * cstar == X2 * X2 - Rational(2) * X2 + Poly2(1));
    // E_x((C*)^l) = (x-1)^l
    for (unsigned l = 0; l <= 5; ++l)
        CHECK(to_x_form(cstar.pow(l)) == (X - 1).pow(l));
    CHECK((X - 1) * X == X.pow(2) - X);
}

TEST_CASE("substitute_powers") {
    CHECK(substitute_powers(X2 - Poly2(1), 2) == Poly2::monomial(2, 2) - Poly2(1));
    CHECK(substitute_powers(X - 1, 3) == PolyX::monomial(3) - PolyX(1));
    const Poly2 p = Rational(3) * U * V - V.pow(2);
    CHECK(substitute_powers(p, 1) == p);
}

TEST_CASE("eval") {
    CHECK(eval(X2 - Poly2(1), Rational(1), Rational(1)) == Rational(0));
    CHECK(eval(X2, Rational(1), Rational(1)) == Rational(1));
    // (x-1)^2 as Poly2 at u = v = 2: (4-1)^2 = 9
    CHECK(eval((X - 1).pow(2).to_poly2(), Rational(2), Rational(2)) == Rational(9));
}

TEST_CASE("exponent overflow is a hard error") {
    const Poly2 big = Poly2::monomial(1000000, 0);
    CHECK_THROWS_AS(substitute_powers(big, 3000000), Error);
    const PolyX bigx = PolyX::monomial(2000000000);
    CHECK_THROWS_AS(bigx * bigx, Error);
}

TEST_CASE("to_x_form and balance detection") {
    CHECK(to_x_form(X2 - Poly2(1)) == X - 1);
    CHECK(to_x_form(Poly2::monomial(2, 2) + X2) == X.pow(2) + X);
    // uv(1-u)(1-v) is not balanced; the first offender in display order
    // is u^2 v.
    const Poly2 p = X2 * (Poly2(1) - U) * (Poly2(1) - V);
    CHECK_FALSE(is_balanced(p));
    try {
        to_x_form(p);
        FAIL("expected BalanceError");
    } catch (const BalanceError& e) {
        CHECK(e.offending.u == 2);
        CHECK(e.offending.v == 1);
    }
}

TEST_CASE("leading_total") {
    CHECK(leading_total((X - 1).pow(2)) == std::pair<int, Rational>{2, Rational(1)});
    CHECK(leading_total(Rational(2) * X - PolyX(2)) == std::pair<int, Rational>{1, Rational(2)});
    CHECK_THROWS_AS(leading_total(PolyX()), Error);
}

TEST_CASE("series exp: 1 + t + t^2/2 + t^3/6") {
    const TruncSeries t = TruncSeries::monomial(3, Poly2(1), 1);
    const TruncSeries e = s_exp(t);
    CHECK(e.coeff(0) == Poly2(1));
    CHECK(e.coeff(1) == Poly2(1));
    CHECK(e.coeff(2) == Poly2(Rational(1, 2)));
    CHECK(e.coeff(3) == Poly2(Rational(1, 6)));
}

TEST_CASE("series log inverts exp on random series") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const TruncSeries f = verify::random_series(rng, 8, 2, 3, true);
        CHECK(s_log(s_exp(f)) == f);
        const TruncSeries s = verify::random_series(rng, 8, 2, 3, false);
        CHECK(s_exp(s_log(s)) == s);
    }
}

TEST_CASE("series preconditions carry the offending constant term") {
    TruncSeries bad(3);
    bad.set_coeff(0, Poly2(2));
    try {
        s_exp(bad);
        FAIL("expected SeriesDomainError");
    } catch (const SeriesDomainError& e) {
        CHECK(e.constant_term == Poly2(2));
    }
    CHECK_THROWS_AS(s_log(bad), SeriesDomainError);
}

TEST_CASE("formal product of stretched series collects partitions") {
    // (sum a_k^{(1)} t^k)(sum a_k^{(2)} t^{2k})(sum a_k^{(3)} t^{3k}):
    // coefficient of t^3 is a_3^{(1)} + a_1^{(1)} a_1^{(2)} + a_1^{(3)}.
    std::mt19937_64 rng(11);
    std::vector<TruncSeries> g;
    for (int n = 1; n <= 3; ++n) {
        TruncSeries s = verify::random_series(rng, 3, 2, 3, true);
        s.set_coeff(0, Poly2(1));
        g.push_back(s);
    }
    TruncSeries prod = s_mul(s_mul(stretch(g[0], 1), stretch(g[1], 2)), stretch(g[2], 3));
    const Poly2 want = g[0].coeff(3) + g[0].coeff(1) * g[1].coeff(1) + g[2].coeff(1);
    CHECK(prod.coeff(3) == want);
}

TEST_CASE("series ops truncate to the min order") {
    const TruncSeries a = TruncSeries::monomial(5, Poly2(1), 1);
    const TruncSeries b = TruncSeries::monomial(3, Poly2(1), 2);
    CHECK(s_add(a, b).order() == 3);
    CHECK(s_mul(a, b).order() == 3);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        const Poly2 p = verify::random_poly2(rng, 3, 4);
        const Poly2 q = verify::random_poly2(rng, 3, 4);
        const Poly2 r = verify::random_poly2(rng, 3, 4);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == Poly2());
    }
}

TEST_CASE("substitute_powers is a ring homomorphism") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 25; ++i) {
        const Poly2 p = verify::random_poly2(rng, 3, 4);
        const Poly2 q = verify::random_poly2(rng, 3, 4);
        const int h = 1 + static_cast<int>(rng() % 4);
        CHECK(substitute_powers(p * q, h) == substitute_powers(p, h) * substitute_powers(q, h));
        CHECK(substitute_powers(p + q, h) == substitute_powers(p, h) + substitute_powers(q, h));
    }
}

TEST_CASE("to_x_form inverts the x -> uv embedding") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 25; ++i) {
        const PolyX p = verify::random_polyx(rng, 5, 4);
        CHECK(to_x_form(p.to_poly2()) == p);
    }
}

TEST_CASE("eval commutes with add and mul") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 25; ++i) {
        const Poly2 p = verify::random_poly2(rng, 3, 4);
        const Poly2 q = verify::random_poly2(rng, 3, 4);
        const Rational u0(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
        const Rational v0(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
        CHECK(eval(p + q, u0, v0) == eval(p, u0, v0) + eval(q, u0, v0));
        CHECK(eval(p * q, u0, v0) == eval(p, u0, v0) * eval(q, u0, v0));
    }
}

TEST_CASE("display ordering and rendering") {
    const Poly2 p = (X2 - Poly2(1)) * (X2 - Poly2(1));
    CHECK(to_string(p) == "u^2v^2 - 2uv + 1");
    CHECK(to_string((X - 1).pow(2)) == "x^2 - 2x + 1");
    CHECK(to_string(PolyX()) == "0");
    CHECK(to_string(Rational(1, 2) * X.pow(2) - Rational(3, 2) * X) == "1/2 x^2 - 3/2 x");
    CHECK(to_latex((X - 1).pow(2)) == "x^{2} - 2x + 1");
    CHECK(to_latex(Rational(1, 2) * X.pow(2)) == "\\frac{1}{2}x^{2}");
    CHECK(to_string(-X + PolyX(1)) == "-x + 1");
}

TEST_CASE("json round-trips through the canonical encoding") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 15; ++i) {
        const Poly2 p = verify::random_poly2(rng, 3, 4);
        CHECK(poly2_from_json(to_json(p)) == p);
        const PolyX q = verify::random_polyx(rng, 5, 4);
        CHECK(polyx_from_json(to_json(q)) == q);
        const TruncSeries s = verify::random_series(rng, 5, 2, 3, false);
        CHECK(series_from_json(to_json(s)) == s);
    }
    // rationals encode as "num/den"
    const nlohmann::json j = to_json(Rational(1, 2) * X2);
    CHECK(j.dump() == R"([{"c":"1/2","u":1,"v":1}])");
}
