#include "plethy/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace plethy::verify {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

} // namespace

Poly2 random_poly2(std::mt19937_64& rng, int max_total_degree, int max_abs_coeff) {
    Poly2 p;
    for (int eu = 0; eu <= max_total_degree; ++eu)
        for (int ev = 0; eu + ev <= max_total_degree; ++ev)
            p.add_term(eu, ev, Rational(uniform(rng, -max_abs_coeff, max_abs_coeff)));
    return p;
}

PolyX random_polyx(std::mt19937_64& rng, int max_degree, int max_abs_coeff) {
    PolyX p;
    for (int e = 0; e <= max_degree; ++e)
        p.add_term(e, Rational(uniform(rng, -max_abs_coeff, max_abs_coeff)));
    return p;
}

TruncSeries random_series(std::mt19937_64& rng, int order, int max_total_degree,
                          int max_abs_coeff, bool zero_constant) {
    TruncSeries s(order);
    s.set_coeff(0, zero_constant ? Poly2() : Poly2(1));
    for (int n = 1; n <= order; ++n) s.set_coeff(n, random_poly2(rng, max_total_degree, max_abs_coeff));
    return s;
}

std::optional<Suite> parse_suite(std::string_view s) {
    if (s == "all") return Suite::All;
    if (s == "combinatorics") return Suite::Combinatorics;
    if (s == "plethystic") return Suite::Plethystic;
    if (s == "gl2") return Suite::Gl2;
    if (s == "gl3") return Suite::Gl3;
    if (s == "abelian") return Suite::Abelian;
    if (s == "cartan") return Suite::Cartan;
    return std::nullopt;
}

std::string suite_name(Suite s) {
    switch (s) {
    case Suite::All: return "all";
    case Suite::Combinatorics: return "combinatorics";
    case Suite::Plethystic: return "plethystic";
    case Suite::Gl2: return "gl2";
    case Suite::Gl3: return "gl3";
    case Suite::Abelian: return "abelian";
    case Suite::Cartan: return "cartan";
    }
    return "?";
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

namespace {

class Runner {
public:
    explicit Runner(std::uint64_t seed) : seed_(seed) {}

    // body returns "" on pass, a nonempty detail on failure; thrown
    // errors also fail the check.
    void check(const std::string& name, int criterion,
               const std::function<std::string()>& body) {
        std::string detail;
        try {
            detail = body();
        } catch (const std::exception& e) {
            detail = std::string("error: ") + e.what();
        }
        results_.push_back(CheckResult{name, criterion, detail.empty(), detail});
    }

    std::mt19937_64 rng() const { return std::mt19937_64(seed_); }

    std::vector<CheckResult> take() {
        std::sort(results_.begin(), results_.end(),
                  [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
        return std::move(results_);
    }

private:
    std::uint64_t seed_;
    std::vector<CheckResult> results_;
};

std::string mismatch(const std::string& where, const std::string& detail) {
    return where + ": " + detail;
}

// ---- combinatorics ----

void combinatorics_checks(Runner& r) {
    const int rp_expected[] = {1, 3, 5, 11};
    for (int n = 1; n <= 4; ++n) {
        r.check("combinatorics.rp_count_n" + std::to_string(n), 1, [n, &rp_expected] {
            const auto got = enum_rect_partitions(n).size();
            const auto want = static_cast<size_t>(rp_expected[n - 1]);
            if (got != want)
                return "|RP_" + std::to_string(n) + "| = " + std::to_string(got) +
                       ", expected " + std::to_string(want);
            return std::string();
        });
    }

    r.check("combinatorics.fiber_sizes_n3", 1, [] {
        const auto fibers = fibers_of_glue(3);
        // Figure 1: [3] <- 1, [1 2] <- 1, [1^3] <- 3.
        const std::vector<std::pair<std::string, size_t>> want = {
            {"[3]", 1}, {"[1 2]", 1}, {"[1^3]", 3}};
        for (const auto& [name, count] : want) {
            size_t got = 0;
            for (const auto& [m, fiber] : fibers)
                if (m.str() == name) got = fiber.size();
            if (got != count)
                return mismatch(name, "fiber size " + std::to_string(got) + ", expected " +
                                          std::to_string(count));
        }
        return std::string();
    });

    r.check("combinatorics.fiber_sizes_n4", 1, [] {
        const auto fibers = fibers_of_glue(4);
        // Figure 2: [4] <- 1, [1 3] <- 1, [2^2] <- 2, [1^2 2] <- 2, [1^4] <- 5.
        const std::vector<std::pair<std::string, size_t>> want = {
            {"[4]", 1}, {"[1 3]", 1}, {"[2^2]", 2}, {"[1^2 2]", 2}, {"[1^4]", 5}};
        for (const auto& [name, count] : want) {
            size_t got = 0;
            for (const auto& [m, fiber] : fibers)
                if (m.str() == name) got = fiber.size();
            if (got != count)
                return mismatch(name, "fiber size " + std::to_string(got) + ", expected " +
                                          std::to_string(count));
        }
        return std::string();
    });

    r.check("combinatorics.weight_equations", 0, [] {
        for (int n = 1; n <= 12; ++n) {
            auto parts = enum_partitions(n);
            for (const auto& p : parts)
                if (p.weight() != n) return mismatch(p.str(), "partition weight mismatch");
            auto sorted = parts;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                return mismatch("P_" + std::to_string(n), "duplicate partition");
            auto rects = enum_rect_partitions(n);
            for (const auto& rp : rects) {
                if (rp.weight() != n) return mismatch(rp.str(), "rect partition weight mismatch");
                for (const auto& [lh, k] : rp.mult)
                    if (k <= 0) return mismatch(rp.str(), "stored zero multiplicity");
            }
            auto rsorted = rects;
            std::sort(rsorted.begin(), rsorted.end());
            if (std::adjacent_find(rsorted.begin(), rsorted.end()) != rsorted.end())
                return mismatch("RP_" + std::to_string(n), "duplicate rect partition");
        }
        return std::string();
    });

    r.check("combinatorics.glue_covers", 0, [] {
        for (int n = 1; n <= 8; ++n) {
            const auto fibers = fibers_of_glue(n);
            const auto parts = enum_partitions(n);
            if (fibers.size() != parts.size())
                return mismatch("n=" + std::to_string(n), "glue is not surjective onto P_n");
            size_t total = 0;
            for (const auto& [m, fiber] : fibers) total += fiber.size();
            if (total != enum_rect_partitions(n).size())
                return mismatch("n=" + std::to_string(n), "fibers do not partition RP_n");
        }
        return std::string();
    });

    r.check("combinatorics.rp_generating_function", 0, [] {
        // Independent oracle: expand prod_{l,h >= 1} (1 - t^{lh})^{-1}
        // to order 8 as an integer series and compare coefficients.
        const int order = 8;
        std::vector<long> series(order + 1, 0);
        series[0] = 1;
        for (int l = 1; l <= order; ++l) {
            for (int h = 1; l * h <= order; ++h) {
                // multiply by (1 - t^{lh})^{-1} = 1 + t^{lh} + t^{2lh} + ...
                const int step = l * h;
                for (int n = step; n <= order; ++n) series[n] += series[n - step];
            }
        }
        for (int n = 1; n <= order; ++n) {
            const long got = static_cast<long>(enum_rect_partitions(n).size());
            if (got != series[n])
                return mismatch("n=" + std::to_string(n),
                                "|RP_n| = " + std::to_string(got) + " but product expansion gives " +
                                    std::to_string(series[n]));
        }
        return std::string();
    });
}

// ---- plethystic ----

// Distinct nonzero random polynomials standing in for the opaque
// generators B_1..B_4 of the worked examples.
std::vector<PolyX> opaque_generators(std::mt19937_64& rng, int count) {
    std::vector<PolyX> b;
    while (static_cast<int>(b.size()) < count) {
        PolyX cand = random_polyx(rng, 3, 3);
        if (cand.is_zero()) continue;
        if (std::find(b.begin(), b.end(), cand) != b.end()) continue;
        b.push_back(cand);
    }
    return b;
}

void plethystic_checks(Runner& r) {
    r.check("plethystic.three_path_agreement", 2, [&r] {
        auto rng = r.rng();
        for (int i = 0; i < 100; ++i) {
            const Poly2 g = random_poly2(rng, 3, 3);
            const auto exp_path = pexp(TruncSeries::monomial(6, g, 1));
            const auto product_path = pexp_linear_product(g, 6);
            const auto partition_path = pexp_linear_partitions(g, 6);
            if (exp_path != product_path)
                return mismatch("draw " + std::to_string(i), "exp path != product path");
            if (exp_path != partition_path)
                return mismatch("draw " + std::to_string(i), "exp path != partition path");
        }
        return std::string();
    });

    r.check("plethystic.rect_closed_forms", 2, [&r] {
        auto rng = r.rng();
        for (int i = 0; i < 20; ++i) {
            std::vector<Poly2> b;
            TruncSeries f(4);
            for (int l = 1; l <= 4; ++l) {
                b.push_back(random_poly2(rng, 2, 3));
                f.set_coeff(l, b.back());
            }
            // pexp_rect itself cross-checks its two closed forms.
            if (pexp_rect(b, 4) != pexp(f))
                return mismatch("draw " + std::to_string(i), "closed forms != pexp");
        }
        return std::string();
    });

    r.check("plethystic.roundtrip", 3, [&r] {
        auto rng = r.rng();
        for (int i = 0; i < 100; ++i) {
            const TruncSeries f = random_series(rng, 8, 2, 3, true);
            if (plog(pexp(f)) != f)
                return mismatch("draw " + std::to_string(i), "plog(pexp(f)) != f");
            const TruncSeries s = random_series(rng, 8, 2, 3, false);
            if (pexp(plog(s)) != s)
                return mismatch("draw " + std::to_string(i), "pexp(plog(s)) != s");
        }
        return std::string();
    });

    r.check("plethystic.homomorphism", 0, [&r] {
        auto rng = r.rng();
        for (int i = 0; i < 25; ++i) {
            const TruncSeries f1 = random_series(rng, 6, 2, 3, true);
            const TruncSeries f2 = random_series(rng, 6, 2, 3, true);
            if (pexp(s_add(f1, f2)) != s_mul(pexp(f1), pexp(f2)))
                return mismatch("draw " + std::to_string(i),
                                "pexp(f1+f2) != pexp(f1) pexp(f2)");
        }
        return std::string();
    });

    r.check("plethystic.adams_roundtrip", 0, [&r] {
        auto rng = r.rng();
        for (int i = 0; i < 50; ++i) {
            const TruncSeries f = random_series(rng, 8, 2, 3, true);
            if (adams_inverse(adams(f)) != f)
                return mismatch("draw " + std::to_string(i), "adams_inverse(adams(f)) != f");
        }
        return std::string();
    });

    r.check("plethystic.formal_products", 0, [&r] {
        // prod_n g_n(t^n) collects a_{k_1}^{(1)} ... a_{k_n}^{(n)} over
        // partitions of n.
        auto rng = r.rng();
        const int order = 6;
        std::vector<TruncSeries> g;
        for (int n = 1; n <= order; ++n) {
            TruncSeries s = random_series(rng, order, 1, 3, true);
            s.set_coeff(0, Poly2(1));
            g.push_back(s);
        }
        TruncSeries product = TruncSeries::one(order);
        for (int n = 1; n <= order; ++n) product = s_mul(product, stretch(g[n - 1], n));
        for (int n = 1; n <= order; ++n) {
            Poly2 want;
            for (const auto& part : enum_partitions(n)) {
                Poly2 term(1);
                for (int j = 1; j <= n; ++j) term = term * g[j - 1].coeff(part.k(j));
                want += term;
            }
            if (product.coeff(n) != want)
                return mismatch("t^" + std::to_string(n), "partition sum mismatch");
        }
        return std::string();
    });

    r.check("plethystic.example_gl2", 4, [&r] {
        auto rng = r.rng();
        const auto b = opaque_generators(rng, 2);
        const PolyX a2 = Rational(1, 2) * substitute_powers(b[0], 2) +
                         Rational(1, 2) * b[0] * b[0] + b[1];
        const auto series = assemble_full_series(b, 2);
        if (series.coeff(2) != a2.to_poly2())
            return mismatch("A_2", to_string(series.coeff(2) - a2.to_poly2()));
        if (stratum_epoly(b, Partition{2, {0, 1}}) != b[1])
            return mismatch("[2]", "stratum is not B_2");
        const PolyX ab = Rational(1, 2) * substitute_powers(b[0], 2) +
                         Rational(1, 2) * b[0] * b[0];
        if (stratum_epoly(b, Partition{2, {2, 0}}) != ab)
            return mismatch("[1^2]", "stratum mismatch");
        return std::string();
    });

    r.check("plethystic.example_gl3", 4, [&r] {
        auto rng = r.rng();
        const auto b = opaque_generators(rng, 3);
        const auto sub = [&](int l, int h) { return substitute_powers(b[l - 1], h); };
        // B_3 + B_2 B_1 + B_1(x^3)/3 + B_1(x^2) B_1(x)/2 + B_1(x)^3/6
        const PolyX a3 = b[2] + b[1] * b[0] + Rational(1, 3) * sub(1, 3) +
                         Rational(1, 2) * sub(1, 2) * b[0] +
                         Rational(1, 6) * b[0] * b[0] * b[0];
        const auto series = assemble_full_series(b, 3);
        if (series.coeff(3) != a3.to_poly2())
            return mismatch("A_3", to_string(series.coeff(3) - a3.to_poly2()));
        if (stratum_epoly(b, Partition{3, {0, 0, 1}}) != b[2])
            return mismatch("[3]", "stratum is not B_3");
        if (stratum_epoly(b, Partition{3, {1, 1, 0}}) != b[1] * b[0])
            return mismatch("[1 2]", "stratum is not B_2 B_1");
        const PolyX abelian3 = Rational(1, 3) * sub(1, 3) + Rational(1, 2) * sub(1, 2) * b[0] +
                               Rational(1, 6) * b[0] * b[0] * b[0];
        if (stratum_epoly(b, Partition{3, {3, 0, 0}}) != abelian3)
            return mismatch("[1^3]", "stratum mismatch");
        return std::string();
    });

    r.check("plethystic.example_gl4", 4, [&r] {
        auto rng = r.rng();
        const auto b = opaque_generators(rng, 4);
        const auto sub = [&](int l, int h) { return substitute_powers(b[l - 1], h); };
        const Rational half(1, 2);
        const PolyX s4 = b[3];
        const PolyX s13 = b[2] * b[0];
        const PolyX s22 = half * b[1] * b[1] + half * sub(2, 2);
        const PolyX s112 = half * b[1] * sub(1, 2) + half * b[1] * b[0] * b[0];
        const PolyX s1111 = Rational(1, 4) * sub(1, 4) + Rational(1, 3) * sub(1, 3) * b[0] +
                            Rational(1, 8) * sub(1, 2) * sub(1, 2) +
                            Rational(1, 4) * sub(1, 2) * b[0] * b[0] +
                            Rational(1, 24) * b[0].pow(4);
        const std::vector<std::pair<Partition, PolyX>> strata = {
            {Partition{4, {0, 0, 0, 1}}, s4},     {Partition{4, {1, 0, 1, 0}}, s13},
            {Partition{4, {0, 2, 0, 0}}, s22},    {Partition{4, {2, 1, 0, 0}}, s112},
            {Partition{4, {4, 0, 0, 0}}, s1111}};
        PolyX a4;
        for (const auto& [m, want] : strata) {
            const PolyX got = stratum_epoly(b, m);
            if (got != want) return mismatch(m.str(), to_string(got - want));
            a4 += got;
        }
        const auto series = assemble_full_series(b, 4);
        if (series.coeff(4) != a4.to_poly2())
            return mismatch("A_4", "5 strata do not sum to the full coefficient");
        return std::string();
    });

    r.check("plethystic.stratum_sums", 4, [&r] {
        auto rng = r.rng();
        const auto b = opaque_generators(rng, 5);
        const auto series = assemble_full_series(b, 5);
        for (int n = 1; n <= 5; ++n) {
            PolyX sum;
            for (const auto& m : enum_partitions(n)) sum += stratum_epoly(b, m);
            if (sum.to_poly2() != series.coeff(n))
                return mismatch("n=" + std::to_string(n),
                                "strata do not sum to the series coefficient");
        }
        return std::string();
    });

    r.check("plethystic.sym_cstar", 9, [] {
        // Independent oracle: (1-t)/(1-uv t) expanded as a geometric
        // series gives E(Sym^n C^*) = (uv)^n - (uv)^{n-1}.
        const int order = 8;
        const Poly2 x = Poly2::var_x();
        const auto series = sym_series(Poly2::var_x() - Poly2(1), order);
        for (int n = 0; n <= order; ++n) {
            Poly2 want = x.pow(static_cast<unsigned>(n));
            if (n >= 1) want -= x.pow(static_cast<unsigned>(n - 1));
            if (series.coeff(n) != want)
                return mismatch("t^" + std::to_string(n),
                                to_string(series.coeff(n) - want));
        }
        return std::string();
    });
}

// ---- gl2 ----

std::vector<GroupSpec> gl2_sweep() {
    std::vector<GroupSpec> specs;
    for (int s = 0; s <= 5; ++s) specs.push_back(GroupSpec::free_group(s + 1));
    for (int g = 1; g <= 4; ++g) specs.push_back(GroupSpec::surface(g));
    for (int k = 2; k <= 6; ++k) specs.push_back(GroupSpec::non_orientable(k));
    for (int a = 2; a <= 9; ++a)
        for (int b = 2; b <= 9; ++b)
            if (std::gcd(a, b) == 1) specs.push_back(GroupSpec::torus_knot(a, b));
    return specs;
}

// The Corollary's component count for each family; torus knots use the
// parity of the normalized pair.
Rational corollary_component_count(const GroupSpec& spec) {
    if (spec.is<FreeGroup>() || spec.is<SurfaceGroup>()) return Rational(1);
    if (spec.is<NonOrientableGroup>()) return Rational(2);
    auto t = spec.as<TorusKnotGroup>();
    if (t.b % 2 == 0) std::swap(t.a, t.b);
    if (t.a % 2 == 1) return Rational((t.a - 1) * (t.b - 1), 4);
    return Rational(t.a * (t.b - 1), 4);
}

std::string closure_check(const GroupSpec& spec) {
    // irr_epoly_gl2 hard-errors on a mismatch, carrying the difference.
    try {
        const PolyX printed = irr_epoly_gl2(spec);
        const PolyX derived = full_epoly_gl2(spec) - abelian_stratum(spec, 2);
        if (printed != derived) return "difference " + to_string(printed - derived);
    } catch (const InternalCheckError& e) {
        return "difference " + e.difference;
    }
    return std::string();
}

void gl2_checks(Runner& r) {
    for (int s = 0; s <= 5; ++s)
        r.check("gl2.closure_free_s" + std::to_string(s), 5,
                [s] { return closure_check(GroupSpec::free_group(s + 1)); });
    for (int g = 1; g <= 4; ++g)
        r.check("gl2.closure_surface_g" + std::to_string(g), 5,
                [g] { return closure_check(GroupSpec::surface(g)); });
    for (int k = 2; k <= 6; ++k)
        r.check("gl2.closure_nonorientable_k" + std::to_string(k), 5,
                [k] { return closure_check(GroupSpec::non_orientable(k)); });
    for (int a = 2; a <= 9; ++a)
        for (int b = 2; b <= 9; ++b) {
            if (std::gcd(a, b) != 1) continue;
            r.check("gl2.closure_torusknot_" + std::to_string(a) + "_" + std::to_string(b), 5,
                    [a, b] { return closure_check(GroupSpec::torus_knot(a, b)); });
        }

    r.check("gl2.euler_zero", 6, [] {
        for (const auto& spec : gl2_sweep()) {
            const Rational chi = euler_char(irr_epoly_gl2(spec));
            if (!chi.is_zero()) return mismatch(spec.describe(), "chi = " + chi.str());
        }
        return std::string();
    });

    r.check("gl2.component_counts", 7, [] {
        std::string failures;
        for (const auto& spec : gl2_sweep()) {
            const PolyX irr = irr_epoly_gl2(spec);
            const Rational want = corollary_component_count(spec);
            if (irr.is_zero()) {
                failures += mismatch(spec.describe(),
                                     "irreducible locus is empty (E = 0), Corollary claims " +
                                         want.str() + " components; ");
                continue;
            }
            const Rational got = component_count(irr);
            if (got != want)
                failures += mismatch(spec.describe(), "leading coefficient " + got.str() +
                                                          ", Corollary claims " + want.str() + "; ");
        }
        return failures;
    });

    r.check("gl2.integrality", 11, [] {
        for (const auto& spec : gl2_sweep()) {
            if (!full_epoly_gl2(spec).is_integral())
                return mismatch(spec.describe(), "full E-polynomial not integral");
            if (!irr_epoly_gl2(spec).is_integral())
                return mismatch(spec.describe(), "irreducible E-polynomial not integral");
            if (!abelian_stratum(spec, 2).is_integral())
                return mismatch(spec.describe(), "abelian stratum not integral");
        }
        return std::string();
    });
}

// ---- gl3 ----

void gl3_checks(Runner& r) {
    r.check("gl3.euler_zero", 6, [] {
        for (int g = 2; g <= 4; ++g) {
            const Rational chi = euler_char(irr_epoly_gl3_surface(g));
            if (!chi.is_zero())
                return mismatch("genus " + std::to_string(g), "chi = " + chi.str());
        }
        return std::string();
    });

    r.check("gl3.leading_coefficient", 7, [] {
        for (int g = 2; g <= 4; ++g) {
            const Rational lead = component_count(irr_epoly_gl3_surface(g));
            if (lead != Rational(1))
                return mismatch("genus " + std::to_string(g),
                                "leading coefficient " + lead.str());
        }
        return std::string();
    });

    r.check("gl3.genus1_collapse", 0, [] {
        const PolyX p = irr_epoly_gl3_surface(1);
        if (!p.is_zero()) return "genus 1 value is " + to_string(p) + ", expected 0";
        return std::string();
    });

    r.check("gl3.integrality", 11, [] {
        for (int g = 1; g <= 4; ++g)
            if (!irr_epoly_gl3_surface(g).is_integral())
                return mismatch("genus " + std::to_string(g), "not integral");
        return std::string();
    });
}

// ---- abelian ----

void abelian_checks(Runner& r) {
    r.check("abelian.tower", 8, [] {
        for (int rank = 1; rank <= 4; ++rank) {
            const GroupSpec spec = GroupSpec::free_abelian(rank);
            const auto series = sym_series(b1(spec).to_poly2(), 6);
            for (int n = 1; n <= 6; ++n) {
                const PolyX direct = abelian_stratum(spec, n);
                if (direct.to_poly2() != series.coeff(n))
                    return mismatch("r=" + std::to_string(rank) + " n=" + std::to_string(n),
                                    to_string(direct.to_poly2() - series.coeff(n)));
            }
        }
        return std::string();
    });

    r.check("abelian.b1_families", 0, [] {
        const PolyX x = PolyX::var_x();
        if (b1(GroupSpec::free_abelian(3)) != (x - 1).pow(3)) return std::string("Z^3");
        if (b1(GroupSpec::non_orientable(4)) != Rational(2) * (x - 1).pow(3))
            return std::string("non-orientable k=4");
        if (b1(GroupSpec::torus_knot(2, 3)) != x - 1) return std::string("torus knot");
        if (b1(GroupSpec::surface(2)) != (x - 1).pow(4)) return std::string("surface g=2");
        if (b1(GroupSpec::abelianization_only(2, 5)) != Rational(5) * (x - 1).pow(2))
            return std::string("abelianization (2, 5)");
        return std::string();
    });

    r.check("abelian.gl2_strata", 0, [] {
        const PolyX x = PolyX::var_x();
        const Rational half(1, 2);
        // torus knot: x^2 - x
        if (abelian_stratum(GroupSpec::torus_knot(2, 3), 2) != x.pow(2) - x)
            return std::string("torus knot stratum != x^2 - x");
        // free rank r: (x^2-1)^r/2 + (x-1)^{2r}/2
        for (int rank = 1; rank <= 4; ++rank) {
            const PolyX want =
                half * (x.pow(2) - PolyX(1)).pow(rank) + half * (x - 1).pow(2 * rank);
            if (abelian_stratum(GroupSpec::free_group(rank), 2) != want)
                return mismatch("free r=" + std::to_string(rank), "stratum mismatch");
        }
        // non-orientable k: (x-1)^{k-1} [(x+1)^{k-1} + 2(x-1)^{k-1}]
        for (int k = 2; k <= 6; ++k) {
            const PolyX want = (x - 1).pow(k - 1) *
                               ((x + 1).pow(k - 1) + Rational(2) * (x - 1).pow(k - 1));
            if (abelian_stratum(GroupSpec::non_orientable(k), 2) != want)
                return mismatch("non-orientable k=" + std::to_string(k), "stratum mismatch");
        }
        return std::string();
    });

    r.check("abelian.torsion_sym", 0, [] {
        for (int rank = 0; rank <= 3; ++rank)
            for (long torsion = 1; torsion <= 3; ++torsion) {
                const GroupSpec spec = GroupSpec::abelianization_only(rank, torsion);
                const auto series = sym_series(b1(spec).to_poly2(), 4);
                for (int n = 1; n <= 4; ++n)
                    if (abelian_stratum(spec, n).to_poly2() != series.coeff(n))
                        return mismatch("r=" + std::to_string(rank) +
                                            " N=" + std::to_string(torsion),
                                        "n=" + std::to_string(n));
            }
        return std::string();
    });

    r.check("abelian.integrality", 11, [] {
        for (int rank = 1; rank <= 4; ++rank)
            for (int n = 1; n <= 6; ++n)
                if (!abelian_stratum(GroupSpec::free_abelian(rank), n).is_integral())
                    return mismatch("Z^" + std::to_string(rank), "n=" + std::to_string(n));
        // catalog strata assembled from integral b
        const std::vector<GroupSpec> specs = {GroupSpec::free_group(2), GroupSpec::surface(2),
                                              GroupSpec::non_orientable(3),
                                              GroupSpec::torus_knot(2, 5)};
        for (const auto& spec : specs) {
            const int depth = std::min(catalog_depth(spec), 3);
            std::vector<PolyX> b;
            for (int l = 1; l <= depth; ++l) b.push_back(irr_epoly(spec, l));
            for (int n = 1; n <= depth; ++n)
                for (const auto& m : enum_partitions(n))
                    if (!stratum_epoly(b, m).is_integral())
                        return mismatch(spec.describe(), "stratum " + m.str() + " not integral");
        }
        return std::string();
    });
}

// ---- cartan ----

void cartan_checks(Runner& r) {
    // The theorem's own grouping of B_1, independent of cartan_brane's.
    const auto b1_theorem = [](int g) {
        const Poly2 u = Poly2::var_u(), v = Poly2::var_v();
        return ((u - u * u) * (v - v * v)).pow(static_cast<unsigned>(g));
    };

    r.check("cartan.rank1", 10, [&] {
        for (int g = 1; g <= 3; ++g)
            if (cartan_brane(g, 1) != b1_theorem(g))
                return mismatch("g=" + std::to_string(g), "rank-1 brane mismatch");
        return std::string();
    });

    r.check("cartan.sym_path", 10, [&] {
        for (int g = 1; g <= 3; ++g)
            for (int n = 1; n <= 4; ++n)
                if (cartan_brane(g, n) != sym_series(b1_theorem(g), n).coeff(n))
                    return mismatch("g=" + std::to_string(g), "n=" + std::to_string(n));
        return std::string();
    });

    r.check("cartan.not_balanced", 10, [] {
        for (int g = 1; g <= 3; ++g)
            for (int n = 1; n <= 4; ++n) {
                const Poly2 p = cartan_brane(g, n);
                if (is_balanced(p))
                    return mismatch("g=" + std::to_string(g) + " n=" + std::to_string(n),
                                    "unexpectedly balanced");
                try {
                    to_x_form(p);
                    return mismatch("g=" + std::to_string(g) + " n=" + std::to_string(n),
                                    "to_x_form did not fail");
                } catch (const BalanceError&) {
                    // expected
                }
            }
        return std::string();
    });

    r.check("cartan.euler_zero", 0, [] {
        for (int g = 1; g <= 3; ++g)
            for (int n = 1; n <= 4; ++n)
                if (!euler_char(cartan_brane(g, n)).is_zero())
                    return mismatch("g=" + std::to_string(g), "n=" + std::to_string(n));
        return std::string();
    });

    r.check("cartan.integrality", 11, [] {
        for (int g = 1; g <= 3; ++g)
            for (int n = 1; n <= 4; ++n)
                if (!cartan_brane(g, n).is_integral())
                    return mismatch("g=" + std::to_string(g), "n=" + std::to_string(n));
        return std::string();
    });
}

} // namespace

std::vector<CheckResult> run_suite(Suite which, std::uint64_t seed) {
    Runner runner(seed);
    const bool all = which == Suite::All;
    if (all || which == Suite::Combinatorics) combinatorics_checks(runner);
    if (all || which == Suite::Plethystic) plethystic_checks(runner);
    if (all || which == Suite::Gl2) gl2_checks(runner);
    if (all || which == Suite::Gl3) gl3_checks(runner);
    if (all || which == Suite::Abelian) abelian_checks(runner);
    if (all || which == Suite::Cartan) cartan_checks(runner);
    return runner.take();
}

} // namespace plethy::verify
