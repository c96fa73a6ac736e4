// plethy: exact plethystic calculus and E-polynomials of GL_n character
// varieties from the command line. All results are exact rationals; text
// and LaTeX renderings follow the library's canonical term order, JSON
// uses the byte-stable polynomial encoding.
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "plethy/charvar.hpp"
#include "plethy/json_io.hpp"
#include "plethy/verify.hpp"

namespace {

using nlohmann::json;
using namespace plethy;

// Bad flag combinations and unknown names exit with code 2; computation
// errors exit with code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Latex };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "latex") return Format::Latex;
    throw UsageError("unknown format '" + s + "' (expected text|json|latex)");
}

struct GroupArgs {
    std::string group;
    int rank = 0;
    int genus = 0;
    std::string knot;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--group", group, "free|surface|nonorientable|torusknot|freeabelian")
            ->required();
        cmd->add_option("--rank", rank, "rank for free/freeabelian groups");
        cmd->add_option("--genus", genus, "genus for surface/nonorientable groups");
        cmd->add_option("--knot", knot, "torus knot parameters A,B");
    }

    GroupSpec resolve() const {
        try {
            if (group == "free") {
                if (rank < 1) throw UsageError("--group free requires --rank R (R >= 1)");
                return GroupSpec::free_group(rank);
            }
            if (group == "surface") {
                if (genus < 1) throw UsageError("--group surface requires --genus G (G >= 1)");
                return GroupSpec::surface(genus);
            }
            if (group == "nonorientable") {
                if (genus < 2)
                    throw UsageError("--group nonorientable requires --genus K (K >= 2)");
                return GroupSpec::non_orientable(genus);
            }
            if (group == "torusknot") {
                int a = 0, b = 0;
                char comma = 0;
                std::istringstream in(knot);
                if (!(in >> a >> comma >> b) || comma != ',' || !in.eof())
                    throw UsageError("--group torusknot requires --knot A,B");
                return GroupSpec::torus_knot(a, b);
            }
            if (group == "freeabelian") {
                if (rank < 1) throw UsageError("--group freeabelian requires --rank R (R >= 1)");
                return GroupSpec::free_abelian(rank);
            }
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        throw UsageError("unknown group '" + group +
                         "' (expected free|surface|nonorientable|torusknot|freeabelian)");
    }
};

StratumLabel parse_stratum(const std::string& s, int n) {
    if (s == "full") return StratumLabel::full();
    if (s == "irr") return StratumLabel::irreducible();
    if (s == "abelian") return StratumLabel::abelian();
    if (s.rfind("partition=", 0) == 0) {
        Partition p;
        p.n = n;
        p.mult.assign(n, 0);
        std::istringstream in(s.substr(10));
        std::string item;
        int weight = 0;
        while (std::getline(in, item, ',')) {
            int part = 0;
            try {
                part = std::stoi(item);
            } catch (...) {
                throw UsageError("bad partition part '" + item + "'");
            }
            if (part < 1 || part > n) throw UsageError("partition part out of range: " + item);
            p.mult[part - 1] += 1;
            weight += part;
        }
        if (weight != n)
            throw UsageError("partition parts sum to " + std::to_string(weight) +
                             ", expected n = " + std::to_string(n));
        return StratumLabel::by_partition(std::move(p));
    }
    throw UsageError("unknown stratum '" + s +
                     "' (expected full|irr|abelian|partition=P1,P2,...)");
}

std::string render_polyx(const PolyX& p, Format f) {
    switch (f) {
    case Format::Text: return to_string(p);
    case Format::Latex: return to_latex(p);
    case Format::Json: return to_json(p).dump();
    }
    return {};
}

std::string render_poly2(const Poly2& p, Format f) {
    switch (f) {
    case Format::Text: return is_balanced(p) ? to_string(to_x_form(p)) : to_string(p);
    case Format::Latex: return is_balanced(p) ? to_latex(to_x_form(p)) : to_latex(p);
    case Format::Json: return to_json(p).dump();
    }
    return {};
}

void print_series(const TruncSeries& s, Format f, std::ostream& out) {
    if (f == Format::Json) {
        out << to_json(s).dump() << "\n";
        return;
    }
    for (int n = 0; n <= s.order(); ++n)
        out << "t^" << n << ": " << render_poly2(s.coeff(n), f) << "\n";
}

json series_input(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return json::parse(in);
}

int run(int argc, char** argv) {
    CLI::App app{"exact plethystic calculus and E-polynomials of GL_n character varieties"};
    app.require_subcommand(1);
    // let --format appear after the subcommand as well
    app.fallthrough();

    std::string format_name = "text";
    app.add_option("--format", format_name, "output format: text|json|latex")
        ->envname("PLETHY_FORMAT");

    auto* cmd_epoly = app.add_subcommand("epoly", "E-polynomial of a character variety stratum");
    GroupArgs epoly_group;
    epoly_group.add_options(cmd_epoly);
    int epoly_n = 0;
    std::string epoly_stratum = "full";
    cmd_epoly->add_option("--n", epoly_n, "rank n of GL_n")->required();
    cmd_epoly->add_option("--stratum", epoly_stratum, "full|irr|abelian|partition=P1,P2,...");

    auto* cmd_series = app.add_subcommand("series", "generating series of E-polynomials");
    GroupArgs series_group;
    series_group.add_options(cmd_series);
    int series_max_n = 0;
    std::string series_kind = "full";
    cmd_series->add_option("--max-n", series_max_n, "truncation order")->required();
    cmd_series->add_option("--kind", series_kind, "full|irr");

    auto* cmd_strata = app.add_subcommand("strata", "E-polynomials of all strata of X_Gamma GL_n");
    GroupArgs strata_group;
    strata_group.add_options(cmd_strata);
    int strata_n = 0;
    cmd_strata->add_option("--n", strata_n, "rank n of GL_n")->required();

    auto* cmd_partitions = app.add_subcommand("partitions", "enumerate (rectangular) partitions");
    int partitions_n = 0;
    bool partitions_rect = false, partitions_fibers = false;
    cmd_partitions->add_option("--n", partitions_n, "weight n")->required();
    cmd_partitions->add_flag("--rectangular", partitions_rect, "rectangular partitions");
    cmd_partitions->add_flag("--fibers", partitions_fibers, "group by the gluing map");

    auto* cmd_pexp = app.add_subcommand("pexp", "plethystic exponential of a series");
    std::string pexp_in;
    int pexp_order = -1;
    cmd_pexp->add_option("--in", pexp_in, "input series JSON ('-' for stdin)")->required();
    cmd_pexp->add_option("--order", pexp_order, "re-truncate to this order");

    auto* cmd_plog = app.add_subcommand("plog", "plethystic logarithm of a series");
    std::string plog_in;
    cmd_plog->add_option("--in", plog_in, "input series JSON ('-' for stdin)")->required();

    auto* cmd_sym = app.add_subcommand("sym", "symmetric-product series of an E-polynomial");
    std::string sym_in;
    int sym_order = 0;
    cmd_sym->add_option("--epoly", sym_in, "input polynomial JSON ('-' for stdin)")->required();
    cmd_sym->add_option("--order", sym_order, "truncation order")->required();

    auto* cmd_cartan = app.add_subcommand("cartan", "E-polynomial of the Cartan brane");
    int cartan_genus = 0, cartan_n = 0;
    cmd_cartan->add_option("--genus", cartan_genus, "genus g >= 1")->required();
    cmd_cartan->add_option("--n", cartan_n, "rank n >= 1")->required();

    auto* cmd_inv = app.add_subcommand("invariants", "Euler characteristic and component count");
    GroupArgs inv_group;
    inv_group.add_options(cmd_inv);
    int inv_n = 0;
    cmd_inv->add_option("--n", inv_n, "rank n of GL_n")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run the reproduction suite");
    std::string verify_suite = "all";
    std::uint64_t verify_seed = 0;
    cmd_verify->add_option("--suite", verify_suite,
                           "all|combinatorics|plethystic|gl2|gl3|abelian|cartan");
    cmd_verify->add_option("--seed", verify_seed, "seed for the randomized identities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Format format = parse_format(format_name);

    if (app.got_subcommand(cmd_epoly)) {
        const GroupSpec spec = epoly_group.resolve();
        const StratumLabel label = parse_stratum(epoly_stratum, epoly_n);
        std::cout << render_polyx(epoly(spec, epoly_n, label), format) << "\n";
        return 0;
    }

    if (app.got_subcommand(cmd_series)) {
        const GroupSpec spec = series_group.resolve();
        if (series_max_n < 0) throw UsageError("--max-n must be >= 0");
        if (series_kind == "full") {
            std::vector<PolyX> b;
            for (int l = 1; l <= series_max_n; ++l) b.push_back(irr_epoly(spec, l));
            print_series(assemble_full_series(b, series_max_n), format, std::cout);
        } else if (series_kind == "irr") {
            TruncSeries s(series_max_n);
            for (int n = 1; n <= series_max_n; ++n)
                s.set_coeff(n, irr_epoly(spec, n).to_poly2());
            print_series(s, format, std::cout);
        } else {
            throw UsageError("unknown kind '" + series_kind + "' (expected full|irr)");
        }
        return 0;
    }

    if (app.got_subcommand(cmd_strata)) {
        const GroupSpec spec = strata_group.resolve();
        json arr = json::array();
        for (const auto& m : enum_partitions(strata_n)) {
            const PolyX p = epoly(spec, strata_n, StratumLabel::by_partition(m));
            if (format == Format::Json)
                arr.push_back({{"partition", m.str()}, {"epoly", to_json(p)}});
            else
                std::cout << m.str() << ": " << render_polyx(p, format) << "\n";
        }
        if (format == Format::Json) std::cout << arr.dump() << "\n";
        return 0;
    }

    if (app.got_subcommand(cmd_partitions)) {
        if (partitions_fibers) {
            json arr = json::array();
            for (const auto& [m, fiber] : fibers_of_glue(partitions_n)) {
                if (format == Format::Json) {
                    json fs = json::array();
                    for (const auto& rp : fiber) fs.push_back(to_json(rp));
                    arr.push_back({{"partition", to_json(m)}, {"fiber", fs}});
                } else {
                    for (const auto& rp : fiber)
                        std::cout << m.str() << " <- " << rp.str() << "\n";
                }
            }
            if (format == Format::Json) std::cout << arr.dump() << "\n";
        } else if (partitions_rect) {
            json arr = json::array();
            for (const auto& rp : enum_rect_partitions(partitions_n)) {
                if (format == Format::Json)
                    arr.push_back(to_json(rp));
                else
                    std::cout << rp.str() << "\n";
            }
            if (format == Format::Json) std::cout << arr.dump() << "\n";
        } else {
            json arr = json::array();
            for (const auto& p : enum_partitions(partitions_n)) {
                if (format == Format::Json)
                    arr.push_back(to_json(p));
                else
                    std::cout << p.str() << "\n";
            }
            if (format == Format::Json) std::cout << arr.dump() << "\n";
        }
        return 0;
    }

    if (app.got_subcommand(cmd_pexp)) {
        TruncSeries f = series_from_json(series_input(pexp_in));
        if (pexp_order >= 0 && pexp_order < f.order()) {
            TruncSeries cut(pexp_order);
            for (int n = 0; n <= pexp_order; ++n) cut.set_coeff(n, f.coeff(n));
            f = cut;
        }
        print_series(pexp(f), format, std::cout);
        return 0;
    }

    if (app.got_subcommand(cmd_plog)) {
        print_series(plog(series_from_json(series_input(plog_in))), format, std::cout);
        return 0;
    }

    if (app.got_subcommand(cmd_sym)) {
        const Poly2 e = poly2_from_json(series_input(sym_in));
        print_series(sym_series(e, sym_order), format, std::cout);
        return 0;
    }

    if (app.got_subcommand(cmd_cartan)) {
        std::cout << render_poly2(cartan_brane(cartan_genus, cartan_n), format) << "\n";
        return 0;
    }

    if (app.got_subcommand(cmd_inv)) {
        const GroupSpec spec = inv_group.resolve();
        const PolyX irr = irr_epoly(spec, inv_n);
        const Rational chi = euler_char(irr);
        const Rational components = irr.is_zero() ? Rational(0) : component_count(irr);
        if (format == Format::Json)
            std::cout << json{{"euler", chi.str_frac()}, {"components", components.str_frac()}}
                             .dump()
                      << "\n";
        else
            std::cout << "euler: " << chi.str() << ", components: " << components.str() << "\n";
        return 0;
    }

    if (app.got_subcommand(cmd_verify)) {
        const auto suite = verify::parse_suite(verify_suite);
        if (!suite) throw UsageError("unknown suite '" + verify_suite + "'");
        const auto results = verify::run_suite(*suite, verify_seed);
        if (format == Format::Json) {
            json arr = json::array();
            for (const auto& res : results) {
                json item{{"name", res.name}, {"status", res.pass ? "pass" : "fail"}};
                if (!res.pass) item["detail"] = res.detail;
                arr.push_back(item);
            }
            std::cout << arr.dump() << "\n";
        } else {
            size_t passed = 0;
            for (const auto& res : results) {
                if (res.pass) {
                    std::cout << "PASS " << res.name << "\n";
                    ++passed;
                } else {
                    std::cout << "FAIL " << res.name << ": " << res.detail << "\n";
                }
            }
            std::cout << results.size() << " checks, " << passed << " passed, "
                      << results.size() - passed << " failed (seed " << verify_seed << ")\n";
        }
        return verify::all_passed(results) ? 0 : 1;
    }

    throw UsageError("no subcommand selected");
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
