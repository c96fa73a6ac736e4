// Byte-stable golden tests for the CLI: fixed inputs must produce the
// exact frozen output and the documented exit codes. The plethy binary
// path arrives as argv[1].
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <nlohmann/json.hpp>

#include "plethy/charvar.hpp"
#include "plethy/json_io.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int failures = 0;

void expect(bool ok, const std::string& what, const std::string& got = "") {
    if (ok) return;
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
    if (!got.empty()) std::cerr << "  got: " << got << "\n";
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_golden <path-to-plethy>\n";
        return 1;
    }
    const std::string bin = argv[1];

    // torus knot (2,3), irreducible GL2 locus: (x-1)^2 expanded
    {
        const auto r = run(bin + " epoly --group torusknot --knot 2,3 --n 2 --stratum irr");
        expect(r.code == 0 && r.out == "x^2 - 2x + 1\n", "epoly torusknot irr text", r.out);
    }
    {
        const auto r = run(bin +
                           " --format latex epoly --group torusknot --knot 2,3 --n 2 --stratum irr");
        expect(r.code == 0 && r.out == "x^{2} - 2x + 1\n", "epoly torusknot irr latex", r.out);
    }
    {
        const auto r = run(bin +
                           " --format json epoly --group torusknot --knot 2,3 --n 2 --stratum irr");
        expect(r.code == 0 &&
                   r.out == R"([{"c":"1/1","x":2},{"c":"-2/1","x":1},{"c":"1/1","x":0}])" "\n",
               "epoly torusknot irr json bytes", r.out);
        // the JSON output round-trips through the polycore decoder
        const auto decoded = plethy::polyx_from_json(nlohmann::json::parse(r.out));
        const auto direct = plethy::irr_epoly_gl2(plethy::GroupSpec::torus_knot(2, 3));
        expect(decoded == direct, "epoly json round-trip");
    }

    // the eleven rectangular partitions of 4, one per line
    {
        const auto r = run(bin + " partitions --n 4 --rectangular");
        const std::string want =
            "[(4x1)^1]\n"
            "[(2x2)^1]\n"
            "[(2x1)^2]\n"
            "[(1x4)^1]\n"
            "[(1x2)^1 (2x1)^1]\n"
            "[(1x2)^2]\n"
            "[(1x1)^1 (3x1)^1]\n"
            "[(1x1)^1 (1x3)^1]\n"
            "[(1x1)^2 (2x1)^1]\n"
            "[(1x1)^2 (1x2)^1]\n"
            "[(1x1)^4]\n";
        expect(r.code == 0 && r.out == want, "partitions n=4 rectangular", r.out);
    }
    {
        const auto r = run(bin + " partitions --n 3");
        expect(r.code == 0 && r.out == "[3]\n[1 2]\n[1^3]\n", "partitions n=3", r.out);
    }
    {
        const auto r = run(bin + " partitions --n 3 --fibers");
        const std::string want =
            "[3] <- [(3x1)^1]\n"
            "[1 2] <- [(1x1)^1 (2x1)^1]\n"
            "[1^3] <- [(1x3)^1]\n"
            "[1^3] <- [(1x1)^1 (1x2)^1]\n"
            "[1^3] <- [(1x1)^3]\n";
        expect(r.code == 0 && r.out == want, "partitions n=3 fibers", r.out);
    }

    // invariants of the irreducible GL3 variety of a genus-2 surface
    {
        const auto r = run(bin + " invariants --group surface --genus 2 --n 3");
        expect(r.code == 0 && r.out == "euler: 0, components: 1\n", "invariants surface", r.out);
    }
    {
        const auto r = run(bin + " --format json invariants --group torusknot --knot 3,5 --n 2");
        expect(r.code == 0 && r.out == R"({"components":"2/1","euler":"0/1"})" "\n",
               "invariants json", r.out);
    }

    // a single stratum only needs the catalog up to its largest part:
    // [1 2] in P_3 is B_1 B_2 = (x-1)^3 for the trefoil group
    {
        const auto r =
            run(bin + " epoly --group torusknot --knot 2,3 --n 3 --stratum partition=1,2");
        expect(r.code == 0 && r.out == "x^3 - 3x^2 + 3x - 1\n", "partial-catalog stratum", r.out);
    }

    // Cartan brane, rank 1, genus 1: uv(1-u)(1-v) expanded
    {
        const auto r = run(bin + " cartan --genus 1 --n 1");
        expect(r.code == 0 && r.out == "u^2v^2 - u^2v - uv^2 + uv\n", "cartan g=1 n=1", r.out);
    }
    {
        const auto r = run(bin + " --format json cartan --genus 1 --n 2");
        expect(r.code == 0, "cartan json exit 0", r.out);
        const auto decoded = plethy::poly2_from_json(nlohmann::json::parse(r.out));
        expect(decoded == plethy::cartan_brane(1, 2), "cartan json round-trip");
    }

    // strata table of the torus-knot GL2 variety
    {
        const auto r = run(bin + " strata --group torusknot --knot 2,3 --n 2");
        expect(r.code == 0 && r.out == "[2]: x^2 - 2x + 1\n[1^2]: x^2 - x\n",
               "strata torusknot n=2", r.out);
    }

    // pexp pipeline: PExp((x-1)t) through t^2
    {
        const std::string path = "cli_golden_series.json";
        std::ofstream f(path);
        f << R"({"order":2,"coeffs":[[],[{"u":1,"v":1,"c":"1"},{"u":0,"v":0,"c":"-1"}],[]]})";
        f.close();
        const auto r = run(bin + " pexp --in " + path);
        expect(r.code == 0 && r.out == "t^0: 1\nt^1: x - 1\nt^2: x^2 - x\n", "pexp pipeline",
               r.out);
        std::remove(path.c_str());
    }

    // sym pipeline: symmetric products of C*
    {
        const std::string path = "cli_golden_poly.json";
        std::ofstream f(path);
        f << R"([{"u":1,"v":1,"c":"1"},{"u":0,"v":0,"c":"-1"}])";
        f.close();
        const auto r = run(bin + " sym --epoly " + path + " --order 3");
        expect(r.code == 0 &&
                   r.out == "t^0: 1\nt^1: x - 1\nt^2: x^2 - x\nt^3: x^3 - x^2\n",
               "sym pipeline", r.out);
        std::remove(path.c_str());
    }

    // environment variable selects the default format
    {
        const auto r = run("PLETHY_FORMAT=latex " + bin +
                           " epoly --group torusknot --knot 2,3 --n 2 --stratum irr");
        expect(r.code == 0 && r.out == "x^{2} - 2x + 1\n", "PLETHY_FORMAT env", r.out);
    }

    // --format is also accepted after the subcommand
    {
        const auto r = run(bin +
                           " epoly --group torusknot --knot 2,3 --n 2 --stratum irr --format latex");
        expect(r.code == 0 && r.out == "x^{2} - 2x + 1\n", "--format after subcommand", r.out);
    }

    // exit codes: 2 for usage errors, 1 for computation errors
    {
        expect(run(bin + " epoly --group bogus --n 2").code == 2, "unknown group exits 2");
        expect(run(bin + " bogus-subcommand").code == 2, "unknown subcommand exits 2");
        expect(run(bin + " epoly --group torusknot --knot 2,3 --n 2 --stratum nope").code == 2,
               "unknown stratum exits 2");
        expect(run(bin + " epoly --group free --rank 2 --n 5 --stratum full").code == 1,
               "beyond catalog exits 1");
        expect(run(bin + " --format latin epoly --group free --rank 2 --n 1").code == 2,
               "unknown format exits 2");
    }

    // verify: combinatorics suite is green and reproducible
    {
        const auto r = run(bin + " verify --suite combinatorics");
        expect(r.code == 0, "verify combinatorics exit 0", r.out);
        expect(r.out.find("9 checks, 9 passed, 0 failed (seed 0)") != std::string::npos,
               "verify combinatorics summary", r.out);
        const auto again = run(bin + " verify --suite combinatorics");
        expect(again.out == r.out, "verify rerun is identical");
    }
    {
        const auto r = run(bin + " --format json verify --suite cartan");
        expect(r.code == 0, "verify cartan json exit 0", r.out);
        const auto j = nlohmann::json::parse(r.out);
        expect(j.is_array() && !j.empty() && j[0].contains("name") && j[0].contains("status"),
               "verify json schema", r.out);
    }
    {
        // failing checks carry a detail field and flip the exit status
        const auto r = run(bin + " --format json verify --suite gl2");
        expect(r.code == 1, "verify gl2 exits 1");
        const auto j = nlohmann::json::parse(r.out);
        int fails = 0;
        for (const auto& item : j)
            if (item.at("status") == "fail") {
                ++fails;
                expect(item.contains("detail") && !item.at("detail").get<std::string>().empty(),
                       "failing check carries detail");
                expect(item.at("name") == "gl2.component_counts", "only the Corollary check fails");
            }
        expect(fails == 1, "exactly one failing gl2 check");
    }

    if (failures == 0) std::puts("cli golden: all checks passed");
    return failures;
}
