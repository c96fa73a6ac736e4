#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "plethy/partitions.hpp"
#include "plethy/plethystic.hpp"

namespace plethy {

struct FreeGroup {
    int rank; // r >= 1
};
struct SurfaceGroup {
    int genus; // g >= 1
};
struct NonOrientableGroup {
    int genus; // k >= 2 (k = 1 is excluded, see irr formulas)
};
struct TorusKnotGroup {
    int a, b; // a, b >= 2, coprime (hence never both even)
};
struct FreeAbelianGroup {
    int rank; // r >= 1
};
// A group known only through its abelianization Z^r + F_N.
struct AbelianizationData {
    int rank;     // r >= 0
    long torsion; // N >= 1
};

// Tagged description of the group Gamma; constructors validate the
// family invariants.
class GroupSpec {
public:
    using Variant = std::variant<FreeGroup, SurfaceGroup, NonOrientableGroup, TorusKnotGroup,
                                 FreeAbelianGroup, AbelianizationData>;

    static GroupSpec free_group(int rank);
    static GroupSpec surface(int genus);
    static GroupSpec non_orientable(int genus);
    static GroupSpec torus_knot(int a, int b);
    static GroupSpec free_abelian(int rank);
    static GroupSpec abelianization_only(int rank, long torsion);

    template <typename T>
    bool is() const {
        return std::holds_alternative<T>(v_);
    }
    template <typename T>
    const T& as() const {
        return std::get<T>(v_);
    }

    // Rank and torsion order of Gamma_Ab = Z^r + F_N.
    struct Abelianization {
        int rank;
        long torsion;
    };
    Abelianization abelianization() const;

    std::string describe() const;

private:
    explicit GroupSpec(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

// Stratum selector for catalog queries. The partition labels [n] and
// [1^n] coincide with the irreducible and abelian strata respectively.
struct StratumLabel {
    enum class Kind { Full, Irreducible, Abelian, ByPartition };
    Kind kind = Kind::Full;
    std::optional<Partition> partition; // set iff ByPartition

    static StratumLabel full() { return {Kind::Full, std::nullopt}; }
    static StratumLabel irreducible() { return {Kind::Irreducible, std::nullopt}; }
    static StratumLabel abelian() { return {Kind::Abelian, std::nullopt}; }
    static StratumLabel by_partition(Partition p) { return {Kind::ByPartition, std::move(p)}; }
};

// E_x of the rank-1 character variety: N (x-1)^r from the
// abelianization data.
PolyX b1(const GroupSpec& spec);

// E_x of the abelian stratum [1^n]:
//   sum_{[k] in P_n} prod_j N^{k_j} (x^j - 1)^{r k_j} / (k_j! j^{k_j}).
// The result is asserted to have integer coefficients.
PolyX abelian_stratum(const GroupSpec& spec, int n);

// E_x of the full GL_2 character variety (free / surface /
// non-orientable / torus-knot families). Torus knots are normalized so
// that b is odd before applying the parity-split formula.
PolyX full_epoly_gl2(const GroupSpec& spec);

// E_x of the irreducible GL_2 locus. Computed twice: from the printed
// closed form and as full - abelian stratum; a mismatch throws
// InternalCheckError carrying the difference polynomial.
PolyX irr_epoly_gl2(const GroupSpec& spec);

// E_x of the irreducible GL_3 character variety of an orientable
// surface group, c = 2g - 2. For g = 1 the x^{c-2} terms cancel
// identically and the value collapses to 0. Sanity assertions (zero
// value at x = 1; leading coefficient 1 for g >= 2) throw
// InternalCheckError on failure.
PolyX irr_epoly_gl3_surface(int genus);

// PExp of sum b_l t^l: coefficient of t^n is E(X_Gamma GL_n) when b_l
// are the irreducible E-polynomials. b[l-1] supplies rank l.
TruncSeries assemble_full_series(const std::vector<PolyX>& b, int order);

// plog of the full-series: coefficient of t^n recovers
// E(X^irr_Gamma GL_n). Requires constant coefficient 1.
TruncSeries extract_irreducible_series(const TruncSeries& a);

// E_x of the [m]-stratum: the glue-fiber part of the rectangular
// partition sum. b[l-1] must cover l up to the largest part of m.
PolyX stratum_epoly(const std::vector<PolyX>& b, const Partition& m);

// E-polynomial of the Cartan brane of the rank-n degree-0 Higgs moduli
// space: partition sum over P_n of powers of
// B_1(u, v) = (uv)^g (1-u)^g (1-v)^g. Genuinely two-variable (never
// balanced for g, n >= 1).
Poly2 cartan_brane(int genus, int n);

// chi_c = E(1,1).
Rational euler_char(const Poly2& p);
Rational euler_char(const PolyX& p);

// Number of irreducible components, read off as the leading coefficient.
// Requires p != 0.
Rational component_count(const PolyX& p);

// ---- catalog dispatch helpers (CLI surface) ----

// Largest n for which the irreducible catalog of this family is known;
// unbounded (INT_MAX) for free abelian groups.
int catalog_depth(const GroupSpec& spec);

// E_x(X^irr GL_n) from the catalog; throws when outside catalog_depth.
PolyX irr_epoly(const GroupSpec& spec, int n);

// E_x(X GL_n) from the catalog (sum of all strata).
PolyX full_epoly(const GroupSpec& spec, int n);

// Dispatch on a StratumLabel.
PolyX epoly(const GroupSpec& spec, int n, const StratumLabel& stratum);

} // namespace plethy
