#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gonscroll/curve.hpp"
#include "gonscroll/scrollfit.hpp"

namespace gonscroll {

// All numerical semigroups of the given genus, ordered lexicographically by
// gap set.  Tree enumeration: children of S are S minus one minimal generator
// larger than the Frobenius number, so every semigroup appears exactly once.
std::vector<NumericalSemigroup> enumerate_semigroups(int genus, int genus_cap = 12);

// Monomial curve smooth at infinity with S_P = S: the minimal generators,
// extended by conductor+k, conductor+k+1 for the least k >= 0 that keeps the
// list increasing, unless the two largest generators are already consecutive.
// Canonical exponents and gonality depend only on S, not on this choice.
MonomialCurve one_point_curve(const NumericalSemigroup& s);

enum class SingularityLabel { none, kunz, nearly_gorenstein };
std::string to_string(SingularityLabel l);

struct SemigroupSummary {
    std::vector<long long> generators;   // minimal generators
    std::vector<long long> gaps;
    long long frobenius = -1;
    long long conductor = 0;
    long long multiplicity = 1;
    long long delta = 0;
};
SemigroupSummary summarize(const NumericalSemigroup& s);

struct CurveReport {
    std::vector<long long> exponents;
    long long genus = 0;
    SemigroupSummary sp;
    SemigroupSummary sq;
    Classification classification;
    std::vector<long long> canonical_exponents;
    long long g_prime = 0;
    long long gonality = 1;
    std::vector<long long> minimizing_r;
    APFit best_fit;
    long long ell = 0;    // r of the reported fit
    std::vector<std::pair<long long, long long>> pencil_degrees;  // (r, degree)
    SingularityLabel label = SingularityLabel::none;
};

CurveReport analyze_curve(const MonomialCurve& c);

struct CatalogFilter {
    std::optional<long long> gonality;
    bool non_gorenstein = false;
    bool kunz = false;
    bool nearly_gorenstein = false;
    bool nearly_normal = false;
    std::optional<std::pair<long long, long long>> genus_range;  // inclusive

    bool matches(const CurveReport& r) const;
};

// One-point curves of every semigroup of genus 1..max_genus (or exactly
// `genus` for catalog_for_genus), in enumeration order, filtered.  `threads`
// splits the per-curve analysis; the output does not depend on it.
std::vector<CurveReport> build_catalog(int max_genus, const CatalogFilter& filter = {},
                                       int threads = 1, int genus_cap = 12);
std::vector<CurveReport> catalog_for_genus(int genus, const CatalogFilter& filter = {},
                                           int threads = 1, int genus_cap = 12);

// Curated regression fixtures: trigonal/tetragonal monomial curves of genus
// 6..8 with known canonical exponents, fiber count, scroll type and
// singularity label.
struct CurveFixture {
    std::vector<long long> exponents;
    std::vector<long long> expected_a;
    long long expected_ell = 1;
    std::vector<long long> expected_scroll;
    SingularityLabel expected_label = SingularityLabel::none;
};
const std::vector<CurveFixture>& builtin_fixtures();

struct FixtureVerdict {
    CurveFixture fixture;
    std::vector<long long> computed_a;
    std::vector<long long> computed_scroll;  // fit at expected_ell
    int computed_parts = 0;
    SingularityLabel computed_label = SingularityLabel::none;
    bool a_match = false;
    bool fit_match = false;     // part count and scroll type at expected_ell
    bool label_match = false;
    bool ok() const { return a_match && fit_match && label_match; }
};
std::vector<FixtureVerdict> reproduce_builtin_fixtures();

// Among nearly-Gorenstein tetragonal one-point curves of genus <= max_genus,
// no smooth three-part fit exists with difference 1 or 2 (smooth placements
// start at ell = d).  Returned rows are the offending curves; empty on the
// stock catalog.
std::vector<CurveReport> ng_small_ell_offenders(int max_genus, int genus_cap = 12);

} // namespace gonscroll
