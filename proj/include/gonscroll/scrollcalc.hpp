#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <utility>
#include <vector>

namespace gonscroll {

using Rational = boost::rational<long long>;

// Rational normal scroll S_{m1,...,md} in P^N, m1 <= ... <= md >= 0,
// degree e = sum m_i, N = e + d - 1.  Smooth exactly when m1 >= 1.
struct Scroll {
    std::vector<long long> type;

    static Scroll of(std::vector<long long> type);

    int dim() const { return (int)type.size(); }
    long long degree() const;                       // e
    long long ambient_dim() const;                  // N = e + d - 1
    bool smooth() const { return !type.empty() && type.front() >= 1; }
    long long m1() const { return type.front(); }
    long long md() const { return type.back(); }
};

// Divisor class aH + bF in Pic(S).
struct DivisorClass {
    long long a = 0;
    long long b = 0;
};

// Chow class c.H^k + c'.H^(k-1)F.  The ring is Z[H,F] modulo F^2, H^(d+1),
// H^d F and H^d - e H^(d-1) F, so every homogeneous class in codimension
// 0 < k < d has this shape and a top-codimension class evaluates to the
// integer c.e + c'.
struct ChowClass {
    int codim = 0;
    long long h = 1;    // coefficient of H^codim
    long long hf = 0;   // coefficient of H^(codim-1) F; must be 0 at codim 0

    static ChowClass unit() { return {0, 1, 0}; }
    static ChowClass hyperplane() { return {1, 1, 0}; }
    static ChowClass fiber() { return {1, 0, 1}; }
    static ChowClass divisor(const DivisorClass& d) { return {1, d.a, d.b}; }
};

struct ChowResult {
    bool beyond_top = false;   // codimension exceeded dim: the zero class
    bool is_number = false;    // codimension == dim: evaluated degree
    long long number = 0;
    ChowClass cls;             // meaningful when neither flag is set
};

ChowResult chow_product(const Scroll& s, const std::vector<ChowClass>& classes);

// chow_product that must land in top codimension; throws otherwise.
long long chow_degree(const Scroll& s, const std::vector<ChowClass>& classes);

// K_S = -dH + (e-2)F
DivisorClass canonical_class(const Scroll& s);

// Invariants of the curve cut out by d-1 divisor classes D_i = a_i H + b_i F:
//   ell    = prod a_i              (intersection number with a fiber)
//   degree = ell.e + sum_i (prod_{j != i} a_j) b_i
// and the arithmetic genus twice over, by two independent routes:
//   closed:  2p - 2 = degree.(a - d) + ell.(b + e - 2),  a = sum a_i, b = sum b_i
//   koszul:  2p - 2 = D_1 ... D_(d-1) . (D_1 + ... + D_(d-1) - c1(T_S))
// with c1(T_S) = dH + (2-e)F.  Both genus fields are exact rationals; the
// two routes agree identically on integer classes.
struct CompleteIntersection {
    long long ell = 1;
    long long degree = 0;
    Rational genus_closed;
    Rational genus_koszul;
    bool effective = true;   // every cutting class has a nonzero section count
};

CompleteIntersection ci_invariants(const Scroll& s, const std::vector<DivisorClass>& classes);

// Section count of aH + bF.
//
// closed form (valid for a >= 0 and b >= -a.m1):
//     (b+1) C(a+d-1, d-1) + e C(a+d-1, d)
// enumerated form (valid for every a >= 0): over all decompositions of a into
// d nonnegative parts alpha, sum of max(0, b + alpha.m + 1).  Outside the
// closed-form regime the enumerated count is the ground truth; the closed
// value is reported as 0 with the flag cleared.
struct SectionCount {
    long long value = 0;
    bool closed_form_valid = false;
};
SectionCount h0_closed(const Scroll& s, long long a, long long b);
long long h0_enum(const Scroll& s, long long a, long long b);

// Higher cohomology of aH + bF vanishes for i >= 1, a >= 0, b >= -(a.m1 + 1).
bool hi_vanishes(const Scroll& s, int i, long long a, long long b);

// Per-summand first-cohomology count sum max(0, -(b + alpha.m) - 1); zero
// throughout the vanishing regime.
long long h1_summand_count(const Scroll& s, long long a, long long b);

// Consistency toolkit for a canonical model of genus g lying on a smooth
// d-fold scroll as an (a,b)-type complete intersection meeting a fiber in
// ell points.  All quantities are exact except m1_lower, whose real
// (d-1)-th root is evaluated in double precision (callers should compare
// with a 1e-9 slack).
struct GonalityBounds {
    // residual of (a-d-1)(2g-2-eta) + eta + 2mu - ell(d+2-b-g); zero when the
    // data is consistent
    long long ci_residual = 0;
    // ell recovered from the relation, with denominator (d+2-b-g) exactly as
    // the residual rearranges (the opposite sign convention circulates; this
    // one reproduces ell on the fixture data).  Empty in the degenerate case
    // b == d+2-g, where the relation determines a instead.
    std::optional<Rational> ell_from_formula;
    bool b_degenerate = false;
    long long gonality_upper = 0;           // ell + g - g'
    Rational md_upper;                      // (2g-2-eta)/ell
    double m1_lower = 0.0;                  // uses nu = (d-1) ell^(1/(d-1)) - d - 1
    std::optional<Rational> m1_lower_exact; // (g-d-1)/(d+1) when a == d+1
    // b values compatible with ell == d (tau in [-1, d-3]) or ell == d+1
    // (tau in [0, d-2]); empty for other ell
    std::vector<std::pair<long long, Rational>> b_candidates;
};

GonalityBounds gonality_bounds(long long g, long long eta, long long mu, long long d,
                               long long ell, long long a, long long b, long long g_prime);

// Twice the genus of a curve of degree d_prime on a surface scroll meeting
// the fibers in ell points, as a polynomial in ell:
//   -(g-2) ell^2 + (2 d_prime + g - 4) ell - 2 (d_prime - 1)
long long surface_scroll_twice_genus(long long g, long long d_prime, long long ell);

// For nearly Gorenstein curves whose fibers cut a complete pencil the fiber
// count is pinned to d <= ell <= d+1.
bool nearly_gorenstein_ell_in_range(long long d, long long ell);

// Scroll swept by a complete pencil of degree `deg` with h0 sections:
// dimension deg - (h0 - 1), and the strict upper bound
// d - 2 h0 + 1 + deg_intersection / 2 for the dimension of its singular locus.
struct PencilScrollStats {
    long long scroll_dim = 0;
    Rational sing_dim_strict_bound;
};
PencilScrollStats pencil_scroll_stats(long long deg, long long h0,
                                      long long deg_intersection, long long d);

// exact binomial coefficient, 0 outside 0 <= k <= n
long long binomial(long long n, long long k);

} // namespace gonscroll
