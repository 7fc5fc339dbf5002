#pragma once

#include <vector>

#include "gonscroll/semigroup.hpp"

namespace gonscroll {

// Rational monomial curve (1 : t^a1 : ... : t^an) with a1 < ... < an and
// gcd 1; the coordinate 1 (exponent 0) is always implicit.  The only points
// that can be singular are the origin P and the point at infinity Q; their
// value semigroups are S_P = <a1,...,an> and S_Q = <an, an - a1, ..., an - a(n-1)>.
// The arithmetic genus is delta(S_P) + delta(S_Q).
class MonomialCurve {
public:
    static MonomialCurve from_exponents(const std::vector<long long>& exps);

    const std::vector<long long>& exponents() const { return exponents_; }
    const NumericalSemigroup& semigroup_at_origin() const { return sp_; }
    const NumericalSemigroup& semigroup_at_infinity() const { return sq_; }
    long long genus() const { return sp_.genus() + sq_.genus(); }
    bool singular_at_origin() const { return sp_.genus() > 0; }
    bool singular_at_infinity() const { return sq_.genus() > 0; }

private:
    MonomialCurve(std::vector<long long> exps, NumericalSemigroup sp, NumericalSemigroup sq);

    std::vector<long long> exponents_;
    NumericalSemigroup sp_;
    NumericalSemigroup sq_;
};

// Exponent set A of the canonical model: (frobenius_P - gaps_P) together with
// (frobenius_P + gaps_Q), a disjoint union of size genus with 0 in A whenever
// the genus is positive.  Defined combinatorially at every genus.
std::vector<long long> canonical_exponent_set(const MonomialCurve& c);

// Exponents of the canonical model C' = (t^a)_{a in A} in P^{genus-1}.
// Requires genus >= 2 (below that the image degenerates to a point).
struct CanonicalExponents {
    std::vector<long long> values;
};
CanonicalExponents canonical_model(const MonomialCurve& c);

// Degrees of the canonical model computed directly from value sets: the local
// value set at P is the union of a + S_P over a in A, at Q the union of
// -a + S_Q; dim_p / dim_q count the classes missing from S_P / S_Q.  They
// satisfy dim_p = 2 delta_P - conductor_P, dim_q = 2 delta_Q + conductor_P - 2
// and sum to 2g - 2; the P-side value set is exactly the canonical ideal.
struct CanonicalDegreeOracle {
    long long dim_p = 0;
    long long dim_q = 0;
    long long h0 = 0;       // #A
    IntSet value_set_p;
    IntSet value_set_q;
};
CanonicalDegreeOracle canonical_degree_oracle(const MonomialCurve& c);

struct Classification {
    bool gorenstein_p = true;   // S_P symmetric
    bool gorenstein_q = true;
    bool gorenstein = true;
    long long eta = 0;          // eta_P + eta_Q
    long long mu = 0;           // mu_P + mu_Q
    bool kunz = true;           // every non-Gorenstein point has eta = 1
    bool almost_gorenstein = true;   // mu <= 1 at each point
    bool nearly_gorenstein = false;  // mu == 1
    bool nearly_normal = false;      // sum of (conductor - delta) over points == 1
    long long g_prime = 0;      // genus of the (reparametrized) canonical model
};

// g_prime: for gcd(A \ {0}) = 1 this is the genus of the monomial curve with
// exponent set A.  When the gcd exceeds 1, A is an arithmetic progression,
// both points are Gorenstein and the canonical image collapses to a rational
// normal curve while the curve itself is untouched by the blowup; g_prime is
// then the genus itself so that genus == g_prime + eta + mu holds throughout.
Classification classify(const MonomialCurve& c);

// Degree of the pencil spanned by 1 and t^r:
// shift_degree(S_P, r, up) + shift_degree(S_Q, r, down).
long long pencil_degree(const MonomialCurve& c, long long r);

// Upper end of the r-range that is guaranteed to contain a gonality pencil:
// the witness difference is a difference of two canonical exponents, all of
// which lie in [0, frobenius_P + frobenius_Q].
long long pencil_search_limit(const MonomialCurve& c);
long long min_pencil_degree(const MonomialCurve& c);

// H^0 of the divisor m.Q for a curve smooth at infinity: the members of S_P
// up to m.  Rejected when Q is singular.
std::vector<long long> sections_with_pole_at_infinity(const MonomialCurve& c, long long m);

// h0(an.Q) - h0((an - r).Q): the dimension of the scroll swept out by the
// degree-r pencil on the embedded curve.
long long scroll_dim_via_pencil(const MonomialCurve& c, long long r);

// Genus 0 -> 1 and genus 1 -> 2 by convention (single canonical exponent);
// otherwise the minimal chain-partition count of A plus one.
long long gonality(const MonomialCurve& c);

} // namespace gonscroll
