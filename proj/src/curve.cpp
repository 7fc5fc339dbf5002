#include "gonscroll/curve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gonscroll/scrollfit.hpp"

namespace gonscroll {

MonomialCurve::MonomialCurve(std::vector<long long> exps, NumericalSemigroup sp,
                             NumericalSemigroup sq)
    : exponents_(std::move(exps)), sp_(std::move(sp)), sq_(std::move(sq)) {}

MonomialCurve MonomialCurve::from_exponents(const std::vector<long long>& exps) {
    if (exps.empty())
        throw std::invalid_argument("curve needs at least one exponent");
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] <= 0)
            throw std::invalid_argument("exponents must be positive");
        if (i > 0 && exps[i] <= exps[i - 1])
            throw std::invalid_argument("exponents must be strictly increasing");
    }
    long long g = 0;
    for (long long e : exps) g = std::gcd(g, e);
    if (g != 1)
        throw std::invalid_argument("not a monomial curve: gcd of exponents is " +
                                    std::to_string(g));

    NumericalSemigroup sp = NumericalSemigroup::from_generators(exps);
    const long long top = exps.back();
    std::vector<long long> qgens{top};
    for (std::size_t i = 0; i + 1 < exps.size(); ++i)
        qgens.push_back(top - exps[i]);
    NumericalSemigroup sq = NumericalSemigroup::from_generators(qgens);
    return MonomialCurve(exps, std::move(sp), std::move(sq));
}

std::vector<long long> canonical_exponent_set(const MonomialCurve& c) {
    const long long frob_p = c.semigroup_at_origin().frobenius();
    std::vector<long long> a;
    for (long long g : c.semigroup_at_origin().gaps()) a.push_back(frob_p - g);
    for (long long g : c.semigroup_at_infinity().gaps()) a.push_back(frob_p + g);
    std::sort(a.begin(), a.end());
    return a;
}

CanonicalExponents canonical_model(const MonomialCurve& c) {
    if (c.genus() < 2)
        throw std::domain_error("canonical model undefined at this genus");
    return CanonicalExponents{canonical_exponent_set(c)};
}

CanonicalDegreeOracle canonical_degree_oracle(const MonomialCurve& c) {
    const auto a = canonical_model(c).values;
    const IntSet sp = c.semigroup_at_origin().as_set();
    const IntSet sq = c.semigroup_at_infinity().as_set();

    IntSet vp = sp.shifted(a.front());
    IntSet vq = sq.shifted(-a.front());
    for (std::size_t i = 1; i < a.size(); ++i) {
        vp = set_union(vp, sp.shifted(a[i]));
        vq = set_union(vq, sq.shifted(-a[i]));
    }

    CanonicalDegreeOracle out;
    out.dim_p = vp.count_difference(sp);
    out.dim_q = vq.count_difference(sq);
    out.h0 = (long long)a.size();
    out.value_set_p = std::move(vp);
    out.value_set_q = std::move(vq);
    return out;
}

Classification classify(const MonomialCurve& c) {
    const auto& sp = c.semigroup_at_origin();
    const auto& sq = c.semigroup_at_infinity();
    const long long eta_p = eta(sp), eta_q = eta(sq);
    const long long mu_p = mu(sp), mu_q = mu(sq);

    Classification r;
    r.gorenstein_p = sp.symmetric();
    r.gorenstein_q = sq.symmetric();
    r.gorenstein = r.gorenstein_p && r.gorenstein_q;
    r.eta = eta_p + eta_q;
    r.mu = mu_p + mu_q;
    r.kunz = (r.gorenstein_p || eta_p == 1) && (r.gorenstein_q || eta_q == 1);
    r.almost_gorenstein = mu_p <= 1 && mu_q <= 1;
    r.nearly_gorenstein = r.mu == 1;
    r.nearly_normal =
        (sp.conductor() - sp.genus()) + (sq.conductor() - sq.genus()) == 1;

    const long long g = c.genus();
    if (g <= 1) {
        r.g_prime = g;
        return r;
    }
    auto a = canonical_exponent_set(c);
    long long h = 0;
    for (long long v : a) h = std::gcd(h, v);
    if (h == 1) {
        std::vector<long long> exps(a.begin() + 1, a.end());  // drop the 0
        r.g_prime = MonomialCurve::from_exponents(exps).genus();
    } else {
        // gcd > 1 forces A to be an arithmetic progression with both points
        // Gorenstein: the canonical image is a rational normal curve, but the
        // dualizing sheaf is already invertible and the blowup leaves the
        // curve unchanged.
        r.g_prime = g;
    }
    return r;
}

long long pencil_degree(const MonomialCurve& c, long long r) {
    if (r < 1) throw std::invalid_argument("pencil exponent must be >= 1");
    return shift_degree(c.semigroup_at_origin(), r, ShiftDirection::up) +
           shift_degree(c.semigroup_at_infinity(), r, ShiftDirection::down);
}

long long pencil_search_limit(const MonomialCurve& c) {
    return std::max<long long>(
        1, c.semigroup_at_origin().frobenius() + c.semigroup_at_infinity().frobenius() + 2);
}

long long min_pencil_degree(const MonomialCurve& c) {
    const long long lim = pencil_search_limit(c);
    long long best = pencil_degree(c, 1);
    for (long long r = 2; r <= lim; ++r)
        best = std::min(best, pencil_degree(c, r));
    return best;
}

std::vector<long long> sections_with_pole_at_infinity(const MonomialCurve& c, long long m) {
    if (c.singular_at_infinity())
        throw std::domain_error("section count needs a curve smooth at infinity");
    if (m < 0) throw std::invalid_argument("pole order must be nonnegative");
    return c.semigroup_at_origin().as_set().members_below(m + 1);
}

long long scroll_dim_via_pencil(const MonomialCurve& c, long long r) {
    if (r < 1) throw std::invalid_argument("pencil exponent must be >= 1");
    const long long top = c.exponents().back();
    const long long h0_h = (long long)sections_with_pole_at_infinity(c, top).size();
    const long long h0_sub =
        top - r >= 0 ? (long long)sections_with_pole_at_infinity(c, top - r).size() : 0;
    return h0_h - h0_sub;
}

long long gonality(const MonomialCurve& c) {
    if (c.genus() == 0) return 1;
    return gonality(canonical_exponent_set(c));
}

} // namespace gonscroll
