#include "gonscroll/scrollcalc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gonscroll {

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long out = 1;
    for (long long i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;  // exact: prefix is C(n-k+i, i)
    }
    return out;
}

Scroll Scroll::of(std::vector<long long> type) {
    if (type.empty()) throw std::invalid_argument("scroll needs at least one degree");
    for (long long m : type)
        if (m < 0) throw std::invalid_argument("scroll degrees must be nonnegative");
    std::sort(type.begin(), type.end());
    return Scroll{std::move(type)};
}

long long Scroll::degree() const {
    return std::accumulate(type.begin(), type.end(), 0LL);
}

long long Scroll::ambient_dim() const { return degree() + dim() - 1; }

namespace {

ChowClass multiply(const ChowClass& x, const ChowClass& y) {
    // (h1 H^c1 + f1 H^(c1-1)F)(h2 H^c2 + f2 H^(c2-1)F), F^2 = 0
    ChowClass out;
    out.codim = x.codim + y.codim;
    out.h = x.h * y.h;
    out.hf = x.h * y.hf + x.hf * y.h;
    return out;
}

} // namespace

ChowResult chow_product(const Scroll& s, const std::vector<ChowClass>& classes) {
    ChowClass acc = ChowClass::unit();
    for (const auto& c : classes) {
        if (c.codim == 0 && c.hf != 0)
            throw std::invalid_argument("codimension-0 class cannot carry an F term");
        acc = multiply(acc, c);
    }
    ChowResult out;
    if (acc.codim > s.dim()) {
        out.beyond_top = true;  // zero class past the top degree
        out.cls = ChowClass{acc.codim, 0, 0};
        return out;
    }
    if (acc.codim == s.dim()) {
        out.is_number = true;
        out.number = acc.h * s.degree() + acc.hf;  // H^d = e, H^(d-1)F = 1
        out.cls = acc;
        return out;
    }
    out.cls = acc;
    return out;
}

long long chow_degree(const Scroll& s, const std::vector<ChowClass>& classes) {
    ChowResult r = chow_product(s, classes);
    if (!r.is_number)
        throw std::invalid_argument("product does not land in top codimension");
    return r.number;
}

DivisorClass canonical_class(const Scroll& s) {
    return DivisorClass{-(long long)s.dim(), s.degree() - 2};
}

CompleteIntersection ci_invariants(const Scroll& s, const std::vector<DivisorClass>& classes) {
    const long long d = s.dim();
    if ((long long)classes.size() != d - 1)
        throw std::invalid_argument("complete intersection needs dim-1 divisor classes");
    const long long e = s.degree();

    CompleteIntersection out;
    long long a = 0, b = 0;
    for (const auto& c : classes) {
        out.ell *= c.a;
        a += c.a;
        b += c.b;
    }
    out.degree = out.ell * e;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        long long term = classes[i].b;
        for (std::size_t j = 0; j < classes.size(); ++j)
            if (j != i) term *= classes[j].a;
        out.degree += term;
    }

    const long long twice_closed = out.degree * (a - d) + out.ell * (b + e - 2);

    // independent route: expand the divisors in the Chow ring and dot with
    // the adjoint class (a-d)H + (b+e-2)F
    std::vector<ChowClass> factors;
    for (const auto& c : classes) factors.push_back(ChowClass::divisor(c));
    factors.push_back(ChowClass{1, a - d, b + e - 2});
    const long long twice_koszul = chow_degree(s, factors);

    out.genus_closed = Rational(twice_closed + 2, 2);
    out.genus_koszul = Rational(twice_koszul + 2, 2);

    out.effective = true;
    for (const auto& c : classes)
        if (h0_enum(s, c.a, c.b) == 0) out.effective = false;
    return out;
}

SectionCount h0_closed(const Scroll& s, long long a, long long b) {
    SectionCount out;
    const long long d = s.dim();
    out.closed_form_valid = a >= 0 && b >= -a * s.m1();
    if (out.closed_form_valid)
        out.value = (b + 1) * binomial(a + d - 1, d - 1) + s.degree() * binomial(a + d - 1, d);
    return out;
}

namespace {

// walk over the decompositions of `a` into dim nonnegative parts, handing
// each weighted degree alpha.m to `visit`
template <typename F>
void for_each_weight(const Scroll& s, long long a, F&& visit) {
    const int d = s.dim();
    std::vector<long long> alpha(d, 0);
    auto rec = [&](auto&& self, int pos, long long left, long long acc) -> void {
        if (pos == d - 1) {
            visit(acc + left * s.type[pos]);
            return;
        }
        for (long long v = 0; v <= left; ++v)
            self(self, pos + 1, left - v, acc + v * s.type[pos]);
    };
    rec(rec, 0, a, 0);
}

} // namespace

long long h0_enum(const Scroll& s, long long a, long long b) {
    if (a < 0) return 0;
    long long total = 0;
    for_each_weight(s, a, [&](long long w) { total += std::max<long long>(0, b + w + 1); });
    return total;
}

bool hi_vanishes(const Scroll& s, int i, long long a, long long b) {
    return i >= 1 && a >= 0 && b >= -(a * s.m1() + 1);
}

long long h1_summand_count(const Scroll& s, long long a, long long b) {
    if (a < 0) return 0;
    long long total = 0;
    for_each_weight(s, a, [&](long long w) { total += std::max<long long>(0, -(b + w) - 1); });
    return total;
}

GonalityBounds gonality_bounds(long long g, long long eta, long long mu, long long d,
                               long long ell, long long a, long long b, long long g_prime) {
    if (g < 2) throw std::invalid_argument("bounds need genus >= 2");
    if (d < 2) throw std::invalid_argument("bounds need scroll dimension >= 2");
    if (ell < 1) throw std::invalid_argument("bounds need fiber count >= 1");

    const long long deg = 2 * g - 2 - eta;  // degree of the canonical model
    GonalityBounds out;
    out.ci_residual = (a - d - 1) * deg + eta + 2 * mu - ell * (d + 2 - b - g);
    const long long den = d + 2 - b - g;
    out.b_degenerate = den == 0;
    if (!out.b_degenerate)
        out.ell_from_formula = Rational((a - d - 1) * deg + eta + 2 * mu, den);

    out.gonality_upper = ell + g - g_prime;
    out.md_upper = Rational(deg, ell);

    if (a == d + 1) out.m1_lower_exact = Rational(g - d - 1, d + 1);
    const double nu =
        (double)(d - 1) * std::pow((double)ell, 1.0 / (double)(d - 1)) - (double)d - 1.0;
    out.m1_lower = (double)(g - d - 1) / (double)(ell + d - 2) +
                   (nu * (double)(g - 1) + 3.0 - (double)ell) /
                       ((double)ell * (double)(d + ell - 2));

    const long long shift = -(g - (d + 2));
    if (ell == d) {
        for (long long tau = -1; tau <= d - 3; ++tau)
            out.b_candidates.emplace_back(tau, shift - Rational(eta + 2 * mu + tau * deg, d));
    } else if (ell == d + 1) {
        for (long long tau = 0; tau <= d - 2; ++tau)
            out.b_candidates.emplace_back(tau, shift - Rational(eta + 2 * mu + tau * deg, d + 1));
    }
    return out;
}

long long surface_scroll_twice_genus(long long g, long long d_prime, long long ell) {
    return -(g - 2) * ell * ell + (2 * d_prime + g - 4) * ell - 2 * (d_prime - 1);
}

bool nearly_gorenstein_ell_in_range(long long d, long long ell) {
    return d <= ell && ell <= d + 1;
}

PencilScrollStats pencil_scroll_stats(long long deg, long long h0, long long deg_intersection,
                                      long long d) {
    PencilScrollStats out;
    out.scroll_dim = deg - (h0 - 1);
    out.sing_dim_strict_bound = Rational(2 * (d - 2 * h0 + 1) + deg_intersection, 2);
    return out;
}

} // namespace gonscroll
