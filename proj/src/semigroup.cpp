#include "gonscroll/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gonscroll {

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<long long>& gens) {
    if (gens.empty())
        throw std::invalid_argument("semigroup needs at least one generator");
    for (long long g : gens)
        if (g <= 0)
            throw std::invalid_argument("generators must be positive, got " + std::to_string(g));

    NumericalSemigroup s;
    s.generators_ = gens;
    std::sort(s.generators_.begin(), s.generators_.end());
    s.generators_.erase(std::unique(s.generators_.begin(), s.generators_.end()),
                        s.generators_.end());

    long long g = 0;
    for (long long v : s.generators_) g = std::gcd(g, v);
    if (g != 1)
        throw std::invalid_argument("not a numerical semigroup: gcd of generators is " +
                                    std::to_string(g));

    s.multiplicity_ = s.generators_.front();

    // Sieve members upward until a full run of `multiplicity` consecutive
    // members appears; from its start everything is a member.
    std::vector<char> member{1};
    long long run = 0;
    while (run < s.multiplicity_) {
        long long n = (long long)member.size();
        bool is = false;
        for (long long gen : s.generators_) {
            if (gen > n) break;
            if (gen == n || member[n - gen]) { is = true; break; }
        }
        member.push_back(is ? 1 : 0);
        run = is ? run + 1 : 0;
    }

    long long frob = -1;
    for (long long n = 0; n < (long long)member.size(); ++n)
        if (!member[n]) frob = n;
    s.conductor_ = frob + 1;

    s.member_below_conductor_.assign(member.begin(), member.begin() + s.conductor_);
    for (long long n = 0; n < s.conductor_; ++n)
        (member[n] ? s.elements_ : s.gaps_).push_back(n);

    // x is a minimal generator when it is not a sum of two positive members;
    // everything >= conductor + multiplicity splits off the multiplicity.
    for (long long x = 1; x <= s.conductor_ + s.multiplicity_; ++x) {
        if (!s.contains(x)) continue;
        bool decomposable = false;
        for (long long y = s.multiplicity_; y <= x - s.multiplicity_; ++y)
            if (s.contains(y) && s.contains(x - y)) { decomposable = true; break; }
        if (!decomposable) s.minimal_generators_.push_back(x);
    }
    return s;
}

bool NumericalSemigroup::contains(long long n) const {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return member_below_conductor_[n] != 0;
}

IntSet canonical_ideal(const NumericalSemigroup& s) {
    const long long frob = s.frobenius();
    std::vector<long long> fin;
    for (long long a = 0; a < s.conductor(); ++a)
        if (!s.contains(frob - a)) fin.push_back(a);
    return IntSet(std::move(fin), s.conductor());
}

long long eta(const NumericalSemigroup& s) {
    return canonical_ideal(s).count_difference(s.as_set());
}

IntSet blowup_values(const NumericalSemigroup& s) {
    const IntSet k = canonical_ideal(s);
    IntSet cur = k;
    for (long long round = 0; round <= s.conductor() + 1; ++round) {
        IntSet next = sumset(cur, k);
        if (next == cur) return cur;
        cur = next;
    }
    throw std::logic_error("blowup value set did not stabilize");
}

long long mu(const NumericalSemigroup& s) {
    return blowup_values(s).count_difference(canonical_ideal(s));
}

long long shift_degree(const NumericalSemigroup& s, long long r, ShiftDirection dir) {
    if (r <= 0) throw std::invalid_argument("shift distance must be positive");
    long long count = 0;
    if (dir == ShiftDirection::up) {
        // s + r escapes S only below the conductor
        for (long long x : s.as_set().members_below(std::max<long long>(0, s.conductor() - r)))
            if (!s.contains(x + r)) ++count;
    } else {
        for (long long x : s.as_set().members_below(s.conductor() + r))
            if (!s.contains(x - r)) ++count;
    }
    return count;
}

} // namespace gonscroll
