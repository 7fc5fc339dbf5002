#pragma once

#include <vector>

namespace gonscroll {

// Cofinite-above integer set: a sorted finite part together with a tail
// [tail_start, oo) of which every integer is a member.  This is exactly the
// shape of value sets of fractional ideals of a monomial local ring (the
// semigroup itself, its canonical ideal, blowup value sets, shifted unions),
// so every set operation here is exact.
//
// Canonical form invariants, enforced on construction:
//   * finite part is strictly increasing and strictly below tail_start,
//   * tail_start is minimal (tail_start - 1 is not a member).
class IntSet {
public:
    // everything >= 0, i.e. the value set of a regular point
    IntSet() : tail_start_(0) {}

    IntSet(std::vector<long long> finite, long long tail_start);

    bool contains(long long x) const;
    long long tail_start() const { return tail_start_; }
    const std::vector<long long>& finite_part() const { return finite_; }

    // least member (== tail_start when the finite part is empty)
    long long min() const;

    // all members strictly below `bound`, ascending
    std::vector<long long> members_below(long long bound) const;

    // #(this \ other); finite because both sets share a cofinite tail
    long long count_difference(const IntSet& other) const;

    // {x + k : x in this}
    IntSet shifted(long long k) const;

    friend IntSet set_union(const IntSet& a, const IntSet& b);

    // {x + y : x in a, y in b}
    friend IntSet sumset(const IntSet& a, const IntSet& b);

    bool operator==(const IntSet&) const = default;

private:
    std::vector<long long> finite_;
    long long tail_start_;

    void canonicalize();
};

} // namespace gonscroll
