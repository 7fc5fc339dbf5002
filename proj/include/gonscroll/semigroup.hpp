#pragma once

#include <vector>

#include "gonscroll/intset.hpp"

namespace gonscroll {

// Numerical semigroup: the additive closure of a set of positive integers
// with gcd 1.  Keeps the standard invariants around: multiplicity (least
// nonzero element), Frobenius number (largest gap), conductor (Frobenius + 1),
// the gap set and its cardinality (the genus / singularity degree delta).
//
// The degenerate semigroup containing 1 is allowed and models a regular
// point: conductor 0, Frobenius -1, no gaps.
class NumericalSemigroup {
public:
    static NumericalSemigroup from_generators(const std::vector<long long>& gens);

    const std::vector<long long>& generators() const { return generators_; }
    const std::vector<long long>& minimal_generators() const { return minimal_generators_; }
    const std::vector<long long>& elements_below_conductor() const { return elements_; }
    const std::vector<long long>& gaps() const { return gaps_; }

    long long conductor() const { return conductor_; }
    long long frobenius() const { return conductor_ - 1; }
    long long multiplicity() const { return multiplicity_; }
    long long genus() const { return (long long)gaps_.size(); }

    bool contains(long long n) const;

    // a in gaps <=> frobenius - a a member; equivalently conductor == 2 * genus
    bool symmetric() const { return conductor_ == 2 * genus(); }

    IntSet as_set() const { return IntSet(elements_, conductor_); }

    bool operator==(const NumericalSemigroup&) const = default;

private:
    NumericalSemigroup() = default;

    std::vector<long long> generators_;         // input, sorted and deduplicated
    std::vector<long long> minimal_generators_;
    std::vector<long long> elements_;           // members in [0, conductor)
    std::vector<long long> gaps_;
    std::vector<char> member_below_conductor_;  // O(1) membership below conductor
    long long conductor_ = 0;
    long long multiplicity_ = 1;
};

// Canonical ideal K = {a : frobenius - a is not a member}.  Always contains
// the semigroup, always contained in the nonnegative integers.
IntSet canonical_ideal(const NumericalSemigroup& s);

// #(K \ S); zero exactly for symmetric semigroups.
long long eta(const NumericalSemigroup& s);

// Value set of the blowup along the canonical ideal: the stabilized union of
// the n-fold sumsets K, K+K, ...  (K contains 0, so the chain is increasing
// and stabilizes after at most `conductor` rounds.)
IntSet blowup_values(const NumericalSemigroup& s);

// #(blowup_values \ K)
long long mu(const NumericalSemigroup& s);

enum class ShiftDirection { up, down };

// up:   #((S + r) \ S)
// down: #((S - r) \ S), negative members of S - r included
long long shift_degree(const NumericalSemigroup& s, long long r, ShiftDirection dir);

} // namespace gonscroll
