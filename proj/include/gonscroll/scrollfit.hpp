#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gonscroll {

// Partition of an exponent set into arithmetic chains with one common
// difference r.  A chain of m+1 elements spans a degree-m rational normal
// curve, so the multiset of (length - 1) values is the type of a scroll the
// monomial curve lies on; m = 0 chains are cone points (singular scroll).
struct APFit {
    long long r = 1;
    std::vector<std::vector<long long>> parts;  // maximal chains, by least element
    std::vector<long long> scroll_type;         // sorted m_i = chain length - 1
    bool smooth = false;                        // all m_i >= 1
    int part_count() const { return (int)parts.size(); }
};

// Maximal-chain partition for a fixed difference.  No search is needed for
// minimality: any difference-r arithmetic part lies inside a single maximal
// chain, each maximal chain needs at least one part, and taking the maximal
// chains themselves attains that count.  The number of parts therefore equals
// the number of chain heads #{x in A : x - r not in A}.
APFit fit_with_difference(const std::vector<long long>& a, long long r);

struct BestFit {
    APFit fit;                            // fit at the smallest minimizing r
    std::vector<long long> minimizing_r;  // every r attaining the minimum
};

// Scan r in [1, max(A)]; beyond max(A) every fit is all singletons, so the
// range is complete.  A singleton input degenerates to one part at r = 1.
BestFit best_fit(const std::vector<long long>& a);

// (minimum part count) + 1
long long gonality(const std::vector<long long>& a);

// Two-row determinantal layout: each chain {x, x+r, .., x+kr} contributes the
// k column pairs (x+ir, x+(i+1)r), grouped into one block per chain.  The
// 2x2 minors of the rendered matrix cut out the fitted scroll.
struct ScrollMatrix {
    long long r = 1;
    std::vector<std::vector<std::pair<long long, long long>>> blocks;
    long long column_count() const;
    std::string render() const;
};

ScrollMatrix scroll_matrix(const std::vector<long long>& a, long long r);

} // namespace gonscroll
