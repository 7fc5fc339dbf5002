#include "gonscroll/intset.hpp"

#include <algorithm>
#include <stdexcept>

namespace gonscroll {

IntSet::IntSet(std::vector<long long> finite, long long tail_start)
    : finite_(std::move(finite)), tail_start_(tail_start) {
    canonicalize();
}

void IntSet::canonicalize() {
    std::sort(finite_.begin(), finite_.end());
    finite_.erase(std::unique(finite_.begin(), finite_.end()), finite_.end());
    while (!finite_.empty() && finite_.back() >= tail_start_)
        finite_.pop_back();
    while (!finite_.empty() && finite_.back() == tail_start_ - 1) {
        finite_.pop_back();
        --tail_start_;
    }
}

bool IntSet::contains(long long x) const {
    if (x >= tail_start_) return true;
    return std::binary_search(finite_.begin(), finite_.end(), x);
}

long long IntSet::min() const {
    return finite_.empty() ? tail_start_ : finite_.front();
}

std::vector<long long> IntSet::members_below(long long bound) const {
    std::vector<long long> out;
    for (long long v : finite_) {
        if (v >= bound) break;
        out.push_back(v);
    }
    for (long long v = tail_start_; v < bound; ++v)
        out.push_back(v);
    return out;
}

long long IntSet::count_difference(const IntSet& other) const {
    long long n = 0;
    for (long long v : members_below(other.tail_start_))
        if (!other.contains(v)) ++n;
    return n;
}

IntSet IntSet::shifted(long long k) const {
    IntSet out = *this;
    for (long long& v : out.finite_) v += k;
    out.tail_start_ += k;
    return out;
}

IntSet set_union(const IntSet& a, const IntSet& b) {
    long long tail = std::min(a.tail_start_, b.tail_start_);
    std::vector<long long> fin = a.members_below(tail);
    for (long long v : b.members_below(tail)) fin.push_back(v);
    return IntSet(std::move(fin), tail);
}

IntSet sumset(const IntSet& a, const IntSet& b) {
    // every n >= min(a.tail + min(b), b.tail + min(a)) is a sum
    const long long tail = std::min(a.tail_start_ + b.min(), b.tail_start_ + a.min());
    std::vector<long long> sums;
    for (long long x : a.members_below(tail - b.min()))
        for (long long y : b.members_below(tail - x))
            sums.push_back(x + y);
    return IntSet(std::move(sums), tail);
}

} // namespace gonscroll
