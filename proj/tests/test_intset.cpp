#include <doctest.h>

#include <random>

#include "gonscroll/intset.hpp"

using namespace gonscroll;

TEST_CASE("canonical form merges the finite part into the tail") {
    IntSet s({0, 2, 3, 4}, 5);
    CHECK(s.tail_start() == 2);
    CHECK(s.finite_part() == std::vector<long long>{0});
    CHECK(s == IntSet({0}, 2));
    CHECK(IntSet({}, 0) == IntSet());
}

TEST_CASE("membership and members_below") {
    IntSet s({-3, 0, 4}, 7);
    CHECK(s.contains(-3));
    CHECK(!s.contains(-2));
    CHECK(s.contains(4));
    CHECK(!s.contains(5));
    CHECK(s.contains(100));
    CHECK(s.min() == -3);
    CHECK(s.members_below(9) == std::vector<long long>{-3, 0, 4, 7, 8});
}

TEST_CASE("difference counting sees tail members of the left set") {
    IntSet a({0}, 3);  // {0} u [3,oo)
    IntSet b({0}, 6);  // {0} u [6,oo)
    CHECK(a.count_difference(b) == 3);  // 3, 4, 5
    CHECK(b.count_difference(a) == 0);
}

TEST_CASE("shift and union") {
    IntSet s({0, 2}, 4);
    CHECK(s.shifted(3) == IntSet({3, 5}, 7));
    CHECK(set_union(IntSet({0}, 5), IntSet({2}, 3)) == IntSet({0, 2}, 3));
}

TEST_CASE("sumset against direct enumeration") {
    std::mt19937 rng(1234);
    for (int iter = 0; iter < 200; ++iter) {
        auto rand_set = [&] {
            std::vector<long long> fin;
            const int k = (int)(rng() % 5);
            for (int i = 0; i < k; ++i) fin.push_back((long long)(rng() % 12) - 3);
            return IntSet(fin, (long long)(rng() % 10));
        };
        IntSet a = rand_set(), b = rand_set();
        IntSet c = sumset(a, b);
        const long long probe_hi = c.tail_start() + 5;
        for (long long v = a.min() + b.min() - 2; v < probe_hi; ++v) {
            bool direct = false;
            for (long long x : a.members_below(v - b.min() + 1))
                if (b.contains(v - x)) { direct = true; break; }
            CAPTURE(v);
            CHECK(c.contains(v) == direct);
        }
    }
}
