#include <doctest.h>

#include <set>
#include <sstream>
#include <stdexcept>

#include "gonscroll/catalog.hpp"
#include "gonscroll/report_io.hpp"
#include "oracles.hpp"

using namespace gonscroll;

TEST_CASE("semigroup enumeration matches the gap-subset oracle") {
    const long long expected[] = {1, 1, 2, 4, 7, 12, 23};
    for (int g = 0; g <= 6; ++g) {
        auto list = enumerate_semigroups(g);
        CHECK((long long)list.size() == expected[g]);
        CHECK((long long)list.size() == testing::count_semigroups_by_gap_subsets(g));
        std::set<std::vector<long long>> gap_sets;
        for (const auto& s : list) {
            CHECK(s.genus() == g);
            gap_sets.insert(s.gaps());
        }
        CHECK(gap_sets.size() == list.size());  // no duplicates
        for (std::size_t i = 1; i < list.size(); ++i)       // lexicographic by gap set
            CHECK(list[i - 1].gaps() < list[i].gaps());
    }
    auto two = enumerate_semigroups(2);
    CHECK(two[0].gaps() == std::vector<long long>{1, 2});
    CHECK(two[1].gaps() == std::vector<long long>{1, 3});
    CHECK_THROWS_AS(enumerate_semigroups(13), std::invalid_argument);
    CHECK(enumerate_semigroups(13, 16).size() == 1001);
}

TEST_CASE("one-point curve representatives") {
    auto s = NumericalSemigroup::from_generators({4, 9, 11});
    CHECK(one_point_curve(s).exponents() == std::vector<long long>{4, 9, 11, 15, 16});

    auto cusp = NumericalSemigroup::from_generators({2, 3});
    CHECK(one_point_curve(cusp).exponents() == std::vector<long long>{2, 3});

    auto trig = one_point_curve(NumericalSemigroup::from_generators({3, 10, 14}));
    CHECK(trig.semigroup_at_origin().minimal_generators() ==
          std::vector<long long>{3, 10, 14});
    CHECK(!trig.singular_at_infinity());
    CHECK(canonical_exponent_set(trig) == std::vector<long long>{0, 3, 4, 6, 7, 9, 10});

    CHECK_THROWS_AS(one_point_curve(NumericalSemigroup::from_generators({1})),
                    std::domain_error);
}

TEST_CASE("builtin fixtures all reproduce") {
    auto verdicts = reproduce_builtin_fixtures();
    CHECK(verdicts.size() == builtin_fixtures().size());
    for (const auto& v : verdicts) {
        CAPTURE(v.fixture.exponents);
        CHECK(v.a_match);
        CHECK(v.fit_match);
        CHECK(v.label_match);
        CHECK(v.ok());
    }
}

TEST_CASE("every catalog report is internally consistent") {
    for (const auto& r : build_catalog(6)) {
        CAPTURE(r.exponents);
        CHECK(r.genus == r.g_prime + r.classification.eta + r.classification.mu);
        CHECK((long long)r.canonical_exponents.size() == r.genus);
        long long min_pencil = r.pencil_degrees.front().second;
        for (const auto& [rr, deg] : r.pencil_degrees) min_pencil = std::min(min_pencil, deg);
        CHECK(r.gonality == min_pencil);
        if (r.genus >= 2) {
            auto c = MonomialCurve::from_exponents(r.exponents);
            auto o = canonical_degree_oracle(c);
            CHECK(o.dim_p + o.dim_q == 2 * r.genus - 2);
        }
        // reported fit partitions the canonical exponents
        long long covered = 0;
        for (const auto& p : r.best_fit.parts) covered += (long long)p.size();
        CHECK(covered == r.genus);
    }
}

TEST_CASE("catalog filters") {
    CatalogFilter tetragonal;
    tetragonal.gonality = 4;
    auto rows = build_catalog(8, tetragonal);
    CHECK(rows.size() == 69);
    for (const auto& r : rows) CHECK(r.gonality == 4);

    CatalogFilter ng;
    ng.nearly_gorenstein = true;
    for (const auto& r : build_catalog(7, ng)) CHECK(r.classification.mu == 1);

    CatalogFilter ranged;
    ranged.genus_range = {{3, 4}};
    for (const auto& r : build_catalog(6, ranged)) {
        CHECK(r.genus >= 3);
        CHECK(r.genus <= 4);
    }

    CatalogFilter kunz_only;
    kunz_only.kunz = true;
    for (const auto& r : build_catalog(7, kunz_only)) {
        CHECK(!r.classification.gorenstein);
        CHECK(r.classification.kunz);
    }
}

TEST_CASE("no nearly-Gorenstein tetragonal curve fits a smooth 3-fold scroll at ell 1 or 2") {
    CHECK(ng_small_ell_offenders(8).empty());
}

TEST_CASE("thread count does not change the catalog") {
    auto sequential = build_catalog(6, {}, 1);
    auto parallel = build_catalog(6, {}, 4);
    REQUIRE(sequential.size() == parallel.size());
    for (std::size_t i = 0; i < sequential.size(); ++i)
        CHECK(to_json(sequential[i]).dump() == to_json(parallel[i]).dump());
}

TEST_CASE("json round-trips byte-identically and keeps integer fields") {
    for (const auto& r : catalog_for_genus(5)) {
        const std::string once = to_json(r).dump();
        const std::string twice = nlohmann::ordered_json::parse(once).dump();
        CHECK(once == twice);
    }
    auto j = to_json(catalog_for_genus(3).front());
    CHECK(j["genus"].is_number_integer());
    CHECK(j["canonical_exponents"].is_array());
    CHECK(j["classification"]["g_prime"].is_number_integer());
}

TEST_CASE("csv export") {
    std::istringstream header(csv_header());
    std::string field;
    int columns = 0;
    while (std::getline(header, field, ',')) ++columns;

    for (const auto& r : catalog_for_genus(4)) {
        std::istringstream row(to_csv_row(r));
        int cells = 0;
        while (std::getline(row, field, ',')) ++cells;
        CHECK(cells == columns);
    }
    CHECK(csv_header().rfind("exponents,genus,", 0) == 0);
}
