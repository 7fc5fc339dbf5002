#pragma once

#include <string>

#include <json.hpp>

#include "gonscroll/catalog.hpp"

namespace gonscroll {

// Field order is fixed (insertion order of ordered_json), arrays are sorted,
// every number is an integer; parsing and re-dumping a report is
// byte-identical.
nlohmann::ordered_json to_json(const CurveReport& r);
nlohmann::ordered_json to_json(const SemigroupSummary& s);
nlohmann::ordered_json to_json(const Classification& c);
nlohmann::ordered_json to_json(const APFit& f);
nlohmann::ordered_json to_json(const FixtureVerdict& v);

// CSV schema: header row then one row per report, in the column order given
// by csv_header(); list-valued cells are space-joined, booleans are 0/1.
std::string csv_header();
std::string to_csv_row(const CurveReport& r);

std::string scroll_type_name(const std::vector<long long>& type);  // S_{1,1,3}

} // namespace gonscroll
