#include "gonscroll/report_io.hpp"

#include <sstream>

namespace gonscroll {

using json = nlohmann::ordered_json;

json to_json(const SemigroupSummary& s) {
    json j;
    j["generators"] = s.generators;
    j["gaps"] = s.gaps;
    j["frobenius"] = s.frobenius;
    j["conductor"] = s.conductor;
    j["multiplicity"] = s.multiplicity;
    j["delta"] = s.delta;
    return j;
}

json to_json(const Classification& c) {
    json j;
    j["gorenstein_p"] = c.gorenstein_p;
    j["gorenstein_q"] = c.gorenstein_q;
    j["gorenstein"] = c.gorenstein;
    j["eta"] = c.eta;
    j["mu"] = c.mu;
    j["kunz"] = c.kunz;
    j["almost_gorenstein"] = c.almost_gorenstein;
    j["nearly_gorenstein"] = c.nearly_gorenstein;
    j["nearly_normal"] = c.nearly_normal;
    j["g_prime"] = c.g_prime;
    return j;
}

json to_json(const APFit& f) {
    json j;
    j["r"] = f.r;
    j["parts"] = f.parts;
    j["scroll_type"] = f.scroll_type;
    j["smooth"] = f.smooth;
    return j;
}

json to_json(const CurveReport& r) {
    json j;
    j["exponents"] = r.exponents;
    j["genus"] = r.genus;
    j["sp"] = to_json(r.sp);
    j["sq"] = to_json(r.sq);
    j["classification"] = to_json(r.classification);
    j["canonical_exponents"] = r.canonical_exponents;
    j["g_prime"] = r.g_prime;
    j["gonality"] = r.gonality;
    j["minimizing_r"] = r.minimizing_r;
    j["best_fit"] = to_json(r.best_fit);
    j["ell"] = r.ell;
    j["pencil_degrees"] = r.pencil_degrees;
    j["label"] = to_string(r.label);
    return j;
}

json to_json(const FixtureVerdict& v) {
    json j;
    j["exponents"] = v.fixture.exponents;
    j["expected_a"] = v.fixture.expected_a;
    j["expected_ell"] = v.fixture.expected_ell;
    j["expected_scroll"] = v.fixture.expected_scroll;
    j["expected_label"] = to_string(v.fixture.expected_label);
    j["computed_a"] = v.computed_a;
    j["computed_scroll"] = v.computed_scroll;
    j["computed_parts"] = v.computed_parts;
    j["computed_label"] = to_string(v.computed_label);
    j["a_match"] = v.a_match;
    j["fit_match"] = v.fit_match;
    j["label_match"] = v.label_match;
    j["ok"] = v.ok();
    return j;
}

namespace {

std::string join(const std::vector<long long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os.str();
}

} // namespace

std::string csv_header() {
    return "exponents,genus,delta_p,delta_q,sp_generators,sq_generators,"
           "frobenius_p,conductor_p,frobenius_q,conductor_q,eta,mu,g_prime,"
           "gorenstein,kunz,almost_gorenstein,nearly_gorenstein,nearly_normal,"
           "label,canonical_exponents,gonality,ell,scroll_type,smooth,minimizing_r";
}

std::string to_csv_row(const CurveReport& r) {
    const auto& c = r.classification;
    std::ostringstream os;
    os << join(r.exponents) << ',' << r.genus << ',' << r.sp.delta << ',' << r.sq.delta << ','
       << join(r.sp.generators) << ',' << join(r.sq.generators) << ',' << r.sp.frobenius << ','
       << r.sp.conductor << ',' << r.sq.frobenius << ',' << r.sq.conductor << ',' << c.eta << ','
       << c.mu << ',' << c.g_prime << ',' << (int)c.gorenstein << ',' << (int)c.kunz << ','
       << (int)c.almost_gorenstein << ',' << (int)c.nearly_gorenstein << ','
       << (int)c.nearly_normal << ',' << to_string(r.label) << ','
       << join(r.canonical_exponents) << ',' << r.gonality << ',' << r.ell << ','
       << join(r.best_fit.scroll_type) << ',' << (int)r.best_fit.smooth << ','
       << join(r.minimizing_r);
    return os.str();
}

std::string scroll_type_name(const std::vector<long long>& type) {
    std::ostringstream os;
    os << "S_{";
    for (std::size_t i = 0; i < type.size(); ++i) {
        if (i) os << ',';
        os << type[i];
    }
    os << '}';
    return os.str();
}

} // namespace gonscroll
