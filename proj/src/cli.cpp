#include "gonscroll/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gonscroll/catalog.hpp"
#include "gonscroll/report_io.hpp"
#include "gonscroll/scrollcalc.hpp"

namespace gonscroll {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<long long> parse_int_list(const std::string& text, const char* what) {
    std::vector<long long> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw UsageError(std::string("malformed ") + what + " near '" + token + "'");
        }
    }
    if (out.empty()) throw UsageError(std::string("empty ") + what);
    return out;
}

std::vector<DivisorClass> parse_classes(const std::string& text) {
    std::vector<DivisorClass> out;
    std::string chunk;
    std::istringstream is(text);
    while (std::getline(is, chunk, ';')) {
        auto pair = parse_int_list(chunk, "divisor class");
        if (pair.size() != 2) throw UsageError("divisor class needs exactly a,b: '" + chunk + "'");
        out.push_back(DivisorClass{pair[0], pair[1]});
    }
    if (out.empty()) throw UsageError("empty class list");
    return out;
}

std::string join(const std::vector<long long>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

json rational_json(const Rational& r) {
    if (r.denominator() == 1) return json(r.numerator());
    return json(std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()));
}

std::string rational_text(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void print_report_text(const CurveReport& r, std::ostream& out) {
    out << "curve: (1";
    for (long long e : r.exponents) out << " : t^" << e;
    out << ")\n";
    out << "genus: " << r.genus << "  (delta_P = " << r.sp.delta << ", delta_Q = " << r.sq.delta
        << ")\n";
    out << "S_P: <" << join(r.sp.generators) << ">  gaps {" << join(r.sp.gaps) << "}  frobenius "
        << r.sp.frobenius << "  conductor " << r.sp.conductor << "\n";
    out << "S_Q: <" << join(r.sq.generators) << ">  gaps {" << join(r.sq.gaps) << "}  frobenius "
        << r.sq.frobenius << "  conductor " << r.sq.conductor << "\n";
    const auto& c = r.classification;
    out << "classification: " << (c.gorenstein ? "Gorenstein" : "non-Gorenstein") << "  eta "
        << c.eta << "  mu " << c.mu << "  g' " << c.g_prime;
    if (!c.gorenstein && c.kunz) out << "  Kunz";
    if (c.almost_gorenstein) out << "  almost-Gorenstein";
    if (c.nearly_gorenstein) out << "  nearly-Gorenstein";
    if (c.nearly_normal) out << "  nearly-normal";
    out << "  label " << to_string(r.label) << "\n";
    out << "canonical exponents: {" << join(r.canonical_exponents) << "}\n";
    out << "gonality: " << r.gonality;
    if (!r.minimizing_r.empty()) out << "  (minimizing r: " << join(r.minimizing_r, " ") << ")";
    out << "\n";
    if (!r.best_fit.parts.empty()) {
        out << "scroll fit: r " << r.ell << "  " << scroll_type_name(r.best_fit.scroll_type)
            << (r.best_fit.smooth ? "  smooth" : "  singular") << "  parts";
        for (const auto& p : r.best_fit.parts) out << " {" << join(p) << "}";
        out << "\n";
    }
    out << "pencil degrees:";
    for (const auto& [rr, deg] : r.pencil_degrees) out << " r=" << rr << ":" << deg;
    out << "\n";
}

int cmd_tables(const std::string& format, std::ostream& out) {
    auto verdicts = reproduce_builtin_fixtures();
    bool all_ok = true;
    for (const auto& v : verdicts) {
        all_ok = all_ok && v.ok();
        if (format == "json") {
            out << to_json(v).dump() << "\n";
        } else {
            out << (v.ok() ? "match   " : "MISMATCH") << "  {" << join(v.fixture.exponents)
                << "}  A {" << join(v.computed_a) << "}  ell " << v.fixture.expected_ell << "  "
                << scroll_type_name(v.computed_scroll) << "  label "
                << to_string(v.computed_label) << "\n";
        }
    }
    if (format != "json")
        out << (all_ok ? "all fixtures match" : "fixture mismatches present") << "\n";
    return all_ok ? 0 : 3;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"exact invariants of rational monomial curves and the scrolls "
                 "their canonical models live on"};
    app.require_subcommand(1);

    std::string exponents_arg, set_arg, type_arg, classes_arg;
    std::string format = "text";
    long long fit_r = 0, opt_a = 0, opt_b = 0;
    long long pole_order = -1;
    int genus = -1, max_genus = -1, genus_cap = 12, threads = 1;
    std::vector<std::string> filters;
    if (const char* env = std::getenv("GONSCROLL_THREADS")) threads = std::max(1, std::atoi(env));

    auto add_format = [&](CLI::App* cmd, bool with_csv = false) {
        cmd->add_option("--format", format,
                        with_csv ? "output format: text, json or csv" : "output format: text or json")
            ->check(with_csv ? CLI::IsMember({"text", "json", "csv"})
                             : CLI::IsMember({"text", "json"}));
    };

    auto* analyze = app.add_subcommand("analyze", "full report for a monomial curve");
    analyze->add_option("exponents", exponents_arg, "comma-separated exponents a1,..,an")
        ->required();
    add_format(analyze);

    auto* canonical = app.add_subcommand("canonical", "canonical model exponents");
    canonical->add_option("exponents", exponents_arg)->required();
    add_format(canonical);

    auto* gon = app.add_subcommand("gonality", "gonality with witness pencil");
    gon->add_option("exponents", exponents_arg)->required();
    add_format(gon);

    auto* sfit = app.add_subcommand("scrollfit", "chain partition of an exponent set");
    sfit->add_option("set", set_arg, "comma-separated exponent set (0 not implied)")->required();
    sfit->add_option("--r", fit_r, "common difference")->required();
    add_format(sfit);

    auto* sh0 = app.add_subcommand("scroll-h0", "section count of aH+bF on a scroll");
    sh0->add_option("--type", type_arg, "scroll type m1,..,md")->required();
    sh0->add_option("--a", opt_a)->required();
    sh0->add_option("--b", opt_b)->required();
    add_format(sh0);

    auto* sci = app.add_subcommand("scroll-genus-ci",
                                   "complete-intersection invariants on a scroll");
    sci->add_option("--type", type_arg)->required();
    sci->add_option("--classes", classes_arg, "divisor classes a1,b1;..;ak,bk")->required();
    add_format(sci);

    auto* schow = app.add_subcommand("scroll-chow", "product of divisor classes in the Chow ring");
    schow->add_option("--type", type_arg)->required();
    schow->add_option("--classes", classes_arg)->required();
    add_format(schow);

    auto* enum_cmd = app.add_subcommand("enumerate", "catalog of one-point curves by genus");
    enum_cmd->add_option("--genus", genus, "exact genus");
    enum_cmd->add_option("--max-genus", max_genus, "genus range 1..M");
    enum_cmd->add_option("--genus-cap", genus_cap, "enumeration cap (default 12)");
    enum_cmd->add_option("--threads", threads, "worker threads (or GONSCROLL_THREADS)");
    enum_cmd->add_option("--filter", filters,
                         "gonality=N, non-gorenstein, kunz, nearly-gorenstein, "
                         "nearly-normal, genus=LO..HI");
    add_format(enum_cmd, true);

    auto* tables = app.add_subcommand("tables", "verify the builtin curve fixtures");
    add_format(tables);

    auto* sections = app.add_subcommand("sections", "members of S_P up to a pole order");
    sections->add_option("exponents", exponents_arg)->required();
    sections->add_option("--pole", pole_order, "pole order m at infinity")->required();
    add_format(sections);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    }

    if (analyze->parsed()) {
        auto c = MonomialCurve::from_exponents(parse_int_list(exponents_arg, "exponent list"));
        auto report = analyze_curve(c);
        if (format == "json")
            out << to_json(report).dump() << "\n";
        else
            print_report_text(report, out);
        return 0;
    }

    if (canonical->parsed()) {
        auto c = MonomialCurve::from_exponents(parse_int_list(exponents_arg, "exponent list"));
        auto model = canonical_model(c);
        if (format == "json") {
            json j;
            j["canonical_exponents"] = model.values;
            out << j.dump() << "\n";
        } else {
            out << "{" << join(model.values) << "}\n";
        }
        return 0;
    }

    if (gon->parsed()) {
        auto c = MonomialCurve::from_exponents(parse_int_list(exponents_arg, "exponent list"));
        const long long d = gonality(c);
        json j;
        j["gonality"] = d;
        if (c.genus() >= 1) {
            BestFit bf = best_fit(canonical_exponent_set(c));
            j["witness_r"] = bf.fit.r;
            j["minimizing_r"] = bf.minimizing_r;
            j["partition"] = to_json(bf.fit);
            if (format != "json") {
                out << d << "  (r " << bf.fit.r << ", "
                    << scroll_type_name(bf.fit.scroll_type) << ", parts";
                for (const auto& p : bf.fit.parts) out << " {" << join(p) << "}";
                out << ")\n";
                return 0;
            }
        } else if (format != "json") {
            out << d << "\n";
            return 0;
        }
        out << j.dump() << "\n";
        return 0;
    }

    if (sfit->parsed()) {
        auto set = parse_int_list(set_arg, "exponent set");
        APFit fit = fit_with_difference(set, fit_r);
        ScrollMatrix matrix = scroll_matrix(set, fit_r);
        if (format == "json") {
            json j = to_json(fit);
            json blocks = json::array();
            for (const auto& b : matrix.blocks) blocks.push_back(b);
            j["matrix_blocks"] = blocks;
            out << j.dump() << "\n";
        } else {
            out << scroll_type_name(fit.scroll_type) << "  parts";
            for (const auto& p : fit.parts) out << " {" << join(p) << "}";
            out << (fit.smooth ? "  smooth" : "  singular") << "\n" << matrix.render();
        }
        return 0;
    }

    if (sh0->parsed()) {
        Scroll s = Scroll::of(parse_int_list(type_arg, "scroll type"));
        SectionCount closed = h0_closed(s, opt_a, opt_b);
        const long long enumerated = h0_enum(s, opt_a, opt_b);
        if (format == "json") {
            json j;
            j["closed"] = closed.value;
            j["closed_form_valid"] = closed.closed_form_valid;
            j["enumerated"] = enumerated;
            j["h1_vanishes"] = hi_vanishes(s, 1, opt_a, opt_b);
            out << j.dump() << "\n";
        } else {
            if (closed.closed_form_valid)
                out << closed.value << "\n";
            else
                out << enumerated << "  (outside the closed-form regime; enumerated count)\n";
        }
        return 0;
    }

    if (sci->parsed()) {
        Scroll s = Scroll::of(parse_int_list(type_arg, "scroll type"));
        auto ci = ci_invariants(s, parse_classes(classes_arg));
        if (format == "json") {
            json j;
            j["ell"] = ci.ell;
            j["degree"] = ci.degree;
            j["genus_closed"] = rational_json(ci.genus_closed);
            j["genus_koszul"] = rational_json(ci.genus_koszul);
            j["effective"] = ci.effective;
            out << j.dump() << "\n";
        } else {
            out << "ell " << ci.ell << "  degree " << ci.degree << "  genus "
                << rational_text(ci.genus_closed) << " (koszul " << rational_text(ci.genus_koszul)
                << ")" << (ci.effective ? "" : "  [non-effective]") << "\n";
        }
        return 0;
    }

    if (schow->parsed()) {
        Scroll s = Scroll::of(parse_int_list(type_arg, "scroll type"));
        std::vector<ChowClass> factors;
        for (const auto& c : parse_classes(classes_arg)) factors.push_back(ChowClass::divisor(c));
        ChowResult r = chow_product(s, factors);
        json j;
        if (r.beyond_top) {
            j["zero"] = true;
            j["codim"] = r.cls.codim;
        } else if (r.is_number) {
            j["degree"] = r.number;
        } else {
            j["codim"] = r.cls.codim;
            j["h_coeff"] = r.cls.h;
            j["hf_coeff"] = r.cls.hf;
        }
        if (format == "json") {
            out << j.dump() << "\n";
        } else if (r.beyond_top) {
            out << "0  (codimension " << r.cls.codim << " exceeds scroll dimension)\n";
        } else if (r.is_number) {
            out << r.number << "\n";
        } else {
            out << r.cls.h << " H^" << r.cls.codim << " + " << r.cls.hf << " H^"
                << (r.cls.codim - 1) << " F\n";
        }
        return 0;
    }

    if (enum_cmd->parsed()) {
        CatalogFilter filter;
        for (const auto& f : filters) {
            if (f == "non-gorenstein") filter.non_gorenstein = true;
            else if (f == "kunz") filter.kunz = true;
            else if (f == "nearly-gorenstein") filter.nearly_gorenstein = true;
            else if (f == "nearly-normal") filter.nearly_normal = true;
            else if (f.rfind("gonality=", 0) == 0)
                filter.gonality = std::stoll(f.substr(9));
            else if (f.rfind("genus=", 0) == 0) {
                const auto body = f.substr(6);
                const auto dots = body.find("..");
                if (dots == std::string::npos) throw UsageError("genus filter needs LO..HI");
                filter.genus_range = {std::stoll(body.substr(0, dots)),
                                      std::stoll(body.substr(dots + 2))};
            } else
                throw UsageError("unknown filter '" + f + "'");
        }
        std::vector<CurveReport> rows;
        if (genus >= 0 && max_genus >= 0)
            throw UsageError("--genus and --max-genus are mutually exclusive");
        if (genus >= 0)
            rows = catalog_for_genus(genus, filter, threads, genus_cap);
        else if (max_genus >= 0)
            rows = build_catalog(max_genus, filter, threads, genus_cap);
        else
            throw UsageError("enumerate needs --genus or --max-genus");
        if (format == "csv") {
            out << csv_header() << "\n";
            for (const auto& r : rows) out << to_csv_row(r) << "\n";
        } else if (format == "json") {
            for (const auto& r : rows) out << to_json(r).dump() << "\n";
        } else {
            for (const auto& r : rows) {
                out << "{" << join(r.exponents) << "}  g " << r.genus << "  gon " << r.gonality
                    << "  ell " << r.ell << "  " << scroll_type_name(r.best_fit.scroll_type)
                    << "  eta " << r.classification.eta << "  mu " << r.classification.mu
                    << "  g' " << r.g_prime << "  label " << to_string(r.label) << "\n";
            }
            out << rows.size() << " curves\n";
        }
        return 0;
    }

    if (sections->parsed()) {
        auto c = MonomialCurve::from_exponents(parse_int_list(exponents_arg, "exponent list"));
        auto secs = sections_with_pole_at_infinity(c, pole_order);
        if (format == "json") {
            json j;
            j["sections"] = secs;
            j["h0"] = secs.size();
            out << j.dump() << "\n";
        } else {
            out << "{" << join(secs) << "}  h0 = " << secs.size() << "\n";
        }
        return 0;
    }

    if (tables->parsed()) return cmd_tables(format, out);
    throw UsageError("no command given");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out);
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: precondition: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: precondition: " << e.what() << "\n";
        return 2;
    }
}

} // namespace gonscroll
