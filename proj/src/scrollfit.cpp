#include "gonscroll/scrollfit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gonscroll {

APFit fit_with_difference(const std::vector<long long>& a, long long r) {
    if (a.empty()) throw std::invalid_argument("cannot fit an empty exponent set");
    if (r < 1) throw std::invalid_argument("common difference must be >= 1");

    std::vector<long long> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto in = [&](long long v) {
        return std::binary_search(sorted.begin(), sorted.end(), v);
    };

    APFit fit;
    fit.r = r;
    for (long long x : sorted) {
        if (in(x - r)) continue;  // not a chain head
        std::vector<long long> chain{x};
        while (in(chain.back() + r)) chain.push_back(chain.back() + r);
        fit.parts.push_back(std::move(chain));
    }
    for (const auto& p : fit.parts) fit.scroll_type.push_back((long long)p.size() - 1);
    std::sort(fit.scroll_type.begin(), fit.scroll_type.end());
    fit.smooth = fit.scroll_type.front() >= 1;
    return fit;
}

BestFit best_fit(const std::vector<long long>& a) {
    if (a.empty()) throw std::invalid_argument("cannot fit an empty exponent set");
    const long long hi = *std::max_element(a.begin(), a.end());
    BestFit out;
    if (a.size() == 1 || hi < 1) {
        // single exponent: one singleton part whatever r is
        out.fit = fit_with_difference(a, 1);
        out.minimizing_r = {1};
        return out;
    }
    for (long long r = 1; r <= hi; ++r) {
        APFit f = fit_with_difference(a, r);
        if (out.minimizing_r.empty() || f.part_count() < out.fit.part_count()) {
            out.fit = std::move(f);
            out.minimizing_r = {r};
        } else if (f.part_count() == out.fit.part_count()) {
            out.minimizing_r.push_back(r);
        }
    }
    return out;
}

long long gonality(const std::vector<long long>& a) {
    return best_fit(a).fit.part_count() + 1;
}

ScrollMatrix scroll_matrix(const std::vector<long long>& a, long long r) {
    const APFit fit = fit_with_difference(a, r);
    ScrollMatrix m;
    m.r = r;
    for (const auto& chain : fit.parts) {
        std::vector<std::pair<long long, long long>> block;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            block.emplace_back(chain[i], chain[i + 1]);
        m.blocks.push_back(std::move(block));
    }
    return m;
}

long long ScrollMatrix::column_count() const {
    long long n = 0;
    for (const auto& b : blocks) n += (long long)b.size();
    return n;
}

std::string ScrollMatrix::render() const {
    auto cell = [](long long e) { return "t^" + std::to_string(e); };
    std::vector<std::string> top, bottom;
    std::vector<std::size_t> width;
    bool first = true;
    for (const auto& block : blocks) {
        if (block.empty()) continue;  // cone point: no columns
        if (!first) {
            top.push_back("|");
            bottom.push_back("|");
        }
        first = false;
        for (const auto& [u, v] : block) {
            top.push_back(cell(u));
            bottom.push_back(cell(v));
        }
    }
    for (std::size_t i = 0; i < top.size(); ++i)
        width.push_back(std::max(top[i].size(), bottom[i].size()));

    std::ostringstream os;
    for (const auto* row : {&top, &bottom}) {
        os << "[";
        for (std::size_t i = 0; i < row->size(); ++i) {
            os << ' ' << (*row)[i] << std::string(width[i] - (*row)[i].size(), ' ');
        }
        os << " ]\n";
    }
    return os.str();
}

} // namespace gonscroll
