#include "dtor/newton.hpp"

#include <algorithm>
#include <map>

namespace dtor {

std::vector<Slope> newton_slopes(std::vector<std::pair<long, Laurent>> terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!terms.empty() && terms.back().second.is_zero() && terms.back().second.is_exact()) terms.pop_back();
    size_t lo = 0;
    while (lo < terms.size() && terms[lo].second.is_zero() && terms[lo].second.is_exact()) ++lo;
    if (lo == terms.size()) throw std::invalid_argument("newton polygon of the zero polynomial");
    if (terms[lo].second.is_zero()) throw PrecisionError("lowest coefficient vanishes to its precision");
    if (terms.back().second.is_zero()) throw PrecisionError("top coefficient vanishes to its precision");

    std::vector<std::pair<long, long>> pts;
    for (size_t i = lo; i < terms.size(); ++i)
        if (!terms[i].second.is_zero()) pts.emplace_back(terms[i].first, terms[i].second.valuation());

    // lower hull, monotone chain
    std::vector<std::pair<long, long>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            Q cross = Q(b.first - a.first) * Q(p.second - a.second) - Q(b.second - a.second) * Q(p.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }

    auto hull_at = [&](long x) -> Q {
        for (size_t i = 0; i + 1 < hull.size(); ++i) {
            if (x >= hull[i].first && x <= hull[i + 1].first) {
                Q t(x - hull[i].first, hull[i + 1].first - hull[i].first);
                return Q(hull[i].second) + t * Q(hull[i + 1].second - hull[i].second);
            }
        }
        return Q(hull.back().second);
    };
    for (size_t i = lo; i < terms.size(); ++i) {
        const Laurent& c = terms[i].second;
        if (c.is_zero() && !c.is_exact() && Q(c.precision()) < hull_at(terms[i].first))
            throw PrecisionError("coefficient at z^" + std::to_string(terms[i].first) + " unresolved below the polygon");
    }

    std::vector<Slope> out;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        long w = hull[i + 1].first - hull[i].first;
        Q slope(hull[i + 1].second - hull[i].second, w);
        slope.canonicalize();
        out.push_back({-slope, w});
    }
    std::sort(out.begin(), out.end(), [](const Slope& a, const Slope& b) { return a.root_valuation < b.root_valuation; });
    return out;
}

std::vector<Q> expand_slopes(const std::vector<Slope>& s) {
    std::vector<Q> out;
    for (const auto& x : s)
        for (long i = 0; i < x.multiplicity; ++i) out.push_back(x.root_valuation);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dtor
