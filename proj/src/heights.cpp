#include "ffchow/heights.hpp"

namespace ffchow {

namespace {

long long min_order(const Place& p, const std::vector<RatFunc>& values) {
    bool seen = false;
    long long m = 0;
    for (const RatFunc& v : values) {
        if (v.is_zero()) continue;
        long long o = ord_at(v, p);
        if (!seen || o < m) m = o;
        seen = true;
    }
    if (!seen) throw DomainError("local exponent of an all-zero list");
    return m;
}

}  // namespace

long long local_exponent(const Place& p, const ProjPoint& x) { return min_order(p, x.coords()); }

long long local_exponent(const Place& p, const HomPoly& q) {
    if (q.is_zero()) throw DomainError("local exponent of the zero polynomial");
    return min_order(p, q.coefficients());
}

long long local_exponent(const Place& p, const std::vector<HomPoly>& family) {
    std::vector<RatFunc> all;
    for (const HomPoly& q : family) {
        if (q.is_zero()) throw DomainError("local exponent of a family with a zero member");
        for (const RatFunc& c : q.coefficients()) all.push_back(c);
    }
    return min_order(p, all);
}

long long height_of_values(const std::vector<RatFunc>& values) {
    long long h = 0;
    for (const Place& p : support_places(values))
        h -= min_order(p, values) * static_cast<long long>(p.degree());
    return h;
}

long long height(const ProjPoint& x) { return height_of_values(x.coords()); }

long long height(const HomPoly& q) {
    if (q.is_zero()) throw DomainError("height of the zero polynomial");
    return height_of_values(q.coefficients());
}

long long height_family(const std::vector<HomPoly>& family) {
    std::vector<RatFunc> all;
    for (const HomPoly& q : family) {
        if (q.is_zero()) throw DomainError("height of a family with a zero member");
        for (const RatFunc& c : q.coefficients()) all.push_back(c);
    }
    if (all.empty()) throw DomainError("height of an empty family");
    return height_of_values(all);
}

long long weil_value(const Place& p, const HomPoly& q, const ProjPoint& x) {
    RatFunc qa = q.eval(x);
    if (qa.is_zero()) throw DomainError("point lies on the divisor of " + q.str());
    long long ev = ord_at(qa, p);
    long long ex = local_exponent(p, x);
    long long eq = local_exponent(p, q);
    return (ev - static_cast<long long>(q.degree()) * ex - eq) * static_cast<long long>(p.degree());
}

std::vector<std::optional<long long>> coordinate_weights(const Place& p, const ProjPoint& x) {
    long long e = local_exponent(p, x);
    std::vector<std::optional<long long>> out;
    out.reserve(x.coords().size());
    for (const RatFunc& c : x.coords()) {
        if (c.is_zero())
            out.push_back(std::nullopt);
        else
            out.push_back((ord_at(c, p) - e) * static_cast<long long>(p.degree()));
    }
    return out;
}

}  // namespace ffchow
