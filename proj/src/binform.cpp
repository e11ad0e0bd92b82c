#include "ffchow/binform.hpp"

namespace ffchow {

RatFunc eval_binform(const BinForm<RatFunc>& f, const RatFunc& s0, const RatFunc& s1) {
    RatFunc sum;
    for (int a = 0; a <= f.degree(); ++a) {
        const RatFunc& c = f.coeff(a);
        if (c.is_zero()) continue;
        int b = f.degree() - a;
        RatFunc term = c;
        if (a > 0) {
            if (s0.is_zero()) continue;
            term = term * s0.pow(a);
        }
        if (b > 0) {
            if (s1.is_zero()) continue;
            term = term * s1.pow(b);
        }
        sum = sum + term;
    }
    return sum;
}

namespace {

// Dense univariate arithmetic over Q(t), ascending coefficients, trimmed.
using KPoly = std::vector<RatFunc>;

void ktrim(KPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

KPoly krem(KPoly a, const KPoly& b) {
    RatFunc li = b.back().inverse();
    while (a.size() >= b.size()) {
        RatFunc f = a.back() * li;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = a[shift + i] - f * b[i];
        // cancellation at the top is exact
        a.pop_back();
        ktrim(a);
    }
    return a;
}

KPoly kgcd(KPoly a, KPoly b) {
    while (!b.empty()) {
        KPoly r = krem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        RatFunc li = a.back().inverse();
        for (RatFunc& c : a) c = c * li;
    }
    return a;
}

}  // namespace

BinForm<RatFunc> binform_gcd(const std::vector<BinForm<RatFunc>>& fs) {
    const RatFunc zero;
    bool any = false;
    int s0_shift = 0, s1_shift = 0;
    KPoly acc;
    for (const BinForm<RatFunc>& f : fs) {
        if (f.is_zero()) continue;
        int lo = 0;
        while (f.coeff(lo).is_zero()) ++lo;
        int hi = f.degree();
        while (f.coeff(hi).is_zero()) --hi;
        KPoly core;
        core.reserve(static_cast<std::size_t>(hi - lo) + 1);
        for (int a = lo; a <= hi; ++a) core.push_back(f.coeff(a));
        if (!any) {
            s0_shift = lo;
            s1_shift = f.degree() - hi;
            acc = std::move(core);
            any = true;
        } else {
            s0_shift = std::min(s0_shift, lo);
            s1_shift = std::min(s1_shift, f.degree() - hi);
            acc = kgcd(std::move(acc), core);
        }
    }
    if (!any) return BinForm<RatFunc>(0, zero);

    RatFunc lead_inv = acc.back().inverse();
    for (RatFunc& c : acc) c = c * lead_inv;

    int core_deg = static_cast<int>(acc.size()) - 1;
    BinForm<RatFunc> g(s0_shift + s1_shift + core_deg, zero);
    for (int i = 0; i <= core_deg; ++i) g.set_coeff(s0_shift + i, acc[static_cast<std::size_t>(i)]);
    return g;
}

}  // namespace ffchow
