#include "ffchow/varieties.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ffchow {

void validate_variety(const Variety& v) {
    if (const auto* curve = std::get_if<ParamCurve>(&v)) {
        if (curve->forms.size() < 2) throw DomainError("parametrized curve needs at least two forms");
        int delta = -1;
        bool any = false;
        for (const auto& f : curve->forms) {
            if (f.is_zero()) continue;
            if (delta == -1) delta = f.degree();
            if (f.degree() != delta) throw DomainError("parametrization forms have mixed degrees");
            any = true;
        }
        if (!any) throw DomainError("parametrization with all forms zero");
        if (delta < 1) throw DomainError("parametrization forms must have positive degree");
        for (const auto& f : curve->forms)
            if (f.is_zero() && f.degree() != delta)
                throw DomainError("zero form carries the wrong formal degree");
        if (binform_gcd(curve->forms).degree() != 0)
            throw DomainError("parametrization forms share a common factor");
    } else if (const auto* space = std::get_if<FullSpace>(&v)) {
        if (space->dim < 1) throw DomainError("full space needs positive dimension");
    } else {
        const auto& ps = std::get<PointSet>(v);
        if (ps.points.empty()) throw DomainError("point set must be nonempty");
        for (std::size_t i = 0; i < ps.points.size(); ++i) {
            if (ps.points[i].ambient_dim() != ps.points[0].ambient_dim())
                throw DomainError("points live in different spaces");
            for (std::size_t j = i + 1; j < ps.points.size(); ++j)
                if (ps.points[i].same_point(ps.points[j]))
                    throw DomainError("point set has a repeated point: " + ps.points[i].str());
        }
    }
}

VarietyMeta variety_meta(const Variety& v) {
    validate_variety(v);
    VarietyMeta meta;
    if (const auto* curve = std::get_if<ParamCurve>(&v)) {
        meta.dim = 1;
        meta.degree = curve->forms[0].degree();
        meta.ambient = static_cast<int>(curve->forms.size()) - 1;
    } else if (const auto* space = std::get_if<FullSpace>(&v)) {
        meta.dim = space->dim;
        meta.degree = 1;
        meta.ambient = space->dim;
    } else {
        const auto& ps = std::get<PointSet>(v);
        meta.dim = 0;
        meta.degree = static_cast<long long>(ps.points.size());
        meta.ambient = ps.points[0].ambient_dim();
    }
    return meta;
}

BinForm<RatFunc> pullback(const HomPoly& q, const ParamCurve& curve) {
    int ambient = static_cast<int>(curve.forms.size()) - 1;
    if (q.ambient_dim() != ambient)
        throw DomainError("polynomial and curve live in different spaces");
    int delta = curve.forms[0].degree();
    BinForm<RatFunc> sum(q.degree() * delta, RatFunc());
    for (const auto& [e, c] : q.terms()) {
        BinForm<RatFunc> term(0, RatFunc());
        term.set_coeff(0, c);
        for (int j = 0; j <= ambient; ++j) {
            int k = e[static_cast<std::size_t>(j)];
            if (k == 0) continue;
            term = term * curve.forms[static_cast<std::size_t>(j)].pow(k);
        }
        // exponents sum to deg(q), so the formal degree always matches
        sum = sum + term;
    }
    return sum;
}

ProjPoint curve_point(const ParamCurve& curve, const RatFunc& s0, const RatFunc& s1) {
    if (s0.is_zero() && s1.is_zero()) throw DomainError("parameter [0 : 0] is not a point");
    std::vector<RatFunc> coords;
    coords.reserve(curve.forms.size());
    for (const auto& f : curve.forms) coords.push_back(eval_binform(f, s0, s1));
    return ProjPoint(std::move(coords));
}

namespace {

// Shared subset sweep: calls test on each (m+1)-subset of {0..q-1} in
// lexicographic order; the first subset with a nonempty intersection
// becomes the witness.
PositionResult sweep_subsets(int q, int m, const std::function<bool(const std::vector<int>&)>& empty) {
    std::vector<int> idx(static_cast<std::size_t>(m) + 1);
    std::iota(idx.begin(), idx.end(), 0);
    PositionResult out;
    out.holds = true;
    for (;;) {
        if (!empty(idx)) {
            out.holds = false;
            out.witness = idx;
            return out;
        }
        int k = m;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == q - (m + 1 - k)) --k;
        if (k < 0) return out;
        ++idx[static_cast<std::size_t>(k)];
        for (int j = k + 1; j <= m; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Rank over Q(t) by Gaussian elimination.
int matrix_rank(std::vector<std::vector<RatFunc>> a) {
    int rank = 0;
    std::size_t rows = a.size();
    if (rows == 0) return 0;
    std::size_t cols = a[0].size();
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[pivot]);
        RatFunc inv = a[static_cast<std::size_t>(rank)][c].inverse();
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
            if (a[r][c].is_zero()) continue;
            RatFunc f = a[r][c] * inv;
            for (std::size_t k = c; k < cols; ++k)
                a[r][k] = a[r][k] - f * a[static_cast<std::size_t>(rank)][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

PositionResult in_subgeneral_position(const std::vector<HomPoly>& divisors, const Variety& v, int m) {
    validate_variety(v);
    VarietyMeta meta = variety_meta(v);
    int q = static_cast<int>(divisors.size());
    if (m < meta.dim)
        throw DomainError("position parameter below the variety dimension");
    if (q < m + 1) throw DomainError("need at least m+1 divisors for a position check");
    for (const HomPoly& d : divisors) {
        if (d.is_zero()) throw DomainError("zero divisor in the family");
        if (d.ambient_dim() != meta.ambient)
            throw DomainError("divisor and variety live in different spaces");
    }

    if (const auto* curve = std::get_if<ParamCurve>(&v)) {
        std::vector<BinForm<RatFunc>> pulls;
        pulls.reserve(divisors.size());
        for (const HomPoly& d : divisors) pulls.push_back(pullback(d, *curve));
        return sweep_subsets(q, m, [&](const std::vector<int>& idx) {
            std::vector<BinForm<RatFunc>> chosen;
            chosen.reserve(idx.size());
            for (int i : idx) chosen.push_back(pulls[static_cast<std::size_t>(i)]);
            bool all_zero = true;
            for (const auto& f : chosen) all_zero = all_zero && f.is_zero();
            if (all_zero) return false;
            return binform_gcd(chosen).degree() == 0;
        });
    }
    if (std::holds_alternative<FullSpace>(v)) {
        for (const HomPoly& d : divisors)
            if (d.degree() != 1)
                throw DomainError(
                    "emptiness test unsupported: full-space check needs linear divisors");
        int width = meta.ambient + 1;
        return sweep_subsets(q, m, [&](const std::vector<int>& idx) {
            std::vector<std::vector<RatFunc>> rows;
            for (int i : idx) {
                std::vector<RatFunc> row(static_cast<std::size_t>(width));
                for (const auto& [e, c] : divisors[static_cast<std::size_t>(i)].terms()) {
                    for (int j = 0; j < width; ++j)
                        if (e[static_cast<std::size_t>(j)] == 1) row[static_cast<std::size_t>(j)] = c;
                }
                rows.push_back(std::move(row));
            }
            return matrix_rank(std::move(rows)) == width;
        });
    }
    const auto& ps = std::get<PointSet>(v);
    return sweep_subsets(q, m, [&](const std::vector<int>& idx) {
        for (const ProjPoint& p : ps.points) {
            bool all_vanish = true;
            for (int i : idx)
                all_vanish = all_vanish && divisors[static_cast<std::size_t>(i)].eval(p).is_zero();
            if (all_vanish) return false;
        }
        return true;
    });
}

std::vector<int> EmbeddingData::divisor_slots() const {
    std::vector<int> out;
    out.reserve(powered.size());
    for (std::size_t i = 0; i < powered.size(); ++i)
        out.push_back(monomial_top + 1 + static_cast<int>(i));
    return out;
}

EmbeddingData build_embedding(int ambient, const std::vector<HomPoly>& divisors) {
    if (divisors.empty()) throw DomainError("embedding needs at least one divisor");
    EmbeddingData e;
    e.source_ambient = ambient;
    long long d = 1;
    for (const HomPoly& q : divisors) {
        if (q.is_zero()) throw DomainError("zero divisor in the family");
        if (q.ambient_dim() != ambient) throw DomainError("divisor ambient dimension mismatch");
        d = std::lcm(d, static_cast<long long>(q.degree()));
    }
    e.d = static_cast<int>(d);

    // All exponent vectors of total degree d, descending lexicographic.
    // When stepping, the rightmost positive slot before the last holds all
    // remaining mass to its left; everything to its right sits in the last
    // slot.
    std::vector<int> exps(static_cast<std::size_t>(ambient) + 1, 0);
    exps[0] = e.d;
    for (;;) {
        e.monomials.push_back(exps);
        int i = ambient - 1;
        while (i >= 0 && exps[static_cast<std::size_t>(i)] == 0) --i;
        if (i < 0) break;
        --exps[static_cast<std::size_t>(i)];
        int tail = exps[static_cast<std::size_t>(ambient)] + 1;
        exps[static_cast<std::size_t>(ambient)] = 0;
        exps[static_cast<std::size_t>(i) + 1] = tail;
    }
    e.monomial_top = static_cast<int>(e.monomials.size()) - 1;

    for (const HomPoly& q : divisors) e.powered.push_back(q.pow(e.d / q.degree()));
    return e;
}

ProjPoint eval_embedding(const EmbeddingData& e, const ProjPoint& x) {
    if (x.ambient_dim() != e.source_ambient)
        throw DomainError("point and embedding live in different spaces");
    std::vector<RatFunc> coords;
    coords.reserve(e.monomials.size() + e.powered.size());
    for (const auto& mono : e.monomials) {
        RatFunc v(Rat(1));
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            if (x.coord(static_cast<int>(i)).is_zero()) {
                v = RatFunc();
                break;
            }
            v = v * x.coord(static_cast<int>(i)).pow(mono[i]);
        }
        coords.push_back(v);
    }
    for (const HomPoly& q : e.powered) coords.push_back(q.eval(x));
    return ProjPoint(std::move(coords));
}

ParamCurve image_curve(const EmbeddingData& e, const ParamCurve& curve) {
    validate_variety(Variety(curve));
    if (static_cast<int>(curve.forms.size()) - 1 != e.source_ambient)
        throw DomainError("curve and embedding live in different spaces");
    int delta = curve.forms[0].degree();
    int target_deg = e.d * delta;
    ParamCurve out;
    for (const auto& mono : e.monomials) {
        BinForm<RatFunc> f(0, RatFunc());
        f.set_coeff(0, RatFunc(Rat(1)));
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            f = f * curve.forms[i].pow(mono[i]);
        }
        if (f.degree() != target_deg) throw DomainError("composed monomial degree mismatch");
        out.forms.push_back(f);
    }
    for (const HomPoly& q : e.powered) {
        BinForm<RatFunc> f = pullback(q, curve);
        if (f.degree() != target_deg) throw DomainError("composed divisor degree mismatch");
        out.forms.push_back(f);
    }
    if (binform_gcd(out.forms).degree() != 0)
        throw DomainError("image parametrization shares a common factor");
    return out;
}

}  // namespace ffchow
