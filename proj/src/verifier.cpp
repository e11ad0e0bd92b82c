#include "ffchow/verifier.hpp"

#include "ffchow/heights.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ffchow {

namespace {

struct SplitMix64 {
    unsigned long long s;
    explicit SplitMix64(unsigned long long seed) : s(seed) {}
    unsigned long long next() {
        unsigned long long z = (s += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

/// Orders of the powered divisor values at x, which must all be nonzero.
std::vector<long long> divisor_orders(const std::vector<RatFunc>& values, const Place& p) {
    std::vector<long long> ords;
    ords.reserve(values.size());
    for (const RatFunc& v : values) ords.push_back(ord_at(v, p));
    return ords;
}

/// Indices of the k largest entries, ties resolved toward lower indices.
std::vector<std::size_t> top_indices(const std::vector<long long>& vals, std::size_t k) {
    std::vector<std::size_t> idx(vals.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (vals[a] != vals[b]) return vals[a] > vals[b];
        return a < b;
    });
    idx.resize(k);
    return idx;
}

}  // namespace

TailCheck tail_order_check(const std::vector<HomPoly>& powered, int position, const Place& p,
                           const ProjPoint& x, const Int& tail_bound) {
    if (powered.empty()) throw DomainError("tail check on an empty family");
    int d = powered[0].degree();
    for (const HomPoly& f : powered)
        if (f.degree() != d) throw DomainError("tail check needs one common degree");
    std::vector<RatFunc> values;
    for (std::size_t i = 0; i < powered.size(); ++i) {
        values.push_back(powered[i].eval(x));
        if (values.back().is_zero())
            throw DomainError("point lies on divisor " + std::to_string(i));
    }
    long long degp = p.degree();
    long long base = static_cast<long long>(d) * local_exponent(p, x) * degp;
    std::vector<long long> ords = divisor_orders(values, p);
    std::vector<std::size_t> order = top_indices(ords, ords.size());

    TailCheck out;
    out.place = p;
    for (std::size_t r : order) out.sorted_orders.push_back(ords[r]);
    for (std::size_t rank = static_cast<std::size_t>(position) + 1; rank <= order.size(); ++rank) {
        TailRow row;
        row.rank = static_cast<int>(rank);
        row.divisor = static_cast<int>(order[rank - 1]);
        row.value = ords[order[rank - 1]] * degp;
        row.base = base;
        row.holds = int_of(row.value) <= int_of(row.base) + tail_bound;
        out.holds = out.holds && row.holds;
        out.rows.push_back(row);
    }
    return out;
}

Rat coordinate_subset_sum(const ProjPoint& y, const std::vector<Place>& places,
                          const std::vector<int>& slots, int position) {
    std::size_t need = static_cast<std::size_t>(position) + 1;
    if (slots.size() < need) throw DomainError("coordinate index set smaller than m+1");
    long long total = 0;
    for (const Place& p : places) {
        auto cw = coordinate_weights(p, y);
        std::vector<long long> vals;
        for (int s : slots) {
            if (!cw[static_cast<std::size_t>(s)])
                throw DomainError("point lies on coordinate hyperplane " + std::to_string(s));
            vals.push_back(*cw[static_cast<std::size_t>(s)]);
        }
        long long best = 0;
        for (std::size_t i : top_indices(vals, need)) best += vals[i];
        total += best;
    }
    return rat_of(total);
}

Rat proximity_sum(const ProjPoint& x, const std::vector<HomPoly>& divisors,
                  const std::vector<Place>& places) {
    for (const HomPoly& q : divisors)
        if (q.eval(x).is_zero()) throw DomainError("point in divisor support (excluded)");
    Rat total(0);
    for (const HomPoly& q : divisors) {
        Rat weight = make_rat(Int(1), Int(q.degree()));
        for (const Place& p : places) total += weight * rat_of(weil_value(p, q, x));
    }
    return total;
}

std::string branch_name(Branch b) {
    switch (b) {
        case Branch::Inequality: return "inequality";
        case Branch::SmallHeight: return "small_height";
        case Branch::Excluded: return "excluded";
    }
    throw DomainError("unknown branch");
}

ScenarioContext prepare_scenario(const Scenario& sc) {
    validate_scenario(sc);
    ScenarioContext ctx;
    ctx.sc = sc;
    ctx.meta = variety_meta(sc.variety);
    ctx.emb = build_embedding(ctx.meta.ambient, sc.divisors);
    ctx.slots = ctx.emb.divisor_slots();
    ctx.family_height = height_family(ctx.emb.powered);

    std::vector<RatFunc> coeffs;
    for (const HomPoly& f : ctx.emb.powered)
        for (const RatFunc& c : f.coefficients()) coeffs.push_back(c);
    ctx.content_trivial = true;
    for (const Place& p : support_places(coeffs))
        if (local_exponent(p, ctx.emb.powered) > 0) ctx.content_trivial = false;

    if (const auto* curve = std::get_if<ParamCurve>(&sc.variety)) {
        ctx.base_form = chow_form_curve(curve->forms);
        ctx.image = image_curve(ctx.emb, *curve);
    } else if (const auto* space = std::get_if<FullSpace>(&sc.variety)) {
        ctx.base_form = chow_form_fullspace(space->dim);
        if (space->dim == 1) {
            // The space is its own parametrized line; compose with it.
            BinForm<RatFunc> s0(1, RatFunc()), s1(1, RatFunc());
            s0.set_coeff(1, RatFunc(Rat(1)));
            s1.set_coeff(0, RatFunc(Rat(1)));
            ctx.image = image_curve(ctx.emb, ParamCurve{{s0, s1}});
        }
    } else {
        const auto& pts = std::get<PointSet>(sc.variety).points;
        ctx.base_form = chow_form_points(pts);
        std::vector<ProjPoint> images;
        for (const ProjPoint& x : pts) images.push_back(eval_embedding(ctx.emb, x));
        try {
            ctx.image_form = chow_form_points(images);
            ctx.image_degree = static_cast<long long>(images.size());
        } catch (const DomainError&) {
            // Distinct points can collide under the coordinate change;
            // the image form is then simply not tracked.
        }
    }
    ctx.base_height = chow_height(ctx.base_form);
    if (ctx.image) {
        ctx.image_form = chow_form_curve(ctx.image->forms);
        ctx.image_degree = variety_meta(Variety(*ctx.image)).degree;
    }
    if (ctx.image_form) {
        std::vector<HomPoly> maps = ctx.emb.powered;
        for (const auto& exps : ctx.emb.monomials) {
            HomPoly mono(ctx.meta.ambient, ctx.emb.d);
            mono.add_term(exps, RatFunc(Rat(1)));
            maps.push_back(mono);
        }
        if (ctx.meta.dim >= 1)
            ctx.image_height_check =
                chow_height_bound(ctx.base_height, ctx.meta.dim, ctx.emb.d, ctx.meta.degree,
                                  height_family(maps), chow_height(*ctx.image_form));
    }

    ctx.params.ambient = ctx.meta.ambient;
    ctx.params.dim = ctx.meta.dim;
    ctx.params.position = sc.position;
    ctx.params.family_size = static_cast<int>(sc.divisors.size());
    ctx.params.d = ctx.emb.d;
    ctx.params.variety_degree = int_of(ctx.meta.degree);
    ctx.params.h_form = int_of(ctx.base_height);
    ctx.params.h_family = int_of(ctx.family_height);
    ctx.params.eps = sc.eps;
    ctx.params.place_count = static_cast<int>(sc.places.size());
    validate_params(ctx.params);
    ctx.consts = derive_constants(ctx.params, sc.external);
    return ctx;
}

PointReport verify_point(const ScenarioContext& ctx, const ProjPoint& x) {
    PointReport r;
    r.x = x;
    r.h = height(x);
    for (std::size_t i = 0; i < ctx.sc.divisors.size(); ++i) {
        if (ctx.sc.divisors[i].eval(x).is_zero()) {
            r.branch = Branch::Excluded;
            r.excluded_divisor = static_cast<int>(i);
            return r;
        }
    }

    int d = ctx.emb.d;
    int m = ctx.sc.position;
    int n = ctx.meta.dim;
    int q = static_cast<int>(ctx.sc.divisors.size());
    ProjPoint y = eval_embedding(ctx.emb, x);
    r.h_image = height(y);

    r.sandwich_lower = static_cast<long long>(d) * r.h <= r.h_image;
    r.sandwich_upper = r.h_image <= static_cast<long long>(d) * r.h + ctx.family_height;

    Rat h_form_plus = Rat(Int(ctx.params.h_form + 1));
    r.lifted_cutoff = ctx.consts.b_tilde * h_form_plus;
    r.lifted_cutoff_ok = rat_of(r.h_image) <= r.lifted_cutoff;
    if (ctx.image_form) {
        Rat cutoff = ctx.consts.b * Rat(int_of(chow_height(*ctx.image_form) + 1));
        r.image_cutoff = cutoff;
        r.image_cutoff_ok = rat_of(r.h_image) <= cutoff;
    }

    Rat slope = Rat((m - n + 1) * (n + 1)) + ctx.sc.eps;
    r.subset_total = coordinate_subset_sum(y, ctx.sc.places, ctx.slots, m);
    r.subset_total_bound = slope * rat_of(r.h_image) + ctx.consts.b_tilde_prime * h_form_plus;
    r.subset_total_ok = *r.subset_total <= *r.subset_total_bound;

    std::vector<RatFunc> powered_vals;
    for (const HomPoly& f : ctx.emb.powered) powered_vals.push_back(f.eval(x));

    for (const Place& p : ctx.sc.places) {
        PlaceDiagnostics dg;
        dg.place = p;
        long long degp = p.degree();
        long long ep_x = local_exponent(p, x);
        long long ep_y = local_exponent(p, y);
        std::vector<long long> ords = divisor_orders(powered_vals, p);

        dg.tail = tail_order_check(ctx.emb.powered, m, p, x, ctx.consts.tail);

        auto cw = coordinate_weights(p, y);
        long long min_ord = ords[0];
        for (long long o : ords) min_ord = std::min(min_ord, o);
        dg.exponent_identity = ep_y == std::min(static_cast<long long>(d) * ep_x, min_ord);

        std::vector<long long> slot_weights;
        for (std::size_t i = 0; i < powered_vals.size(); ++i) {
            LiftRow row;
            row.divisor = static_cast<int>(i);
            row.coordinate_weight = *cw[static_cast<std::size_t>(ctx.slots[i])];
            row.shift = (ords[i] - static_cast<long long>(d) * ep_x) * degp;
            row.holds = row.coordinate_weight >= row.shift;
            dg.lifts.push_back(row);
            slot_weights.push_back(row.coordinate_weight);
        }

        long long min_exp = local_exponent(p, ctx.emb.powered[0]);
        for (const HomPoly& f : ctx.emb.powered) min_exp = std::min(min_exp, local_exponent(p, f));
        dg.local_sum = 0;
        for (const HomPoly& f : ctx.emb.powered) dg.local_sum += weil_value(p, f, x);
        dg.subset_max = 0;
        for (std::size_t i : top_indices(slot_weights, static_cast<std::size_t>(m) + 1)) {
            dg.subset_max += slot_weights[i];
            dg.subset_argmax.push_back(ctx.slots[i]);
        }
        dg.local_bound = rat_of(dg.subset_max - static_cast<long long>(q) * min_exp * degp) +
                         Rat(q - m) * Rat(ctx.consts.tail);
        dg.local_holds = rat_of(dg.local_sum) <= dg.local_bound;

        if (ctx.image_form) {
            WeightRow w;
            w.subset_max = dg.subset_max;
            bool finite = true;
            for (const auto& v : cw)
                if (!v) finite = false;
            w.finite = finite;
            if (finite) {
                std::vector<Rat> c;
                for (const auto& v : cw) c.push_back(rat_of(*v));
                Rat wt = chow_weight(*ctx.image_form, c);
                w.bound = Rat(m - n + 1) / Rat(int_of(ctx.image_degree)) * wt;
                w.holds = rat_of(w.subset_max) <= w.bound;
            }
            dg.weight = w;
        }

        bool lifts_ok = true;
        for (const LiftRow& row : dg.lifts) lifts_ok = lifts_ok && row.holds;
        r.hard_failures += !dg.tail.holds + !lifts_ok + !dg.exponent_identity + !dg.local_holds;
        if (dg.weight && dg.weight->finite && !dg.weight->holds) ++r.hard_failures;
        r.places.push_back(std::move(dg));
    }
    r.hard_failures += !r.sandwich_lower + !r.sandwich_upper;

    r.lhs = proximity_sum(x, ctx.sc.divisors, ctx.sc.places);
    r.rhs = slope * rat_of(r.h) + ctx.consts.defect_bound;
    r.bound_ok = r.lhs <= r.rhs;
    r.branch = rat_of(r.h) <= ctx.consts.height_cutoff ? Branch::SmallHeight : Branch::Inequality;
    return r;
}

std::vector<ProjPoint> sample_points(const ScenarioContext& ctx) {
    std::vector<ProjPoint> pts = ctx.sc.sample.points;
    SplitMix64 rng(ctx.sc.sample.seed);
    long long bound = ctx.sc.sample.coeff_bound;
    auto coeff = [&]() {
        unsigned long long span = 2ULL * static_cast<unsigned long long>(bound) + 1;
        return static_cast<long long>(rng.next() % span) - bound;
    };
    auto poly = [&]() {
        std::vector<Rat> c;
        for (int i = 0; i <= ctx.sc.sample.param_degree; ++i) c.push_back(rat_of(coeff()));
        return Poly(std::move(c));
    };
    for (long long i = 0; i < ctx.sc.sample.count; ++i) {
        if (const auto* curve = std::get_if<ParamCurve>(&ctx.sc.variety)) {
            for (;;) {
                Poly s0 = poly(), s1 = poly();
                if (s0.is_zero() && s1.is_zero()) continue;
                pts.push_back(curve_point(*curve, RatFunc(s0), RatFunc(s1)));
                break;
            }
        } else if (const auto* space = std::get_if<FullSpace>(&ctx.sc.variety)) {
            for (;;) {
                std::vector<RatFunc> coords;
                bool nonzero = false;
                for (int j = 0; j <= space->dim; ++j) {
                    coords.emplace_back(poly());
                    nonzero = nonzero || !coords.back().is_zero();
                }
                if (!nonzero) continue;
                pts.push_back(ProjPoint(std::move(coords)));
                break;
            }
        } else {
            const auto& base = std::get<PointSet>(ctx.sc.variety).points;
            pts.push_back(base[static_cast<std::size_t>(i) % base.size()]);
        }
    }
    return pts;
}

namespace {

ExperimentResult run_impl(const ScenarioContext& ctx, bool parallel) {
    std::vector<ProjPoint> pts = sample_points(ctx);
    ExperimentResult out;
    out.reports.resize(pts.size());
    std::vector<std::string> errors(pts.size());
    long long count = static_cast<long long>(pts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long long i = 0; i < count; ++i) {
        try {
            out.reports[static_cast<std::size_t>(i)] = verify_point(ctx, pts[static_cast<std::size_t>(i)]);
        } catch (const std::exception& e) {
            errors[static_cast<std::size_t>(i)] = e.what();
        }
    }
    for (const std::string& e : errors)
        if (!e.empty()) throw DomainError("experiment point failed: " + e);

    out.summary.total = count;
    for (long long i = 0; i < count; ++i) {
        const PointReport& r = out.reports[static_cast<std::size_t>(i)];
        switch (r.branch) {
            case Branch::Inequality:
                ++out.summary.inequality;
                if (!r.bound_ok) out.summary.bound_violations.push_back(i);
                break;
            case Branch::SmallHeight: ++out.summary.small_height; break;
            case Branch::Excluded: ++out.summary.excluded; break;
        }
        out.summary.hard_failures += r.hard_failures;
    }
    return out;
}

}  // namespace

ExperimentResult run_experiment(const ScenarioContext& ctx) { return run_impl(ctx, true); }

ExperimentResult run_experiment_serial(const ScenarioContext& ctx) { return run_impl(ctx, false); }

namespace {

using ordered = nlohmann::ordered_json;

ordered json_of_point(const PointReport& r) {
    ordered j;
    j["x"] = r.x.str();
    j["branch"] = branch_name(r.branch);
    j["h"] = r.h;
    if (r.branch == Branch::Excluded) {
        j["excluded_divisor"] = r.excluded_divisor;
        return j;
    }
    j["h_image"] = r.h_image;
    j["lhs"] = rat_string(r.lhs);
    j["rhs"] = rat_string(r.rhs);
    j["bound_ok"] = r.bound_ok;
    j["sandwich"] = ordered{{"lower_ok", r.sandwich_lower}, {"upper_ok", r.sandwich_upper}};
    ordered cutoff;
    cutoff["lifted_bound"] = rat_string(r.lifted_cutoff);
    cutoff["lifted_within"] = r.lifted_cutoff_ok;
    if (r.image_cutoff) {
        cutoff["image_bound"] = rat_string(*r.image_cutoff);
        cutoff["image_within"] = r.image_cutoff_ok;
    }
    j["image_height_cutoff"] = cutoff;
    j["subset_total"] = ordered{{"value", rat_string(*r.subset_total)},
                                {"bound", rat_string(*r.subset_total_bound)},
                                {"within", r.subset_total_ok}};
    ordered places = ordered::array();
    for (const PlaceDiagnostics& dg : r.places) {
        ordered pj;
        pj["place"] = dg.place.str();
        ordered tail;
        tail["sorted_orders"] = dg.tail.sorted_orders;
        ordered rows = ordered::array();
        for (const TailRow& row : dg.tail.rows)
            rows.push_back(ordered{{"rank", row.rank},
                                   {"divisor", row.divisor},
                                   {"value", row.value},
                                   {"base", row.base},
                                   {"holds", row.holds}});
        tail["rows"] = rows;
        tail["holds"] = dg.tail.holds;
        pj["tail"] = tail;
        ordered lifts = ordered::array();
        for (const LiftRow& row : dg.lifts)
            lifts.push_back(ordered{{"divisor", row.divisor},
                                    {"coordinate_weight", row.coordinate_weight},
                                    {"shift", row.shift},
                                    {"holds", row.holds}});
        pj["lifts"] = lifts;
        pj["exponent_identity"] = dg.exponent_identity;
        pj["local"] = ordered{{"sum", dg.local_sum},
                              {"subset_max", dg.subset_max},
                              {"subset", dg.subset_argmax},
                              {"bound", rat_string(dg.local_bound)},
                              {"holds", dg.local_holds}};
        if (dg.weight) {
            ordered w;
            w["subset_max"] = dg.weight->subset_max;
            w["finite"] = dg.weight->finite;
            if (dg.weight->finite) {
                w["bound"] = rat_string(dg.weight->bound);
                w["holds"] = dg.weight->holds;
            }
            pj["weight"] = w;
        }
        places.push_back(pj);
    }
    j["places"] = places;
    j["hard_failures"] = r.hard_failures;
    return j;
}

}  // namespace

std::string report_json(const ScenarioContext& ctx, const ExperimentResult& r) {
    ordered j;
    ordered sc;
    sc["ambient"] = ctx.meta.ambient;
    sc["dim"] = ctx.meta.dim;
    sc["degree"] = ctx.meta.degree;
    sc["position"] = ctx.sc.position;
    sc["family_size"] = ctx.sc.divisors.size();
    sc["d"] = ctx.emb.d;
    sc["epsilon"] = rat_string(ctx.sc.eps);
    sc["external"] = ordered{{"a", rat_string(ctx.sc.external.a)},
                             {"a_prime", rat_string(ctx.sc.external.a_prime)}};
    ordered places = ordered::array();
    long long degree_sum = 0;
    for (const Place& p : ctx.sc.places) {
        places.push_back(p.str());
        degree_sum += p.degree();
    }
    sc["places"] = places;
    sc["place_degree_sum"] = degree_sum;
    sc["embedding"] = ordered{{"d", ctx.emb.d},
                              {"monomial_count", ctx.emb.monomial_top + 1},
                              {"target_ambient", ctx.emb.target_ambient()},
                              {"divisor_slots", ctx.slots}};
    sc["base_form_height"] = ctx.base_height;
    sc["family_height"] = ctx.family_height;
    sc["content_trivial"] = ctx.content_trivial;
    if (ctx.image_form) {
        ordered img;
        img["form_height"] = chow_height(*ctx.image_form);
        img["degree"] = ctx.image_degree;
        if (ctx.image_height_check) {
            img["height_bound"] = ctx.image_height_check->bound;
            img["height_bound_ok"] = ctx.image_height_check->holds;
        }
        sc["image"] = img;
    } else {
        sc["image"] = nullptr;
    }
    sc["constants"] = ordered{{"b", rat_string(ctx.consts.b)},
                              {"b_prime", rat_string(ctx.consts.b_prime)},
                              {"b_tilde", rat_string(ctx.consts.b_tilde)},
                              {"b_tilde_prime", rat_string(ctx.consts.b_tilde_prime)},
                              {"height_cutoff", rat_string(ctx.consts.height_cutoff)},
                              {"defect_bound", rat_string(ctx.consts.defect_bound)},
                              {"tail_constant", ctx.consts.tail.get_str()}};
    DegreeBound ex = exception_degree_bound(ctx.params);
    ordered bounds;
    bounds["exception"] = ordered{{"exact", rat_string(ex.exact)}, {"ceiled", ex.ceiled.get_str()}};
    if (ctx.image_form) {
        DegreeBound red = reduction_degree_bound(ctx.meta.dim, int_of(ctx.image_degree),
                                                 ctx.emb.target_ambient(), ctx.sc.eps);
        bounds["reduction"] = ordered{{"exact", rat_string(red.exact)}, {"ceiled", red.ceiled.get_str()}};
    }
    sc["degree_bounds"] = bounds;
    sc["sample"] = ordered{{"count", ctx.sc.sample.count},
                           {"seed", ctx.sc.sample.seed},
                           {"coeff_bound", ctx.sc.sample.coeff_bound},
                           {"param_degree", ctx.sc.sample.param_degree},
                           {"explicit_points", ctx.sc.sample.points.size()}};
    j["scenario"] = sc;

    ordered points = ordered::array();
    for (const PointReport& pr : r.reports) points.push_back(json_of_point(pr));
    j["points"] = points;
    j["summary"] = ordered{{"total", r.summary.total},
                           {"inequality", r.summary.inequality},
                           {"small_height", r.summary.small_height},
                           {"excluded", r.summary.excluded},
                           {"bound_violations", r.summary.bound_violations},
                           {"hard_failures", r.summary.hard_failures}};
    return j.dump(2) + "\n";
}

std::string report_csv(const ExperimentResult& r) {
    std::ostringstream os;
    os << "h,lhs,rhs,branch\n";
    for (const PointReport& pr : r.reports) {
        os << pr.h << ",";
        if (pr.branch == Branch::Excluded)
            os << ",";
        else
            os << rat_string(pr.lhs) << "," << rat_string(pr.rhs);
        os << "," << branch_name(pr.branch) << "\n";
    }
    return os.str();
}

}  // namespace ffchow
