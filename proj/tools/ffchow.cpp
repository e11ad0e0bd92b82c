#include "ffchow/chow.hpp"
#include "ffchow/constants.hpp"
#include "ffchow/factor.hpp"
#include "ffchow/heights.hpp"
#include "ffchow/parse.hpp"
#include "ffchow/scenario.hpp"
#include "ffchow/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ffchow;
using ordered = nlohmann::ordered_json;

struct Options {
    bool decimal = false;
    bool error_json = false;
    std::string out;
};

std::string show(const Rat& r, bool decimal) {
    if (!decimal) return rat_string(r);
    std::ostringstream os;
    os << rat_double(r);
    return os.str();
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw DomainError("cannot open " + opt.out);
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ordered rat_entry(const Rat& r) {
    return ordered{{"exact", rat_string(r)}, {"decimal", rat_double(r)}};
}

Variety variety_from_flags(const std::vector<std::string>& curve, int fullspace,
                           const std::vector<std::string>& points) {
    int given = !curve.empty() + (fullspace > 0) + !points.empty();
    if (given != 1) throw CLI::ValidationError("exactly one of --curve, --fullspace, --points is required");
    if (!curve.empty()) {
        std::vector<BinForm<RatFunc>> forms;
        int common = 0;
        for (const auto& s : curve) {
            forms.push_back(parse_binform(s));
            if (!forms.back().is_zero()) common = std::max(common, forms.back().degree());
        }
        for (auto& f : forms)
            if (f.is_zero() && f.degree() != common) f = BinForm<RatFunc>(common, RatFunc());
        return ParamCurve{std::move(forms)};
    }
    if (fullspace > 0) return FullSpace{fullspace};
    std::vector<ProjPoint> pts;
    for (const auto& s : points) pts.push_back(parse_point(s));
    return PointSet{std::move(pts)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic over Q(t): heights, Chow forms, and inequality verification"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--decimal", opt.decimal, "print rationals as decimal approximations");
    app.add_flag("--error-json", opt.error_json, "report failures as JSON on stdout");

    // height
    auto* c_height = app.add_subcommand("height", "height of a point or of a polynomial family");
    std::string h_point;
    std::vector<std::string> h_forms;
    int h_ambient = -1;
    c_height->add_option("--point", h_point, "projective point, e.g. \"[1, t, t^2]\"");
    c_height->add_option("--form", h_forms, "homogeneous polynomial; repeat for a family")->take_all();
    c_height->add_option("--ambient", h_ambient, "ambient dimension for --form");
    c_height->callback([&]() {
        if (h_point.empty() == h_forms.empty())
            throw CLI::ValidationError("exactly one of --point and --form is required");
        if (!h_point.empty()) {
            std::cout << height(parse_point(h_point)) << "\n";
            return;
        }
        if (h_ambient < 0) throw CLI::ValidationError("--form needs --ambient");
        std::vector<HomPoly> family;
        for (const auto& s : h_forms) family.push_back(parse_hompoly(s, h_ambient));
        std::cout << (family.size() == 1 ? height(family[0]) : height_family(family)) << "\n";
    });

    // weil
    auto* c_weil = app.add_subcommand("weil", "local Weil value of a point against a divisor");
    std::string w_place, w_form, w_point;
    int w_ambient = -1;
    c_weil->add_option("--place", w_place, "place: a monic irreducible polynomial or \"inf\"")->required();
    c_weil->add_option("--form", w_form, "homogeneous polynomial cutting the divisor")->required();
    c_weil->add_option("--ambient", w_ambient, "ambient dimension")->required();
    c_weil->add_option("--point", w_point, "projective point")->required();
    c_weil->callback([&]() {
        std::cout << weil_value(parse_place(w_place), parse_hompoly(w_form, w_ambient), parse_point(w_point))
                  << "\n";
    });

    // divisor
    auto* c_div = app.add_subcommand("divisor", "divisor of a rational function");
    std::string d_value;
    c_div->add_option("--value", d_value, "rational function, e.g. \"(t^2+1)/(t)\"")->required();
    c_div->callback([&]() { std::cout << divisor_string(divisor(parse_ratfunc(d_value))) << "\n"; });

    // factor
    auto* c_factor = app.add_subcommand("factor", "factor a polynomial over Q");
    std::string f_poly;
    c_factor->add_option("--poly", f_poly, "polynomial in t")->required();
    c_factor->callback([&]() {
        PolyFactorization f = factor_poly(parse_poly(f_poly));
        if (f.unit != 1) std::cout << "unit " << rat_string(f.unit) << "\n";
        for (const auto& [p, e] : f.factors) {
            std::cout << p.str();
            if (e > 1) std::cout << " ^ " << e;
            std::cout << "\n";
        }
    });

    // chow-form
    auto* c_form = app.add_subcommand("chow-form", "Chow form of a curve, full space, or point set");
    std::vector<std::string> cf_curve, cf_points;
    int cf_fullspace = 0;
    c_form->add_option("--curve", cf_curve, "parametrizing binary form; repeat per coordinate")->take_all();
    c_form->add_option("--fullspace", cf_fullspace, "ambient dimension of the full space");
    c_form->add_option("--points", cf_points, "projective point; repeat per point")->allow_extra_args(false);
    c_form->callback([&]() {
        Variety v = variety_from_flags(cf_curve, cf_fullspace, cf_points);
        validate_variety(v);
        ChowForm f;
        if (const auto* c = std::get_if<ParamCurve>(&v))
            f = chow_form_curve(c->forms);
        else if (const auto* s = std::get_if<FullSpace>(&v))
            f = chow_form_fullspace(s->dim);
        else
            f = chow_form_points(std::get<PointSet>(v).points);
        emit(opt, chow_form_json(f));
    });

    // chow-weight
    auto* c_weight = app.add_subcommand("chow-weight", "maximum monomial weight of a stored Chow form");
    std::string cw_file, cw_weights;
    c_weight->add_option("--form", cw_file, "file with the serialized Chow form")->required();
    c_weight->add_option("--c", cw_weights, "comma-separated nonnegative weights, one per slot")->required();
    c_weight->callback([&]() {
        ChowForm f = chow_form_from_json(read_file(cw_file));
        std::cout << show(chow_weight(f, parse_weight_vector(cw_weights)), opt.decimal) << "\n";
    });

    // position
    auto* c_pos = app.add_subcommand("position", "subgeneral position test for a divisor family");
    std::vector<std::string> p_curve, p_points, p_divisors;
    int p_fullspace = 0, p_m = -1;
    c_pos->add_option("--curve", p_curve, "parametrizing binary form; repeat per coordinate")->take_all();
    c_pos->add_option("--fullspace", p_fullspace, "ambient dimension of the full space");
    c_pos->add_option("--points", p_points, "projective point; repeat per point")->allow_extra_args(false);
    c_pos->add_option("--q", p_divisors, "homogeneous polynomial; repeat per family member")
        ->required()
        ->take_all();
    c_pos->add_option("-m,--m", p_m, "position parameter")->required();
    c_pos->callback([&]() {
        Variety v = variety_from_flags(p_curve, p_fullspace, p_points);
        validate_variety(v);
        int ambient = variety_meta(v).ambient;
        std::vector<HomPoly> qs;
        for (const auto& s : p_divisors) qs.push_back(parse_hompoly(s, ambient));
        PositionResult r = in_subgeneral_position(qs, v, p_m);
        if (r.holds) {
            std::cout << "holds\n";
        } else {
            std::cout << "fails {";
            for (std::size_t i = 0; i < r.witness->size(); ++i)
                std::cout << (i ? ", " : "") << (*r.witness)[i];
            std::cout << "}\n";
        }
    });

    // constants
    auto* c_const = app.add_subcommand("constants", "derived constants and degree bounds");
    ScenarioParams cp;
    std::string cc_eps = "1", cc_a = "0", cc_a_prime = "0";
    long cc_degree = 1, cc_h_form = 0, cc_h_family = 0;
    c_const->add_option("--ambient", cp.ambient)->required();
    c_const->add_option("--dim", cp.dim)->required();
    c_const->add_option("-m,--m", cp.position)->required();
    c_const->add_option("--q", cp.family_size)->required();
    c_const->add_option("--d", cp.d)->required();
    c_const->add_option("--degree", cc_degree, "degree of the variety");
    c_const->add_option("--h-form", cc_h_form, "height of the variety's form");
    c_const->add_option("--h-family", cc_h_family, "height of the lifted divisor family");
    c_const->add_option("--eps", cc_eps);
    c_const->add_option("--places", cp.place_count, "number of places")->required();
    c_const->add_option("--a", cc_a, "external slope constant");
    c_const->add_option("--a-prime", cc_a_prime, "external intercept constant");
    int cc_image_degree = 0, cc_image_ambient = 0;
    c_const->add_option("--image-degree", cc_image_degree, "degree of the lifted variety");
    c_const->add_option("--image-ambient", cc_image_ambient, "ambient dimension of the lifted variety");
    c_const->callback([&]() {
        cp.variety_degree = Int(cc_degree);
        cp.h_form = Int(cc_h_form);
        cp.h_family = Int(cc_h_family);
        cp.eps = parse_rat(cc_eps);
        validate_params(cp);
        ExternalConstants a{parse_rat(cc_a), parse_rat(cc_a_prime)};
        DerivedConstants c = derive_constants(cp, a);
        ordered j;
        j["b"] = rat_entry(c.b);
        j["b_prime"] = rat_entry(c.b_prime);
        j["b_tilde"] = rat_entry(c.b_tilde);
        j["b_tilde_prime"] = rat_entry(c.b_tilde_prime);
        j["height_cutoff"] = rat_entry(c.height_cutoff);
        j["defect_bound"] = rat_entry(c.defect_bound);
        j["tail_constant"] = ordered{{"exact", c.tail.get_str()}, {"decimal", c.tail.get_d()}};
        DegreeBound ex = exception_degree_bound(cp);
        ordered bounds;
        bounds["exception"] = ordered{{"exact", rat_string(ex.exact)}, {"ceiled", ex.ceiled.get_str()}};
        if (cc_image_degree > 0 && cc_image_ambient > 0) {
            DegreeBound red = reduction_degree_bound(cp.dim, Int(cc_image_degree), cc_image_ambient, cp.eps);
            bounds["reduction"] = ordered{{"exact", rat_string(red.exact)}, {"ceiled", red.ceiled.get_str()}};
        }
        j["degree_bounds"] = bounds;
        emit(opt, j.dump(2) + "\n");
    });

    // verify
    auto* c_verify = app.add_subcommand("verify", "verify the inequality rows at explicit points");
    std::string v_scenario, v_format = "json";
    std::vector<std::string> v_points;
    c_verify->add_option("--scenario", v_scenario, "scenario JSON file")->required();
    c_verify->add_option("--point", v_points, "point to verify; repeat as needed")
        ->required()
        ->allow_extra_args(false);
    c_verify->add_option("--format", v_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    c_verify->callback([&]() {
        Scenario sc = scenario_from_file(v_scenario);
        sc.sample.count = 0;
        sc.sample.points.clear();
        for (const auto& s : v_points) sc.sample.points.push_back(parse_point(s));
        ScenarioContext ctx = prepare_scenario(sc);
        ExperimentResult r = run_experiment(ctx);
        emit(opt, v_format == "json" ? report_json(ctx, r) : report_csv(r));
    });

    // experiment
    auto* c_exp = app.add_subcommand("experiment", "sampled verification sweep over a scenario");
    std::string e_scenario, e_format = "json";
    unsigned long long e_seed = 0;
    bool e_serial = false;
    c_exp->add_option("--scenario", e_scenario, "scenario JSON file")->required();
    auto* seed_opt = c_exp->add_option("--seed", e_seed, "sampling seed (default 0)");
    c_exp->add_option("--format", e_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    c_exp->add_flag("--serial", e_serial, "single-threaded run");
    c_exp->callback([&]() {
        Scenario sc = scenario_from_file(e_scenario);
        if (seed_opt->count() > 0) sc.sample.seed = e_seed;
        ScenarioContext ctx = prepare_scenario(sc);
        ExperimentResult r = e_serial ? run_experiment_serial(ctx) : run_experiment(ctx);
        emit(opt, e_format == "json" ? report_json(ctx, r) : report_csv(r));
    });

    for (auto* sub : {c_form, c_verify, c_exp})
        sub->add_option("--out", opt.out, "write the result to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const DomainError& e) {
        if (opt.error_json) std::cout << ordered{{"error", e.what()}}.dump() << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
