#include "ffchow/scenario.hpp"

#include "ffchow/parse.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace ffchow {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw DomainError("scenario: " + where + ": " + what);
}

Rat json_rat(const json& j, const std::string& where) {
    if (j.is_number_integer()) return rat_of(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    fail(where, "expected an integer or a rational string");
}

long long json_count(const json& j, const std::string& where, long long lo) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    long long v = j.get<long long>();
    if (v < lo) fail(where, "value below " + std::to_string(lo));
    return v;
}

ProjPoint json_point(const json& j, const std::string& where) {
    if (j.is_string()) return parse_point(j.get<std::string>());
    if (j.is_array()) {
        std::vector<RatFunc> coords;
        for (const auto& c : j) {
            if (!c.is_string() && !c.is_number_integer()) fail(where, "coordinates must be strings or integers");
            coords.push_back(c.is_string() ? parse_ratfunc(c.get<std::string>())
                                           : RatFunc(rat_of(c.get<long long>())));
        }
        return ProjPoint(std::move(coords));
    }
    fail(where, "expected a point string or coordinate array");
}

Variety json_variety(const json& j) {
    if (!j.is_object() || !j.contains("type")) fail("variety", "expected an object with a type field");
    std::string type = j.at("type").get<std::string>();
    if (type == "param_curve") {
        if (!j.contains("forms") || !j.at("forms").is_array()) fail("variety", "param_curve needs a forms array");
        std::vector<BinForm<RatFunc>> forms;
        int common = -1;
        for (const auto& f : j.at("forms")) {
            forms.push_back(parse_binform(f.get<std::string>()));
            if (!forms.back().is_zero()) common = std::max(common, forms.back().degree());
        }
        if (common < 1) fail("variety", "param_curve needs a nonzero form of positive degree");
        // Zero entries parse with degree 0; give them the family degree.
        for (auto& f : forms)
            if (f.is_zero() && f.degree() != common) f = BinForm<RatFunc>(common, RatFunc());
        return ParamCurve{std::move(forms)};
    }
    if (type == "full_space") {
        if (!j.contains("dim")) fail("variety", "full_space needs a dim field");
        return FullSpace{static_cast<int>(json_count(j.at("dim"), "variety.dim", 1))};
    }
    if (type == "point_set") {
        if (!j.contains("points") || !j.at("points").is_array()) fail("variety", "point_set needs a points array");
        std::vector<ProjPoint> pts;
        for (const auto& p : j.at("points")) pts.push_back(json_point(p, "variety.points"));
        return PointSet{std::move(pts)};
    }
    fail("variety", "unknown type " + type);
}

}  // namespace

void validate_scenario(const Scenario& sc) {
    validate_variety(sc.variety);
    VarietyMeta meta = variety_meta(sc.variety);
    if (sc.divisors.empty()) fail("polynomials", "empty family");
    for (std::size_t i = 0; i < sc.divisors.size(); ++i) {
        if (sc.divisors[i].is_zero()) fail("polynomials", "entry " + std::to_string(i) + " is zero");
        if (sc.divisors[i].ambient_dim() != meta.ambient)
            fail("polynomials", "entry " + std::to_string(i) + " lives in the wrong ambient space");
    }
    if (sc.position < meta.dim) fail("m", "below the variety dimension");
    if (static_cast<int>(sc.divisors.size()) < sc.position + 1) fail("m", "family smaller than m+1");
    PositionResult pos = in_subgeneral_position(sc.divisors, sc.variety, sc.position);
    if (!pos.holds) {
        std::ostringstream os;
        os << "family is not in " << sc.position << "-subgeneral position; first failing subset {";
        const auto& w = *pos.witness;
        for (std::size_t i = 0; i < w.size(); ++i) os << (i ? ", " : "") << w[i];
        os << "}";
        fail("polynomials", os.str());
    }
    if (sc.places.empty()) fail("places", "empty place set");
    std::set<std::string> seen;
    for (const Place& p : sc.places)
        if (!seen.insert(p.str()).second) fail("places", "duplicate place " + p.str());
    if (sc.eps <= 0) fail("epsilon", "must be positive");
    if (sc.external.a < 0 || sc.external.a_prime < 0) fail("external_constants", "must be nonnegative");
    if (sc.sample.count < 0) fail("sample.count", "negative");
    if (sc.sample.coeff_bound < 1) fail("sample.coeff_bound", "below 1");
    if (sc.sample.param_degree < 0) fail("sample.param_degree", "negative");
    for (const ProjPoint& p : sc.sample.points)
        if (p.ambient_dim() != meta.ambient) fail("sample.points", "point in the wrong ambient space");
}

Scenario scenario_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("scenario: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("root", "expected an object");
    for (const char* key : {"variety", "polynomials", "m", "places"})
        if (!j.contains(key)) fail("root", std::string("missing field ") + key);

    Scenario sc;
    sc.variety = json_variety(j.at("variety"));
    int ambient = variety_meta(sc.variety).ambient;
    if (!j.at("polynomials").is_array()) fail("polynomials", "expected an array");
    for (const auto& q : j.at("polynomials")) sc.divisors.push_back(parse_hompoly(q.get<std::string>(), ambient));
    sc.position = static_cast<int>(json_count(j.at("m"), "m", 0));
    if (!j.at("places").is_array()) fail("places", "expected an array");
    for (const auto& p : j.at("places")) sc.places.push_back(parse_place(p.get<std::string>()));
    if (j.contains("epsilon")) sc.eps = json_rat(j.at("epsilon"), "epsilon");
    if (j.contains("external_constants")) {
        const auto& a = j.at("external_constants");
        if (a.contains("a")) sc.external.a = json_rat(a.at("a"), "external_constants.a");
        if (a.contains("a_prime")) sc.external.a_prime = json_rat(a.at("a_prime"), "external_constants.a_prime");
    }
    if (j.contains("sample")) {
        const auto& s = j.at("sample");
        if (s.contains("count")) sc.sample.count = json_count(s.at("count"), "sample.count", 0);
        if (s.contains("seed")) sc.sample.seed = s.at("seed").get<unsigned long long>();
        if (s.contains("coeff_bound")) sc.sample.coeff_bound = json_count(s.at("coeff_bound"), "sample.coeff_bound", 1);
        if (s.contains("param_degree"))
            sc.sample.param_degree = static_cast<int>(json_count(s.at("param_degree"), "sample.param_degree", 0));
        if (s.contains("points"))
            for (const auto& p : s.at("points")) sc.sample.points.push_back(json_point(p, "sample.points"));
    }
    validate_scenario(sc);
    return sc;
}

Scenario scenario_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("scenario: cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return scenario_from_json_text(os.str());
}

}  // namespace ffchow
