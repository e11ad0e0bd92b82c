#include "ffchow/chow.hpp"

#include "ffchow/heights.hpp"
#include "ffchow/parse.hpp"

#include <json.hpp>

#include <sstream>

namespace ffchow {

namespace {

// Parity of a permutation given as an image vector.
bool permutation_odd(std::vector<int> perm) {
    bool odd = false;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        while (perm[i] != static_cast<int>(i)) {
            std::swap(perm[i], perm[static_cast<std::size_t>(perm[i])]);
            odd = !odd;
        }
    }
    return odd;
}

}  // namespace

ChowForm chow_form_points(const std::vector<ProjPoint>& points) {
    if (points.empty()) throw DomainError("point set form needs at least one point");
    int ambient = points[0].ambient_dim();
    for (const ProjPoint& p : points)
        if (p.ambient_dim() != ambient) throw DomainError("points live in different spaces");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].same_point(points[j]))
                throw DomainError("point set has a repeated point: " + points[i].str());

    int width = ambient + 1;
    BlockPoly prod = BlockPoly::constant(1, width, RatFunc(Rat(1)));
    for (const ProjPoint& p : points) {
        BlockPoly lin(1, width);
        for (int j = 0; j < width; ++j) {
            if (p.coord(j).is_zero()) continue;
            std::vector<int> e(static_cast<std::size_t>(width), 0);
            e[static_cast<std::size_t>(j)] = 1;
            lin.add_term(e, p.coord(j));
        }
        prod = prod * lin;
    }
    ChowForm out{prod.normalized(), 0, ambient, static_cast<int>(points.size())};
    validate_chow_form(out);
    return out;
}

ChowForm chow_form_fullspace(int ambient) {
    if (ambient < 0) throw DomainError("negative ambient dimension");
    int width = ambient + 1;
    BlockPoly det(width, width);
    std::vector<int> perm(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        std::vector<int> e(static_cast<std::size_t>(width * width), 0);
        for (int i = 0; i < width; ++i)
            e[static_cast<std::size_t>(i * width + perm[static_cast<std::size_t>(i)])] = 1;
        Rat sign = permutation_odd(perm) ? Rat(-1) : Rat(1);
        det.add_term(e, RatFunc(sign));
    } while (std::next_permutation(perm.begin(), perm.end()));
    ChowForm out{det.normalized(), ambient, ambient, 1};
    validate_chow_form(out);
    return out;
}

ChowForm chow_form_curve(const std::vector<BinForm<RatFunc>>& forms) {
    if (forms.size() < 2) throw DomainError("curve form needs an ambient dimension of at least 1");
    int delta = forms[0].degree();
    for (const BinForm<RatFunc>& f : forms)
        if (f.degree() != delta) throw DomainError("parametrization forms have mixed degrees");
    if (delta < 1) throw DomainError("parametrization forms must have positive degree");
    BinForm<RatFunc> g = binform_gcd(forms);
    if (g.degree() != 0) throw DomainError("parametrization forms share the factor " + g.str());

    int width = static_cast<int>(forms.size());
    int ambient = width - 1;
    const BlockPoly bzero(2, width);

    // Contract each block of dual variables against the parametrization.
    std::vector<BinForm<BlockPoly>> rows;
    for (int block = 0; block < 2; ++block) {
        BinForm<BlockPoly> contracted(delta, bzero);
        for (int a = 0; a <= delta; ++a) {
            BlockPoly c(2, width);
            for (int j = 0; j < width; ++j) {
                if (forms[static_cast<std::size_t>(j)].coeff(a).is_zero()) continue;
                std::vector<int> e(static_cast<std::size_t>(2 * width), 0);
                e[static_cast<std::size_t>(block * width + j)] = 1;
                c.add_term(e, forms[static_cast<std::size_t>(j)].coeff(a));
            }
            contracted.set_coeff(a, c);
        }
        rows.push_back(contracted);
    }

    // Sylvester matrix of the two contracted forms, both of formal degree
    // delta: a 2*delta square matrix over the block polynomial ring.
    int n = 2 * delta;
    std::vector<std::vector<BlockPoly>> syl(static_cast<std::size_t>(n),
                                            std::vector<BlockPoly>(static_cast<std::size_t>(n), bzero));
    for (int r = 0; r < delta; ++r)
        for (int a = 0; a <= delta; ++a) {
            syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + delta - a)] =
                rows[0].coeff(a);
            syl[static_cast<std::size_t>(delta + r)][static_cast<std::size_t>(r + delta - a)] =
                rows[1].coeff(a);
        }

    BlockPoly det = bareiss_determinant(syl, ring_one(bzero));
    if (det.is_zero()) throw DomainError("parametrization has identically vanishing resultant");
    for (int b = 0; b < 2; ++b)
        if (det.degree_in_block(b) != delta)
            throw DomainError("parametrization is not birational onto its image");

    ChowForm out{det.normalized(), 1, ambient, delta};
    validate_chow_form(out);
    return out;
}

void validate_chow_form(const ChowForm& f) {
    if (f.form.is_zero()) throw DomainError("zero form");
    if (f.form.blocks() != f.dim + 1) throw DomainError("form has the wrong number of blocks");
    if (f.form.width() != f.ambient + 1) throw DomainError("form has the wrong block width");
    if (!f.form.is_multihomogeneous()) throw DomainError("form is not multihomogeneous");
    for (int b = 0; b <= f.dim; ++b)
        if (f.form.degree_in_block(b) != f.degree)
            throw DomainError("form has uneven block degrees");
    if (f.form.leading_term().second != RatFunc(Rat(1)))
        throw DomainError("form is not normalized");
}

Rat chow_weight(const ChowForm& f, const std::vector<Rat>& c) {
    if (static_cast<int>(c.size()) != f.ambient + 1)
        throw DomainError("weight vector has the wrong length");
    for (const Rat& v : c)
        if (v < 0) throw DomainError("weight vector entries must be nonnegative");
    bool first = true;
    Rat best(0);
    for (const auto& [e, coeff] : f.form.terms()) {
        Rat w(0);
        for (int b = 0; b <= f.dim; ++b)
            for (int j = 0; j <= f.ambient; ++j) {
                int k = e[static_cast<std::size_t>(b * (f.ambient + 1) + j)];
                if (k) w += Rat(k) * c[static_cast<std::size_t>(j)];
            }
        if (first || w > best) best = w;
        first = false;
    }
    return best;
}

LowerBoundCheck chow_weight_lower_bound(const ChowForm& f, const std::vector<Rat>& c,
                                        const std::set<int>& slots, int m, bool witnessed) {
    if (!witnessed)
        throw DomainError("lower bound check needs a verified empty intersection");
    if (m < f.dim) throw DomainError("the position parameter cannot be below the dimension");
    for (int s : slots)
        if (s < 0 || s > f.ambient) throw DomainError("slot index out of range");
    LowerBoundCheck out;
    out.weight = chow_weight(f, c);
    Rat sum(0);
    for (int s : slots) sum += c[static_cast<std::size_t>(s)];
    out.bound = Rat(f.degree) * sum / Rat(m - f.dim + 1);
    out.holds = out.weight >= out.bound;
    return out;
}

HeightBoundCheck chow_height_bound(long long h_form, int dim, int map_degree, long long variety_degree,
                                   long long h_maps, long long h_image_form) {
    if (map_degree < 1) throw DomainError("map degree must be positive");
    long long dpow = 1;
    for (int i = 0; i < dim; ++i) dpow *= map_degree;
    long long bound = dpow * map_degree * h_form + static_cast<long long>(dim + 1) * dpow * variety_degree * h_maps;
    return HeightBoundCheck{bound, h_image_form <= bound};
}

long long chow_height(const ChowForm& f) {
    std::vector<RatFunc> coeffs;
    coeffs.reserve(f.form.term_count());
    for (const auto& [e, c] : f.form.terms()) coeffs.push_back(c);
    return height_of_values(coeffs);
}

std::string chow_form_json(const ChowForm& f) {
    nlohmann::ordered_json j;
    j["dim"] = f.dim;
    j["ambient"] = f.ambient;
    j["degree"] = f.degree;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : f.form.terms()) {
        nlohmann::ordered_json term;
        nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
        for (int b = 0; b <= f.dim; ++b) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int k = 0; k <= f.ambient; ++k)
                row.push_back(e[static_cast<std::size_t>(b * (f.ambient + 1) + k)]);
            blocks.push_back(row);
        }
        term["exps"] = blocks;
        term["coeff"] = c.str();
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j.dump(2);
}

ChowForm chow_form_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("malformed form file: ") + e.what());
    }
    ChowForm f;
    try {
        f.dim = j.at("dim").get<int>();
        f.ambient = j.at("ambient").get<int>();
        f.degree = j.at("degree").get<int>();
        if (f.dim < 0 || f.ambient < 0 || f.degree < 1)
            throw DomainError("malformed form file: bad shape numbers");
        f.form = BlockPoly(f.dim + 1, f.ambient + 1);
        for (const auto& term : j.at("terms")) {
            std::vector<int> e;
            for (const auto& row : term.at("exps"))
                for (const auto& v : row) e.push_back(v.get<int>());
            f.form.add_term(e, parse_ratfunc(term.at("coeff").get<std::string>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed form file: ") + e.what());
    }
    validate_chow_form(f);
    return f;
}

}  // namespace ffchow
