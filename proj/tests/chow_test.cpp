#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffchow/chow.hpp"
#include "ffchow/heights.hpp"
#include "ffchow/parse.hpp"
#include "ffchow/varieties.hpp"

#include <random>

using namespace ffchow;

namespace {

BlockPoly uvar(int block, int slot) { return BlockPoly::variable(2, 3, block, slot); }

// Bracket [i j] = u_0_i u_1_j - u_0_j u_1_i for width-3 dual pairs.
BlockPoly bracket(int i, int j) { return uvar(0, i) * uvar(1, j) - uvar(0, j) * uvar(1, i); }

// Classical three-term resultant of two contracted conic parametrizations.
BlockPoly conic_expected() { return bracket(0, 2) * bracket(0, 2) - bracket(0, 1) * bracket(1, 2); }

std::vector<BinForm<RatFunc>> conic_forms() {
    return {parse_binform("s0^2"), parse_binform("s0*s1"), parse_binform("s1^2")};
}

BinForm<RatFunc> random_binform(std::mt19937& g, int degree, long bound) {
    BinForm<RatFunc> f(degree, RatFunc());
    for (int a = 0; a <= degree; ++a) {
        long c = static_cast<long>(g() % static_cast<unsigned>(2 * bound + 1)) - bound;
        long d = static_cast<long>(g() % 2);
        Poly coeff = Poly::from_ints(d == 0 ? std::vector<long>{c} : std::vector<long>{0, c});
        f.set_coeff(a, RatFunc(coeff));
    }
    return f;
}

ChowForm conic_chow() { return chow_form_curve(conic_forms()); }

}  // namespace

TEST_CASE("fraction free determinants") {
    auto r = [](long v) { return RatFunc(Rat(v)); };
    RatFunc one = r(1);
    CHECK(bareiss_determinant<RatFunc>({{r(1), r(-1)}, {r(1), r(-2)}}, one) == r(-1));
    CHECK(bareiss_determinant<RatFunc>({{r(1), r(-1)}, {r(1), r(-1)}}, one).is_zero());
    CHECK(bareiss_determinant<RatFunc>({{r(0), r(1)}, {r(1), r(0)}}, one) == r(-1));
    CHECK(bareiss_determinant<RatFunc>(
              {{r(2), r(1), r(3)}, {r(0), r(1), r(1)}, {r(1), r(1), r(4)}}, one) == r(4));
    CHECK_THROWS_AS(bareiss_determinant<RatFunc>({}, one), DomainError);
    CHECK_THROWS_AS(bareiss_determinant<RatFunc>({{r(1), r(2)}}, one), DomainError);
}

TEST_CASE("full space forms are coefficient determinants") {
    ChowForm f0 = chow_form_fullspace(0);
    CHECK(f0.dim == 0);
    CHECK(f0.degree == 1);
    CHECK(f0.form == BlockPoly::variable(1, 1, 0, 0));

    ChowForm f1 = chow_form_fullspace(1);
    CHECK(f1.dim == 1);
    CHECK(f1.ambient == 1);
    CHECK(f1.degree == 1);
    CHECK(f1.form == BlockPoly::variable(2, 2, 0, 0) * BlockPoly::variable(2, 2, 1, 1) -
                         BlockPoly::variable(2, 2, 0, 1) * BlockPoly::variable(2, 2, 1, 0));

    ChowForm f2 = chow_form_fullspace(2);
    CHECK(f2.form.term_count() == 6);
    for (int b = 0; b < 3; ++b) CHECK(f2.form.degree_in_block(b) == 1);
    CHECK(chow_height(f0) == 0);
    CHECK(chow_height(f1) == 0);
    CHECK(chow_height(f2) == 0);
    validate_chow_form(f2);
}

TEST_CASE("point set forms multiply dual hyperplanes") {
    ChowForm one = chow_form_points({parse_point("[1, 2]")});
    BlockPoly u0 = BlockPoly::variable(1, 2, 0, 0);
    BlockPoly u1 = BlockPoly::variable(1, 2, 0, 1);
    CHECK(one.form == u0 + u1.scaled(RatFunc(Rat(2))));
    CHECK(one.degree == 1);
    CHECK(one.dim == 0);

    ChowForm two = chow_form_points({parse_point("[1, 0]"), parse_point("[0, 1]")});
    CHECK(two.form == u0 * u1);
    CHECK(two.degree == 2);

    ChowForm twisted = chow_form_points({parse_point("[1, t]")});
    CHECK(twisted.form == u0 + u1.scaled(RatFunc::t()));
    CHECK(chow_height(twisted) == 1);

    CHECK_THROWS_AS(chow_form_points({parse_point("[1, t]"), parse_point("[t, t^2]")}), DomainError);
}

TEST_CASE("line through the standard parametrization matches the full space form") {
    ChowForm line = chow_form_curve({parse_binform("s0"), parse_binform("s1")});
    ChowForm full = chow_form_fullspace(1);
    CHECK(line.form == full.form);
    CHECK(line.dim == 1);
    CHECK(line.degree == 1);
    validate_chow_form(line);
}

TEST_CASE("conic form equals the classical resultant") {
    ChowForm f = conic_chow();
    CHECK(f.dim == 1);
    CHECK(f.ambient == 2);
    CHECK(f.degree == 2);
    CHECK(f.form == conic_expected());
    CHECK(chow_height(f) == 0);
    validate_chow_form(f);
}

TEST_CASE("coefficient twist acts on the dual slots") {
    ChowForm f = chow_form_curve({parse_binform("s0^2"), parse_binform("s0*s1"), parse_binform("(t)*s1^2")});
    BlockPoly expected(2, 3);
    const BlockPoly classical = conic_expected();
    for (const auto& [exps, coeff] : classical.terms()) {
        RatFunc tw = RatFunc::t().pow(exps[2] + exps[5]);
        expected.add_term(exps, coeff * tw);
    }
    CHECK(f.form == expected.normalized());
    CHECK(chow_height(f) == 1);
    validate_chow_form(f);
}

TEST_CASE("per block degrees equal the curve degree on randomized parametrizations") {
    std::mt19937 g(5150u);
    int built = 0;
    for (int attempt = 0; attempt < 400 && built < 50; ++attempt) {
        int ambient = 2 + static_cast<int>(g() % 2u);
        // In P^3 the entries carry eight dual variables, so keep those draws to
        // low curve degree; P^2 draws exercise degree up to three.
        int delta = 1 + static_cast<int>(g() % (ambient == 3 ? 2u : 3u));
        std::vector<BinForm<RatFunc>> forms;
        for (int i = 0; i <= ambient; ++i) forms.push_back(random_binform(g, delta, 4));
        if (binform_gcd(forms).degree() != 0) continue;
        ChowForm f;
        try {
            f = chow_form_curve(forms);
        } catch (const DomainError&) {
            continue;  // degenerate draw (non-birational or vanishing resultant)
        }
        CHECK(f.degree == delta);
        CHECK(f.form.degree_in_block(0) == delta);
        CHECK(f.form.degree_in_block(1) == delta);
        CHECK(f.form.is_multihomogeneous());
        ++built;
    }
    CHECK(built == 50);
}

TEST_CASE("weight of the full space line form") {
    CHECK(chow_weight(chow_form_fullspace(1), {Rat(3), Rat(5)}) == Rat(8));
}

TEST_CASE("conic weights and isobarity") {
    ChowForm f = conic_chow();
    CHECK(chow_weight(f, {Rat(1), Rat(0), Rat(0)}) == Rat(2));
    CHECK(chow_weight(f, {Rat(0), Rat(0), Rat(0)}) == Rat(0));
    CHECK(chow_weight(f, {Rat(0), Rat(1), Rat(2)}) == Rat(4));

    // Every monomial has weight exactly 4 under c = (0, 1, 2): the form is
    // isobaric for this grading.
    for (const auto& [exps, coeff] : f.form.terms()) {
        long w = 0;
        for (int b = 0; b < 2; ++b)
            for (int s = 0; s < 3; ++s) w += static_cast<long>(exps[3 * b + s]) * s;
        CHECK(w == 4);
    }

    CHECK_THROWS_AS(chow_weight(f, {Rat(1), Rat(1)}), DomainError);
    CHECK_THROWS_AS(chow_weight(f, {Rat(1), Rat(-1), Rat(0)}), DomainError);
}

TEST_CASE("weight is homogeneous and subadditive in the weight vector") {
    std::mt19937 g(60606u);
    std::vector<ChowForm> pool = {chow_form_fullspace(2), conic_chow(),
                                  chow_form_points({parse_point("[1, t]"), parse_point("[t, 1]")})};
    for (int i = 0; i < 200; ++i) {
        const ChowForm& f = pool[g() % pool.size()];
        std::vector<Rat> c, cp;
        for (int s = 0; s <= f.ambient; ++s) {
            c.push_back(make_rat(Int(static_cast<long>(g() % 7u)), Int(1 + static_cast<long>(g() % 3u))));
            cp.push_back(make_rat(Int(static_cast<long>(g() % 7u)), Int(1 + static_cast<long>(g() % 3u))));
        }
        long k = static_cast<long>(g() % 5u);
        std::vector<Rat> kc, sum;
        for (int s = 0; s <= f.ambient; ++s) {
            kc.push_back(c[s] * Rat(k));
            sum.push_back(c[s] + cp[s]);
        }
        CHECK(chow_weight(f, kc) == Rat(k) * chow_weight(f, c));
        CHECK(chow_weight(f, sum) <= chow_weight(f, c) + chow_weight(f, cp));
    }
}

TEST_CASE("weight lower bound equality cases") {
    ChowForm line = chow_form_fullspace(1);
    LowerBoundCheck lb = chow_weight_lower_bound(line, {Rat(1), Rat(1)}, {0, 1}, 1, true);
    CHECK(lb.holds);
    CHECK(lb.weight == Rat(2));
    CHECK(lb.bound == Rat(2));

    ChowForm conic = conic_chow();
    lb = chow_weight_lower_bound(conic, {Rat(0), Rat(1), Rat(2)}, {0, 2}, 1, true);
    CHECK(lb.holds);
    CHECK(lb.weight == Rat(4));
    CHECK(lb.bound == Rat(4));

    lb = chow_weight_lower_bound(conic, {Rat(1), Rat(0), Rat(0)}, {0, 2}, 1, true);
    CHECK(lb.holds);
    CHECK(lb.weight == Rat(2));
    CHECK(lb.bound == Rat(2));

    // Larger position parameter: the bound shrinks, the weight stays.
    lb = chow_weight_lower_bound(conic, {Rat(0), Rat(1), Rat(2)}, {0, 2}, 2, true);
    CHECK(lb.holds);
    CHECK(lb.bound == Rat(2));
}

TEST_CASE("weight lower bound rejects bad inputs") {
    ChowForm conic = conic_chow();
    CHECK_THROWS_AS(chow_weight_lower_bound(conic, {Rat(0), Rat(1), Rat(2)}, {0, 2}, 1, false),
                    DomainError);
    CHECK_THROWS_AS(chow_weight_lower_bound(conic, {Rat(0), Rat(1), Rat(2)}, {0, 2}, 0, true),
                    DomainError);
    CHECK_THROWS_AS(chow_weight_lower_bound(conic, {Rat(0), Rat(1), Rat(2)}, {0, 5}, 1, true),
                    DomainError);
}

TEST_CASE("position witness gates the lower bound") {
    // X0 and X1 meet the conic at [0 : 0 : 1], so the emptiness witness is
    // refused and the bound cannot be invoked for those slots.
    Variety conic = ParamCurve{conic_forms()};
    PositionResult pos = in_subgeneral_position({parse_hompoly("X0", 2), parse_hompoly("X1", 2)}, conic, 1);
    CHECK(!pos.holds);
    REQUIRE(pos.witness.has_value());
    CHECK(*pos.witness == std::vector<int>{0, 1});
    CHECK_THROWS_AS(
        chow_weight_lower_bound(conic_chow(), {Rat(1), Rat(1), Rat(0)}, {0, 1}, 1, pos.holds),
        DomainError);

    // X0 and X2 miss the conic, so the same call goes through.
    pos = in_subgeneral_position({parse_hompoly("X0", 2), parse_hompoly("X2", 2)}, conic, 1);
    CHECK(pos.holds);
    CHECK(chow_weight_lower_bound(conic_chow(), {Rat(1), Rat(1), Rat(0)}, {0, 2}, 1, pos.holds).holds);
}

TEST_CASE("height bound for images under coordinate maps") {
    HeightBoundCheck identity = chow_height_bound(3, 1, 1, 1, 0, 3);
    CHECK(identity.holds);
    CHECK(identity.bound == 3);

    HeightBoundCheck veronese = chow_height_bound(0, 1, 2, 1, 0, 0);
    CHECK(veronese.holds);
    CHECK(veronese.bound == 0);

    HeightBoundCheck twisted = chow_height_bound(0, 1, 2, 1, 1, 1);
    CHECK(twisted.holds);
    CHECK(twisted.bound == 4);

    CHECK(!chow_height_bound(0, 1, 2, 1, 1, 5).holds);
    CHECK_THROWS_AS(chow_height_bound(0, 1, 0, 1, 0, 0), DomainError);
}

TEST_CASE("json round trip") {
    for (const ChowForm& f : {conic_chow(), chow_form_fullspace(2),
                              chow_form_points({parse_point("[1, t]"), parse_point("[2, 1]")})}) {
        ChowForm back = chow_form_from_json(chow_form_json(f));
        CHECK(back.dim == f.dim);
        CHECK(back.ambient == f.ambient);
        CHECK(back.degree == f.degree);
        CHECK(back.form == f.form);
    }
    CHECK_THROWS_AS(chow_form_from_json("{}"), DomainError);
    CHECK_THROWS_AS(chow_form_from_json("not json"), DomainError);
    CHECK_THROWS_AS(chow_form_from_json("{\"dim\": 1, \"ambient\": 0, \"degree\": 1, \"terms\": []}"),
                    DomainError);
}

TEST_CASE("curve form constructor rejects degenerate parametrizations") {
    CHECK_THROWS_AS(chow_form_curve({parse_binform("s0^2")}), DomainError);
    CHECK_THROWS_AS(chow_form_curve({parse_binform("s0"), parse_binform("s0*s1")}), DomainError);
    CHECK_THROWS_AS(chow_form_curve({parse_binform("s0^2"), parse_binform("s0*s1")}), DomainError);

    // A two-to-one cover of the line is accepted with cycle semantics: the
    // resultant is the square of the line form, with doubled degree.
    ChowForm cover = chow_form_curve({parse_binform("s0^2"), parse_binform("s1^2")});
    ChowForm line = chow_form_fullspace(1);
    CHECK(cover.degree == 2);
    CHECK(cover.form == line.form * line.form);
}

TEST_CASE("form vanishes exactly on incident hyperplane pairs") {
    ChowForm f = conic_chow();
    ParamCurve curve{conic_forms()};
    auto r = [](long v) { return RatFunc(Rat(v)); };

    // X0 = X1 = 0 meets the conic at [0 : 0 : 1].
    CHECK(f.form.eval({{r(1), r(0), r(0)}, {r(0), r(1), r(0)}}).is_zero());
    // X2 = 0 and X0 = 0 have no common point on the conic.
    CHECK(!f.form.eval({{r(0), r(0), r(1)}, {r(1), r(0), r(0)}}).is_zero());

    std::mt19937 g(424242u);
    int agreements = 0;
    for (int i = 0; i < 40; ++i) {
        std::vector<std::vector<RatFunc>> u(2);
        std::vector<BinForm<RatFunc>> pulled;
        for (int b = 0; b < 2; ++b) {
            HomPoly h(2, 1);
            bool nonzero = false;
            for (int s = 0; s < 3; ++s) {
                long c = static_cast<long>(g() % 7u) - 3;
                u[b].push_back(r(c));
                if (c != 0) {
                    std::vector<int> e(3, 0);
                    e[s] = 1;
                    h.add_term(e, r(c));
                    nonzero = true;
                }
            }
            if (nonzero) pulled.push_back(pullback(h, curve));
        }
        if (pulled.size() < 2) continue;
        bool incident = binform_gcd(pulled).degree() > 0;
        CHECK(f.form.eval(u).is_zero() == incident);
        ++agreements;
    }
    CHECK(agreements >= 30);
}
