#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffchow/heights.hpp"
#include "ffchow/parse.hpp"
#include "ffchow/varieties.hpp"

#include <random>

using namespace ffchow;

namespace {

ParamCurve conic() {
    return ParamCurve{{parse_binform("s0^2"), parse_binform("s0*s1"), parse_binform("s1^2")}};
}

ParamCurve projective_line() { return ParamCurve{{parse_binform("s0"), parse_binform("s1")}}; }

std::vector<HomPoly> coords(int ambient) {
    std::vector<HomPoly> out;
    for (int i = 0; i <= ambient; ++i) out.push_back(HomPoly::coordinate(ambient, i));
    return out;
}

}  // namespace

TEST_CASE("dimension and degree metadata") {
    VarietyMeta m = variety_meta(Variety(FullSpace{2}));
    CHECK(m.dim == 2);
    CHECK(m.degree == 1);
    CHECK(m.ambient == 2);

    m = variety_meta(Variety(conic()));
    CHECK(m.dim == 1);
    CHECK(m.degree == 2);
    CHECK(m.ambient == 2);

    m = variety_meta(Variety(PointSet{{parse_point("[1, t]"), parse_point("[t, 1]"), parse_point("[1, 1]")}}));
    CHECK(m.dim == 0);
    CHECK(m.degree == 3);
    CHECK(m.ambient == 1);
}

TEST_CASE("variety validation rejects malformed input") {
    CHECK_THROWS_WITH_AS(validate_variety(Variety(ParamCurve{{parse_binform("s0")}})),
                         "parametrized curve needs at least two forms", DomainError);
    CHECK_THROWS_WITH_AS(validate_variety(Variety(ParamCurve{{parse_binform("s0"), parse_binform("s0*s1")}})),
                         "parametrization forms have mixed degrees", DomainError);
    CHECK_THROWS_WITH_AS(validate_variety(Variety(ParamCurve{{parse_binform("0"), parse_binform("0")}})),
                         "parametrization with all forms zero", DomainError);
    CHECK_THROWS_WITH_AS(validate_variety(Variety(ParamCurve{{parse_binform("s0"), parse_binform("0")}})),
                         "zero form carries the wrong formal degree", DomainError);
    CHECK_THROWS_WITH_AS(validate_variety(Variety(ParamCurve{{parse_binform("s0^2"), parse_binform("s0*s1")}})),
                         "parametrization forms share a common factor", DomainError);
    CHECK_THROWS_WITH_AS(validate_variety(Variety(FullSpace{0})),
                         "full space needs positive dimension", DomainError);
    CHECK_THROWS_WITH_AS(validate_variety(Variety(PointSet{{}})),
                         "point set must be nonempty", DomainError);
    CHECK_THROWS_AS(validate_variety(Variety(PointSet{{parse_point("[1, t]"), parse_point("[t, t^2]")}})),
                    DomainError);

    // A zero form with the right formal degree is allowed.
    BinForm<RatFunc> zero2(2, RatFunc());
    validate_variety(Variety(ParamCurve{{parse_binform("s0^2"), zero2, parse_binform("s1^2")}}));
}

TEST_CASE("pullback substitutes the parametrization") {
    CHECK(pullback(parse_hompoly("X0", 2), conic()) == parse_binform("s0^2"));
    CHECK(pullback(parse_hompoly("X0*X2 - X1^2", 2), conic()).is_zero());
    CHECK(pullback(parse_hompoly("X0 + (t)*X2", 2), conic()) == parse_binform("s0^2 + (t)*s1^2"));
    CHECK(pullback(parse_hompoly("X0*X2 - X1^2", 2), conic()).degree() == 4);
    CHECK_THROWS_AS(pullback(parse_hompoly("X0 + X1", 1), conic()), DomainError);
}

TEST_CASE("points on a parametrized curve") {
    ProjPoint x = curve_point(conic(), RatFunc(Rat(1)), RatFunc::t());
    CHECK(x.same_point(parse_point("[1, t, t^2]")));
    CHECK(curve_point(projective_line(), RatFunc::t(), RatFunc(Rat(1))).same_point(parse_point("[t, 1]")));
    CHECK_THROWS_AS(curve_point(conic(), RatFunc(), RatFunc()), DomainError);
}

TEST_CASE("subgeneral position on the conic") {
    std::vector<HomPoly> qs = coords(2);
    Variety v(conic());

    PositionResult r = in_subgeneral_position(qs, v, 2);
    CHECK(r.holds);
    CHECK(!r.witness.has_value());

    r = in_subgeneral_position(qs, v, 1);
    CHECK(!r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == std::vector<int>{0, 1});
}

TEST_CASE("subgeneral position on the full space needs linear divisors") {
    Variety line(FullSpace{1});
    PositionResult r = in_subgeneral_position(coords(1), line, 1);
    CHECK(r.holds);

    Variety plane(FullSpace{2});
    r = in_subgeneral_position({parse_hompoly("X0", 2), parse_hompoly("X1", 2),
                                parse_hompoly("X2", 2), parse_hompoly("X0 + X1 + X2", 2)},
                               plane, 2);
    CHECK(r.holds);
    r = in_subgeneral_position({parse_hompoly("X0", 2), parse_hompoly("X1", 2),
                                parse_hompoly("X0 + X1", 2)},
                               plane, 2);
    CHECK(!r.holds);  // rank 2: the three lines meet at [0 : 0 : 1]
    CHECK(*r.witness == std::vector<int>{0, 1, 2});

    CHECK_THROWS_AS(in_subgeneral_position({parse_hompoly("X0^2", 2), parse_hompoly("X1^2", 2),
                                            parse_hompoly("X2^2", 2)},
                                           plane, 2),
                    DomainError);
}

TEST_CASE("subgeneral position is monotone in m") {
    std::vector<HomPoly> qs = {parse_hompoly("X0", 2), parse_hompoly("X1", 2), parse_hompoly("X2", 2),
                               parse_hompoly("X0 + (t)*X2", 2)};
    Variety v(conic());
    CHECK(!in_subgeneral_position(qs, v, 1).holds);
    CHECK(in_subgeneral_position(qs, v, 2).holds);
    CHECK(in_subgeneral_position(qs, v, 3).holds);
}

TEST_CASE("subgeneral position on point sets") {
    Variety pts(PointSet{{parse_point("[1, t]"), parse_point("[t, 1]"), parse_point("[1, 1]")}});
    CHECK(in_subgeneral_position(coords(1), pts, 1).holds);

    std::vector<HomPoly> qs = coords(1);
    qs.push_back(parse_hompoly("X0 - X1", 1));
    PositionResult r = in_subgeneral_position(qs, pts, 0);
    CHECK(!r.holds);
    CHECK(*r.witness == std::vector<int>{2});  // X0 - X1 vanishes at [1, 1]
    CHECK(in_subgeneral_position(qs, pts, 1).holds);
}

TEST_CASE("position check input validation") {
    Variety v(conic());
    CHECK_THROWS_WITH_AS(in_subgeneral_position(coords(2), v, 0),
                         "position parameter below the variety dimension", DomainError);
    CHECK_THROWS_WITH_AS(in_subgeneral_position({parse_hompoly("X0", 2)}, v, 1),
                         "need at least m+1 divisors for a position check", DomainError);
}

TEST_CASE("embedding data for the three reference families") {
    // One quadratic divisor on the line: the degree-2 monomial map plus one
    // power slot.
    EmbeddingData e = build_embedding(1, {parse_hompoly("X0*X1", 1)});
    CHECK(e.d == 2);
    CHECK(e.monomial_top == 2);
    CHECK(e.target_ambient() == 3);
    REQUIRE(e.monomials.size() == 3);
    CHECK(e.monomials[0] == std::vector<int>{2, 0});
    CHECK(e.monomials[1] == std::vector<int>{1, 1});
    CHECK(e.monomials[2] == std::vector<int>{0, 2});
    CHECK(e.divisor_slots() == std::vector<int>{3});

    // Mixed degrees (1, 2) on the line: d = lcm = 2, target dimension 4.
    e = build_embedding(1, {parse_hompoly("X0", 1), parse_hompoly("X0*X1", 1)});
    CHECK(e.d == 2);
    CHECK(e.monomial_top == 2);
    CHECK(e.target_ambient() == 4);
    CHECK(e.powered[0] == parse_hompoly("X0^2", 1));
    CHECK(e.powered[1] == parse_hompoly("X0*X1", 1));
    CHECK(e.divisor_slots() == std::vector<int>{3, 4});

    // Three linear divisors in the plane: the identity monomial block.
    e = build_embedding(2, coords(2));
    CHECK(e.d == 1);
    CHECK(e.monomial_top == 2);
    CHECK(e.target_ambient() == 5);
    CHECK(e.divisor_slots() == std::vector<int>{3, 4, 5});
}

TEST_CASE("monomial lists are complete and strictly descending") {
    for (auto [ambient, d, expected] : {std::tuple<int, int, std::size_t>{2, 2, 6},
                                        std::tuple<int, int, std::size_t>{2, 3, 10},
                                        std::tuple<int, int, std::size_t>{3, 2, 10}}) {
        std::vector<HomPoly> qs;
        for (int i = 0; i <= ambient; ++i)
            qs.push_back(HomPoly::coordinate(ambient, i).pow(d));
        EmbeddingData e = build_embedding(ambient, qs);
        CHECK(e.monomials.size() == expected);
        for (std::size_t i = 0; i + 1 < e.monomials.size(); ++i)
            CHECK(e.monomials[i] > e.monomials[i + 1]);
    }
}

TEST_CASE("embedding evaluation") {
    EmbeddingData e = build_embedding(1, {parse_hompoly("X0*X1", 1)});
    CHECK(eval_embedding(e, parse_point("[1, t]")).same_point(parse_point("[1, t, t^2, t]")));
    CHECK(eval_embedding(e, parse_point("[1, 0]")).same_point(parse_point("[1, 0, 0, 0]")));
    CHECK(eval_embedding(e, parse_point("[t, t]")).same_point(parse_point("[1, 1, 1, 1]")));
}

TEST_CASE("image of a parametrized curve under an embedding") {
    EmbeddingData e = build_embedding(1, {parse_hompoly("X0*X1", 1)});
    ParamCurve image = image_curve(e, projective_line());
    REQUIRE(image.forms.size() == 4);
    CHECK(image.forms[0] == parse_binform("s0^2"));
    CHECK(image.forms[1] == parse_binform("s0*s1"));
    CHECK(image.forms[2] == parse_binform("s1^2"));
    CHECK(image.forms[3] == parse_binform("s0*s1"));
    VarietyMeta m = variety_meta(Variety(image));
    CHECK(m.dim == 1);
    CHECK(m.degree == 2);

    EmbeddingData lin = build_embedding(2, coords(2));
    ParamCurve conic_image = image_curve(lin, conic());
    CHECK(variety_meta(Variety(conic_image)).degree == 2);
    REQUIRE(conic_image.forms.size() == 6);
    CHECK(conic_image.forms[3] == parse_binform("s0^2"));
    CHECK(conic_image.forms[5] == parse_binform("s1^2"));
}

TEST_CASE("image exponents never exceed the scaled source exponents") {
    std::mt19937 g(2468u);
    EmbeddingData e = build_embedding(1, {parse_hompoly("X0*X1", 1)});
    std::vector<Place> pool = {Place::at(Poly::t()), Place::at(parse_poly("t - 1")), Place::infinity()};
    for (int i = 0; i < 40; ++i) {
        std::vector<Rat> cs;
        Poly a = Poly::from_ints({static_cast<long>(g() % 9u) - 4, static_cast<long>(g() % 9u) - 4});
        Poly b = Poly::from_ints({static_cast<long>(g() % 9u) - 4, static_cast<long>(g() % 9u) - 4});
        if (a.is_zero() && b.is_zero()) continue;
        ProjPoint x({RatFunc(a), RatFunc(b)});
        ProjPoint y = eval_embedding(e, x);
        for (const Place& p : pool)
            CHECK(local_exponent(p, y) <= static_cast<long long>(e.d) * local_exponent(p, x));
    }
}
