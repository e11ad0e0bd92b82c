#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffchow/heights.hpp"
#include "ffchow/parse.hpp"

#include <random>

using namespace ffchow;

namespace {

ProjPoint pt(const std::string& text) { return parse_point(text); }
HomPoly hp(const std::string& text, int ambient) { return parse_hompoly(text, ambient); }

RatFunc random_ratfunc(std::mt19937& g, int maxdeg, long bound, bool allow_zero) {
    auto poly = [&](bool nonzero) {
        for (;;) {
            std::vector<Rat> c;
            int deg = static_cast<int>(g() % static_cast<unsigned>(maxdeg + 1));
            for (int i = 0; i <= deg; ++i)
                c.push_back(Rat(static_cast<long>(g() % static_cast<unsigned>(2 * bound + 1)) - bound));
            Poly p(std::move(c));
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    if (allow_zero && g() % 4 == 0) return RatFunc();
    return RatFunc::normalized(poly(true), poly(true));
}

ProjPoint random_point(std::mt19937& g, int ambient) {
    for (;;) {
        std::vector<RatFunc> c;
        for (int i = 0; i <= ambient; ++i) c.push_back(random_ratfunc(g, 3, 6, true));
        bool any = false;
        for (const auto& v : c) any = any || !v.is_zero();
        if (any) return ProjPoint(std::move(c));
    }
}

RatFunc random_scalar(std::mt19937& g) {
    return random_ratfunc(g, 3, 6, false);
}

}  // namespace

TEST_CASE("local exponents of points and polynomials") {
    ProjPoint x = pt("[1, t, t^2]");
    CHECK(local_exponent(Place::infinity(), x) == -2);
    CHECK(local_exponent(Place::at(Poly::t()), x) == 0);

    ProjPoint y = pt("[t - 1, (t - 1)^2]");
    CHECK(local_exponent(Place::at(parse_poly("t - 1")), y) == 1);
    CHECK(local_exponent(Place::infinity(), y) == -2);

    HomPoly q = hp("(t)*X0 + X1", 1);
    CHECK(local_exponent(Place::at(Poly::t()), q) == 0);
    CHECK(local_exponent(Place::infinity(), q) == -1);
    CHECK(local_exponent(Place::infinity(), std::vector<HomPoly>{q, hp("X0", 1)}) == -1);
    CHECK(local_exponent(Place::at(Poly::t()), std::vector<HomPoly>{hp("(t)*X0", 1), hp("(t^2)*X1", 1)}) == 1);
}

TEST_CASE("height oracle values") {
    CHECK(height(pt("[1, t, t^2]")) == 2);
    CHECK(height(pt("[1, 1]")) == 0);
    CHECK(height(pt("[1, (1)/(t)]")) == 1);
    CHECK(height(pt("[t, t]")) == 0);
    CHECK(height(pt("[0, t^5]")) == 0);

    CHECK(height(hp("X0*X2 - X1^2", 2)) == 0);
    CHECK(height(hp("(t)*X0 + X1", 1)) == 1);
    CHECK(height(hp("(2)*X0 + (3)*X1", 1)) == 0);

    CHECK(height_family({hp("X0", 2), hp("X1", 2), hp("X2", 2)}) == 0);
    CHECK(height_family({hp("(t)*X0", 1), hp("X1", 1)}) == 1);
    CHECK(height_family({hp("(t)*X0", 1), hp("(t)*X1", 1)}) == 0);

    CHECK(height_of_values({RatFunc(Rat(1)), RatFunc::t(), RatFunc::t() * RatFunc::t()}) == 2);
}

TEST_CASE("height is scaling invariant and nonnegative") {
    std::mt19937 g(777u);
    for (int i = 0; i < 80; ++i) {
        ProjPoint x = random_point(g, 2);
        CHECK(height(x) >= 0);
        CHECK(height(x.scaled(random_scalar(g))) == height(x));

        HomPoly q = hp("X0 + X1 + X2", 2).scaled(random_scalar(g));
        CHECK(height(q) >= 0);
        CHECK(height(q.scaled(random_scalar(g))) == height(q));
    }
    // A family height never exceeds the sum of member heights, and matches
    // on singletons.
    HomPoly a = hp("(t)*X0 + X1", 1);
    HomPoly b = hp("X0 + (t^2)*X1", 1);
    CHECK(height_family({a, b}) <= height(a) + height(b));
    CHECK(height_family({a}) == height(a));
}

TEST_CASE("weil value oracle cases") {
    HomPoly q0 = hp("X0", 2);
    HomPoly conic = hp("X0*X2 - X1^2", 2);
    ProjPoint x = pt("[1, t, t^2 + 1]");

    CHECK(weil_value(Place::at(Poly::t()), hp("X1", 2), x) == 1);
    CHECK(weil_value(Place::at(parse_poly("t^2 + 1")), hp("X2", 2), x) == 2);
    CHECK(weil_value(Place::infinity(), q0, x) == 2);
    CHECK(weil_value(Place::at(Poly::t()), conic, x) == 0);
    CHECK(weil_value(Place::infinity(), conic, x) == 4);  // (0 - 2*(-2) - 0)*1

    CHECK_THROWS_AS(weil_value(Place::at(Poly::t()), conic, pt("[1, 1, 1]")),
                    DomainError);  // the point lies on the divisor
}

TEST_CASE("weil value is scaling invariant and nonnegative") {
    std::mt19937 g(31337u);
    std::vector<Place> pool = {Place::at(Poly::t()), Place::at(parse_poly("t - 1")),
                               Place::at(parse_poly("t^2 + 1")), Place::infinity()};
    std::vector<HomPoly> forms = {hp("X0", 2), hp("X1", 2), hp("X2", 2),
                                  hp("X0*X2 - X1^2", 2), hp("X0 + (t)*X1 + X2", 2),
                                  hp("X0^2 + X1*X2", 2)};
    int checked = 0;
    for (int i = 0; i < 200 && checked < 120; ++i) {
        ProjPoint x = random_point(g, 2);
        const HomPoly& q = forms[g() % forms.size()];
        if (q.eval(x).is_zero()) continue;
        const Place& p = pool[g() % pool.size()];
        long long w = weil_value(p, q, x);
        CHECK(w >= 0);
        CHECK(weil_value(p, q, x.scaled(random_scalar(g))) == w);
        CHECK(weil_value(p, q.scaled(random_scalar(g)), x) == w);
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("coordinate weights") {
    ProjPoint x = pt("[1, t, t^2]");
    auto wt = coordinate_weights(Place::at(Poly::t()), x);
    REQUIRE(wt.size() == 3);
    CHECK(*wt[0] == 0);
    CHECK(*wt[1] == 1);
    CHECK(*wt[2] == 2);

    auto winf = coordinate_weights(Place::infinity(), x);
    CHECK(*winf[0] == 2);
    CHECK(*winf[1] == 1);
    CHECK(*winf[2] == 0);

    auto wq = coordinate_weights(Place::at(parse_poly("t^2 + 1")), x);
    CHECK(*wq[0] == 0);
    CHECK(*wq[1] == 0);
    CHECK(*wq[2] == 0);  // no coordinate vanishes at t^2 + 1

    auto wd = coordinate_weights(Place::at(parse_poly("t^2 + 1")), pt("[1, t^2 + 1]"));
    CHECK(*wd[0] == 0);
    CHECK(*wd[1] == 2);  // order 1 at a degree-2 place

    auto wz = coordinate_weights(Place::at(Poly::t()), pt("[0, t^3]"));
    CHECK(!wz[0].has_value());
    CHECK(*wz[1] == 0);
}

TEST_CASE("coordinate weights agree with coordinate hyperplane weil values") {
    std::mt19937 g(90210u);
    std::vector<Place> pool = {Place::at(Poly::t()), Place::at(parse_poly("t + 2")), Place::infinity()};
    for (int i = 0; i < 60; ++i) {
        ProjPoint x = random_point(g, 3);
        const Place& p = pool[g() % pool.size()];
        auto wt = coordinate_weights(p, x);
        bool some_zero_weight = false;
        for (int j = 0; j <= 3; ++j) {
            if (!wt[j].has_value()) {
                CHECK(x.coord(j).is_zero());
                continue;
            }
            CHECK(*wt[j] >= 0);
            some_zero_weight = some_zero_weight || *wt[j] == 0;
            CHECK(*wt[j] == weil_value(p, HomPoly::coordinate(3, j), x));
        }
        // The minimum over nonzero coordinates is the local exponent, so
        // some weight is always exactly zero.
        CHECK(some_zero_weight);
    }
}
