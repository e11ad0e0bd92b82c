#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffchow/constants.hpp"
#include "ffchow/parse.hpp"
#include "ffchow/varieties.hpp"

using namespace ffchow;

namespace {

ScenarioParams params(int ambient, int dim, int position, int family_size, int d, long variety_degree,
                      long h_form, long h_family, const Rat& eps, int place_count) {
    ScenarioParams p;
    p.ambient = ambient;
    p.dim = dim;
    p.position = position;
    p.family_size = family_size;
    p.d = d;
    p.variety_degree = int_of(variety_degree);
    p.h_form = int_of(h_form);
    p.h_family = int_of(h_family);
    p.eps = eps;
    p.place_count = place_count;
    return p;
}

}  // namespace

TEST_CASE("parameter validation covers every field") {
    ScenarioParams good = params(2, 1, 2, 3, 1, 2, 0, 0, Rat(1), 3);
    validate_params(good);

    auto expect = [&](ScenarioParams p, const char* msg) {
        CHECK_THROWS_WITH_AS(validate_params(p), msg, DomainError);
    };
    ScenarioParams p = good;
    p.ambient = 0;
    expect(p, "ambient dimension must be at least 1");
    p = good;
    p.dim = 3;
    expect(p, "variety dimension out of range");
    p = good;
    p.position = 0;
    expect(p, "position parameter below the variety dimension");
    p = good;
    p.family_size = 2;
    expect(p, "family smaller than the position parameter allows");
    p = good;
    p.d = 0;
    expect(p, "common degree must be positive");
    p = good;
    p.variety_degree = Int(0);
    expect(p, "variety degree must be positive");
    p = good;
    p.h_form = Int(-1);
    expect(p, "heights cannot be negative");
    p = good;
    p.eps = Rat(0);
    expect(p, "eps must be positive");
    p = good;
    p.place_count = 0;
    expect(p, "place set must be nonempty");
}

TEST_CASE("tail comparison constant frozen values") {
    // Dominant branch m+1: (6*3)^(2*(4+2)) * 1.
    CHECK(tail_constant(params(2, 1, 2, 3, 1, 1, 1, 0, Rat(1), 1)) == Int("1156831381426176"));
    CHECK(tail_constant(params(2, 1, 2, 3, 1, 1, 1, 0, Rat(1), 1)) == pow_int(Int(18), 12));

    // Dominant branch d: (6*2)^(2*2) * 1.
    CHECK(tail_constant(params(1, 1, 1, 3, 2, 1, 0, 1, Rat(1), 2)) == Int(20736));

    // Dominant branch variety degree: (6*5)^4.
    CHECK(tail_constant(params(1, 1, 1, 2, 1, 5, 1, 0, Rat(1), 1)) == Int(810000));

    // Dominant branch d again, larger: (6*7)^4.
    CHECK(tail_constant(params(1, 1, 1, 2, 7, 1, 1, 0, Rat(1), 1)) == Int(3111696));

    // Zero heights zero out the tail entirely.
    CHECK(tail_constant(params(2, 1, 2, 3, 1, 2, 0, 0, Rat(1), 3)) == 0);
}

TEST_CASE("tail constant is monotone in each parameter") {
    ScenarioParams base = params(2, 1, 2, 3, 1, 1, 1, 0, Rat(1), 1);
    Int t0 = tail_constant(base);

    ScenarioParams p = base;
    p.position = 3;
    p.family_size = 4;
    CHECK(tail_constant(p) >= t0);
    p = base;
    p.variety_degree = Int(4);
    CHECK(tail_constant(p) > t0);
    p = base;
    p.d = 9;
    CHECK(tail_constant(p) > t0);
    p = base;
    p.h_family = Int(2);
    CHECK(tail_constant(p) == t0 * 3);
    p = base;
    p.ambient = 3;
    CHECK(tail_constant(p) > t0);
}

TEST_CASE("derived constants on the reference profile") {
    ScenarioParams p = params(1, 1, 1, 3, 2, 2, 0, 1, Rat(1), 2);
    DerivedConstants c = derive_constants(p, ExternalConstants{Rat(1), Rat(1)});
    CHECK(c.b == Rat(1));
    CHECK(c.b_prime == Rat(1));
    CHECK(c.b_tilde == Rat(12));
    CHECK(c.b_tilde_prime == Rat(12));
    CHECK(c.height_cutoff == Rat(6));
    CHECK(c.tail == Int(20736));
    CHECK(c.defect_bound == Rat(41481));

    CHECK_THROWS_WITH_AS(derive_constants(p, ExternalConstants{Rat(-1), Rat(1)}),
                         "external constants cannot be negative", DomainError);
}

TEST_CASE("derived constants scale with the external slope") {
    ScenarioParams p = params(1, 1, 1, 3, 2, 2, 0, 1, Rat(1), 2);
    DerivedConstants c1 = derive_constants(p, ExternalConstants{Rat(1), Rat(1)});
    DerivedConstants c3 = derive_constants(p, ExternalConstants{Rat(3), Rat(1)});
    CHECK(c3.b_tilde == Rat(3) * c1.b_tilde);
    CHECK(c3.height_cutoff == Rat(3) * c1.height_cutoff);
    CHECK(c3.defect_bound == c1.defect_bound);  // the defect ignores the slope
    DerivedConstants cp = derive_constants(p, ExternalConstants{Rat(1), Rat(5)});
    CHECK(cp.b_tilde_prime == Rat(5) * c1.b_tilde_prime);
}

TEST_CASE("position at the dimension collapses the defect factors") {
    // position == dim makes every (position - dim + 1) factor equal 1.
    ScenarioParams p = params(2, 1, 1, 3, 1, 2, 1, 1, Rat(2), 2);
    ExternalConstants ext{Rat(2), Rat(3)};
    DerivedConstants c = derive_constants(p, ext);
    CHECK(c.b_prime == ext.a_prime);

    Rat lift = Rat(1) + Rat(2) * Rat(2) * Rat(1);  // d + (n+1) degree d^n h_family
    CHECK(c.b_tilde == ext.a * lift);
    CHECK(c.b_tilde_prime == ext.a_prime * lift);
    Rat slope_q = Rat(3) + Rat(2) + Rat(2);  // q + (n+1) + eps
    Rat expected_defect = c.b_tilde_prime * Rat(2) + slope_q * Rat(1) + Rat(3 - 1) * Rat(2) * Rat(c.tail);
    CHECK(c.defect_bound == expected_defect);
}

TEST_CASE("exception degree bound frozen values") {
    DegreeBound b = exception_degree_bound(params(1, 1, 1, 2, 1, 1, 0, 0, Rat(1), 1));
    CHECK(b.exact == Rat(31));
    CHECK(b.ceiled == Int(31));

    b = exception_degree_bound(params(2, 1, 1, 3, 2, 2, 0, 0, Rat(1), 1));
    CHECK(b.exact == Rat(962));
    CHECK(b.ceiled == Int(962));

    b = exception_degree_bound(params(1, 1, 1, 2, 1, 1, 0, 0, make_rat(Int(2), Int(3)), 1));
    CHECK(b.exact == Rat(46));
    CHECK(b.ceiled == Int(46));
}

TEST_CASE("reduction degree bound frozen values") {
    DegreeBound b = reduction_degree_bound(1, Int(1), 1, Rat(1));
    CHECK(b.exact == Rat(13));
    CHECK(b.ceiled == Int(13));

    b = reduction_degree_bound(1, Int(2), 4, Rat(1));
    CHECK(b.exact == Rat(61));
    CHECK(b.ceiled == Int(61));

    b = reduction_degree_bound(1, Int(1), 1, Rat(6));
    CHECK(b.exact == Rat(3));
    CHECK(b.ceiled == Int(3));

    b = reduction_degree_bound(1, Int(1), 1, Rat(5));
    CHECK(b.exact == Rat(1) + make_rat(Int(12), Int(5)));
    CHECK(b.ceiled == Int(4));  // ceil(17/5)

    CHECK_THROWS_WITH_AS(reduction_degree_bound(-1, Int(1), 1, Rat(1)), "bad reduction profile",
                         DomainError);
    CHECK_THROWS_AS(reduction_degree_bound(1, Int(1), 1, Rat(0)), DomainError);
}

TEST_CASE("halving eps doubles the eps dependent part of the degree bound") {
    ScenarioParams p = params(2, 1, 2, 4, 2, 3, 1, 2, Rat(1), 2);
    Rat full = exception_degree_bound(p).exact - Rat(p.d);
    p.eps = Rat(2);
    Rat half = exception_degree_bound(p).exact - Rat(p.d);
    CHECK(full == Rat(2) * half);
    p.eps = make_rat(Int(1), Int(2));
    CHECK(exception_degree_bound(p).exact - Rat(p.d) == Rat(4) * half);
}

TEST_CASE("reduction bound stays below the exception bound on built embeddings") {
    struct Case {
        int ambient;
        std::vector<HomPoly> divisors;
        long variety_degree;
        int position;
        Rat eps;
    };
    std::vector<Case> cases;
    cases.push_back({1, {parse_hompoly("X0", 1), parse_hompoly("X1", 1)}, 1, 1, Rat(1)});
    cases.push_back({2,
                     {parse_hompoly("X0", 2), parse_hompoly("X1", 2), parse_hompoly("X2", 2)},
                     2, 2, Rat(1)});
    cases.push_back({1,
                     {parse_hompoly("X0", 1), parse_hompoly("X1", 1), parse_hompoly("X0^2 + (t)*X1^2", 1)},
                     1, 1, make_rat(Int(1), Int(2))});

    for (const Case& c : cases) {
        EmbeddingData e = build_embedding(c.ambient, c.divisors);
        ScenarioParams p = params(c.ambient, 1, c.position, static_cast<int>(c.divisors.size()), e.d,
                                  c.variety_degree, 0, 0, c.eps, 2);
        Int image_degree = Int(e.d) * Int(c.variety_degree);
        DegreeBound red = reduction_degree_bound(1, image_degree, e.target_ambient(), c.eps);
        DegreeBound exc = exception_degree_bound(p);
        CHECK(red.exact <= exc.exact);
    }
}

TEST_CASE("ceiled values round up the exact ones") {
    for (const DegreeBound& b :
         {exception_degree_bound(params(2, 1, 2, 4, 2, 3, 1, 2, make_rat(Int(3), Int(7)), 2)),
          reduction_degree_bound(2, Int(5), 3, make_rat(Int(2), Int(9)))}) {
        CHECK(b.ceiled == ceil_rat(b.exact));
        CHECK(Rat(b.ceiled) >= b.exact);
        CHECK(Rat(b.ceiled) - b.exact < 1);
    }
}
