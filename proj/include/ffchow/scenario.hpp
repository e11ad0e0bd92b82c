#pragma once

#include "ffchow/constants.hpp"
#include "ffchow/place.hpp"
#include "ffchow/projective.hpp"
#include "ffchow/varieties.hpp"

#include <string>
#include <vector>

namespace ffchow {

/// Sampling plan for an experiment run: any explicit points first, then
/// `count` points drawn from a seeded generator with integer coefficients
/// in [-coeff_bound, coeff_bound] and parameter degree at most
/// param_degree.
struct SampleSpec {
    long long count = 0;
    unsigned long long seed = 0;
    long long coeff_bound = 5;
    int param_degree = 2;
    std::vector<ProjPoint> points;
};

/// One verification scenario: a variety, a divisor family kept in checked
/// m-subgeneral position against it, a finite place set, the accuracy
/// eps, the two external constants, and a sampling plan.
struct Scenario {
    Variety variety;
    std::vector<HomPoly> divisors;
    int position = 1;
    std::vector<Place> places;
    Rat eps = Rat(1);
    ExternalConstants external;
    SampleSpec sample;
};

/// Structural checks shared by the loaders: variety invariants, family
/// size and degrees, the position test (the first failing subset is named
/// in the error), place-set shape, and positivity of eps.
void validate_scenario(const Scenario& sc);

/// Builds and validates a scenario from its JSON description.
Scenario scenario_from_json_text(const std::string& text);

Scenario scenario_from_file(const std::string& path);

}  // namespace ffchow
