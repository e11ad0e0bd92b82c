#pragma once

#include "ffchow/rational.hpp"

namespace ffchow {

/// Inputs from the ambient approximation statement the pipeline is
/// specialized against: slope a and intercept factor a_prime.
struct ExternalConstants {
    Rat a;
    Rat a_prime;
};

/// Numeric profile of one verification scenario. All entries are exact.
struct ScenarioParams {
    int ambient = 0;        // N
    int dim = 0;            // n
    int position = 0;       // m
    int family_size = 0;    // q
    int d = 0;              // common degree of the lifted divisor powers
    Int variety_degree;     // degree of the base variety
    Int h_form;             // height of the base variety's associated form
    Int h_family;           // height of the divisor family
    Rat eps;
    int place_count = 0;    // size of the chosen place set
};

void validate_params(const ScenarioParams& p);

/// Tail comparison constant: (6 max{m+1, variety degree, d})^((n+1)(N^2+N))
/// times (h_form + h_family).
Int tail_constant(const ScenarioParams& p);

/// The derived constants, in pipeline order.
struct DerivedConstants {
    Rat b;
    Rat b_prime;
    Rat b_tilde;
    Rat b_tilde_prime;
    Rat height_cutoff;   // C
    Rat defect_bound;    // C'
    Int tail;            // the tail comparison constant feeding C'
};

DerivedConstants derive_constants(const ScenarioParams& p, const ExternalConstants& a);

struct DegreeBound {
    Rat exact;
    Int ceiled;
};

/// Degree bound for the exceptional set of the main dichotomy:
/// 2(2n+1) d^(n+2) variety_degree (binom(d+N, N) + q + 1) / eps + d.
DegreeBound exception_degree_bound(const ScenarioParams& p);

/// Degree bound in the lower-dimensional reduction:
/// 1 + 2(2n+1) delta (M+1) / eps.
DegreeBound reduction_degree_bound(int dim, const Int& degree, int ambient, const Rat& eps);

}  // namespace ffchow
