#pragma once

#include "ffchow/poly.hpp"

#include <utility>
#include <vector>

namespace ffchow {

/// f = unit * prod factors[i].first ^ factors[i].second, with each factor
/// monic and irreducible over Q. Since the factors are monic, the unit is
/// the leading coefficient of f.
struct PolyFactorization {
    Rat unit;
    std::vector<std::pair<Poly, int>> factors;
};

/// Complete factorization over Q of a nonzero polynomial. Squarefree parts
/// are split off first; each part is factored modulo a suitable odd prime,
/// lifted, and recombined. Factors are reported in a deterministic order.
PolyFactorization factor_poly(const Poly& f);

bool is_irreducible(const Poly& f);

}  // namespace ffchow
