#pragma once

#include "ffchow/place.hpp"
#include "ffchow/projective.hpp"

#include <optional>
#include <vector>

namespace ffchow {

/// Local exponent of a point at p: the minimum order among its nonzero
/// coordinates. Depends on the chosen coordinate representative.
long long local_exponent(const Place& p, const ProjPoint& x);

/// Local exponent of a homogeneous polynomial: minimum order among its
/// nonzero coefficients. The polynomial must be nonzero.
long long local_exponent(const Place& p, const HomPoly& q);

/// Minimum coefficient order across a nonempty family of polynomials.
long long local_exponent(const Place& p, const std::vector<HomPoly>& family);

/// Height of a point: minus the degree-weighted sum of local exponents
/// over the support. Scaling invariant and always >= 0.
long long height(const ProjPoint& x);

/// Height of a nonzero homogeneous polynomial up to scaling; >= 0.
long long height(const HomPoly& q);

/// Height of a polynomial family, from the joint coefficient list.
long long height_family(const std::vector<HomPoly>& family);

/// Height from a raw projective coordinate or coefficient list.
long long height_of_values(const std::vector<RatFunc>& values);

/// Local Weil value of x against the divisor of q at p:
/// (ord_p q(x) - deg(q) e_p(x) - e_p(q)) deg(p). Nonnegative; requires
/// q(x) != 0.
long long weil_value(const Place& p, const HomPoly& q, const ProjPoint& x);

/// Per-coordinate weights (ord_p(x_i) - e_p(x)) deg(p); empty optional
/// marks a zero coordinate (weight +infinity). Scaling invariant.
std::vector<std::optional<long long>> coordinate_weights(const Place& p, const ProjPoint& x);

}  // namespace ffchow
