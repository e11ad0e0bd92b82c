#pragma once

#include "ffchow/binform.hpp"
#include "ffchow/projective.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace ffchow {

/// Curve given by a parametrization [g_0 : ... : g_M] with binary forms of
/// one common degree and trivial common factor.
struct ParamCurve {
    std::vector<BinForm<RatFunc>> forms;
};

/// All of projective N-space.
struct FullSpace {
    int dim = 0;
};

/// Finite set of pairwise distinct points.
struct PointSet {
    std::vector<ProjPoint> points;
};

using Variety = std::variant<ParamCurve, FullSpace, PointSet>;

/// Validates the structural invariants of each variant.
void validate_variety(const Variety& v);

struct VarietyMeta {
    int dim = 0;
    long long degree = 0;
    int ambient = 0;
};

VarietyMeta variety_meta(const Variety& v);

/// Restriction of a homogeneous polynomial along the parametrization:
/// substitutes the forms for the coordinates. Degree deg(q) * delta.
BinForm<RatFunc> pullback(const HomPoly& q, const ParamCurve& curve);

/// Point on the curve at parameter value [s0 : s1].
ProjPoint curve_point(const ParamCurve& curve, const RatFunc& s0, const RatFunc& s1);

struct PositionResult {
    bool holds = false;
    /// Indices of the first failing subset when the test fails.
    std::optional<std::vector<int>> witness;
};

/// Checks that every choice of m+1 of the divisors meets the variety in
/// the empty set, over the algebraic closure. Curves use gcds of
/// pullbacks, point sets use evaluation, and the full space requires
/// linear divisors (rank test); other full-space inputs are rejected.
PositionResult in_subgeneral_position(const std::vector<HomPoly>& divisors, const Variety& v, int m);

/// Data of the common-degree embedding attached to a divisor family: the
/// degree-d monomial map followed by the lifted powers of the divisors.
/// Monomials are ordered lexicographically by exponent vector, largest
/// first.
struct EmbeddingData {
    int source_ambient = 0;
    int d = 0;
    /// Count of monomial coordinates minus one.
    int monomial_top = 0;
    std::vector<std::vector<int>> monomials;
    /// Q_i^(d / deg Q_i), one per divisor.
    std::vector<HomPoly> powered;
    int target_ambient() const { return monomial_top + static_cast<int>(powered.size()); }
    /// Indices of the divisor coordinates in the target space.
    std::vector<int> divisor_slots() const;
};

EmbeddingData build_embedding(int ambient, const std::vector<HomPoly>& divisors);

/// Image of a point, as [monomials of degree d : powered divisor values].
ProjPoint eval_embedding(const EmbeddingData& e, const ProjPoint& x);

/// Image of a parametrized curve: composes every coordinate of the
/// embedding with the parametrization.
ParamCurve image_curve(const EmbeddingData& e, const ParamCurve& curve);

}  // namespace ffchow
