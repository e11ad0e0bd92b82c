#pragma once

#include "ffchow/binform.hpp"
#include "ffchow/blockpoly.hpp"
#include "ffchow/projective.hpp"

#include <set>
#include <string>
#include <vector>

namespace ffchow {

/// Multihomogeneous form attached to an irreducible variety of dimension
/// n in projective M-space: n+1 blocks of M+1 dual variables, degree
/// `degree` in each block, normalized so the leading coefficient is 1.
struct ChowForm {
    BlockPoly form = BlockPoly(1, 1);
    int dim = 0;
    int ambient = 0;
    int degree = 0;
};

/// Zero-dimensional case: the product of the linear forms dual to the
/// given pairwise distinct points.
ChowForm chow_form_points(const std::vector<ProjPoint>& points);

/// The full projective M-space: the (M+1) x (M+1) coefficient determinant.
ChowForm chow_form_fullspace(int ambient);

/// Parametrized curve case: the resultant in the parameters of the two
/// contracted forms sum_j u_0_j g_j and sum_j u_1_j g_j. Requires at
/// least two forms of a common degree with trivial gcd; rejects input
/// whose resultant degree drops (a non-birational parametrization).
ChowForm chow_form_curve(const std::vector<BinForm<RatFunc>>& forms);

/// Maximum weight of a monomial of F: exponents of slot j count with
/// weight c[j], across all blocks. c has one nonnegative entry per slot.
Rat chow_weight(const ChowForm& f, const std::vector<Rat>& c);

struct LowerBoundCheck {
    Rat weight;
    Rat bound;
    bool holds = false;
};

/// Verifies weight(F, c) >= degree/(m - dim + 1) * sum of c over `slots`.
/// The caller asserts that the slots' coordinate hyperplanes meet the
/// variety in the empty set; `witnessed` passes that assertion along and
/// is required to be true.
LowerBoundCheck chow_weight_lower_bound(const ChowForm& f, const std::vector<Rat>& c,
                                        const std::set<int>& slots, int m, bool witnessed);

struct HeightBoundCheck {
    long long bound = 0;
    bool holds = false;
};

/// Verifies h(F_image) <= d^(n+1) h(F) + (n+1) d^n * degree * h(maps) for
/// the image of an n-dimensional variety under degree-d maps.
HeightBoundCheck chow_height_bound(long long h_form, int dim, int map_degree, long long variety_degree,
                                   long long h_maps, long long h_image_form);

/// Height of the form through its coefficient list.
long long chow_height(const ChowForm& f);

/// Shape check plus multihomogeneity and per-block degrees.
void validate_chow_form(const ChowForm& f);

std::string chow_form_json(const ChowForm& f);
ChowForm chow_form_from_json(const std::string& text);

}  // namespace ffchow
