#pragma once

#include "ffchow/binform.hpp"
#include "ffchow/place.hpp"
#include "ffchow/projective.hpp"

#include <string>
#include <vector>

namespace ffchow {

/// Syntax error with the byte offset at which it was detected.
class ParseError : public DomainError {
  public:
    ParseError(std::size_t position, const std::string& what)
        : DomainError("parse error at position " + std::to_string(position) + ": " + what),
          position(position) {}
    std::size_t position;
};

/// Expression grammar shared by all entry points: integer literals, t,
/// + - * ^ with natural exponents, parentheses, and a single division
/// which must sit at the top level of its (sub)expression.

RatFunc parse_ratfunc(const std::string& text);

/// As parse_ratfunc but rejects values with a nontrivial denominator.
Poly parse_poly(const std::string& text);

/// "inf" or a monic irreducible polynomial in t.
Place parse_place(const std::string& text);

/// Homogeneous polynomial in X0..X<ambient_dim> with coefficients in Q(t);
/// inhomogeneous input is rejected with the offending term named.
HomPoly parse_hompoly(const std::string& text, int ambient_dim);

/// Homogeneous form in the parameters s0, s1; "0" parses to the zero form
/// of degree 0.
BinForm<RatFunc> parse_binform(const std::string& text);

/// "[c0, c1, ..., cM]" with rational function coordinates.
ProjPoint parse_point(const std::string& text);

/// Comma-separated nonnegative rationals, e.g. "1,0,2/3".
std::vector<Rat> parse_weight_vector(const std::string& text);

}  // namespace ffchow
