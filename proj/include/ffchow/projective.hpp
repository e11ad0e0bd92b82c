#pragma once

#include "ffchow/ratfunc.hpp"

#include <map>
#include <string>
#include <vector>

namespace ffchow {

/// Point of projective M-space over Q(t), stored through one coordinate
/// representative. At least one coordinate is nonzero; nothing else is
/// normalized, so value-level functions must be scaling invariant.
class ProjPoint {
  public:
    explicit ProjPoint(std::vector<RatFunc> coords);

    int ambient_dim() const { return static_cast<int>(coords_.size()) - 1; }
    const std::vector<RatFunc>& coords() const { return coords_; }
    const RatFunc& coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }

    ProjPoint scaled(const RatFunc& a) const;

    /// Equality as projective points: all two-by-two minors vanish.
    bool same_point(const ProjPoint& o) const;

    std::string str() const;

  private:
    std::vector<RatFunc> coords_;
};

/// Homogeneous polynomial in X0..XM over Q(t): a sparse exponent map in
/// which every stored term is nonzero and has the common total degree.
class HomPoly {
  public:
    /// Zero polynomial of the given shape; degree >= 1, ambient >= 0.
    HomPoly(int ambient_dim, int degree);

    static HomPoly coordinate(int ambient_dim, int index);

    void add_term(const std::vector<int>& exps, const RatFunc& coeff);

    int ambient_dim() const { return ambient_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, RatFunc>& terms() const { return terms_; }

    HomPoly operator+(const HomPoly& o) const;
    HomPoly operator*(const HomPoly& o) const;
    HomPoly scaled(const RatFunc& a) const;
    HomPoly pow(int e) const;

    bool operator==(const HomPoly& o) const;

    RatFunc eval(const ProjPoint& x) const;
    RatFunc eval(const std::vector<RatFunc>& coords) const;

    /// Coefficients of all stored terms, in the term-map order.
    std::vector<RatFunc> coefficients() const;

    /// Terms with descending exponent vectors, e.g. "X0^2 + (t)*X1*X2".
    std::string str() const;

  private:
    int ambient_;
    int degree_;
    std::map<std::vector<int>, RatFunc> terms_;
};

}  // namespace ffchow
