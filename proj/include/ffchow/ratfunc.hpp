#pragma once

#include "ffchow/poly.hpp"

#include <string>

namespace ffchow {

/// Element of the rational function field Q(t), kept in canonical form:
/// numerator and denominator coprime, denominator monic, zero stored as 0/1.
class RatFunc {
  public:
    RatFunc() : den_(Rat(1)) {}
    explicit RatFunc(const Rat& constant) : num_(constant), den_(Rat(1)) {}
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Rat(1)) {}

    /// num/den reduced to canonical form; den must be nonzero.
    static RatFunc normalized(const Poly& num, const Poly& den);

    static RatFunc t() { return RatFunc(Poly::t()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;

    RatFunc inverse() const;
    RatFunc pow(long e) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    int compare(const RatFunc& o) const;
    bool operator<(const RatFunc& o) const { return compare(o) < 0; }

    /// Value at t = x; throws when the denominator vanishes there.
    Rat eval(const Rat& x) const;

    /// "num" for polynomials, "(num)/(den)" otherwise; re-parses exactly.
    std::string str() const;

  private:
    Poly num_;
    Poly den_;
};

}  // namespace ffchow
