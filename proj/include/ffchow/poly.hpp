#pragma once

#include "ffchow/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ffchow {

/// Dense univariate polynomial in t over Q.
///
/// Coefficients are stored in ascending degree order and the leading
/// coefficient is nonzero; the zero polynomial stores no coefficients and
/// has no degree (degree() throws rather than returning a sentinel that
/// could leak into arithmetic).
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rat& constant);
    explicit Poly(std::vector<Rat> coeffs);

    static Poly t();
    static Poly monomial(int degree, const Rat& coeff);
    static Poly from_ints(const std::vector<long>& coeffs);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    /// Degree of a nonzero polynomial; throws DomainError on zero.
    int degree() const;

    const Rat& leading() const;
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& a) const;
    Poly pow(int e) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    /// Total order for use as a container key: degree first, then
    /// coefficients from the top down.
    int compare(const Poly& o) const;
    bool operator<(const Poly& o) const { return compare(o) < 0; }

    /// Quotient and remainder with deg r < deg divisor; divisor nonzero.
    static std::pair<Poly, Poly> divrem(const Poly& num, const Poly& div);

    /// Exact quotient; throws DomainError when the division leaves a remainder.
    static Poly exact_div(const Poly& num, const Poly& div);

    bool divides(const Poly& other) const;

    /// Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(const Poly& a, const Poly& b);

    Poly monic() const;
    Poly derivative() const;
    Rat eval(const Rat& x) const;

    /// Renders with descending powers, e.g. "t^2 - 2*t + 1"; fractional
    /// coefficients are parenthesized so the output re-parses exactly.
    std::string str() const;

  private:
    void trim();
    std::vector<Rat> c_;
};

}  // namespace ffchow
