#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffchow {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when an operation leaves its mathematical domain (division by
/// zero, order of the zero function, a point lying on a divisor, ...).
/// The CLI maps this to exit code 1; usage errors map to exit code 2.
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact conversions from 64-bit counts; gmpxx has no long long overloads.
inline Int int_of(long long v) { return Int(static_cast<long>(v)); }
inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }

/// num/den in lowest terms with positive denominator. den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

Int pow_int(const Int& base, unsigned long exp);

/// base^exp for integer exp; negative exp requires base != 0.
Rat pow_rat(const Rat& base, long exp);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

Int binomial(unsigned long n, unsigned long k);

/// "p" when the denominator is 1, otherwise "p/q".
std::string rat_string(const Rat& q);

double rat_double(const Rat& q);

/// Accepts an optional sign, digits, and an optional "/digits" part.
Rat parse_rat(const std::string& text);

}  // namespace ffchow
