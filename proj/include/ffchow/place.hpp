#pragma once

#include "ffchow/ratfunc.hpp"

#include <map>
#include <string>
#include <vector>

namespace ffchow {

/// Place of Q(t): either a monic irreducible polynomial or the degree-one
/// place at infinity. The induced valuations satisfy the degree-weighted
/// sum formula over every nonzero function.
class Place {
  public:
    static Place infinity();

    /// Validates that p is monic and irreducible over Q.
    static Place at(const Poly& p);

    bool is_infinite() const { return infinite_; }

    /// Defining polynomial of a finite place.
    const Poly& poly() const;

    int degree() const;

    bool operator==(const Place& o) const;
    bool operator!=(const Place& o) const { return !(*this == o); }

    /// Finite places first (ordered by their polynomials), infinity last.
    bool operator<(const Place& o) const;

    std::string str() const;

  private:
    Place() = default;
    friend int ord_at(const RatFunc&, const Place&);
    friend std::map<Place, int> divisor(const RatFunc&);
    friend std::vector<Place> support_places(const std::vector<RatFunc>&);
    static Place trusted(const Poly& p);

    bool infinite_ = false;
    Poly poly_;
};

using Divisor = std::map<Place, int>;

/// Order of vanishing of a nonzero x at p. Finite places are peeled off by
/// exact division (the defining polynomial is never factored here);
/// infinity contributes deg(den) - deg(num).
int ord_at(const RatFunc& x, const Place& p);

/// All places with nonzero order, found by factoring numerator and
/// denominator. Zero input is rejected.
Divisor divisor(const RatFunc& x);

/// Sum of order times place degree; zero on every principal divisor.
long long divisor_degree(const Divisor& d);

/// Places where some listed value could have nonzero order: irreducible
/// factors of every numerator and denominator, plus infinity. Sorted and
/// duplicate-free.
std::vector<Place> support_places(const std::vector<RatFunc>& values);

std::string divisor_string(const Divisor& d);

}  // namespace ffchow
