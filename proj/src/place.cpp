#include "ffchow/place.hpp"

#include "ffchow/factor.hpp"

#include <sstream>

namespace ffchow {

Place Place::infinity() {
    Place p;
    p.infinite_ = true;
    return p;
}

Place Place::at(const Poly& p) {
    if (p.is_zero() || p.is_constant()) throw DomainError("a place needs a nonconstant polynomial");
    if (p.leading() != 1) throw DomainError("place polynomial must be monic: " + p.str());
    if (!is_irreducible(p)) throw DomainError("place polynomial must be irreducible: " + p.str());
    return trusted(p);
}

Place Place::trusted(const Poly& p) {
    Place out;
    out.poly_ = p;
    return out;
}

const Poly& Place::poly() const {
    if (infinite_) throw DomainError("the infinite place has no defining polynomial");
    return poly_;
}

int Place::degree() const { return infinite_ ? 1 : poly_.degree(); }

bool Place::operator==(const Place& o) const {
    if (infinite_ != o.infinite_) return false;
    return infinite_ || poly_ == o.poly_;
}

bool Place::operator<(const Place& o) const {
    if (infinite_ != o.infinite_) return !infinite_;
    if (infinite_) return false;
    return poly_ < o.poly_;
}

std::string Place::str() const { return infinite_ ? "inf" : poly_.str(); }

namespace {

// Multiplicity of the irreducible p in a nonzero polynomial, by repeated
// exact division.
int peel(const Poly& f, const Poly& p) {
    int count = 0;
    Poly h = f;
    for (;;) {
        auto [q, r] = Poly::divrem(h, p);
        if (!r.is_zero()) return count;
        h = q;
        ++count;
    }
}

}  // namespace

int ord_at(const RatFunc& x, const Place& p) {
    if (x.is_zero()) throw DomainError("order of the zero function");
    if (p.is_infinite()) {
        int dn = x.num().is_zero() ? 0 : x.num().degree();
        return x.den().degree() - dn;
    }
    return peel(x.num(), p.poly()) - peel(x.den(), p.poly());
}

Divisor divisor(const RatFunc& x) {
    if (x.is_zero()) throw DomainError("divisor of the zero function");
    Divisor d;
    for (const auto& [f, mult] : factor_poly(x.num()).factors) d[Place::trusted(f)] += mult;
    for (const auto& [f, mult] : factor_poly(x.den()).factors) d[Place::trusted(f)] -= mult;
    int at_inf = x.den().degree() - x.num().degree();
    if (at_inf != 0) d[Place::infinity()] = at_inf;
    for (auto it = d.begin(); it != d.end();) {
        if (it->second == 0)
            it = d.erase(it);
        else
            ++it;
    }
    return d;
}

long long divisor_degree(const Divisor& d) {
    long long sum = 0;
    for (const auto& [place, mult] : d) sum += static_cast<long long>(mult) * place.degree();
    return sum;
}

std::vector<Place> support_places(const std::vector<RatFunc>& values) {
    std::map<Place, bool> seen;
    for (const RatFunc& v : values) {
        if (v.is_zero()) continue;
        for (const auto& [f, mult] : factor_poly(v.num()).factors) seen[Place::trusted(f)] = true;
        for (const auto& [f, mult] : factor_poly(v.den()).factors) seen[Place::trusted(f)] = true;
    }
    seen[Place::infinity()] = true;
    std::vector<Place> out;
    out.reserve(seen.size());
    for (const auto& [p, ignored] : seen) out.push_back(p);
    return out;
}

std::string divisor_string(const Divisor& d) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [place, mult] : d) {
        if (!first) os << ", ";
        first = false;
        os << place.str() << ": " << mult;
    }
    os << "}";
    return os.str();
}

}  // namespace ffchow
