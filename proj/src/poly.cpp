#include "ffchow/poly.hpp"

#include <sstream>

namespace ffchow {

Poly::Poly(const Rat& constant) {
    if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::t() { return monomial(1, Rat(1)); }

Poly Poly::monomial(int degree, const Rat& coeff) {
    Poly p;
    if (coeff == 0) return p;
    p.c_.assign(static_cast<std::size_t>(degree) + 1, Rat(0));
    p.c_.back() = coeff;
    return p;
}

Poly Poly::from_ints(const std::vector<long>& coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::degree() const {
    if (is_zero()) throw DomainError("degree of the zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

const Rat& Poly::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

Rat Poly::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return Rat(0);
    return c_[static_cast<std::size_t>(i)];
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& a : r.c_) a = -a;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::scaled(const Rat& a) const {
    if (a == 0) return Poly();
    Poly r(*this);
    for (auto& x : r.c_) x *= a;
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw DomainError("negative polynomial power");
    Poly r(Rat(1));
    Poly b(*this);
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

int Poly::compare(const Poly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size() ? -1 : 1;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i] ? -1 : 1;
    }
    return 0;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& num, const Poly& div) {
    if (div.is_zero()) throw DomainError("polynomial division by zero");
    Poly r(num);
    std::vector<Rat> q;
    int dd = div.degree();
    if (!r.is_zero() && r.degree() >= dd) q.assign(static_cast<std::size_t>(r.degree() - dd) + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= dd) {
        int k = r.degree() - dd;
        Rat f = r.leading() / div.leading();
        q[static_cast<std::size_t>(k)] = f;
        for (std::size_t i = 0; i < div.c_.size(); ++i)
            r.c_[static_cast<std::size_t>(k) + i] -= f * div.c_[i];
        r.trim();
    }
    return {Poly(std::move(q)), r};
}

Poly Poly::exact_div(const Poly& num, const Poly& div) {
    auto [q, r] = divrem(num, div);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

bool Poly::divides(const Poly& other) const {
    if (is_zero()) return other.is_zero();
    return divrem(other, *this).second.is_zero();
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x(a), y(b);
    while (!y.is_zero()) {
        Poly r = divrem(x, y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

Poly Poly::monic() const {
    if (is_zero()) throw DomainError("monic form of the zero polynomial");
    return scaled(Rat(1) / leading());
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> r(c_.size() - 1, Rat(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
    Rat r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rat& a = c_[i];
        if (a == 0) continue;
        Rat mag = a < 0 ? Rat(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        bool unit = mag == 1;
        if (!unit || i == 0) {
            if (mag.get_den() == 1)
                os << mag.get_num();
            else
                os << "(" << rat_string(mag) << ")";
            if (i > 0) os << "*";
        }
        if (i == 1)
            os << "t";
        else if (i > 1)
            os << "t^" << i;
    }
    return os.str();
}

}  // namespace ffchow
