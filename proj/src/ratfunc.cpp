#include "ffchow/ratfunc.hpp"

namespace ffchow {

RatFunc RatFunc::normalized(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    RatFunc r;
    if (num.is_zero()) return r;
    Poly g = Poly::gcd(num, den);
    Poly n = Poly::exact_div(num, g);
    Poly d = Poly::exact_div(den, g);
    Rat lead = d.leading();
    r.num_ = n.scaled(Rat(1) / lead);
    r.den_ = d.scaled(Rat(1) / lead);
    return r;
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return normalized(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return normalized(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DomainError("division by the zero rational function");
    return normalized(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DomainError("inverse of the zero rational function");
    return normalized(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc(Rat(1));
    if (is_zero()) {
        if (e < 0) throw DomainError("negative power of the zero rational function");
        return RatFunc();
    }
    RatFunc base = e < 0 ? inverse() : *this;
    long n = e < 0 ? -e : e;
    RatFunc r(Rat(1));
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

int RatFunc::compare(const RatFunc& o) const {
    int c = num_.compare(o.num_);
    if (c != 0) return c;
    return den_.compare(o.den_);
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw DomainError("rational function has a pole at the evaluation point");
    return num_.eval(x) / d;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace ffchow
