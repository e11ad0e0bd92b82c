#pragma once

#include "ffchow/ratfunc.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace ffchow {

/// Binary form of a fixed formal degree in parameters s0, s1 over a
/// coefficient ring R. coeff(a) multiplies s0^a s1^(degree-a); the zero
/// form keeps its formal degree.
template <class R>
class BinForm {
  public:
    BinForm(int degree, const R& zero) : deg_(degree), c_(static_cast<std::size_t>(degree) + 1, zero) {
        if (degree < 0) throw DomainError("binary form of negative degree");
    }

    int degree() const { return deg_; }
    const R& coeff(int a) const { return c_[static_cast<std::size_t>(a)]; }
    void set_coeff(int a, const R& v) { c_[static_cast<std::size_t>(a)] = v; }

    bool is_zero() const {
        for (const R& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    BinForm operator+(const BinForm& o) const {
        if (deg_ != o.deg_) throw DomainError("adding binary forms of different degrees");
        BinForm r(*this);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
        return r;
    }

    BinForm operator*(const BinForm& o) const {
        R zero = c_[0] - c_[0];
        BinForm r(deg_ + o.deg_, zero);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                if (o.c_[j].is_zero()) continue;
                r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
            }
        }
        return r;
    }

    BinForm scaled(const R& a) const {
        BinForm r(*this);
        for (R& v : r.c_) v = v * a;
        return r;
    }

    BinForm pow(int e) const {
        if (e < 0) throw DomainError("negative binary form power");
        R zero = c_[0] - c_[0];
        BinForm r(0, zero);
        r.c_[0] = ring_one(c_[0]);
        BinForm b(*this);
        for (int i = 0; i < e; ++i) r = r * b;
        return r;
    }

    bool operator==(const BinForm& o) const { return deg_ == o.deg_ && c_ == o.c_; }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c_[i].str() << ")";
            int a = static_cast<int>(i);
            int b = deg_ - a;
            if (a > 0) os << "*s0" << (a > 1 ? "^" + std::to_string(a) : "");
            if (b > 0) os << "*s1" << (b > 1 ? "^" + std::to_string(b) : "");
        }
        if (first) return "0";
        return os.str();
    }

  private:
    int deg_;
    std::vector<R> c_;
};

inline RatFunc ring_one(const RatFunc&) { return RatFunc(Rat(1)); }

/// Value of a scalar binary form at concrete parameters.
RatFunc eval_binform(const BinForm<RatFunc>& f, const RatFunc& s0, const RatFunc& s1);

/// Monic gcd of a set of binary forms over the field Q(t); zero members
/// are skipped, and an all-zero set reports the zero form of degree 0.
/// The shared s0 and s1 powers are split off first, then a Euclidean pass
/// runs on the dehomogenized cores.
BinForm<RatFunc> binform_gcd(const std::vector<BinForm<RatFunc>>& fs);

}  // namespace ffchow
