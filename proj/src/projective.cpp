#include "ffchow/projective.hpp"

#include <sstream>

namespace ffchow {

ProjPoint::ProjPoint(std::vector<RatFunc> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DomainError("projective point needs at least one coordinate");
    bool nonzero = false;
    for (const RatFunc& c : coords_) nonzero = nonzero || !c.is_zero();
    if (!nonzero) throw DomainError("projective point with all coordinates zero");
}

ProjPoint ProjPoint::scaled(const RatFunc& a) const {
    if (a.is_zero()) throw DomainError("projective scaling by zero");
    std::vector<RatFunc> c(coords_);
    for (RatFunc& x : c) x = x * a;
    return ProjPoint(std::move(c));
}

bool ProjPoint::same_point(const ProjPoint& o) const {
    if (ambient_dim() != o.ambient_dim()) return false;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        for (std::size_t j = i + 1; j < coords_.size(); ++j) {
            if (coords_[i] * o.coords_[j] != coords_[j] * o.coords_[i]) return false;
        }
    return true;
}

std::string ProjPoint::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i].str();
    }
    os << "]";
    return os.str();
}

HomPoly::HomPoly(int ambient_dim, int degree) : ambient_(ambient_dim), degree_(degree) {
    if (ambient_ < 0) throw DomainError("negative ambient dimension");
    if (degree_ < 1) throw DomainError("homogeneous polynomial needs degree at least 1");
}

HomPoly HomPoly::coordinate(int ambient_dim, int index) {
    HomPoly p(ambient_dim, 1);
    std::vector<int> e(static_cast<std::size_t>(ambient_dim) + 1, 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, RatFunc(Rat(1)));
    return p;
}

void HomPoly::add_term(const std::vector<int>& exps, const RatFunc& coeff) {
    if (static_cast<int>(exps.size()) != ambient_ + 1)
        throw DomainError("term has the wrong number of variables");
    int total = 0;
    for (int e : exps) {
        if (e < 0) throw DomainError("negative exponent in a polynomial term");
        total += e;
    }
    if (total != degree_) throw DomainError("term degree does not match the polynomial degree");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(exps, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
    if (ambient_ != o.ambient_ || degree_ != o.degree_)
        throw DomainError("adding polynomials of different shapes");
    HomPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

HomPoly HomPoly::operator*(const HomPoly& o) const {
    if (ambient_ != o.ambient_) throw DomainError("multiplying polynomials over different spaces");
    HomPoly r(ambient_, degree_ + o.degree_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int> e(e1);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

HomPoly HomPoly::scaled(const RatFunc& a) const {
    HomPoly r(ambient_, degree_);
    if (a.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * a);
    return r;
}

HomPoly HomPoly::pow(int e) const {
    if (e < 1) throw DomainError("homogeneous power needs a positive exponent");
    HomPoly r(*this);
    for (int i = 1; i < e; ++i) r = r * *this;
    return r;
}

bool HomPoly::operator==(const HomPoly& o) const {
    return ambient_ == o.ambient_ && degree_ == o.degree_ && terms_ == o.terms_;
}

RatFunc HomPoly::eval(const ProjPoint& x) const { return eval(x.coords()); }

RatFunc HomPoly::eval(const std::vector<RatFunc>& coords) const {
    if (static_cast<int>(coords.size()) != ambient_ + 1)
        throw DomainError("evaluating at a point of the wrong dimension");
    RatFunc sum;
    for (const auto& [e, c] : terms_) {
        RatFunc term = c;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (e[i] == 0) continue;
            if (coords[i].is_zero()) {
                term = RatFunc();
                break;
            }
            term = term * coords[i].pow(e[i]);
        }
        sum = sum + term;
    }
    return sum;
}

std::vector<RatFunc> HomPoly::coefficients() const {
    std::vector<RatFunc> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(c);
    return out;
}

std::string HomPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        bool unit = c.is_one();
        bool bare = false;
        if (!unit) {
            if (c.is_constant() && c.num().coeff(0).get_den() == 1 && c.num().coeff(0) > 0) {
                os << c.num().coeff(0).get_num();
                bare = true;
            } else {
                os << "(" << c.str() << ")";
                bare = true;
            }
        }
        bool any_var = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var || bare) os << "*";
            any_var = true;
            os << "X" << i;
            if (e[i] > 1) os << "^" << e[i];
        }
        if (!any_var && unit) os << "1";
    }
    return os.str();
}

}  // namespace ffchow
