#include "ffchow/blockpoly.hpp"

#include <sstream>

namespace ffchow {

BlockPoly::BlockPoly(int blocks, int width) : blocks_(blocks), width_(width) {
    if (blocks_ < 1 || width_ < 1) throw DomainError("block polynomial needs positive shape");
}

BlockPoly BlockPoly::constant(int blocks, int width, const RatFunc& value) {
    BlockPoly p(blocks, width);
    p.add_term(std::vector<int>(static_cast<std::size_t>(blocks * width), 0), value);
    return p;
}

BlockPoly BlockPoly::variable(int blocks, int width, int block, int slot) {
    if (block < 0 || block >= blocks || slot < 0 || slot >= width)
        throw DomainError("block variable out of range");
    BlockPoly p(blocks, width);
    std::vector<int> e(static_cast<std::size_t>(blocks * width), 0);
    e[static_cast<std::size_t>(block * width + slot)] = 1;
    p.add_term(e, RatFunc(Rat(1)));
    return p;
}

void BlockPoly::add_term(const std::vector<int>& exps, const RatFunc& coeff) {
    if (static_cast<int>(exps.size()) != blocks_ * width_)
        throw DomainError("term exponent vector has the wrong length");
    for (int e : exps)
        if (e < 0) throw DomainError("negative exponent in a block term");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(exps, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

BlockPoly BlockPoly::operator-() const {
    BlockPoly r(blocks_, width_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

BlockPoly BlockPoly::operator+(const BlockPoly& o) const {
    if (blocks_ != o.blocks_ || width_ != o.width_)
        throw DomainError("adding block polynomials of different shapes");
    BlockPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

BlockPoly BlockPoly::operator-(const BlockPoly& o) const { return *this + (-o); }

BlockPoly BlockPoly::operator*(const BlockPoly& o) const {
    if (blocks_ != o.blocks_ || width_ != o.width_)
        throw DomainError("multiplying block polynomials of different shapes");
    BlockPoly r(blocks_, width_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int> e(e1);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

BlockPoly BlockPoly::scaled(const RatFunc& a) const {
    BlockPoly r(blocks_, width_);
    if (a.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * a);
    return r;
}

BlockPoly BlockPoly::operator/(const BlockPoly& o) const {
    if (o.is_zero()) throw DomainError("block polynomial division by zero");
    if (blocks_ != o.blocks_ || width_ != o.width_)
        throw DomainError("dividing block polynomials of different shapes");
    BlockPoly q(blocks_, width_);
    BlockPoly r(*this);
    const auto& [oe, oc] = o.leading_term();
    while (!r.is_zero()) {
        const auto& [re, rc] = r.leading_term();
        std::vector<int> diff(re);
        for (std::size_t i = 0; i < diff.size(); ++i) {
            diff[i] -= oe[i];
            if (diff[i] < 0) throw DomainError("inexact block polynomial division");
        }
        RatFunc f = rc / oc;
        BlockPoly mono(blocks_, width_);
        mono.add_term(diff, f);
        q.add_term(diff, f);
        r = r - o * mono;
    }
    return q;
}

bool BlockPoly::operator==(const BlockPoly& o) const {
    return blocks_ == o.blocks_ && width_ == o.width_ && terms_ == o.terms_;
}

const std::pair<const std::vector<int>, RatFunc>& BlockPoly::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of the zero block polynomial");
    return *terms_.rbegin();
}

int BlockPoly::degree_in_block(int block) const {
    if (block < 0 || block >= blocks_) throw DomainError("block index out of range");
    int best = 0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int j = 0; j < width_; ++j) d += e[static_cast<std::size_t>(block * width_ + j)];
        if (d > best) best = d;
    }
    return best;
}

bool BlockPoly::is_multihomogeneous() const {
    if (terms_.empty()) return true;
    std::vector<int> ref;
    for (const auto& [e, c] : terms_) {
        std::vector<int> degs(static_cast<std::size_t>(blocks_), 0);
        for (int b = 0; b < blocks_; ++b)
            for (int j = 0; j < width_; ++j)
                degs[static_cast<std::size_t>(b)] += e[static_cast<std::size_t>(b * width_ + j)];
        if (ref.empty())
            ref = degs;
        else if (degs != ref)
            return false;
    }
    return true;
}

BlockPoly BlockPoly::normalized() const {
    if (terms_.empty()) throw DomainError("normalizing the zero block polynomial");
    return scaled(leading_term().second.inverse());
}

RatFunc BlockPoly::eval(const std::vector<std::vector<RatFunc>>& values) const {
    if (static_cast<int>(values.size()) != blocks_)
        throw DomainError("evaluation needs one value row per block");
    for (const auto& row : values)
        if (static_cast<int>(row.size()) != width_)
            throw DomainError("evaluation row has the wrong width");
    RatFunc sum;
    for (const auto& [e, c] : terms_) {
        RatFunc term = c;
        for (int b = 0; b < blocks_ && !term.is_zero(); ++b)
            for (int j = 0; j < width_; ++j) {
                int k = e[static_cast<std::size_t>(b * width_ + j)];
                if (k == 0) continue;
                const RatFunc& v = values[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
                if (v.is_zero()) {
                    term = RatFunc();
                    break;
                }
                term = term * v.pow(k);
            }
        sum = sum + term;
    }
    return sum;
}

std::string BlockPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool negative = false;
        std::string coeff_text;
        bool show_coeff = true;
        if (c.is_constant()) {
            Rat v = c.num().coeff(0);
            if (v < 0) {
                negative = true;
                v = -v;
            }
            if (v == 1)
                show_coeff = false;
            else if (v.get_den() == 1)
                coeff_text = v.get_num().get_str();
            else
                coeff_text = "(" + rat_string(v) + ")";
        } else {
            coeff_text = "(" + c.str() + ")";
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        bool wrote = false;
        if (show_coeff) {
            os << coeff_text;
            wrote = true;
        }
        for (int b = 0; b < blocks_; ++b)
            for (int j = 0; j < width_; ++j) {
                int k = e[static_cast<std::size_t>(b * width_ + j)];
                if (k == 0) continue;
                if (wrote) os << "*";
                wrote = true;
                os << "u_" << b << "_" << j;
                if (k > 1) os << "^" << k;
            }
        if (!wrote) os << "1";
    }
    return os.str();
}

}  // namespace ffchow
