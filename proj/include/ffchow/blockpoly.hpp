#pragma once

#include "ffchow/ratfunc.hpp"

#include <map>
#include <string>
#include <vector>

namespace ffchow {

/// Polynomial over Q(t) in `blocks` groups of `width` variables u_i_j
/// (block i, slot j). Exponents are flattened row-major into one vector,
/// which also fixes the term order: lexicographic on the flattened
/// exponents, largest vector leading. Stored terms are nonzero.
class BlockPoly {
  public:
    BlockPoly(int blocks, int width);

    static BlockPoly constant(int blocks, int width, const RatFunc& value);

    /// Single variable u_{block}_{slot}.
    static BlockPoly variable(int blocks, int width, int block, int slot);

    int blocks() const { return blocks_; }
    int width() const { return width_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<std::vector<int>, RatFunc>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, const RatFunc& coeff);

    BlockPoly operator-() const;
    BlockPoly operator+(const BlockPoly& o) const;
    BlockPoly operator-(const BlockPoly& o) const;
    BlockPoly operator*(const BlockPoly& o) const;
    BlockPoly scaled(const RatFunc& a) const;

    /// Exact quotient; throws DomainError when o does not divide this.
    BlockPoly operator/(const BlockPoly& o) const;

    bool operator==(const BlockPoly& o) const;
    bool operator!=(const BlockPoly& o) const { return !(*this == o); }

    /// Leading term in the fixed order; requires a nonzero polynomial.
    const std::pair<const std::vector<int>, RatFunc>& leading_term() const;

    /// Degree in the variables of one block; zero polynomial has degree 0.
    int degree_in_block(int block) const;

    /// True when every term has the same per-block degree vector.
    bool is_multihomogeneous() const;

    /// Divides by the leading coefficient, making it 1.
    BlockPoly normalized() const;

    /// Substitutes values[i][j] for u_i_j.
    RatFunc eval(const std::vector<std::vector<RatFunc>>& values) const;

    std::string str() const;

  private:
    int blocks_;
    int width_;
    std::map<std::vector<int>, RatFunc> terms_;
};

inline BlockPoly ring_one(const BlockPoly& shape) {
    return BlockPoly::constant(shape.blocks(), shape.width(), RatFunc(Rat(1)));
}

/// Determinant of a square matrix over an integral domain by fraction-free
/// elimination; every division performed is exact. Works for BlockPoly and
/// RatFunc entries alike.
template <class T>
T bareiss_determinant(std::vector<std::vector<T>> a, const T& one) {
    std::size_t n = a.size();
    if (n == 0) throw DomainError("determinant of an empty matrix");
    for (const auto& row : a)
        if (row.size() != n) throw DomainError("determinant of a non-square matrix");
    bool negate = false;
    T prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return a[k][k];  // singular: a zero of the right shape
            std::swap(a[k], a[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = a[k][k] - a[k][k];  // zero of the right shape
        }
        prev = a[k][k];
    }
    T det = a[n - 1][n - 1];
    return negate ? -det : det;
}

}  // namespace ffchow
