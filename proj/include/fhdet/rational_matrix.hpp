#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace fhdet {

// Dense square matrix of exact rationals, row-major, 0-based.
class RationalMatrix {
  public:
    explicit RationalMatrix(int order) : n_(order) {
        if (order < 1) throw std::invalid_argument("RationalMatrix: order must be >= 1");
        a_.resize(static_cast<std::size_t>(order) * order);
    }

    int order() const { return n_; }

    BigRational& operator()(int i, int j) { return a_[index(i, j)]; }
    const BigRational& operator()(int i, int j) const { return a_[index(i, j)]; }

    static RationalMatrix identity(int order) {
        RationalMatrix m(order);
        for (int i = 0; i < order; ++i) m(i, i) = 1;
        return m;
    }

    RationalMatrix transposed() const {
        RationalMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool operator==(const RationalMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

  private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::out_of_range("RationalMatrix: index out of range");
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_;
    std::vector<BigRational> a_;
};

namespace detail {

// Scale each row to integers by its denominator lcm. det(input) =
// det(output) / scale, and row scaling leaves the rank alone.
inline BigInt clear_denominators(const RationalMatrix& m, std::vector<BigInt>& b) {
    const int n = m.order();
    b.assign(static_cast<std::size_t>(n) * n, 0);
    BigInt scale = 1;
    for (int i = 0; i < n; ++i) {
        BigInt l = 1;
        for (int j = 0; j < n; ++j) l = lcm(l, denominator(m(i, j)));
        for (int j = 0; j < n; ++j)
            b[static_cast<std::size_t>(i) * n + j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
        scale *= l;
    }
    return scale;
}

inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divide_qr(a, b, q, r);
    if (r != 0) throw std::logic_error("fraction-free elimination: inexact division");
    return q;
}

}  // namespace detail

// Fraction-free (Bareiss) determinant. Denominators are cleared first and
// the cleared factor divided back out, so the elimination runs in big
// integers with exact divisions throughout. Singular input returns 0.
inline BigRational bareiss_det(const RationalMatrix& m) {
    const int n = m.order();
    std::vector<BigInt> b;
    const BigInt scale = detail::clear_denominators(m, b);
    const auto at = [&](int i, int j) -> BigInt& { return b[static_cast<std::size_t>(i) * n + j]; };

    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int r = k + 1;
            while (r < n && at(r, k) == 0) ++r;
            if (r == n) return 0;
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(r, j));
            sign = -sign;
        }
        const BigInt pivot = at(k, k);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = detail::exact_div(at(i, j) * pivot - at(i, k) * at(k, j), prev);
            at(i, k) = 0;
        }
        prev = pivot;
    }
    BigInt det = at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return BigRational(det, scale);
}

// Exact rank by fraction-free elimination with column skipping.
inline int rational_rank(const RationalMatrix& m) {
    const int n = m.order();
    std::vector<BigInt> b;
    detail::clear_denominators(m, b);
    const auto at = [&](int i, int j) -> BigInt& { return b[static_cast<std::size_t>(i) * n + j]; };

    int rank = 0;
    int row = 0;
    BigInt prev = 1;
    for (int col = 0; col < n && row < n; ++col) {
        int r = row;
        while (r < n && at(r, col) == 0) ++r;
        if (r == n) continue;
        if (r != row)
            for (int j = col; j < n; ++j) std::swap(at(row, j), at(r, j));
        const BigInt pivot = at(row, col);
        for (int i = row + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j)
                at(i, j) = detail::exact_div(at(i, j) * pivot - at(i, col) * at(row, j), prev);
            at(i, col) = 0;
        }
        prev = pivot;
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace fhdet
