#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "rational_matrix.hpp"

namespace fhdet {

// A parameter sits on one of the excluded hyperplanes alpha + m = 0 or
// beta + m = 0, so a factorial-ratio denominator vanishes.
class DenominatorZero : public std::domain_error {
  public:
    DenominatorZero(std::string param, long offset)
        : std::domain_error(param + " + " + std::to_string(offset) + " = 0"),
          param_(std::move(param)),
          offset_(offset) {}

    const std::string& param() const { return param_; }
    long offset() const { return offset_; }

  private:
    std::string param_;
    long offset_;
};

// x(x-1)...(x-m+1); 1 when m = 0
inline BigRational falling_factorial(const BigRational& x, int m) {
    BigRational r = 1;
    for (int t = 0; t < m; ++t) r *= x - t;
    return r;
}

// x(x+1)...(x+m-1); 1 when m = 0
inline BigRational rising_factorial(const BigRational& x, int m) {
    BigRational r = 1;
    for (int t = 0; t < m; ++t) r *= x + t;
    return r;
}

// Entry (i,j) of the factorial-ratio matrix M. Depends only on i - j:
// below the diagonal it is falling(alpha, i-j) / rising(beta+1, i-j),
// above it falling(beta, j-i) / rising(alpha+1, j-i), and 1 on the
// diagonal. This form needs no Gamma evaluations, so it stays exact at
// every rational parameter where the denominators are nonzero.
inline BigRational m_entry(const BigRational& alpha, const BigRational& beta, int i, int j) {
    if (i == j) return 1;
    const bool below = i > j;
    const int d = below ? i - j : j - i;
    const BigRational& numerator_param = below ? alpha : beta;
    const BigRational& denominator_param = below ? beta : alpha;
    for (int t = 1; t <= d; ++t)
        if (denominator_param + t == 0) throw DenominatorZero(below ? "beta" : "alpha", t);
    return falling_factorial(numerator_param, d) / rising_factorial(denominator_param + 1, d);
}

inline RationalMatrix build_m_matrix(const BigRational& alpha, const BigRational& beta, int n) {
    if (n < 1) throw std::invalid_argument("build_m_matrix: n must be >= 1");
    // 2n-1 band values cover the whole matrix
    std::vector<BigRational> band(static_cast<std::size_t>(2 * n - 1));
    for (int d = -(n - 1); d <= n - 1; ++d)
        band[static_cast<std::size_t>(d + n - 1)] = m_entry(alpha, beta, d > 0 ? d : 0, d > 0 ? 0 : -d);
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = band[static_cast<std::size_t>(i - j + n - 1)];
    return m;
}

// Polynomial-entry matrix whose determinant satisfies the column-reduction
// recursion D_n(a,b) = (n-1)! (a+b+1)^{n-1} D_{n-1}(a+1,b). Entries use
// 1-based indices (i,j), mapped here from 0-based storage:
//   entry = prod_{l=1}^{n-j} (a - i + j + l) * prod_{k=1}^{n-i} (b + i - j + k).
inline RationalMatrix build_d_matrix(const BigRational& alpha, const BigRational& beta, int n) {
    if (n < 1) throw std::invalid_argument("build_d_matrix: n must be >= 1");
    RationalMatrix m(n);
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
            const int i = row + 1;
            const int j = col + 1;
            BigRational e = 1;
            for (int l = 1; l <= n - j; ++l) e *= alpha - i + j + l;
            for (int k = 1; k <= n - i; ++k) e *= beta + i - j + k;
            m(row, col) = std::move(e);
        }
    }
    return m;
}

// det M in closed form:
//   prod_{k=1}^{n-1} [k (a+b+k)]^{n-k} / [(a+k)(b+k)]^{n-k}.
inline BigRational m_product_formula(const BigRational& alpha, const BigRational& beta, int n) {
    if (n < 1) throw std::invalid_argument("m_product_formula: n must be >= 1");
    for (int k = 1; k < n; ++k) {
        if (alpha + k == 0) throw DenominatorZero("alpha", k);
        if (beta + k == 0) throw DenominatorZero("beta", k);
    }
    BigRational r = 1;
    for (int k = 1; k < n; ++k) {
        const BigRational factor = (k * (alpha + beta + k)) / ((alpha + k) * (beta + k));
        r *= rational_pow(factor, n - k);
    }
    return r;
}

// Closed form of det D_n: prod_{k=1}^{n-1} (n-k)! (a+b+k)^{n-k}, a
// polynomial in a + b.
inline BigRational d_closed_form(const BigRational& alpha, const BigRational& beta, int n) {
    if (n < 1) throw std::invalid_argument("d_closed_form: n must be >= 1");
    const BigRational s = alpha + beta;
    BigRational r = 1;
    BigInt fact = 1;
    for (int m = 1; m <= n - 1; ++m) {  // m = n - k
        fact *= m;
        r *= BigRational(fact) * rational_pow(s + (n - m), m);
    }
    return r;
}

}  // namespace fhdet
