#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "signed_log.hpp"

namespace fhdet {

// Gamma has poles at 0, -1, -2, ...; arguments this close to one are
// rejected rather than evaluated.
inline constexpr double kPoleTolerance = 1e-12;

class PoleError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

inline bool near_nonpositive_integer(double x) {
    if (x > 0.5) return false;
    const double r = std::round(x);
    return r <= 0.0 && std::fabs(x - r) <= kPoleTolerance;
}

namespace detail {

// Sign of Gamma away from poles: positive for x > 0, alternating by unit
// cell for x < 0.
inline int gamma_sign(double x) {
    if (x > 0.0) return 1;
    const double cell = std::floor(x);
    return std::fmod(cell, 2.0) == 0.0 ? 1 : -1;
}

struct GammaLog {
    int sign;
    long double logmag;
};

// ln|Gamma(x)| in extended precision. Sums of thousands of these values
// cancel almost completely in the determinant formulas, so the extra bits
// are load-bearing, not cosmetic.
inline GammaLog log_gamma_core(double x) {
#if defined(__GLIBC__)
    int lgamma_sign_unused = 0;
    const long double mag = ::lgammal_r(static_cast<long double>(x), &lgamma_sign_unused);
#else
    const long double mag = std::lgamma(static_cast<long double>(x));
#endif
    return {gamma_sign(x), mag};
}

}  // namespace detail

// sign(Gamma(x)) and ln|Gamma(x)|.
inline SignedLog log_gamma_signed(double x) {
    if (near_nonpositive_integer(x))
        throw PoleError("log_gamma_signed: Gamma pole at x = " + std::to_string(x));
    const auto g = detail::log_gamma_core(x);
    return {g.sign, static_cast<double>(g.logmag)};
}

// SignedLog of prod_{j=0}^{n-1} Gamma(x+j), which equals G(x+n)/G(x) for
// the Barnes G-function. The empty product (n = 0) is 1.
inline SignedLog log_barnes_g_ratio(double x, int n) {
    if (n < 0) throw std::invalid_argument("log_barnes_g_ratio: n must be >= 0");
    int sign = 1;
    long double acc = 0.0L;
    for (int j = 0; j < n; ++j) {
        const double arg = x + j;
        if (near_nonpositive_integer(arg))
            throw PoleError("log_barnes_g_ratio: Gamma pole at offset j = " + std::to_string(j) +
                            ", x + j = " + std::to_string(arg));
        const auto g = detail::log_gamma_core(arg);
        sign *= g.sign;
        acc += g.logmag;
    }
    return {sign, static_cast<double>(acc)};
}

}  // namespace fhdet
