#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dense_matrix.hpp"
#include "signed_log.hpp"
#include "specfun.hpp"

namespace fhdet {

struct Params {
    double alpha = 0.0;
    double beta = 0.0;

    bool operator==(const Params&) const = default;
};

// Order n plus the 2n-1 symbol coefficients phi_{-(n-1)} .. phi_{n-1};
// coeffs[m] holds phi_{m-(n-1)}.
struct ToeplitzSpec {
    int n = 0;
    std::vector<double> coeffs;

    double phi(int k) const { return coeffs[static_cast<std::size_t>(k + n - 1)]; }
};

// phi_k = (-1)^k Gamma(a+b+1) / (Gamma(a+1-k) Gamma(b+1+k)).
// A reciprocal gamma at a non-positive integer (a+1-k or b+1+k) makes the
// coefficient an exact 0; only the numerator Gamma can raise PoleError.
inline double fourier_coefficient(const Params& p, long k) {
    const double numerator_arg = p.alpha + p.beta + 1;
    if (near_nonpositive_integer(numerator_arg))
        throw PoleError("fourier_coefficient: Gamma(alpha+beta+1) pole, alpha+beta+1 = " +
                        std::to_string(numerator_arg));
    const double a_arg = p.alpha + 1 - static_cast<double>(k);
    const double b_arg = p.beta + 1 + static_cast<double>(k);
    if (near_nonpositive_integer(a_arg) || near_nonpositive_integer(b_arg)) return 0.0;
    SignedLog v = log_gamma_signed(numerator_arg) /
                  (log_gamma_signed(a_arg) * log_gamma_signed(b_arg));
    if (k % 2 != 0) v.sign = -v.sign;
    return v.to_real();
}

// All 2n-1 coefficients, grown from phi_0 by the two-term ratio recurrence
//   phi_{k+1} = phi_k (k - a) / (b + k + 1)
//   phi_{k-1} = phi_k (b + k) / (k - 1 - a).
// A step whose denominator falls below the pole tolerance is evaluated
// directly instead, as is the whole sequence when phi_0 itself is an exact
// reciprocal-gamma zero (the recurrence cannot leave 0).
inline ToeplitzSpec coefficient_sequence(const Params& p, int n) {
    if (n < 1) throw std::invalid_argument("coefficient_sequence: n must be >= 1");
    ToeplitzSpec spec{n, std::vector<double>(static_cast<std::size_t>(2 * n - 1), 0.0)};
    const auto set = [&](long k, double v) { spec.coeffs[static_cast<std::size_t>(k + n - 1)] = v; };

    const double phi0 = fourier_coefficient(p, 0);
    set(0, phi0);
    if (phi0 == 0.0) {
        for (long k = 1; k < n; ++k) {
            set(k, fourier_coefficient(p, k));
            set(-k, fourier_coefficient(p, -k));
        }
        return spec;
    }

    double cur = phi0;
    for (long k = 0; k + 1 < n; ++k) {
        const double den = p.beta + static_cast<double>(k) + 1;
        cur = std::fabs(den) < kPoleTolerance ? fourier_coefficient(p, k + 1)
                                              : cur * (static_cast<double>(k) - p.alpha) / den;
        set(k + 1, cur);
    }
    cur = phi0;
    for (long k = 0; k - 1 > -n; --k) {
        const double den = static_cast<double>(k) - 1 - p.alpha;
        cur = std::fabs(den) < kPoleTolerance ? fourier_coefficient(p, k - 1)
                                              : cur * (p.beta + static_cast<double>(k)) / den;
        set(k - 1, cur);
    }
    return spec;
}

// Entry (i,j) of the induced Toeplitz matrix is phi_{i-j}.
inline DenseMatrix toeplitz_matrix(const ToeplitzSpec& spec) {
    if (spec.n < 1 || spec.coeffs.size() != static_cast<std::size_t>(2 * spec.n - 1))
        throw std::invalid_argument("toeplitz_matrix: spec must carry exactly 2n-1 coefficients");
    DenseMatrix m(spec.n);
    for (int i = 0; i < spec.n; ++i)
        for (int j = 0; j < spec.n; ++j) m(i, j) = spec.phi(i - j);
    return m;
}

}  // namespace fhdet
