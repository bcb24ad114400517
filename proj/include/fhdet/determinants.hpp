#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "dense_matrix.hpp"
#include "rational.hpp"
#include "signed_log.hpp"
#include "specfun.hpp"
#include "symbol.hpp"

namespace fhdet {

enum class DetMethod { lu, closed_form, bareiss_m, product_m, proof2 };

inline const char* to_string(DetMethod m) {
    switch (m) {
        case DetMethod::lu: return "lu";
        case DetMethod::closed_form: return "closed-form";
        case DetMethod::bareiss_m: return "bareiss-m";
        case DetMethod::product_m: return "product-m";
        case DetMethod::proof2: return "proof2";
    }
    return "?";
}

// A determinant value tagged with the route that produced it. Only reports
// sharing (params, n) are comparable; exact-layer reports also carry their
// rational parameters.
struct DetReport {
    SignedLog value;
    DetMethod method = DetMethod::lu;
    int n = 0;
    Params params;
    std::optional<std::pair<BigRational, BigRational>> exact_params;
};

// Determinant by partially pivoted elimination, consuming its argument.
// log|pivot| is accumulated after every step, so orders far past the
// overflow point of a plain pivot product stay finite. An exactly zero
// pivot column reports sign 0.
inline SignedLog lu_det(DenseMatrix m) {
    const int n = m.order();
    int sign = 1;
    double logmag = 0.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int r = k + 1; r < n; ++r)
            if (std::fabs(m(r, k)) > std::fabs(m(piv, k))) piv = r;
        if (m(piv, k) == 0.0) return SignedLog::zero();
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        const double pivot = m(k, k);
        if (pivot < 0.0) sign = -sign;
        logmag += std::log(std::fabs(pivot));
        for (int i = k + 1; i < n; ++i) {
            const double f = m(i, k) / pivot;
            if (f == 0.0) continue;
            for (int j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
            m(i, k) = 0.0;
        }
    }
    return {sign, logmag};
}

// Barnes G closed form, evaluated as one sum over j of the four Gamma
// streams
//   ln Gamma(1+j) + ln Gamma(a+b+1+j) - ln Gamma(a+1+j) - ln Gamma(b+1+j).
// Combining the streams per j in extended precision preserves their heavy
// mutual cancellation; summing each G-ratio separately in double loses it
// for large n. Equal to the product of the four log_barnes_g_ratio values.
inline SignedLog closed_form_det(const Params& p, int n) {
    if (n < 0) throw std::invalid_argument("closed_form_det: n must be >= 0");
    static constexpr const char* kStreamNames[4] = {
        "Gamma(1+j)", "Gamma(alpha+beta+1+j)", "Gamma(alpha+1+j)", "Gamma(beta+1+j)"};
    int sign = 1;
    long double acc = 0.0L;
    for (int j = 0; j < n; ++j) {
        const double args[4] = {1.0 + j, p.alpha + p.beta + 1 + j, p.alpha + 1 + j, p.beta + 1 + j};
        for (int t = 0; t < 4; ++t) {
            if (near_nonpositive_integer(args[t]))
                throw PoleError(std::string("closed_form_det: ") + kStreamNames[t] +
                                " pole at offset j = " + std::to_string(j));
            const auto g = detail::log_gamma_core(args[t]);
            sign *= g.sign;
            acc += t < 2 ? g.logmag : -g.logmag;
        }
    }
    return {sign, static_cast<double>(acc)};
}

// D_n as phi_0^n times the closed product for det M:
//   [Gamma(a+b+1) / (Gamma(a+1) Gamma(b+1))]^n
//   * prod_{k=1}^{n-1} [k (a+b+k)]^{n-k} / [(a+k)(b+k)]^{n-k}.
inline SignedLog product_form_det(const Params& p, int n) {
    if (n < 0) throw std::invalid_argument("product_form_det: n must be >= 0");
    const double a = p.alpha;
    const double b = p.beta;
    for (const double arg : {a + b + 1, a + 1, b + 1})
        if (near_nonpositive_integer(arg))
            throw PoleError("product_form_det: Gamma pole at argument " + std::to_string(arg));
    SignedLog det =
        (log_gamma_signed(a + b + 1) / (log_gamma_signed(a + 1) * log_gamma_signed(b + 1))).pow(n);
    for (int k = 1; k < n; ++k) {
        if (std::fabs(a + k) <= kPoleTolerance)
            throw PoleError("product_form_det: alpha + " + std::to_string(k) + " = 0");
        if (std::fabs(b + k) <= kPoleTolerance)
            throw PoleError("product_form_det: beta + " + std::to_string(k) + " = 0");
        const SignedLog factor = (SignedLog::from_real(k) * SignedLog::from_real(a + b + k)) /
                                 (SignedLog::from_real(a + k) * SignedLog::from_real(b + k));
        det *= factor.pow(n - k);
    }
    return det;
}

inline DetReport report_lu(const Params& p, int n) {
    return {lu_det(toeplitz_matrix(coefficient_sequence(p, n))), DetMethod::lu, n, p, std::nullopt};
}
inline DetReport report_closed(const Params& p, int n) {
    return {closed_form_det(p, n), DetMethod::closed_form, n, p, std::nullopt};
}
inline DetReport report_product(const Params& p, int n) {
    return {product_form_det(p, n), DetMethod::product_m, n, p, std::nullopt};
}

// True when some factor a+b+k (k < n) is within 1e-3 of zero. The
// determinant is then near a zero of its rational structure and log
// magnitudes stop being comparable.
inline bool near_structural_zero(const Params& p, int n) {
    for (int k = 1; k < n; ++k)
        if (std::fabs(p.alpha + p.beta + k) < 1e-3) return true;
    return false;
}

inline double float_logmag_tolerance(int n) { return n <= 32 ? 1e-9 : 1e-6; }

// Cross-method agreement under the comparison schedule: matching sign and
// logmag within tol away from structural zeros, absolute agreement of the
// real values (scaled by the larger magnitude) near them.
inline bool reports_agree(const DetReport& x, const DetReport& y, double logmag_tol) {
    if (x.n != y.n || !(x.params == y.params))
        throw std::invalid_argument("reports_agree: reports have different (params, n)");
    if (near_structural_zero(x.params, x.n)) {
        const double vx = x.value.to_real();
        const double vy = y.value.to_real();
        const double scale = std::max(std::fabs(vx), std::fabs(vy));
        return std::fabs(vx - vy) <= 1e-8 * scale;
    }
    return x.value.sign == y.value.sign && std::fabs(x.value.logmag - y.value.logmag) <= logmag_tol;
}

}  // namespace fhdet
