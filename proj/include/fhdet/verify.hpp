#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "determinants.hpp"
#include "exact_core.hpp"
#include "rational_matrix.hpp"
#include "symbol.hpp"

namespace fhdet {

struct RationalParams {
    BigRational alpha;
    BigRational beta;
};

struct VerifyOutcome {
    std::string check_name;
    long samples = 0;
    long failures = 0;
    long resamples = 0;  // parameter draws rejected on excluded hyperplanes
    std::optional<std::string> first_failure;

    bool passed() const { return failures == 0; }

    void count_pass() { ++samples; }

    void count_failure(std::string description) {
        ++samples;
        ++failures;
        if (!first_failure) first_failure = std::move(description);
    }

    void merge(const VerifyOutcome& o) {
        samples += o.samples;
        failures += o.failures;
        resamples += o.resamples;
        if (!first_failure && o.first_failure) first_failure = o.first_failure;
    }
};

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct VerifyConfig {
    int nmax_exact = 10;
    int nmax_float = 64;
    int samples = 25;
};

// Deterministic sample source. Draws are explicit reductions of the raw
// mt19937_64 stream, so sequences do not depend on the standard library's
// distribution implementations.
class SampleRng {
  public:
    explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    long uniform_int(long lo, long hi) {
        return lo + static_cast<long>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double uniform_real(double lo, double hi) {
        const double u = static_cast<double>(raw() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    // numerators in [-64, 64], denominators in [1, 16]; bounds keep the
    // fraction-free eliminations' integer growth modest
    BigRational rational() { return BigRational(uniform_int(-64, 64), uniform_int(1, 16)); }

  private:
    std::mt19937_64 eng_;
};

inline bool on_m_hyperplane(const BigRational& v, int n) {
    for (int k = 1; k < n; ++k)
        if (v + k == 0) return true;
    return false;
}

// Rejection sampler over rational (alpha, beta); at most 100 attempts,
// rejected draws counted into `resamples`.
template <typename Pred>
std::optional<RationalParams> sample_rational_params(SampleRng& rng, long& resamples, Pred&& ok) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        RationalParams p{rng.rational(), rng.rational()};
        if (ok(p)) return p;
        ++resamples;
    }
    return std::nullopt;
}

// Real (alpha, beta) in (-0.9, 3)^2, at least 1e-3 away from every
// alpha + k = 0, beta + k = 0, alpha + beta + k = 0 with 0 <= k <= n-1.
inline Params sample_float_params(SampleRng& rng, int n) {
    for (;;) {
        const Params p{rng.uniform_real(-0.9, 3.0), rng.uniform_real(-0.9, 3.0)};
        bool ok = true;
        for (int k = 0; k < n && ok; ++k)
            ok = std::fabs(p.alpha + k) >= 1e-3 && std::fabs(p.beta + k) >= 1e-3 &&
                 std::fabs(p.alpha + p.beta + k) >= 1e-3;
        if (ok) return p;
    }
}

namespace detail {

inline std::string describe_point(const BigRational& alpha, const BigRational& beta, int n) {
    return "alpha=" + fhdet::to_string(alpha) + " beta=" + fhdet::to_string(beta) +
           " n=" + std::to_string(n);
}

}  // namespace detail

// Entrywise identity behind the rank-drop argument: adding each row to its
// predecessor rescales row i >= 1 to the alpha+1 matrix,
//   M_{i,j}(a,b) + M_{i-1,j}(a,b) = (a+b+1)/(a+1) * M_{i,j}(a+1,b).
inline VerifyOutcome check_row_op_identity(const BigRational& alpha, const BigRational& beta, int n) {
    VerifyOutcome out{"row-op-identity"};
    if (n < 2) {  // no row has a predecessor; vacuous pass
        out.count_pass();
        return out;
    }
    if (alpha + 1 == 0) throw DenominatorZero("alpha", 1);
    const BigRational scale = (alpha + beta + 1) / (alpha + 1);
    const RationalMatrix m0 = build_m_matrix(alpha, beta, n);
    const RationalMatrix m1 = build_m_matrix(alpha + 1, beta, n);
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const BigRational lhs = m0(i, j) + m0(i - 1, j);
            const BigRational rhs = scale * m1(i, j);
            if (lhs != rhs) {
                out.count_failure(detail::describe_point(alpha, beta, n) + " entry (" +
                                  std::to_string(i) + "," + std::to_string(j) + "): " +
                                  fhdet::to_string(lhs) + " != " + fhdet::to_string(rhs));
                return out;
            }
        }
    }
    out.count_pass();
    return out;
}

// rank(M(-b-k, b, n)) <= k for 1 <= k <= n-1, the rank collapse at
// alpha = -beta - k.
inline VerifyOutcome check_rank_drop(const BigRational& beta, int k, int n) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("check_rank_drop: need 1 <= k <= n-1");
    VerifyOutcome out{"rank-drop"};
    const BigRational alpha = -beta - k;
    const int r = rational_rank(build_m_matrix(alpha, beta, n));
    if (r <= k)
        out.count_pass();
    else
        out.count_failure(detail::describe_point(alpha, beta, n) + " k=" + std::to_string(k) +
                          ": rank " + std::to_string(r) + " > " + std::to_string(k));
    return out;
}

// det D_n(a,b) = (n-1)! (a+b+1)^{n-1} det D_{n-1}(a+1,b), exactly.
inline VerifyOutcome check_proof2_recursion(const BigRational& alpha, const BigRational& beta, int n) {
    if (n < 2) throw std::invalid_argument("check_proof2_recursion: need n >= 2");
    VerifyOutcome out{"proof2-recursion"};
    const BigRational lhs = bareiss_det(build_d_matrix(alpha, beta, n));
    const BigRational rhs = BigRational(factorial(n - 1)) *
                            rational_pow(alpha + beta + 1, n - 1) *
                            bareiss_det(build_d_matrix(alpha + 1, beta, n - 1));
    if (lhs == rhs)
        out.count_pass();
    else
        out.count_failure(detail::describe_point(alpha, beta, n) + ": " + fhdet::to_string(lhs) +
                          " != " + fhdet::to_string(rhs));
    return out;
}

// bareiss_det(M) == m_product_formula, exactly.
inline VerifyOutcome check_m_product(const BigRational& alpha, const BigRational& beta, int n) {
    VerifyOutcome out{"m-product-formula"};
    const BigRational lhs = bareiss_det(build_m_matrix(alpha, beta, n));
    const BigRational rhs = m_product_formula(alpha, beta, n);
    if (lhs == rhs)
        out.count_pass();
    else
        out.count_failure(detail::describe_point(alpha, beta, n) + ": det " + fhdet::to_string(lhs) +
                          " != product " + fhdet::to_string(rhs));
    return out;
}

// Ties the layers together at one rational point: the three float routes
// agree under the comparison schedule, and exactly
//   det M = det D_n / prod_{m=0}^{n-1} rising(a+1, m) rising(b+1, m).
inline VerifyOutcome check_cross_layer(const BigRational& alpha, const BigRational& beta, int n) {
    VerifyOutcome out{"cross-layer"};
    const Params p{to_double(alpha), to_double(beta)};
    const DetReport lu = report_lu(p, n);
    const DetReport closed = report_closed(p, n);
    const DetReport product = report_product(p, n);
    const double tol = float_logmag_tolerance(n);
    if (!reports_agree(lu, closed, tol) || !reports_agree(product, closed, tol)) {
        std::ostringstream os;
        os << detail::describe_point(alpha, beta, n) << ": float methods disagree, logmag lu="
           << lu.value.logmag << " closed=" << closed.value.logmag
           << " product=" << product.value.logmag;
        out.count_failure(os.str());
        return out;
    }
    const BigRational det_m = bareiss_det(build_m_matrix(alpha, beta, n));
    const BigRational det_d = bareiss_det(build_d_matrix(alpha, beta, n));
    BigRational denom = 1;
    for (int m = 0; m < n; ++m)
        denom *= rising_factorial(alpha + 1, m) * rising_factorial(beta + 1, m);
    if (det_m != det_d / denom) {
        out.count_failure(detail::describe_point(alpha, beta, n) + ": det M " +
                          fhdet::to_string(det_m) + " != bridged " + fhdet::to_string(det_d / denom));
        return out;
    }
    out.count_pass();
    return out;
}

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + salt * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace detail

// The whole battery, deterministic in (seed, config). One outcome per
// check, in a fixed order.
inline std::vector<VerifyOutcome> run_suite(std::uint64_t seed, const VerifyConfig& cfg = {}) {
    if (cfg.nmax_exact < 1 || cfg.nmax_float < 1 || cfg.samples < 1)
        throw ConfigError("run_suite: nmax_exact, nmax_float and samples must all be >= 1");

    std::vector<VerifyOutcome> outcomes;

    {  // row-op identity
        VerifyOutcome agg{"row-op-identity"};
        SampleRng rng(detail::mix_seed(seed, 1));
        for (int n = 1; n <= std::min(cfg.nmax_exact, 8); ++n) {
            for (int s = 0; s < cfg.samples; ++s) {
                const auto pr = sample_rational_params(rng, agg.resamples, [&](const RationalParams& q) {
                    return q.alpha + 1 != 0 && !on_m_hyperplane(q.alpha, n) &&
                           !on_m_hyperplane(q.alpha + 1, n) && !on_m_hyperplane(q.beta, n);
                });
                if (!pr) {
                    agg.count_failure("row-op-identity: sampling exhausted at n=" + std::to_string(n));
                    continue;
                }
                agg.merge(check_row_op_identity(pr->alpha, pr->beta, n));
            }
        }
        outcomes.push_back(std::move(agg));
    }

    {  // rank drop
        VerifyOutcome agg{"rank-drop"};
        SampleRng rng(detail::mix_seed(seed, 2));
        for (int n = 2; n <= cfg.nmax_exact; ++n) {
            for (int s = 0; s < cfg.samples; ++s) {
                const int k = 1 + static_cast<int>(s % (n - 1));
                BigRational beta;
                bool found = false;
                for (int attempt = 0; attempt < 100 && !found; ++attempt) {
                    beta = rng.rational();
                    if (!on_m_hyperplane(beta, n) && !on_m_hyperplane(-beta - k, n))
                        found = true;
                    else
                        ++agg.resamples;
                }
                if (!found) {
                    agg.count_failure("rank-drop: sampling exhausted at n=" + std::to_string(n));
                    continue;
                }
                agg.merge(check_rank_drop(beta, k, n));
            }
        }
        if (cfg.nmax_exact < 2) agg.count_pass();  // vacuous range
        outcomes.push_back(std::move(agg));
    }

    {  // column-reduction recursion
        VerifyOutcome agg{"proof2-recursion"};
        SampleRng rng(detail::mix_seed(seed, 3));
        for (int n = 2; n <= cfg.nmax_exact; ++n)
            for (int s = 0; s < cfg.samples; ++s) {
                const RationalParams q{rng.rational(), rng.rational()};
                agg.merge(check_proof2_recursion(q.alpha, q.beta, n));
            }
        if (cfg.nmax_exact < 2) agg.count_pass();
        outcomes.push_back(std::move(agg));
    }

    {  // product formula
        VerifyOutcome agg{"m-product-formula"};
        SampleRng rng(detail::mix_seed(seed, 4));
        for (int n = 1; n <= cfg.nmax_exact; ++n) {
            for (int s = 0; s < cfg.samples; ++s) {
                const auto pr = sample_rational_params(rng, agg.resamples, [&](const RationalParams& q) {
                    return !on_m_hyperplane(q.alpha, n) && !on_m_hyperplane(q.beta, n);
                });
                if (!pr) {
                    agg.count_failure("m-product-formula: sampling exhausted at n=" + std::to_string(n));
                    continue;
                }
                agg.merge(check_m_product(pr->alpha, pr->beta, n));
            }
        }
        outcomes.push_back(std::move(agg));
    }

    {  // dense sweep across alpha = t/17; agreement at far more points than
       // the degree bound pins the rational-function identity
        VerifyOutcome agg{"m-product-dense-sweep"};
        const int n = std::min(6, cfg.nmax_exact);
        const BigRational betas[3] = {BigRational(1, 3), BigRational(2, 5), BigRational(5, 2)};
        for (const BigRational& beta : betas) {
            for (long t = -200; t <= 200; ++t) {
                const BigRational alpha(t, 17);
                if (on_m_hyperplane(alpha, n) || on_m_hyperplane(beta, n)) {
                    ++agg.resamples;
                    continue;
                }
                agg.merge(check_m_product(alpha, beta, n));
            }
        }
        outcomes.push_back(std::move(agg));
    }

    {  // cross-layer
        VerifyOutcome agg{"cross-layer"};
        SampleRng rng(detail::mix_seed(seed, 5));
        for (int n = 1; n <= std::min(cfg.nmax_exact, 16); ++n) {
            for (int s = 0; s < cfg.samples; ++s) {
                bool done = false;
                for (int attempt = 0; attempt < 100 && !done; ++attempt) {
                    const auto pr = sample_rational_params(rng, agg.resamples, [&](const RationalParams& q) {
                        return !on_m_hyperplane(q.alpha, n) && !on_m_hyperplane(q.beta, n);
                    });
                    if (!pr) break;
                    try {
                        agg.merge(check_cross_layer(pr->alpha, pr->beta, n));
                        done = true;
                    } catch (const PoleError&) {
                        ++agg.resamples;  // float layer rejected the point
                    } catch (const DenominatorZero&) {
                        ++agg.resamples;
                    }
                }
                if (!done) agg.count_failure("cross-layer: sampling exhausted at n=" + std::to_string(n));
            }
        }
        outcomes.push_back(std::move(agg));
    }

    {  // float-layer consistency across the n grid
        VerifyOutcome agg{"float-consistency"};
        SampleRng rng(detail::mix_seed(seed, 6));
        std::vector<int> grid;
        for (int n = 2; n <= cfg.nmax_float; n *= 2) grid.push_back(n);
        if (grid.empty()) grid.push_back(1);
        for (const int n : grid) {
            for (int s = 0; s < cfg.samples; ++s) {
                const Params p = sample_float_params(rng, n);
                const DetReport lu = report_lu(p, n);
                const DetReport closed = report_closed(p, n);
                const DetReport product = report_product(p, n);
                const double tol = float_logmag_tolerance(n);
                if (reports_agree(lu, closed, tol) && reports_agree(product, closed, tol)) {
                    agg.count_pass();
                } else {
                    std::ostringstream os;
                    os << "float-consistency: alpha=" << p.alpha << " beta=" << p.beta << " n=" << n
                       << " logmag lu=" << lu.value.logmag << " closed=" << closed.value.logmag
                       << " product=" << product.value.logmag;
                    agg.count_failure(os.str());
                }
            }
        }
        outcomes.push_back(std::move(agg));
    }

    return outcomes;
}

}  // namespace fhdet
