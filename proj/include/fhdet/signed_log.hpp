#pragma once

#include <cmath>
#include <stdexcept>

namespace fhdet {

// A real number stored as (sign, ln|value|). Products of factors whose
// magnitudes overflow or underflow double stay finite in this form; only
// to_real() is exposed to the limits of double.
struct SignedLog {
    int sign = 0;         // -1, 0, +1; 0 encodes exact zero
    double logmag = 0.0;  // ln|value|; kept 0 when sign == 0

    static SignedLog zero() { return {}; }
    static SignedLog one() { return {1, 0.0}; }

    static SignedLog from_real(double x) {
        if (x == 0.0) return zero();
        return {std::signbit(x) ? -1 : 1, std::log(std::fabs(x))};
    }

    double to_real() const {
        return sign == 0 ? 0.0 : static_cast<double>(sign) * std::exp(logmag);
    }

    bool is_zero() const { return sign == 0; }

    SignedLog& operator*=(const SignedLog& o) {
        if (sign == 0 || o.sign == 0) return *this = zero();
        sign *= o.sign;
        logmag += o.logmag;
        return *this;
    }

    SignedLog& operator/=(const SignedLog& o) {
        if (o.sign == 0) throw std::domain_error("SignedLog: division by zero");
        if (sign == 0) return *this;
        sign *= o.sign;
        logmag -= o.logmag;
        return *this;
    }

    friend SignedLog operator*(SignedLog a, const SignedLog& b) { return a *= b; }
    friend SignedLog operator/(SignedLog a, const SignedLog& b) { return a /= b; }

    // value^e for integer e; 0^0 = 1, 0^negative is an error
    SignedLog pow(long long e) const {
        if (sign == 0) {
            if (e > 0) return zero();
            if (e == 0) return one();
            throw std::domain_error("SignedLog: zero to a negative power");
        }
        const int s = (sign < 0 && e % 2 != 0) ? -1 : 1;
        return {s, logmag * static_cast<double>(e)};
    }
};

}  // namespace fhdet
