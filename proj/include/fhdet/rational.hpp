#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "signed_log.hpp"

namespace fhdet {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline int sign_of(const BigRational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

// ln|n| from the top 53 bits; valid far beyond the range of double.
inline double log_abs(const BigInt& n) {
    if (n == 0) throw std::domain_error("log_abs: zero");
    const BigInt a = abs(n);
    const unsigned long bits = msb(a);
    if (bits <= 1000) return std::log(a.convert_to<double>());
    const unsigned long shift = bits - 52;
    const double mantissa = BigInt(a >> shift).convert_to<double>();
    return std::log(mantissa) + static_cast<double>(shift) * std::numbers::ln2;
}

inline SignedLog signed_log_of(const BigRational& q) {
    const int s = sign_of(q);
    if (s == 0) return SignedLog::zero();
    return {s, log_abs(numerator(q)) - log_abs(denominator(q))};
}

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

// q^e for integer e; negative e inverts (q must be nonzero then).
inline BigRational rational_pow(const BigRational& q, long e) {
    if (e < 0) {
        if (q == 0) throw std::domain_error("rational_pow: zero to a negative power");
        return 1 / rational_pow(q, -e);
    }
    return BigRational(pow(numerator(q), static_cast<unsigned>(e)),
                       pow(denominator(q), static_cast<unsigned>(e)));
}

inline BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// "p/q", "-3/7", "12" -> exact rational; nullopt for anything else
// (decimal text is the caller's problem).
inline std::optional<BigRational> parse_rational(const std::string& text) {
    std::size_t pos = 0;
    const auto digits = [&](std::string& out) {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) out += text[pos++];
        return pos > start;
    };
    std::string num, den;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) num += text[pos++];
    if (!digits(num)) return std::nullopt;
    if (pos == text.size()) return BigRational(BigInt(num), 1);
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    if (!digits(den) || pos != text.size()) return std::nullopt;
    const BigInt d(den);
    if (d == 0) return std::nullopt;
    return BigRational(BigInt(num), d);
}

inline std::string to_string(const BigRational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

}  // namespace fhdet
