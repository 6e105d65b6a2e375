#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "cutbell/error.hpp"

namespace cutbell {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using RationalVector = std::vector<Rational>;

inline std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline std::string to_string(const BigInt& z) { return z.str(); }

inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw Error(ErrorCode::ParseError, "empty number");
    auto check_int = [&](const std::string& s) {
        std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) throw Error(ErrorCode::ParseError, "bad number '" + text + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw Error(ErrorCode::ParseError, "bad number '" + text + "'");
    };
    auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        check_int(text);
        return Rational(BigInt(strip_plus(text)));
    }
    std::string p = text.substr(0, slash), q = text.substr(slash + 1);
    check_int(p);
    check_int(q);
    BigInt den(strip_plus(q));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return Rational(BigInt(strip_plus(p)), den);
}

inline BigInt abs_big(const BigInt& z) { return z < 0 ? BigInt(-z) : z; }

inline BigInt gcd_big(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(abs_big(a), abs_big(b));
}

inline BigInt lcm_big(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return BigInt(0);
    return abs_big(a) / gcd_big(a, b) * abs_big(b);
}

inline bool fits_int64(const BigInt& z) {
    static const BigInt lo(std::numeric_limits<std::int64_t>::min());
    static const BigInt hi(std::numeric_limits<std::int64_t>::max());
    return z >= lo && z <= hi;
}

// Scales a rational vector (plus rhs) by the least positive rational making
// every entry a coprime integer. Returns false if everything is zero.
inline bool primitive_integer_scale(const RationalVector& coeffs, const Rational& rhs,
                                    std::vector<BigInt>& out_coeffs, BigInt& out_rhs) {
    BigInt l = 1;
    for (const auto& c : coeffs) l = lcm_big(l, boost::multiprecision::denominator(c));
    l = lcm_big(l, boost::multiprecision::denominator(rhs));
    out_coeffs.resize(coeffs.size());
    BigInt g = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        out_coeffs[i] = boost::multiprecision::numerator(coeffs[i]) * (l / boost::multiprecision::denominator(coeffs[i]));
        g = gcd_big(g, out_coeffs[i]);
    }
    out_rhs = boost::multiprecision::numerator(rhs) * (l / boost::multiprecision::denominator(rhs));
    g = gcd_big(g, out_rhs);
    if (g == 0) return false;
    if (g != 1) {
        for (auto& c : out_coeffs) c /= g;
        out_rhs /= g;
    }
    return true;
}

// Normalizes aᵀx <= a0 in place to coprime integers by positive scaling.
inline void primitive_normalize(RationalVector& coeffs, Rational& rhs) {
    std::vector<BigInt> ic;
    BigInt ir;
    if (!primitive_integer_scale(coeffs, rhs, ic, ir))
        throw Error(ErrorCode::ZeroInequality, "all coefficients and rhs are zero");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = Rational(ic[i]);
    rhs = Rational(ir);
}

inline int sign(const Rational& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

} // namespace cutbell
