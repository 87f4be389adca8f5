#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>

namespace cubegraph {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer int_pow(Integer base, unsigned exp) {
    Integer out = 1;
    while (exp != 0) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

inline Rational rational_pow(const Rational& base, unsigned exp) {
    return Rational(int_pow(numerator(base), exp), int_pow(denominator(base), exp));
}

// exact floor/ceil of a rational (denominators are kept positive by cpp_rational)
inline Integer rational_floor(const Rational& r) {
    Integer q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline Integer rational_ceil(const Rational& r) { return -rational_floor(-r); }

inline double to_double(const Integer& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

inline double log_natural(const Integer& v) { return std::log(to_double(v)); }

// Transcendental results that land within kSnapTolerance of an integer are
// snapped before flooring/ceiling, so exact boundary cases (e.g. n equal to a
// closed-form shell sum) cannot be pushed off by one by rounding noise.
inline constexpr double kSnapTolerance = 1e-9;

inline double snap_to_integer(double x) {
    const double nearest = std::round(x);
    return std::fabs(x - nearest) <= kSnapTolerance ? nearest : x;
}

inline long long guarded_ceil(double x) {
    return static_cast<long long>(std::ceil(snap_to_integer(x)));
}

inline long long guarded_floor(double x) {
    return static_cast<long long>(std::floor(snap_to_integer(x)));
}

}  // namespace cubegraph
