#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cubegraph/numeric.hpp"

namespace cubegraph {

// Moore-style diameter machinery for a k-regular graph of even girth g with
// eta shortest cycles through a vertex.  Shells grow like a (k-1)-ary tree up
// to distance g/2 - 1; the shell at g/2 loses exactly eta vertices to cycle
// closure, and the ratio there caps all later growth.

namespace detail {

inline void check_bounds_domain(int k, int g) {
    if (k < 3) throw std::invalid_argument("degree k must be at least 3");
    if (g < 4 || g % 2 != 0)
        throw std::invalid_argument("girth g must be even and at least 4");
}

// tree shell size at distance g/2 - 1, i.e. k*(k-1)^(g/2-2)
inline Integer shell_before_girth(int k, int g) {
    return Integer(k) * int_pow(k - 1, static_cast<unsigned>(g / 2 - 2));
}

}  // namespace detail

// largest shell-growth ratio still possible at distance g/2:
// (k*(k-1)^(g/2-1) - eta) / (k*(k-1)^(g/2-2))
inline Rational r_max(int k, int g, long eta) {
    detail::check_bounds_domain(k, g);
    if (eta < 0) throw std::invalid_argument("eta must be nonnegative");
    const Integer numer =
        Integer(k) * int_pow(k - 1, static_cast<unsigned>(g / 2 - 1)) - eta;
    if (numer <= 0)
        throw std::invalid_argument("eta exceeds shell size at distance g/2");
    return Rational(numer, detail::shell_before_girth(k, g));
}

// order of the ball of radius g/2 - 1, which every vertex sees as a tree:
// (k*(k-1)^(g/2-1) - 2) / (k - 2), always integral
inline Integer n0(int k, int g) {
    detail::check_bounds_domain(k, g);
    const Integer numer =
        Integer(k) * int_pow(k - 1, static_cast<unsigned>(g / 2 - 1)) - 2;
    if (numer % (k - 2) != 0)
        throw std::logic_error("ball size is provably integral; check inputs");
    return numer / (k - 2);
}

// largest order reachable within diameter d when every shell past the tree
// ball grows by at most r_max
inline Integer n_max(int k, int g, long eta, int d) {
    detail::check_bounds_domain(k, g);
    if (d < g / 2 - 1)
        throw std::invalid_argument("diameter below the tree-ball radius");
    const Integer ball = n0(k, g);
    if (d == g / 2 - 1) return ball;
    const Rational r = r_max(k, g, eta);
    const Integer shell = detail::shell_before_girth(k, g);
    const int extra = d - (g / 2 - 1);
    if (r == 1) return ball + shell * extra;
    // shell * (r + r^2 + ... + r^extra) = shell * (r^(extra+1) - r) / (r - 1)
    const Rational series =
        (rational_pow(r, static_cast<unsigned>(extra + 1)) - r) / (r - 1);
    return rational_floor(Rational(ball) + Rational(shell) * series);
}

enum class DminBranch { geometric, arithmetic };

struct DminResult {
    int value = 0;
    DminBranch branch = DminBranch::geometric;
};

// Least diameter that can accommodate n vertices: inversion of n_max.  The
// r_max = 1 case degenerates to arithmetic shell growth and is solved in
// exact integer arithmetic; otherwise the geometric series is inverted with
// a log (snap-guarded so closed-form boundary orders round correctly).
inline DminResult d_min_detailed(const Integer& n, int k, int g, long eta) {
    detail::check_bounds_domain(k, g);
    const Integer ball = n0(k, g);
    if (n <= ball)
        throw std::invalid_argument("order within Moore shell: n <= n0(k, g)");
    const Rational r = r_max(k, g, eta);
    const Integer shell = detail::shell_before_girth(k, g);
    if (r == 1) {
        const Integer extra = rational_ceil(Rational(n - ball, shell));
        return {g / 2 - 1 + extra.convert_to<int>(), DminBranch::arithmetic};
    }
    const Rational arg = Rational(n - ball) * (r - 1) / Rational(shell) + r;
    if (arg <= 0)
        throw std::invalid_argument("order unreachable under sub-unit shell growth");
    const double value =
        g / 2.0 - 2.0 + std::log(to_double(arg)) / std::log(to_double(r));
    return {static_cast<int>(guarded_ceil(value)), DminBranch::geometric};
}

inline int d_min(const Integer& n, int k, int g, long eta) {
    return d_min_detailed(n, k, g, eta).value;
}

// heuristic diameter estimate log_r(n) + ln(n)/r; infinite when growth stalls
inline double d_probab(const Integer& n, int k, int g, long eta) {
    if (n < 2) throw std::invalid_argument("order must be at least 2");
    const Rational r = r_max(k, g, eta);
    if (r == 1) return std::numeric_limits<double>::infinity();
    const double rd = to_double(r);
    const double ln_n = log_natural(n);
    return ln_n / std::log(rd) + ln_n / rd;
}

// random k-regular graph diameter window (Bollobas / Fernandez de la Vega):
// lower = floor(log_(k-1) n) + floor(log_(k-1) ln n - log_(k-1)(6k/(k-2))) + 1
inline int bv_lower(const Integer& n, int k) {
    if (k < 3) throw std::invalid_argument("degree k must be at least 3");
    if (n < 3) throw std::invalid_argument("order must be at least 3");
    const double log_km1 = std::log(static_cast<double>(k - 1));
    const double ln_n = log_natural(n);
    const long long first = guarded_floor(ln_n / log_km1);
    const long long second =
        guarded_floor((std::log(ln_n) - std::log(6.0 * k / (k - 2.0))) / log_km1);
    return static_cast<int>(first + second + 1);
}

// upper = ceil(log_(k-1)((2 + eps) * k * n * ln n)) + 1, evaluated in the log
// domain so huge orders cannot overflow
inline int bv_upper(const Integer& n, int k, double epsilon = 0.0) {
    if (k < 3) throw std::invalid_argument("degree k must be at least 3");
    if (n < 3) throw std::invalid_argument("order must be at least 3");
    if (epsilon < 0) throw std::invalid_argument("epsilon must be nonnegative");
    const double ln_n = log_natural(n);
    const double ln_arg = std::log((2.0 + epsilon) * k) + ln_n + std::log(ln_n);
    const long long value =
        guarded_ceil(ln_arg / std::log(static_cast<double>(k - 1)));
    return static_cast<int>(value + 1);
}

struct BoundsReport {
    Rational r_max_value;
    Integer n0_value;
    int d_min_value = 0;
    DminBranch d_min_branch = DminBranch::geometric;
    double d_probab_value = 0.0;
    int bv_lower_value = 0;
    int bv_upper_value = 0;
};

inline BoundsReport bounds_report(const Integer& n, int k, int g, long eta,
                                  double epsilon = 0.0) {
    BoundsReport rep;
    rep.r_max_value = r_max(k, g, eta);
    rep.n0_value = n0(k, g);
    const DminResult dm = d_min_detailed(n, k, g, eta);
    rep.d_min_value = dm.value;
    rep.d_min_branch = dm.branch;
    rep.d_probab_value = d_probab(n, k, g, eta);
    rep.bv_lower_value = bv_lower(n, k);
    rep.bv_upper_value = bv_upper(n, k, epsilon);
    return rep;
}

}  // namespace cubegraph
