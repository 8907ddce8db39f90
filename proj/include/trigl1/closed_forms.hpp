#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigl1/extremal_signs.hpp"
#include "trigl1/trig_core.hpp"

// Closed-form values of the best-L1 constant E_n(chi_h)_1, the dispatcher
// that picks the cheapest exact route for a given (n, h), the limit constant
// of the h = 1/n chain, and the Favard constants F_j.

namespace trigl1 {

/// How an ApproxResult value was obtained.
enum class Method { closed_form, midrange, dual_max, lp_oracle };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::midrange: return "midrange";
        case Method::dual_max: return "dual_max";
        case Method::lp_oracle: return "lp_oracle";
    }
    return "?";
}

/// A computed constant with its provenance and (method-dependent) error bound.
struct ApproxResult {
    double value = 0.0;
    Method method = Method::closed_form;
    std::optional<double> q;  ///< winning parameter, when a sign-function route was used
    int orientation = +1;
    std::vector<double> breakpoints;  ///< certificate sign pattern, when one was built
    double error_bound = 0.0;
};

/// Signals a violated internal cross-check (a value escaping its proven
/// ceiling); callers treat this as a hard failure, not a numerical warning.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// min(1, 1/(2nh)): the proven ceiling for E_n(chi_h)_1.
inline double upper_bound(int n, double h) {
    if (n < 2) throw std::invalid_argument("upper_bound: n must be >= 2");
    if (h <= 0.0) throw std::invalid_argument("upper_bound: h must be positive");
    return std::min(1.0, 1.0 / (2.0 * n * h));
}

/// Closed-form value of E_n(chi_h)_1 where one exists:
///   h in (0, 1/(2n)]      -> 1
///   h = (2j-1)/(2n), 2<=j<=n -> 1/(2nh)
///   h in (1 - 1/(2n), 1]  -> (1-h)/h
///   h > 1                 -> ({h}/h) * value at the fractional part {h}
/// Lattice matching uses absolute tolerance 1e-12. Returns nothing when no
/// closed form applies.
inline std::optional<double> en_chi_closed(int n, double h) {
    if (n < 2) throw std::invalid_argument("en_chi_closed: n must be >= 2");
    if (h <= 0.0) throw std::invalid_argument("en_chi_closed: h must be positive");
    const double tol = 1e-12;
    if (h > 1.0) {
        double fh = h - std::floor(h);
        if (fh <= tol) return 0.0;  // integer width: the kernel is constant
        auto inner = en_chi_closed(n, fh);
        if (!inner) return std::nullopt;
        return (fh / h) * *inner;
    }
    if (h <= 1.0 / (2.0 * n) + tol) return 1.0;
    double jreal = 0.5 * (2.0 * n * h + 1.0);
    double jround = std::round(jreal);
    if (std::abs(h - (2.0 * jround - 1.0) / (2.0 * n)) <= tol && jround >= 2.0 &&
        jround <= static_cast<double>(n))
        return 1.0 / (2.0 * n * h);
    if (h > 1.0 - 1.0 / (2.0 * n) - tol) return (1.0 - h) / h;
    return std::nullopt;
}

/// Exact-rational variant for h = p/q given by the caller (the CLI's p/q
/// syntax); lattice membership is decided by integer arithmetic, no tolerance.
inline std::optional<double> en_chi_closed_rational(int n, std::int64_t p, std::int64_t q) {
    if (n < 2) throw std::invalid_argument("en_chi_closed_rational: n must be >= 2");
    if (p <= 0 || q <= 0) throw std::invalid_argument("en_chi_closed_rational: need p, q > 0");
    if (p > q) {
        std::int64_t r = p % q;
        if (r == 0) return 0.0;
        auto inner = en_chi_closed_rational(n, r, q);
        if (!inner) return std::nullopt;
        return (static_cast<double>(r) / static_cast<double>(p)) * *inner;
    }
    // h = p/q <= 1 from here on.
    if (2 * n * p <= q) return 1.0;                       // h <= 1/(2n)
    std::int64_t num = 2 * static_cast<std::int64_t>(n) * p;
    if (num % q == 0) {                                   // h = (2j-1)/(2n)?
        std::int64_t twojm1 = num / q;
        if (twojm1 % 2 == 1) {
            std::int64_t j = (twojm1 + 1) / 2;
            if (j >= 2 && j <= n)
                return static_cast<double>(q) / static_cast<double>(num);
        }
    }
    if (2 * n * (q - p) < q)                              // h > 1 - 1/(2n)
        return static_cast<double>(q - p) / static_cast<double>(p);
    return std::nullopt;
}

/// Dispatcher for E_n(chi_h)_1: closed form when available, the window-edge
/// inversion on (1/(2n), 3/(2n)), and the dual maximization elsewhere. Every
/// result is checked against the proven ceiling; a breach throws
/// internal_error.
inline ApproxResult en_chi(int n, double h) {
    if (n < 2) throw std::invalid_argument("en_chi: n must be >= 2");
    if (h <= 0.0) throw std::invalid_argument("en_chi: h must be positive");

    ApproxResult res;
    if (h > 1.0) {
        double fh = h - std::floor(h);
        if (fh <= 1e-12) {
            res.value = 0.0;
            res.method = Method::closed_form;
            return res;
        }
        res = en_chi(n, fh);
        res.value *= fh / h;
        return res;
    }

    if (auto cf = en_chi_closed(n, h)) {
        res.value = *cf;
        res.method = Method::closed_form;
        res.error_bound = 1e-15;
    } else if (h > 1.0 / (2.0 * n) && h < 3.0 / (2.0 * n)) {
        std::optional<double> qs;
        res.value = en_chi_midrange(n, h, &qs);
        res.method = Method::midrange;
        res.q = qs;
        if (qs) res.breakpoints = breakpoint_roots(n, *qs);
        res.error_bound = 1e-10;
    } else {
        DualBound db = lower_bound_via_duality(n, h);
        res.value = db.value;
        res.method = Method::dual_max;
        res.q = db.q;
        res.orientation = db.orientation;
        res.breakpoints = db.breakpoints;
        res.error_bound = 1e-6;
    }

    if (res.value > upper_bound(n, h) + 1e-9)
        throw internal_error("en_chi: value " + std::to_string(res.value) +
                             " exceeds the proven ceiling for n=" + std::to_string(n) +
                             ", h=" + std::to_string(h));
    return res;
}

/// First positive root of sec(pi v) - tan(pi v) = v, bisected to 1e-14.
inline double v0() {
    auto residual = [](double v) {
        return (1.0 - std::sin(pi * v)) / std::cos(pi * v) - v;
    };
    double lo = 1e-9, hi = 0.499;
    double flo = residual(lo);
    while (hi - lo > 1e-15) {
        double mid = 0.5 * (lo + hi);
        double fm = residual(mid);
        if ((flo < 0.0) != (fm < 0.0))
            hi = mid;
        else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

/// Limit of en_chi(n, 1/n) as n grows: 1 - 2 v0. Always computed from the
/// root, never hard-coded.
inline double en_chi_limit() { return 1.0 - 2.0 * v0(); }

/// Favard constant F_j = 2 (2/pi)^{j+1} sum_{k in Z} (4k+1)^{-j-1}, summed
/// with symmetric pairing and an Euler-Maclaurin tail so every j reaches
/// near machine accuracy at a bounded term count.
inline double favard_F(int j, double tol = 1e-15) {
    if (j < 0) throw std::invalid_argument("favard_F: j must be >= 0");
    const double scale = std::pow(2.0 / pi, j + 1);
    const double sign = (j % 2 == 0) ? -1.0 : 1.0;  // (-1)^{j+1}
    const long cap = 100000;
    KahanSum s;
    s.add(1.0);  // k = 0
    long k = 1;
    for (;; ++k) {
        double pair = std::pow(4.0 * k + 1.0, -(j + 1.0)) +
                      sign * std::pow(4.0 * k - 1.0, -(j + 1.0));
        s.add(pair);
        if (std::abs(pair) < tol || k >= cap) break;
    }
    double a = static_cast<double>(k) + 0.5;
    double integral, deriv;
    if (j == 0) {
        integral = 0.25 * std::log((4.0 * a - 1.0) / (4.0 * a + 1.0));
    } else {
        integral = std::pow(4.0 * a + 1.0, -static_cast<double>(j)) / (4.0 * j) +
                   sign * std::pow(4.0 * a - 1.0, -static_cast<double>(j)) / (4.0 * j);
    }
    deriv = -4.0 * (j + 1.0) * std::pow(4.0 * a + 1.0, -(j + 2.0)) -
            sign * 4.0 * (j + 1.0) * std::pow(4.0 * a - 1.0, -(j + 2.0));
    s.add(integral + deriv / 24.0);
    return 2.0 * scale * s.value();
}

}  // namespace trigl1
