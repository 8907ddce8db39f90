#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigl1/trig_core.hpp"

// Extremal +-1 sign functions orthogonal to the low cosine modes, their
// breakpoint equation, and the dual maximization that yields lower bounds
// (in fact the values) of the best-L1 constants for box windows.

namespace trigl1 {

/// Left-hand side of the breakpoint characteristic equation
///   cos(2 pi (n+1) t) - 2 q cos(2 pi n t) + q^2 cos(2 pi (n-1) t).
/// Its zeros on (0, 1/2) are the breakpoints of the sign function with
/// parameter q.
inline double breakpoint_equation(int n, double q, double t) {
    if (n < 2) throw std::invalid_argument("breakpoint_equation: n must be >= 2");
    return std::cos(2.0 * pi * (n + 1) * t) - 2.0 * q * std::cos(2.0 * pi * n * t) +
           q * q * std::cos(2.0 * pi * (n - 1) * t);
}

namespace detail {

inline double bisect_breakpoint(int n, double q, double lo, double hi, double flo) {
    while (hi - lo > 1e-14) {
        double mid = 0.5 * (lo + hi);
        double fm = breakpoint_equation(n, q, mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) != (fm < 0.0))
            hi = mid;
        else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

/// Scan (0, 1/2) for sign changes and bisect each one. Stops early after
/// `max_roots` roots when that is positive.
inline std::vector<double> scan_breakpoints(int n, double q, int cells, int max_roots) {
    std::vector<double> roots;
    double prev_t = 0.0;
    double prev_f = breakpoint_equation(n, q, 0.0);
    for (int i = 1; i <= cells; ++i) {
        double t = 0.5 * i / cells;
        double f = breakpoint_equation(n, q, t);
        if (f == 0.0 && t < 0.5) {
            roots.push_back(t);
        } else if ((prev_f < 0.0) != (f < 0.0)) {
            roots.push_back(bisect_breakpoint(n, q, prev_t, t, prev_f));
        }
        if (max_roots > 0 && static_cast<int>(roots.size()) >= max_roots) return roots;
        prev_t = t;
        prev_f = f;
    }
    return roots;
}

}  // namespace detail

/// All n+1 zeros of the breakpoint equation on (0, 1/2), sorted ascending.
/// The scan density doubles up to three times before failing; a persistent
/// wrong count signals a numerical (or theoretical) breach and throws.
inline std::vector<double> breakpoint_roots(int n, double q) {
    if (n < 2) throw std::invalid_argument("breakpoint_roots: n must be >= 2");
    if (!(q > -1.0 && q < 1.0))
        throw std::invalid_argument("breakpoint_roots: q must lie in (-1, 1)");
    int cells = 16 * (n + 1);
    for (int attempt = 0; attempt < 4; ++attempt) {
        auto roots = detail::scan_breakpoints(n, q, cells, 0);
        if (static_cast<int>(roots.size()) == n + 1) return roots;
        cells *= 2;
    }
    throw std::runtime_error("breakpoint_roots: sign-change scan did not find n+1 roots (n=" +
                             std::to_string(n) + ", q=" + std::to_string(q) + ")");
}

/// Even 1-periodic step function with |g| = 1 off its breakpoints, flipping
/// sign at each breakpoint on (0, 1/2). Orientation is the value on
/// (0, t_0). q is empty for the classical candidate sign(cos 2 pi n t).
struct SignFunction {
    int n = 2;
    std::optional<double> q;
    std::vector<double> breakpoints;
    int orientation = +1;

    /// Build from the breakpoint-equation parameter q.
    static SignFunction from_parameter(int n, double q, int orientation = +1) {
        SignFunction g;
        g.n = n;
        g.q = q;
        g.breakpoints = breakpoint_roots(n, q);
        g.orientation = orientation;
        return g;
    }

    /// The classical candidate sign(cos 2 pi n t): n breakpoints (2j-1)/(4n).
    static SignFunction classical(int n, int orientation = +1) {
        if (n < 2) throw std::invalid_argument("SignFunction: n must be >= 2");
        SignFunction g;
        g.n = n;
        g.breakpoints.reserve(static_cast<size_t>(n));
        for (int j = 1; j <= n; ++j)
            g.breakpoints.push_back((2.0 * j - 1.0) / (4.0 * n));
        g.orientation = orientation;
        return g;
    }

    /// Pointwise value; exactly at a breakpoint the value is 0 by convention.
    double operator()(double x) const {
        double t = frac(x);
        if (t > 0.5) t = 1.0 - t;  // even extension
        size_t below = 0;
        for (double b : breakpoints) {
            if (b < t)
                ++below;
            else if (b == t)
                return 0.0;
            else
                break;
        }
        return (below % 2 == 0) ? orientation : -orientation;
    }
};

inline double sign_eval(const SignFunction& g, double x) { return g(x); }

/// Exact piecewise integral 2 int_0^{1/2} g(t) cos(2 pi k t) dt. Vanishes
/// (<= ~1e-10) for k < n when g was built from the breakpoint equation.
inline double orthogonality_residual(const SignFunction& g, int k) {
    if (k < 0) throw std::invalid_argument("orthogonality_residual: k must be >= 0");
    auto antider = [k](double t) {
        return k == 0 ? t : std::sin(2.0 * pi * k * t) / (2.0 * pi * k);
    };
    KahanSum s;
    double lo = 0.0;
    double sign = g.orientation;
    for (double b : g.breakpoints) {
        s.add(sign * (antider(b) - antider(lo)));
        lo = b;
        sign = -sign;
    }
    s.add(sign * (antider(0.5) - antider(lo)));
    return 2.0 * s.value();
}

namespace detail {

/// Signed window integral (2/h) int_0^{h/2} g(t) dt from the breakpoint list.
inline double signed_pairing(const SignFunction& g, double h) {
    double hh = 0.5 * h;
    KahanSum s;
    double lo = 0.0;
    double sign = g.orientation;
    for (double b : g.breakpoints) {
        if (b >= hh) break;
        s.add(sign * (b - lo));
        lo = b;
        sign = -sign;
    }
    s.add(sign * (hh - lo));
    return 2.0 * s.value() / h;
}

}  // namespace detail

/// |(2/h) int_0^{h/2} g|: the pairing of g with the box window of width h,
/// computed exactly from signed piece lengths. By duality this never exceeds
/// the best-L1 constant for the same (n, h).
inline double pairing_value(const SignFunction& g, double h) {
    if (!(h > 0.0 && h <= 1.0)) throw std::invalid_argument("pairing_value: need 0 < h <= 1");
    return std::abs(detail::signed_pairing(g, h));
}

/// Result of the dual maximization over sign-function candidates.
struct DualBound {
    double value = 0.0;
    std::optional<double> q;  ///< empty means the classical candidate won
    int orientation = +1;
    std::vector<double> breakpoints;
};

/// Maximize the window pairing over the parameter family (513-point grid on
/// [-0.998, 0.998], then golden-section refinement) plus the classical
/// candidate. Returns a certified lower bound for the best-L1 constant and
/// the winning candidate. Ties keep the smallest q.
inline DualBound lower_bound_via_duality(int n, double h, int grid_points = 513) {
    if (n < 2) throw std::invalid_argument("lower_bound_via_duality: n must be >= 2");
    if (!(h > 0.0 && h <= 1.0))
        throw std::invalid_argument("lower_bound_via_duality: need 0 < h <= 1");

    DualBound best;
    SignFunction classical = SignFunction::classical(n);
    best.value = pairing_value(classical, h);
    best.orientation = detail::signed_pairing(classical, h) >= 0.0 ? +1 : -1;
    best.breakpoints = classical.breakpoints;

    const double qmax = 0.998;
    auto pairing_at = [n, h](double q) {
        return pairing_value(SignFunction::from_parameter(n, q), h);
    };

    int best_cell = -1;
    for (int i = 0; i < grid_points; ++i) {
        double q = -qmax + 2.0 * qmax * i / (grid_points - 1);
        double v = pairing_at(q);
        if (v > best.value) {
            best.value = v;
            best.q = q;
            best_cell = i;
        }
    }

    if (best_cell >= 0) {
        // Golden-section refinement around the best grid cell; derivative-free
        // because the pairing has kinks where a breakpoint crosses h/2.
        double step = 2.0 * qmax / (grid_points - 1);
        double a = std::max(-0.9985, -qmax + step * (best_cell - 1));
        double b = std::min(0.9985, -qmax + step * (best_cell + 1));
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
        double f1 = pairing_at(c1), f2 = pairing_at(c2);
        while (b - a > 1e-10) {
            if (f1 < f2) {
                a = c1;
                c1 = c2;
                f1 = f2;
                c2 = a + gr * (b - a);
                f2 = pairing_at(c2);
            } else {
                b = c2;
                c2 = c1;
                f2 = f1;
                c1 = b - gr * (b - a);
                f1 = pairing_at(c1);
            }
        }
        double qr = 0.5 * (a + b);
        double vr = pairing_at(qr);
        if (vr > best.value) {
            best.value = vr;
            best.q = qr;
        }
    }

    if (best.q) {
        SignFunction g = SignFunction::from_parameter(n, *best.q);
        best.orientation = detail::signed_pairing(g, h) >= 0.0 ? +1 : -1;
        best.breakpoints = g.breakpoints;
    }
    return best;
}

namespace detail {

/// First two breakpoints only; cheaper than the full root scan when only the
/// window-edge inversion is needed.
inline std::pair<double, double> first_two_breakpoints(int n, double q) {
    int cells = 16 * (n + 1);
    for (int attempt = 0; attempt < 4; ++attempt) {
        auto roots = scan_breakpoints(n, q, cells, 2);
        if (roots.size() == 2) return {roots[0], roots[1]};
        cells *= 2;
    }
    throw std::runtime_error("first_two_breakpoints: could not isolate two roots");
}

}  // namespace detail

/// Exact value of the best-L1 constant for h in (1/(2n), 3/(2n)): locate the
/// parameter q whose second breakpoint t_1 equals the window edge h/2, then
/// return 1 - 2 t_0 / t_1. Throws if the scan-and-bisect inversion cannot
/// match the edge to 1e-11.
inline double en_chi_midrange(int n, double h, std::optional<double>* q_star = nullptr) {
    if (n < 2) throw std::invalid_argument("en_chi_midrange: n must be >= 2");
    double lo_h = 1.0 / (2.0 * n), hi_h = 3.0 / (2.0 * n);
    if (!(h > lo_h && h < hi_h))
        throw std::invalid_argument("en_chi_midrange: h outside (1/(2n), 3/(2n))");
    const double target = 0.5 * h;

    const int scan_pts = 1025;
    const double qlim = 0.999999;
    double prev_q = -qlim;
    double prev_g = detail::first_two_breakpoints(n, prev_q).second - target;
    for (int i = 1; i < scan_pts; ++i) {
        double q = -qlim + 2.0 * qlim * i / (scan_pts - 1);
        double g = detail::first_two_breakpoints(n, q).second - target;
        if (g == 0.0 || (prev_g < 0.0) != (g < 0.0)) {
            double a = prev_q, b = q, fa = prev_g;
            while (b - a > 1e-14) {
                double mid = 0.5 * (a + b);
                double fm = detail::first_two_breakpoints(n, mid).second - target;
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if ((fa < 0.0) != (fm < 0.0))
                    b = mid;
                else {
                    a = mid;
                    fa = fm;
                }
            }
            double qhat = 0.5 * (a + b);
            auto [t0, t1] = detail::first_two_breakpoints(n, qhat);
            if (std::abs(t1 - target) > 1e-11)
                throw std::runtime_error(
                    "en_chi_midrange: inversion did not reach the window edge");
            if (q_star) *q_star = qhat;
            return 1.0 - 2.0 * t0 / t1;
        }
        prev_q = q;
        prev_g = g;
    }
    throw std::runtime_error("en_chi_midrange: no parameter matches the window edge");
}

}  // namespace trigl1
