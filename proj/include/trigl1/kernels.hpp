#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "trigl1/trig_core.hpp"

// The normalized box kernel chi_h, its 1-periodization, j-fold convolution
// powers, Steklov means, and the smoothness functionals built from them.

namespace trigl1 {

/// Fourier coefficient of the periodized j-fold box power:
/// (sin(pi k h)/(pi k h))^j, value 1 at k = 0.
inline double chi_fourier(double h, int k, int j = 1) {
    if (j < 1) throw std::invalid_argument("chi_fourier: j must be >= 1");
    if (h <= 0.0) throw std::invalid_argument("chi_fourier: h must be positive");
    double base = sinc(pi * k * h);
    double v = 1.0;
    for (int i = 0; i < j; ++i) v *= base;
    return v;
}

namespace detail {

/// Uniform B-spline M_j on integer knots (support [0, j]), evaluated by the
/// Cox-de Boor recursion; all weights stay in [0,1], so this is stable for
/// every order used here.
inline double uniform_bspline(int j, double t) {
    if (t <= 0.0 || t >= static_cast<double>(j)) return 0.0;
    int i0 = static_cast<int>(std::floor(t));
    if (i0 >= j) return 0.0;
    std::vector<double> N(static_cast<size_t>(j), 0.0);
    N[static_cast<size_t>(i0)] = 1.0;
    for (int r = 2; r <= j; ++r) {
        int lo = std::max(0, i0 - r + 1);
        for (int i = lo; i <= std::min(j - r, i0); ++i) {
            double left = (t - i) / (r - 1) * N[static_cast<size_t>(i)];
            double right = (i + r - t) / (r - 1) *
                           (i + 1 < j ? N[static_cast<size_t>(i + 1)] : 0.0);
            N[static_cast<size_t>(i)] = left + right;
        }
    }
    return N[0];
}

}  // namespace detail

/// Periodized j-fold convolution power of the normalized box of width h.
/// j = 0 stands for the identity operator and has no pointwise values.
struct BoxPowerKernel {
    double h = 0.5;
    int j = 1;

    BoxPowerKernel(double h_, int j_) : h(h_), j(j_) {
        if (h <= 0.0) throw std::invalid_argument("BoxPowerKernel: h must be positive");
        if (j < 0) throw std::invalid_argument("BoxPowerKernel: j must be >= 0");
    }

    double operator()(double x) const {
        if (j == 0)
            throw std::domain_error("BoxPowerKernel: j = 0 has no pointwise evaluation");
        double t = frac(x);
        if (j == 1) {
            // Exact piecewise-constant rule; jumps take the midpoint value.
            double lo = t - 0.5 * h, hi = t + 0.5 * h;
            double cl = std::ceil(lo), fh = std::floor(hi);
            double count = fh - cl + 1.0;
            if (lo == cl) count -= 0.5;
            if (hi == fh) count -= 0.5;
            return std::max(count, 0.0) / h;
        }
        // chi_h^{*j}(y) = (1/h) M_j(y/h + j/2); sum the translates that overlap.
        double halfw = 0.5 * j * h;
        int lo = static_cast<int>(std::ceil(-t - halfw));
        int hi = static_cast<int>(std::floor(-t + halfw));
        KahanSum s;
        for (int k = lo; k <= hi; ++k)
            s.add(detail::uniform_bspline(j, (t + k) / h + 0.5 * j) / h);
        return s.value();
    }

    /// The base box as a kernel on R (for quadrature-based convolutions).
    CompactKernel base_kernel() const {
        double hh = h;
        return CompactKernel{[hh](double t) { return std::abs(t) < 0.5 * hh ? 1.0 / hh : 0.0; },
                             0.5 * h,
                             {-0.5 * h, 0.5 * h}};
    }
};

inline double eval_box_power(const BoxPowerKernel& kern, double x) { return kern(x); }

/// Steklov mean S_h(f, x) = (1/h) int_{x-h/2}^{x+h/2} f = (f * chi_h)(x).
inline double steklov_mean(const std::function<double(double)>& f, double h, double x,
                           int panels = 16) {
    if (h <= 0.0) throw std::invalid_argument("steklov_mean: h must be positive");
    return detail::integrate(f, x - 0.5 * h, x + 0.5 * h, panels) / h;
}

/// Pointwise deviation from the Steklov mean: f(x) - (f * chi_h)(x).
inline double w2(const std::function<double(double)>& f, double h, double x,
                 int panels = 16) {
    return f(x) - steklov_mean(f, h, x, panels);
}

/// Grid maximum of |w2| over m uniform points (a lower estimate of the sup).
inline double w2_norm(const std::function<double(double)>& f, double h, int m = 1024,
                      int panels = 16) {
    if (m < 2) throw std::invalid_argument("w2_norm: m must be >= 2");
    double best = 0.0;
    for (int i = 0; i < m; ++i)
        best = std::max(best, std::abs(w2(f, h, static_cast<double>(i) / m, panels)));
    return best;
}

/// Second modulus of smoothness at step h/2: the maximum of the centered
/// second difference |f(x-t/2) - 2 f(x) + f(x+t/2)| over an (x, t) product
/// grid with 0 < t < h. A lower estimate of the sup.
inline double omega2(const std::function<double(double)>& f, double h, int x_grid = 1024,
                     int t_grid = 256) {
    double best = 0.0;
    for (int it = 1; it <= t_grid; ++it) {
        double t = h * it / t_grid;
        for (int ix = 0; ix < x_grid; ++ix) {
            double x = static_cast<double>(ix) / x_grid;
            double d = f(x - 0.5 * t) - 2.0 * f(x) + f(x + 0.5 * t);
            best = std::max(best, std::abs(d));
        }
    }
    return best;
}

}  // namespace trigl1
