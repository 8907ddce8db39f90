#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigl1/closed_forms.hpp"
#include "trigl1/kernels.hpp"
#include "trigl1/l1_oracle.hpp"
#include "trigl1/random_trig.hpp"
#include "trigl1/trig_core.hpp"

// Higher-order smoothness machinery: symmetric differences, the reciprocal
// central-binomial constants, the U / W convolution kernels built from
// dilated squared boxes, their convolution powers, and the series bounds of
// Stechkin type.

namespace trigl1 {

/// Exact rational value (the constants here are reciprocal binomials).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

namespace detail {

inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    k = std::min(k, n - k);
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace detail

/// gamma_r^*: 1/C(2k,k) for r = 2k, 1/C(2k-1,k-1) for r = 2k-1. The sharp
/// constant scale for r-th order difference bounds (~ r^{1/2}/2^r).
inline Rational gamma_star(int r) {
    if (r < 1) throw std::invalid_argument("gamma_star: r must be >= 1");
    if (r % 2 == 0)
        return Rational{1, detail::binomial(r, r / 2)};
    int k = (r + 1) / 2;
    return Rational{1, detail::binomial(2 * k - 1, k - 1)};
}

/// c': the matching lower-bound constant (r/(r+1) for odd r, 1 for even r).
inline Rational lower_constant_cprime(int r) {
    if (r < 1) throw std::invalid_argument("lower_constant_cprime: r must be >= 1");
    if (r % 2 == 0) return Rational{1, 1};
    return Rational{r, r + 1};
}

/// Centered symmetric difference sum_{j=-k}^{k} (-1)^j C(2k, k+j) f(x + j t).
inline double sym_diff(const std::function<double(double)>& f, double t, int k, double x) {
    if (k < 1) throw std::invalid_argument("sym_diff: k must be >= 1");
    KahanSum s;
    for (int j = -k; j <= k; ++j) {
        double sign = (j % 2 == 0) ? 1.0 : -1.0;
        s.add(sign * static_cast<double>(detail::binomial(2 * k, k + j)) * f(x + j * t));
    }
    return s.value();
}

/// Forward r-th difference sum_{j=0}^{r} (-1)^j C(r,j) f(x + j t), maximized
/// over an (x, t) product grid with 0 < t <= h. A lower estimate of the
/// modulus of smoothness.
inline double omega_r(const std::function<double(double)>& f, int r, double h,
                      int x_grid = 1024, int t_grid = 256) {
    if (r < 1) throw std::invalid_argument("omega_r: r must be >= 1");
    std::vector<double> coef(static_cast<size_t>(r + 1));
    for (int j = 0; j <= r; ++j)
        coef[static_cast<size_t>(j)] =
            (j % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(detail::binomial(r, j));
    double best = 0.0;
    for (int it = 1; it <= t_grid; ++it) {
        double t = h * it / t_grid;
        for (int ix = 0; ix < x_grid; ++ix) {
            double x = static_cast<double>(ix) / x_grid;
            double d = 0.0;
            for (int j = 0; j <= r; ++j) d += coef[static_cast<size_t>(j)] * f(x + j * t);
            best = std::max(best, std::abs(d));
        }
    }
    return best;
}

/// Smoothing kernel of order 2k built from the squared box: the base kernel
/// is phi = chi_h^2 (unit-mass triangle on [-h, h]); its dilations
/// phi_j = chi_{jh}^2 combine with weights a_j = C(2k,k+j)/C(2k,k) into
///   U = 2 sum_{j=1}^{k} (-1)^{j+1} a_j phi_j,     W = delta - U.
struct StechkinKernel {
    int k = 1;
    double h = 0.25;
    std::vector<double> a;  ///< a_1..a_k

    StechkinKernel(int k_, double h_) : k(k_), h(h_) {
        if (k < 1) throw std::invalid_argument("StechkinKernel: k must be >= 1");
        if (h <= 0.0) throw std::invalid_argument("StechkinKernel: h must be positive");
        double ckk = static_cast<double>(detail::binomial(2 * k, k));
        for (int j = 1; j <= k; ++j)
            a.push_back(static_cast<double>(detail::binomial(2 * k, k + j)) / ckk);
    }

    /// Base kernel phi = chi_h^2 on the real line.
    double phi(double t) const {
        double u = 1.0 - std::abs(t) / h;
        return u > 0.0 ? u / h : 0.0;
    }

    /// U on the real line (support [-kh, kh]).
    double u_line(double t) const {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) {
            double w = 1.0 - std::abs(t) / (j * h);
            if (w > 0.0)
                s += (j % 2 == 1 ? 2.0 : -2.0) * a[static_cast<size_t>(j - 1)] * w / (j * h);
        }
        return s;
    }

    /// Periodized U, summed exactly over the overlapping translates.
    double u_periodic(double x) const {
        double t = frac(x);
        double halfw = k * h;
        int lo = static_cast<int>(std::ceil(-t - halfw));
        int hi = static_cast<int>(std::floor(-t + halfw));
        KahanSum s;
        for (int q = lo; q <= hi; ++q) s.add(u_line(t + q));
        return s.value();
    }
};

/// Fourier coefficient of the periodized U:
/// 2 sum_j (-1)^{j+1} a_j sinc^2(pi freq j h). Equals 1 at freq 0 (unit mass).
inline double u_fourier(const StechkinKernel& kern, int freq) {
    KahanSum s;
    for (int j = 1; j <= kern.k; ++j) {
        double sc = sinc(pi * freq * j * kern.h);
        s.add((j % 2 == 1 ? 2.0 : -2.0) * kern.a[static_cast<size_t>(j - 1)] * sc * sc);
    }
    return s.value();
}

/// Smoothness functional of order 2k at x for any even unit-mass compactly
/// supported base kernel: C(2k,k)^{-1} int Delta_t^{2k} f(x) phi(t) dt.
/// Quadrature splits at the kernel's jumps and at zero.
inline double w2k_value(const std::function<double(double)>& f, int k,
                        const CompactKernel& phi, double x, int panels = 16) {
    double inv = 1.0 / static_cast<double>(detail::binomial(2 * k, k));
    auto integrand = [&](double t) { return sym_diff(f, t, k, x) * phi.eval(t); };
    std::vector<double> cuts{-phi.support_halfwidth, 0.0, phi.support_halfwidth};
    for (double j : phi.jumps)
        if (std::abs(j) < phi.support_halfwidth) cuts.push_back(j);
    std::sort(cuts.begin(), cuts.end());
    KahanSum s;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] - cuts[i] < 1e-300) continue;
        s.add(detail::integrate(integrand, cuts[i], cuts[i + 1], panels));
    }
    return inv * s.value();
}

/// Same with the kernel's own base phi = chi_h^2.
inline double w2k_value(const std::function<double(double)>& f, const StechkinKernel& kern,
                        double x, int panels = 16) {
    double inv = 1.0 / static_cast<double>(detail::binomial(2 * kern.k, kern.k));
    auto integrand = [&](double t) { return sym_diff(f, t, kern.k, x) * kern.phi(t); };
    double left = detail::integrate(integrand, -kern.h, 0.0, panels);
    double right = detail::integrate(integrand, 0.0, kern.h, panels);
    return inv * (left + right);
}

/// Grid sup of |w2k_value| (lower estimate).
inline double w2k_sup(const std::function<double(double)>& f, const StechkinKernel& kern,
                      int m = 512, int panels = 8) {
    double best = 0.0;
    for (int i = 0; i < m; ++i)
        best = std::max(best, std::abs(w2k_value(f, kern, static_cast<double>(i) / m, panels)));
    return best;
}

/// Samples of the periodized convolution power U^j on the oracle grid.
/// j = 1 is evaluated exactly from the triangle pieces; j >= 2 by Fourier
/// synthesis with the cutoff certified by the analytic tail bound (< 1e-9).
inline GridFunction u_power_samples(const StechkinKernel& kern, int j, int m,
                                    bool half_offset = true) {
    if (j < 1) throw std::invalid_argument("u_power_samples: j must be >= 1");
    std::vector<double> v(static_cast<size_t>(m));
    if (j == 1) {
        for (int i = 0; i < m; ++i)
            v[static_cast<size_t>(i)] =
                kern.u_periodic((i + (half_offset ? 0.5 : 0.0)) / m);
        return GridFunction(m, std::move(v));
    }
    // |u_fourier(freq)| <= A / (pi freq h)^2 with A = 2 sum a_j, so the tail
    // past K is below (A/(pi h)^2)^j K^{1-2j} / (2j-1) per side.
    double A = 0.0;
    for (double aj : kern.a) A += 2.0 * aj;
    double amp = std::pow(A / (pi * kern.h) / (pi * kern.h), j);
    int K = 16;
    while (2.0 * amp * std::pow(static_cast<double>(K), 1.0 - 2.0 * j) / (2.0 * j - 1.0) >
           1e-9)
        K *= 2;
    for (int i = 0; i < m; ++i) {
        double x = (i + (half_offset ? 0.5 : 0.0)) / m;
        KahanSum s;
        s.add(std::pow(u_fourier(kern, 0), j));
        for (int freq = 1; freq <= K; ++freq)
            s.add(2.0 * std::pow(u_fourier(kern, freq), j) * std::cos(2.0 * pi * freq * x));
        v[static_cast<size_t>(i)] = s.value();
    }
    return GridFunction(m, std::move(v));
}

/// Series of constants E_n(U^j)_1 for j = 0..J (j = 0 contributes 1) and the
/// partial sum; the terms come from the LP oracle on the sampled powers.
struct StechkinSeriesResult {
    std::vector<double> terms;
    double partial_sum = 0.0;
};

inline StechkinSeriesResult stechkin_series(int n, const StechkinKernel& kern, int J, int m) {
    StechkinSeriesResult out;
    KahanSum sum;
    out.terms.push_back(1.0);
    sum.add(1.0);
    for (int j = 1; j <= J; ++j) {
        GridFunction g = u_power_samples(kern, j, m, true);
        double E = best_l1_approx(L1FitProblem(std::move(g), n, true)).error;
        out.terms.push_back(E);
        sum.add(E);
    }
    out.partial_sum = sum.value();
    return out;
}

/// The constant (cos(pi/(2 alpha)))^{-1} attached to moduli evaluated at
/// step alpha/(2n); finite only for alpha > 1.
inline double alpha_step_constant(double alpha) {
    if (!(alpha > 1.0))
        throw std::invalid_argument("alpha_step_constant: requires alpha > 1");
    return 1.0 / std::cos(pi / (2.0 * alpha));
}

struct StechkinCheckReport {
    double lhs = 0.0;    ///< oracle E_n(f)_1
    double rhs = 0.0;    ///< constant * gamma_{2k}^* * omega_{2k}(f, alpha/(2n))
    double ratio = 0.0;  ///< lhs / rhs
};

/// Checks E_n(f)_1 <= (cos(pi/(2 alpha)))^{-1} gamma_{2k}^* omega_{2k}(f, alpha/(2n))
/// numerically on one test function, returning both sides.
inline StechkinCheckReport stechkin_inequality_check(int n, int k, double alpha,
                                                     const std::function<double(double)>& f,
                                                     int m = 4096, int x_grid = 512,
                                                     int t_grid = 128) {
    StechkinCheckReport rep;
    std::vector<double> v(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) v[static_cast<size_t>(i)] = f((i + 0.5) / m);
    rep.lhs = best_l1_approx(L1FitProblem(GridFunction(m, std::move(v)), n, true)).error;
    double om = omega_r(f, 2 * k, alpha / (2.0 * n), x_grid, t_grid);
    rep.rhs = alpha_step_constant(alpha) * gamma_star(2 * k).value() * om;
    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
    return rep;
}

struct BracketProbeReport {
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double empirical_lower = 0.0;  ///< max over the test family of E/||W_2k||
    double cprime = 0.0;
    bool exploratory = true;
};

/// Exploratory probe of the two-sided bracket
///   gamma_r^*/(1-mu^2) <= K* <= (4/pi) gamma_r^*/(1-mu^2)
/// for the sharp ratio K* = sup E_n(f)/||W_2k(f, phi, .)|| at h = 1/(2n).
/// mu is supplied by the caller (only an approximation is known); nothing is
/// asserted.
inline BracketProbeReport ratio_bracket_probe(int n, int r, double mu, int m = 2048,
                                              int trials = 8, std::uint64_t seed = 42) {
    if (r % 2 != 0) throw std::invalid_argument("ratio_bracket_probe: r must be even");
    int k = r / 2;
    BracketProbeReport rep;
    double g = gamma_star(r).value();
    rep.bracket_lo = g / (1.0 - mu * mu);
    rep.bracket_hi = 4.0 / pi * rep.bracket_lo;
    rep.cprime = lower_constant_cprime(r).value();
    StechkinKernel kern(k, 1.0 / (2.0 * n));

    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        TrigPoly f(2 * n + 1);
        // Concentrate energy at and above frequency n, where the ratio peaks.
        for (int freq = n; freq <= 2 * n; ++freq) {
            f.a[static_cast<size_t>(freq)] = rng.uniform(-1.0, 1.0);
            f.b[static_cast<size_t>(freq - 1)] = rng.uniform(-1.0, 1.0);
        }
        if (t == 0) {
            f = TrigPoly(n + 1);
            f.a[static_cast<size_t>(n)] = 1.0;  // pure cos(2 pi n x)
        }
        auto fx = [&f](double x) { return f(x); };
        std::vector<double> v(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) v[static_cast<size_t>(i)] = fx((i + 0.5) / m);
        double E = best_l1_approx(L1FitProblem(GridFunction(m, std::move(v)), n, true)).error;
        double W = w2k_sup(fx, kern, 256, 8);
        if (W > 1e-12) rep.empirical_lower = std::max(rep.empirical_lower, E / W);
    }
    return rep;
}

}  // namespace trigl1
