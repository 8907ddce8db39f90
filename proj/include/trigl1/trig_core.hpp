#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

// Trigonometric polynomials, Fourier analysis and norms on the circle T = R/Z.
// All constructions here are pure value types; nothing holds shared state.

namespace trigl1 {

inline constexpr double pi = 3.14159265358979323846264338327950288;

/// Argument reduction x -> x - floor(x); keeps periodic evaluation stable for large |x|.
inline double frac(double x) {
    double f = x - std::floor(x);
    return f == 1.0 ? 0.0 : f;
}

/// sin(u)/u with the continuous value 1 at u = 0.
inline double sinc(double u) {
    return u == 0.0 ? 1.0 : std::sin(u) / u;
}

/// Compensated (Kahan) accumulator for long sums.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

/// Real trigonometric polynomial of degree < n:
///   p(x) = sum a_j cos(2 pi j x) + sum b_j sin(2 pi j x).
/// a has n entries (a_0..a_{n-1}), b has n-1 entries (b_1..b_{n-1}).
struct TrigPoly {
    int n = 1;
    std::vector<double> a;
    std::vector<double> b;

    TrigPoly() : a(1, 0.0) {}
    explicit TrigPoly(int n_) : n(n_), a(static_cast<size_t>(n_), 0.0),
                                b(static_cast<size_t>(n_ > 0 ? n_ - 1 : 0), 0.0) {
        if (n_ < 1) throw std::invalid_argument("TrigPoly: n must be >= 1");
    }
    TrigPoly(int n_, std::vector<double> a_, std::vector<double> b_)
        : n(n_), a(std::move(a_)), b(std::move(b_)) {
        if (n < 1 || a.size() != static_cast<size_t>(n) ||
            b.size() != static_cast<size_t>(n - 1))
            throw std::invalid_argument("TrigPoly: coefficient sizes do not match n");
    }

    double operator()(double x) const {
        x = frac(x);
        double s = a[0];
        for (int j = 1; j < n; ++j) {
            double w = 2.0 * pi * j * x;
            s += a[static_cast<size_t>(j)] * std::cos(w);
            s += b[static_cast<size_t>(j - 1)] * std::sin(w);
        }
        return s;
    }

    /// Complex Fourier coefficient p^(k), exact from the stored coefficients.
    std::complex<double> fourier(int k) const {
        int ak = std::abs(k);
        if (ak >= n) return {0.0, 0.0};
        if (ak == 0) return {a[0], 0.0};
        double re = 0.5 * a[static_cast<size_t>(ak)];
        double im = -0.5 * b[static_cast<size_t>(ak - 1)];
        if (k < 0) im = -im;
        return {re, im};
    }
};

/// Values of a 1-periodic function on the uniform grid x_i = i/m.
struct GridFunction {
    int m = 2;
    std::vector<double> values;

    GridFunction() : values(2, 0.0) {}
    GridFunction(int m_, std::vector<double> v) : m(m_), values(std::move(v)) {
        if (m < 2 || values.size() != static_cast<size_t>(m))
            throw std::invalid_argument("GridFunction: need m >= 2 samples");
    }

    static GridFunction sample(const std::function<double(double)>& f, int m) {
        std::vector<double> v(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) v[static_cast<size_t>(i)] = f(static_cast<double>(i) / m);
        return GridFunction(m, std::move(v));
    }
};

inline double eval_trigpoly(const TrigPoly& p, double x) { return p(x); }

/// Rectangle-rule Fourier coefficient of grid samples; exact for trig
/// polynomials of degree < m/2 on the grid. Rejects |k| >= m/2 (Nyquist).
inline std::complex<double> fourier_coeff(const GridFunction& f, int k) {
    if (2 * std::abs(k) >= f.m)
        throw std::invalid_argument("fourier_coeff: |k| must be below m/2");
    KahanSum re, im;
    for (int i = 0; i < f.m; ++i) {
        double w = -2.0 * pi * k * static_cast<double>(i) / f.m;
        re.add(f.values[static_cast<size_t>(i)] * std::cos(w));
        im.add(f.values[static_cast<size_t>(i)] * std::sin(w));
    }
    return {re.value() / f.m, im.value() / f.m};
}

/// Same, sampling a function handle on an m-point grid first.
inline std::complex<double> fourier_coeff(const std::function<double(double)>& f, int k,
                                          int m = 4096) {
    return fourier_coeff(GridFunction::sample(f, m), k);
}

/// Real Dirichlet kernel D_n(x) = 1 + 2 sum_{k<n} cos(2 pi k x); D_n(0) = 2n-1.
inline double dirichlet_kernel(int n, double x) {
    if (n < 1) throw std::invalid_argument("dirichlet_kernel: n must be >= 1");
    double s = 1.0;
    for (int k = 1; k < n; ++k) s += 2.0 * std::cos(2.0 * pi * k * frac(x));
    return s;
}

inline double sup_norm(const GridFunction& f) {
    double s = 0.0;
    for (double v : f.values) s = std::max(s, std::abs(v));
    return s;
}

inline double l1_norm(const GridFunction& f) {
    KahanSum s;
    for (double v : f.values) s.add(std::abs(v));
    return s.value() / f.m;
}

namespace detail {

/// Gauss-Legendre nodes/weights on [-1,1], computed once per order by Newton
/// iteration on the Legendre recurrence. The cache is thread-local so
/// concurrent evaluation stays lock- and race-free.
inline const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order) {
    thread_local std::vector<std::pair<std::vector<double>, std::vector<double>>> cache(65);
    if (order < 1 || order > 64) throw std::invalid_argument("gauss_legendre: order out of range");
    auto& entry = cache[static_cast<size_t>(order)];
    if (!entry.first.empty()) return entry;
    std::vector<double> x(static_cast<size_t>(order)), w(static_cast<size_t>(order));
    for (int i = 0; i < order; ++i) {
        double t = std::cos(pi * (i + 0.75) / (order + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = order * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= order; ++k) {
            double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = order * (t * p1 - p0) / (t * t - 1.0);
        x[static_cast<size_t>(i)] = t;
        w[static_cast<size_t>(i)] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    entry = {std::move(x), std::move(w)};
    return entry;
}

/// Integrate f over [a,b] with a composite Gauss-Legendre rule; `panels`
/// subintervals, 16 nodes each.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        int panels = 8) {
    const auto& [xs, ws] = gauss_legendre(16);
    KahanSum s;
    for (int p = 0; p < panels; ++p) {
        double lo = a + (b - a) * p / panels;
        double hi = a + (b - a) * (p + 1) / panels;
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (size_t i = 0; i < xs.size(); ++i) s.add(ws[i] * f(mid + half * xs[i]) * half);
    }
    return s.value();
}

}  // namespace detail

/// A compactly supported integrable kernel on R. `jumps` lists discontinuity
/// abscissas inside the support so quadrature can split there.
struct CompactKernel {
    std::function<double(double)> eval;
    double support_halfwidth = 0.5;
    std::vector<double> jumps;
};

/// Convolution over the real line (f * g)(x) = int f(x-t) g(t) dt for
/// 1-periodic f and compactly supported g; piecewise Gauss-Legendre between
/// the kernel's jump points.
inline std::function<double(double)> convolve_line(std::function<double(double)> f,
                                                   CompactKernel g, int panels_per_piece = 8) {
    double s = g.support_halfwidth;
    std::vector<double> cuts{-s, s};
    for (double j : g.jumps)
        if (j > -s && j < s) cuts.push_back(j);
    std::sort(cuts.begin(), cuts.end());
    return [f = std::move(f), g = std::move(g), cuts, panels_per_piece](double x) {
        KahanSum total;
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            if (cuts[i + 1] - cuts[i] < 1e-300) continue;
            total.add(detail::integrate(
                [&](double t) { return f(x - t) * g.eval(t); }, cuts[i], cuts[i + 1],
                panels_per_piece));
        }
        return total.value();
    };
}

/// Periodic convolution x -> int_T f(x-t) gtilde(t) dt where gtilde is the
/// 1-periodization of g. Numerically equal to the line convolution above.
inline std::function<double(double)> convolve_periodic(std::function<double(double)> f,
                                                       CompactKernel g,
                                                       int panels_per_piece = 8) {
    double s = g.support_halfwidth;
    int lo = static_cast<int>(std::floor(-s)) - 1;
    int hi = static_cast<int>(std::ceil(s)) + 1;
    auto gtilde = [g, lo, hi](double t) {
        t = frac(t);
        double v = 0.0;
        for (int k = lo; k <= hi; ++k) {
            double u = t + k;
            if (std::abs(u) <= g.support_halfwidth) v += g.eval(u);
        }
        return v;
    };
    // Split T at the periodized jump images so each quadrature piece is smooth.
    std::vector<double> cuts;
    std::vector<double> marks = g.jumps;
    marks.push_back(-s);
    marks.push_back(s);
    for (double jm : marks) cuts.push_back(frac(jm));
    cuts.push_back(0.0);
    cuts.push_back(1.0);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double u, double v) { return std::abs(u - v) < 1e-14; }),
               cuts.end());
    return [f = std::move(f), gtilde, cuts, panels_per_piece](double x) {
        KahanSum total;
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            if (cuts[i + 1] - cuts[i] < 1e-13) continue;
            total.add(detail::integrate(
                [&](double t) { return f(x - t) * gtilde(t); }, cuts[i], cuts[i + 1],
                panels_per_piece));
        }
        return total.value();
    };
}

}  // namespace trigl1
