#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigl1/closed_forms.hpp"
#include "trigl1/kernels.hpp"
#include "trigl1/l1_oracle.hpp"
#include "trigl1/random_trig.hpp"
#include "trigl1/trig_core.hpp"

// Uniform-norm bounds through Steklov deviations: the (1-c)^{-1} constant,
// the extrapolated series bound that survives small window widths, and the
// two constructive near-best approximants (spectral and truncated-series).

namespace trigl1 {

/// (1 - E_n(chi_h)_1)^{-1}: the constant bounding ||g|| by the Steklov
/// deviation for g orthogonal to the polynomial space. Requires h > 1/(2n),
/// where the constant is finite.
inline double favard_constant(int n, double h) {
    if (h <= 1.0 / (2.0 * n))
        throw std::invalid_argument("favard_constant: requires h > 1/(2n)");
    double c = en_chi(n, h).value;
    return 1.0 / (1.0 - c);
}

/// The series of constants E_n(chi_h^j)_1 for j = 0..J (j = 0 contributes 1
/// by the identity-operator convention) and its partial sum.
struct FavardSeriesResult {
    std::vector<double> terms;
    std::vector<Method> methods;
    double partial_sum = 0.0;
};

enum class SeriesMethod { automatic, closed_form, oracle };

/// Terms E_n(chi_h^j)_1: j = 1 from the exact engine, j >= 2 from the LP
/// oracle; at h = 1/(2n) the closed-form Favard constants are available
/// instead (and are the default there).
inline FavardSeriesResult extrapolation_series(int n, double h, int J, int m,
                                               SeriesMethod how = SeriesMethod::automatic) {
    if (J < 1) throw std::invalid_argument("extrapolation_series: J must be >= 1");
    bool at_half_window = std::abs(h - 1.0 / (2.0 * n)) <= 1e-12;
    bool closed = how == SeriesMethod::closed_form ||
                  (how == SeriesMethod::automatic && at_half_window);
    if (closed && !at_half_window)
        throw std::invalid_argument(
            "extrapolation_series: closed form only available at h = 1/(2n)");

    FavardSeriesResult out;
    KahanSum sum;
    for (int j = 0; j <= J; ++j) {
        double term;
        Method meth;
        if (j == 0) {
            term = 1.0;
            meth = Method::closed_form;
        } else if (closed) {
            term = favard_F(j);
            meth = Method::closed_form;
        } else if (j == 1) {
            ApproxResult r = en_chi(n, h);
            term = r.value;
            meth = r.method;
        } else {
            term = en_chi_oracle(n, h, j, m);
            meth = Method::lp_oracle;
        }
        out.terms.push_back(term);
        out.methods.push_back(meth);
        sum.add(term);
    }
    out.partial_sum = sum.value();
    return out;
}

/// Spectral near-best approximant: coefficients
///   f^(k) tau_h^(k) / (1 - chi_h^(k) + tau_h^(k)),  |k| <= n-1,
/// where tau_h is the oracle's best approximant of the box kernel. Real by
/// conjugate symmetry. Throws if a denominator collapses below 1e-12.
inline TrigPoly jackson_polynomial(const std::function<double(double)>& f, int n, double h,
                                   int m = 4096, const TrigPoly* tau_h_hint = nullptr) {
    if (h <= 1.0 / (2.0 * n))
        throw std::invalid_argument("jackson_polynomial: requires h > 1/(2n)");
    TrigPoly tau_h = tau_h_hint ? *tau_h_hint : en_chi_oracle_fit(n, h, 1, m).tau;

    GridFunction fs = GridFunction::sample(f, m);
    TrigPoly out(n);
    for (int k = 0; k < n; ++k) {
        std::complex<double> fk = fourier_coeff(fs, k);
        std::complex<double> tk = tau_h.fourier(k);
        std::complex<double> den = 1.0 - chi_fourier(h, k, 1) + tk;
        if (std::abs(den) < 1e-12)
            throw internal_error("jackson_polynomial: vanishing denominator at k=" +
                                 std::to_string(k));
        std::complex<double> ck = fk * tk / den;
        if (k == 0) {
            out.a[0] = ck.real();
        } else {
            out.a[static_cast<size_t>(k)] = 2.0 * ck.real();
            out.b[static_cast<size_t>(k - 1)] = -2.0 * ck.imag();
        }
    }
    return out;
}

/// Truncated-series approximant and its guaranteed bound.
struct JacksonTauResult {
    TrigPoly tau;
    double measured_error = 0.0;  ///< grid sup of |f - tau|
    double bound = 0.0;           ///< (sum_{j<N} E_j) W2(f,h) + E_N ||f||
    double coeff_sum = 0.0;       ///< sum_{j=0}^{N-1} E_n(chi_h^j)_1
};

/// Oracle approximants of the box powers 1..N and their constants; reusable
/// across many targets f at the same (n, h, N).
struct JacksonTauBasis {
    int n = 1;
    double h = 0.5;
    std::vector<TrigPoly> tau_pow;  ///< best approximants of chi_h^1..chi_h^N
    std::vector<double> E;          ///< E[0] = 1, E[j] = E_n(chi_h^j)_1
};

inline JacksonTauBasis make_jackson_basis(int n, double h, int N, int m = 4096) {
    if (N < 1) throw std::invalid_argument("make_jackson_basis: N must be >= 1");
    JacksonTauBasis basis;
    basis.n = n;
    basis.h = h;
    basis.E.assign(static_cast<size_t>(N + 1), 0.0);
    basis.E[0] = 1.0;  // identity-operator term
    basis.tau_pow.reserve(static_cast<size_t>(N));
    for (int j = 1; j <= N; ++j) {
        L1Fit fit = en_chi_oracle_fit(n, h, j, m);
        basis.tau_pow.push_back(fit.tau);
        basis.E[static_cast<size_t>(j)] = fit.error;
    }
    return basis;
}

/// Builds tau_{f,N} = sum_{j=0}^{N-1} tau_h^j conv (f - f*chi_h) + tau_h^N conv f
/// by Fourier multiplication. tau_h^0 = 0, so the j = 0 term drops out of
/// the polynomial; it still contributes the leading 1 to the bound's
/// coefficient sum (the untouched f - f*chi_h part of the error).
inline JacksonTauResult jackson_tau_N(const std::function<double(double)>& f,
                                      const JacksonTauBasis& basis, int m = 4096) {
    const int n = basis.n;
    const double h = basis.h;
    const int N = static_cast<int>(basis.tau_pow.size());
    const std::vector<TrigPoly>& tau_pow = basis.tau_pow;
    const std::vector<double>& E = basis.E;

    GridFunction fs = GridFunction::sample(f, m);
    TrigPoly out(n);
    for (int k = 0; k < n; ++k) {
        std::complex<double> fk = fourier_coeff(fs, k);
        std::complex<double> high = fk * (1.0 - chi_fourier(h, k, 1));  // (f - f*chi_h)^(k)
        std::complex<double> ck = 0.0;
        for (int j = 1; j < N; ++j) ck += tau_pow[static_cast<size_t>(j - 1)].fourier(k) * high;
        ck += tau_pow[static_cast<size_t>(N - 1)].fourier(k) * fk;
        if (k == 0) {
            out.a[0] = ck.real();
        } else {
            out.a[static_cast<size_t>(k)] = 2.0 * ck.real();
            out.b[static_cast<size_t>(k - 1)] = -2.0 * ck.imag();
        }
    }

    JacksonTauResult res;
    res.tau = out;
    double sup_err = 0.0, sup_f = 0.0;
    for (int i = 0; i < m; ++i) {
        double x = static_cast<double>(i) / m;
        sup_err = std::max(sup_err, std::abs(f(x) - out(x)));
        sup_f = std::max(sup_f, std::abs(f(x)));
    }
    res.measured_error = sup_err;
    KahanSum cs;
    for (int j = 0; j < N; ++j) cs.add(E[static_cast<size_t>(j)]);
    res.coeff_sum = cs.value();
    res.bound = res.coeff_sum * w2_norm(f, h, 2048) + E[static_cast<size_t>(N)] * sup_f;
    return res;
}

inline JacksonTauResult jackson_tau_N(const std::function<double(double)>& f, int n, double h,
                                      int N, int m = 4096) {
    return jackson_tau_N(f, make_jackson_basis(n, h, N, m), m);
}

/// Worst observed ratio of a family of checks, with context.
struct RatioReport {
    double worst_ratio = 0.0;
    int trials = 0;
    bool exploratory = false;
    std::string note;
};

/// Classical second-derivative consequence: W2(f, h) <= (h^2/24) ||f''|| on
/// smooth test functions. Reports the worst observed ratio (should stay
/// below 1).
inline RatioReport classical_consequences_check(int n, int trials = 50,
                                                std::uint64_t seed = 42) {
    if (n < 2) throw std::invalid_argument("classical_consequences_check: n must be >= 2");
    Rng rng(seed);
    RatioReport rep;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        TrigPoly g = random_highpass_trig(rng, n, 3 * n);
        double h = rng.uniform(0.2 / n, 1.5 / n);
        // Exact sup of |f''| for a trig sum: grid search is accurate enough
        // at this density relative to the slack in the inequality.
        double d2 = 0.0;
        const int mg = 4096;
        for (int i = 0; i < mg; ++i) {
            double x = static_cast<double>(i) / mg;
            double s = 0.0;
            for (int k = 1; k <= g.n - 1; ++k) {
                double w = 2.0 * pi * k;
                s += -w * w *
                     (g.a[static_cast<size_t>(k)] * std::cos(w * x) +
                      g.b[static_cast<size_t>(k - 1)] * std::sin(w * x));
            }
            d2 = std::max(d2, std::abs(s));
        }
        double lhs = w2_norm([&g](double x) { return g(x); }, h, 1024);
        double rhs = h * h / 24.0 * d2;
        if (rhs > 0.0) rep.worst_ratio = std::max(rep.worst_ratio, lhs / rhs);
    }
    return rep;
}

/// Exploratory probe of the conjectured constant 3 in
/// ||g|| <= 3 W2(g, 1/(2n)). Reports the largest ratio seen; never asserts.
inline RatioReport conjecture_probe(int n, int trials = 50, std::uint64_t seed = 42) {
    if (n < 2) throw std::invalid_argument("conjecture_probe: n must be >= 2");
    Rng rng(seed);
    RatioReport rep;
    rep.trials = trials;
    rep.exploratory = true;
    rep.note = "conjecture";
    double h = 1.0 / (2.0 * n);
    for (int t = 0; t < trials; ++t) {
        TrigPoly g = random_highpass_trig(rng, n, 4 * n);
        auto gf = [&g](double x) { return g(x); };
        double sup_g = 0.0;
        const int mg = 2048;
        for (int i = 0; i < mg; ++i)
            sup_g = std::max(sup_g, std::abs(g(static_cast<double>(i) / mg)));
        double w = w2_norm(gf, h, 1024);
        if (w > 1e-12) rep.worst_ratio = std::max(rep.worst_ratio, sup_g / w);
    }
    return rep;
}

}  // namespace trigl1
