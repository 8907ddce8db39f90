#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigl1/kernels.hpp"
#include "trigl1/trig_core.hpp"

// Ground-truth oracle: best L1 approximation by trigonometric polynomials on
// a discretized circle, solved exactly (for the discretized problem) by the
// simplex method on
//
//   min sum_i (u_i + v_i)/m   s.t.   tau(x_i) + u_i - v_i = f(x_i),  u, v >= 0,
//
// with tau ranging over the 2n-1 dimensional polynomial space. The basis is
// always the identity with at most 2n-1 replaced columns, so every simplex
// step reduces to dense linear algebra on a (2n-1)^2 core matrix.

namespace trigl1 {

struct L1FitProblem {
    GridFunction samples;
    int n = 1;
    /// When set, sample i sits at (i + 1/2)/m instead of i/m (keeps kernel
    /// jumps off the grid).
    bool half_offset = false;

    L1FitProblem(GridFunction s, int n_, bool half_offset_ = false)
        : samples(std::move(s)), n(n_), half_offset(half_offset_) {
        if (n < 1) throw std::invalid_argument("L1FitProblem: n must be >= 1");
        if (samples.m < 8 * n)
            throw std::invalid_argument("L1FitProblem: need m >= 8n samples");
    }

    double abscissa(int i) const {
        return (static_cast<double>(i) + (half_offset ? 0.5 : 0.0)) / samples.m;
    }
};

struct L1Fit {
    double error = 0.0;  ///< (1/m) sum |f - tau| at the discrete optimum
    TrigPoly tau;
    int iterations = 0;
};

namespace detail {

/// Dense LU with partial pivoting; solves A x = b and A^T x = b.
struct DenseLU {
    int n = 0;
    std::vector<double> a;    // row-major, overwritten with L\U factors
    std::vector<int> swaps;   // row i was swapped with swaps[i]

    void factor(std::vector<double> mat, int dim) {
        n = dim;
        a = std::move(mat);
        swaps.assign(static_cast<size_t>(n), 0);
        for (int col = 0; col < n; ++col) {
            int piv = col;
            double best = std::abs(a[static_cast<size_t>(col) * n + col]);
            for (int r = col + 1; r < n; ++r) {
                double v = std::abs(a[static_cast<size_t>(r) * n + col]);
                if (v > best) {
                    best = v;
                    piv = r;
                }
            }
            if (best < 1e-13)
                throw std::runtime_error("l1 oracle: singular basis core (pivot " +
                                         std::to_string(best) + ")");
            swaps[static_cast<size_t>(col)] = piv;
            if (piv != col)
                for (int c = 0; c < n; ++c)
                    std::swap(a[static_cast<size_t>(col) * n + c],
                              a[static_cast<size_t>(piv) * n + c]);
            double d = a[static_cast<size_t>(col) * n + col];
            for (int r = col + 1; r < n; ++r) {
                double mlt = a[static_cast<size_t>(r) * n + col] / d;
                a[static_cast<size_t>(r) * n + col] = mlt;
                if (mlt != 0.0)
                    for (int c = col + 1; c < n; ++c)
                        a[static_cast<size_t>(r) * n + c] -=
                            mlt * a[static_cast<size_t>(col) * n + c];
            }
        }
    }

    void solve(std::vector<double>& b) const {
        for (int i = 0; i < n; ++i)
            if (swaps[static_cast<size_t>(i)] != i)
                std::swap(b[static_cast<size_t>(i)], b[static_cast<size_t>(swaps[static_cast<size_t>(i)])]);
        for (int i = 1; i < n; ++i) {
            double s = b[static_cast<size_t>(i)];
            for (int k = 0; k < i; ++k) s -= a[static_cast<size_t>(i) * n + k] * b[static_cast<size_t>(k)];
            b[static_cast<size_t>(i)] = s;
        }
        for (int i = n - 1; i >= 0; --i) {
            double s = b[static_cast<size_t>(i)];
            for (int k = i + 1; k < n; ++k) s -= a[static_cast<size_t>(i) * n + k] * b[static_cast<size_t>(k)];
            b[static_cast<size_t>(i)] = s / a[static_cast<size_t>(i) * n + i];
        }
    }

    void solve_transposed(std::vector<double>& b) const {
        // A^T x = b with P A = L U:  x = P^T (L^T)^{-1} (U^T)^{-1} b.
        for (int i = 0; i < n; ++i) {
            double s = b[static_cast<size_t>(i)];
            for (int k = 0; k < i; ++k) s -= a[static_cast<size_t>(k) * n + i] * b[static_cast<size_t>(k)];
            b[static_cast<size_t>(i)] = s / a[static_cast<size_t>(i) * n + i];
        }
        for (int i = n - 1; i >= 0; --i) {
            double s = b[static_cast<size_t>(i)];
            for (int k = i + 1; k < n; ++k) s -= a[static_cast<size_t>(k) * n + i] * b[static_cast<size_t>(k)];
            b[static_cast<size_t>(i)] = s;
        }
        for (int i = n - 1; i >= 0; --i)
            if (swaps[static_cast<size_t>(i)] != i)
                std::swap(b[static_cast<size_t>(i)], b[static_cast<size_t>(swaps[static_cast<size_t>(i)])]);
    }
};

}  // namespace detail

/// Exact optimum of the discretized L1 fit. Deterministic: Dantzig pricing
/// with a Bland anti-cycling fallback after a run of degenerate steps, ratio
/// ties resolved by smallest row. Throws on iteration-cap breach instead of
/// returning a silent approximation.
inline L1Fit best_l1_approx(const L1FitProblem& prob) {
    const int m = prob.samples.m;
    const int n = prob.n;
    const int p = 2 * n - 1;
    const std::vector<double>& f_orig = prob.samples.values;

    // Anti-degeneracy perturbation: targets with plateaus or large zero sets
    // make whole blocks of residuals vanish at once and the vertex walk
    // stalls. Distinct golden-ratio offsets of size ~1e-9 break every tie;
    // the final value and polynomial are evaluated on the unperturbed data,
    // so the reported optimum is exact up to the perturbation scale.
    double fscale = 1.0;
    for (double v : f_orig) fscale = std::max(fscale, std::abs(v));
    const double delta = 1e-9 * fscale;
    std::vector<double> f(f_orig);
    constexpr double golden = 0.6180339887498949;
    for (int i = 0; i < m; ++i) {
        double xi = golden * (i + 1);
        f[static_cast<size_t>(i)] += delta * (0.5 + (xi - std::floor(xi)));
    }

    // Basis matrix Phi: col 0 constant, col 2j-1 = cos(2 pi j x), col 2j = sin.
    std::vector<double> Phi(static_cast<size_t>(m) * p);
    for (int i = 0; i < m; ++i) {
        double x = prob.abscissa(i);
        Phi[static_cast<size_t>(i) * p] = 1.0;
        for (int j = 1; j < n; ++j) {
            double w = 2.0 * pi * j * x;
            Phi[static_cast<size_t>(i) * p + 2 * j - 1] = std::cos(w);
            Phi[static_cast<size_t>(i) * p + 2 * j] = std::sin(w);
        }
    }

    // Row states: +1 (u basic), -1 (v basic), 0 (interpolation row).
    std::vector<int> sigma(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) sigma[static_cast<size_t>(i)] = f[static_cast<size_t>(i)] >= 0.0 ? +1 : -1;
    std::vector<int> Jlist, Rlist;           // core columns/rows, aligned
    std::vector<int> col_pos(static_cast<size_t>(p), -1);  // position of column in Jlist
    std::vector<int> row_pos(static_cast<size_t>(m), -1);  // position of row in Rlist

    const long iter_cap = 50L * (m + 2 * n);
    const double tol_enter_uv = 1e-9;
    const double tol_enter_c = 1e-8;
    const double tol_pivot = 1e-11;
    int degenerate_run = 0;
    bool bland = false;
    long iter = 0;

    detail::DenseLU lu;
    std::vector<double> xc, piR, rhs, yc;
    std::vector<double> resid(static_cast<size_t>(m));

    while (true) {
        if (++iter > iter_cap)
            throw std::runtime_error("best_l1_approx: iteration cap breached (m=" +
                                     std::to_string(m) + ", n=" + std::to_string(n) + ")");
        const int pc = static_cast<int>(Jlist.size());

        // Factor the core M = Phi[R, J] and get coefficients x_c = M^{-1} f_R.
        if (pc > 0) {
            std::vector<double> M(static_cast<size_t>(pc) * pc);
            for (int r = 0; r < pc; ++r)
                for (int c = 0; c < pc; ++c)
                    M[static_cast<size_t>(r) * pc + c] =
                        Phi[static_cast<size_t>(Rlist[static_cast<size_t>(r)]) * p + Jlist[static_cast<size_t>(c)]];
            lu.factor(std::move(M), pc);
            xc.assign(static_cast<size_t>(pc), 0.0);
            for (int r = 0; r < pc; ++r) xc[static_cast<size_t>(r)] = f[static_cast<size_t>(Rlist[static_cast<size_t>(r)])];
            lu.solve(xc);
        } else {
            xc.clear();
        }

        // Residuals r_i = f_i - Phi_i . x_c; basic values are sigma_i r_i.
        double obj = 0.0;
        for (int i = 0; i < m; ++i) {
            double s = f[static_cast<size_t>(i)];
            for (int c = 0; c < pc; ++c)
                s -= Phi[static_cast<size_t>(i) * p + Jlist[static_cast<size_t>(c)]] * xc[static_cast<size_t>(c)];
            resid[static_cast<size_t>(i)] = s;
            obj += std::abs(s);
        }
        // A vanishing objective is already optimal; nothing below can
        // improve on it.
        if (obj <= 1e-13 * fscale * m) break;

        // Dual prices: pi_i = sigma_i on residual rows; on interpolation rows
        // solve M^T pi_R = -Phi[I, J]^T sigma.
        piR.assign(static_cast<size_t>(pc), 0.0);
        if (pc > 0) {
            rhs.assign(static_cast<size_t>(pc), 0.0);
            for (int i = 0; i < m; ++i) {
                if (row_pos[static_cast<size_t>(i)] >= 0) continue;
                double sg = sigma[static_cast<size_t>(i)];
                for (int c = 0; c < pc; ++c)
                    rhs[static_cast<size_t>(c)] -= sg * Phi[static_cast<size_t>(i) * p + Jlist[static_cast<size_t>(c)]];
            }
            piR = rhs;
            lu.solve_transposed(piR);
        }

        // Pricing. Entering candidates: free coefficient columns with nonzero
        // reduced cost (either sign), and u/v at interpolation rows where the
        // price escapes [-1, 1].
        int enter_kind = -1;  // 0: coefficient column, 1: u_i, 2: v_i
        int enter_idx = -1;
        double enter_dir = +1.0;
        double best_score = 0.0;
        long best_bland = -1;

        for (int j = 0; j < p; ++j) {
            if (col_pos[static_cast<size_t>(j)] >= 0) continue;
            double d = 0.0;
            for (int i = 0; i < m; ++i) {
                double pi_i = row_pos[static_cast<size_t>(i)] >= 0
                                  ? piR[static_cast<size_t>(row_pos[static_cast<size_t>(i)])]
                                  : static_cast<double>(sigma[static_cast<size_t>(i)]);
                d += Phi[static_cast<size_t>(i) * p + j] * pi_i;
            }
            if (std::abs(d) > tol_enter_c) {
                double score = std::abs(d);
                if (bland) {
                    if (best_bland < 0 || j < best_bland) {
                        best_bland = j;
                        enter_kind = 0;
                        enter_idx = j;
                        enter_dir = d > 0.0 ? +1.0 : -1.0;
                    }
                } else if (score > best_score) {
                    best_score = score;
                    enter_kind = 0;
                    enter_idx = j;
                    enter_dir = d > 0.0 ? +1.0 : -1.0;
                }
            }
        }
        for (int c = 0; c < pc; ++c) {
            int i = Rlist[static_cast<size_t>(c)];
            double pi_i = piR[static_cast<size_t>(c)];
            double rc_u = 1.0 - pi_i;
            double rc_v = 1.0 + pi_i;
            double rc = std::min(rc_u, rc_v);
            if (rc < -tol_enter_uv) {
                int kind = rc_u < rc_v ? 1 : 2;
                long bl = static_cast<long>(p) + 2L * i + (kind == 2 ? 1 : 0);
                if (bland) {
                    if (best_bland < 0 || bl < best_bland) {
                        best_bland = bl;
                        enter_kind = kind;
                        enter_idx = i;
                        enter_dir = +1.0;
                    }
                } else if (-rc > best_score) {
                    best_score = -rc;
                    enter_kind = kind;
                    enter_idx = i;
                    enter_dir = +1.0;
                }
            }
        }

        if (enter_kind < 0) break;  // optimal

        // Entering column w in original coordinates -> y = B^{-1} w.
        yc.assign(static_cast<size_t>(pc), 0.0);
        if (enter_kind == 0) {
            for (int c = 0; c < pc; ++c)
                yc[static_cast<size_t>(c)] =
                    enter_dir * Phi[static_cast<size_t>(Rlist[static_cast<size_t>(c)]) * p + enter_idx];
        } else {
            int rp = row_pos[static_cast<size_t>(enter_idx)];
            if (rp < 0)
                throw std::logic_error("best_l1_approx: entering residual not on an interpolation row");
            yc[static_cast<size_t>(rp)] = enter_kind == 1 ? 1.0 : -1.0;
        }
        if (pc > 0) lu.solve(yc);

        // Ratio step. The objective along the entering direction is piecewise
        // linear: each basic residual with a positive component contributes a
        // kink where it hits zero, beyond which it continues as its sign
        // partner and the slope gains 2 y. Walking the kinks in ratio order
        // and stopping where the slope turns nonnegative passes through
        // degenerate vertices in one move (the targets here vanish on much of
        // the grid, so the naive single-step rule stalls). In Bland mode the
        // walk degenerates to the classic smallest-index single pivot.
        struct Kink {
            double t;
            double y;
            int row;
        };
        std::vector<Kink> kinks;
        for (int i = 0; i < m; ++i) {
            if (row_pos[static_cast<size_t>(i)] >= 0) continue;
            double w_i;
            if (enter_kind == 0)
                w_i = enter_dir * Phi[static_cast<size_t>(i) * p + enter_idx];
            else
                w_i = (i == enter_idx) ? (enter_kind == 1 ? 1.0 : -1.0) : 0.0;
            double dot = 0.0;
            for (int c = 0; c < pc; ++c)
                dot += Phi[static_cast<size_t>(i) * p + Jlist[static_cast<size_t>(c)]] * yc[static_cast<size_t>(c)];
            double y_s = sigma[static_cast<size_t>(i)] * (w_i - dot);
            if (y_s > tol_pivot) {
                double x_s = std::max(sigma[static_cast<size_t>(i)] * resid[static_cast<size_t>(i)], 0.0);
                kinks.push_back({x_s / y_s, y_s, i});
            }
        }
        if (kinks.empty())
            throw std::logic_error("best_l1_approx: unbounded step (cannot happen)");

        int leave_row;
        double step_t;
        std::vector<int> flipped;
        if (bland) {
            leave_row = -1;
            step_t = 0.0;
            for (const Kink& k : kinks) {
                if (leave_row < 0 || k.t < step_t - 1e-15 ||
                    (k.t < step_t + 1e-15 && k.row < leave_row)) {
                    leave_row = k.row;
                    step_t = k.t;
                }
            }
        } else {
            std::sort(kinks.begin(), kinks.end(), [](const Kink& a, const Kink& b) {
                return a.t != b.t ? a.t < b.t : a.row < b.row;
            });
            double rate = -best_score;  // g'(0+), negative by construction
            size_t stop = 0;
            while (stop + 1 < kinks.size() && rate + 2.0 * kinks[stop].y < -1e-12) {
                rate += 2.0 * kinks[stop].y;
                ++stop;
            }
            leave_row = kinks[stop].row;
            step_t = kinks[stop].t;
            // Only residuals that strictly cross zero before the stopping
            // ratio change sign; ties landing exactly at zero stay put.
            for (size_t i = 0; i < stop; ++i)
                if (kinks[i].t < step_t - 1e-15 * (1.0 + step_t))
                    flipped.push_back(kinks[i].row);
        }

#ifdef TRIGL1_LP_TRACE
        if (iter < 60 || iter % 1000 == 0)
            std::printf(
                "it=%ld pc=%d obj=%.12e enter=(k%d idx%d dir%+.0f) score=%.3e t=%.3e "
                "flips=%zu leave=%d bland=%d\n",
                iter, pc, obj, enter_kind, enter_idx, enter_dir, best_score, step_t,
                flipped.size(), leave_row, static_cast<int>(bland));
#endif
        degenerate_run = step_t < 1e-14 ? degenerate_run + 1 : 0;
        bland = degenerate_run > 30 + p;

        // Residuals passed by the walk continue as their sign partners.
        for (int i : flipped)
            sigma[static_cast<size_t>(i)] = -sigma[static_cast<size_t>(i)];

        // Pivot bookkeeping.
        if (enter_kind == 0) {
            col_pos[static_cast<size_t>(enter_idx)] = static_cast<int>(Jlist.size());
            Jlist.push_back(enter_idx);
            row_pos[static_cast<size_t>(leave_row)] = static_cast<int>(Rlist.size());
            Rlist.push_back(leave_row);
        } else {
            int rp = row_pos[static_cast<size_t>(enter_idx)];
            Rlist[static_cast<size_t>(rp)] = leave_row;
            row_pos[static_cast<size_t>(leave_row)] = rp;
            row_pos[static_cast<size_t>(enter_idx)] = -1;
            sigma[static_cast<size_t>(enter_idx)] = enter_kind == 1 ? +1 : -1;
        }
        sigma[static_cast<size_t>(leave_row)] = 0;  // covered by the core now
    }

    // Resolve the final basis against the unperturbed samples.
    const int pc = static_cast<int>(Jlist.size());
    if (pc > 0) {
        xc.assign(static_cast<size_t>(pc), 0.0);
        for (int r = 0; r < pc; ++r)
            xc[static_cast<size_t>(r)] = f_orig[static_cast<size_t>(Rlist[static_cast<size_t>(r)])];
        lu.solve(xc);
    }
    L1Fit out;
    KahanSum err;
    for (int i = 0; i < m; ++i) {
        double s = f_orig[static_cast<size_t>(i)];
        for (int c = 0; c < pc; ++c)
            s -= Phi[static_cast<size_t>(i) * p + Jlist[static_cast<size_t>(c)]] * xc[static_cast<size_t>(c)];
        err.add(std::abs(s));
    }
    out.error = err.value() / m;
    out.iterations = static_cast<int>(iter);
    out.tau = TrigPoly(n);
    for (size_t c = 0; c < Jlist.size(); ++c) {
        int j = Jlist[c];
        if (j == 0)
            out.tau.a[0] = xc[c];
        else if (j % 2 == 1)
            out.tau.a[static_cast<size_t>((j + 1) / 2)] = xc[c];
        else
            out.tau.b[static_cast<size_t>(j / 2 - 1)] = xc[c];
    }
    return out;
}

namespace detail {

/// Continued-fraction reconstruction of a small rational p/q close to x.
inline bool as_fraction(double x, long max_den, long& p, long& q) {
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int it = 0; it < 40; ++it) {
        long a = static_cast<long>(std::floor(v));
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double rem = v - static_cast<double>(a);
        if (std::abs(static_cast<double>(p1) / q1 - x) < 1e-12 || rem < 1e-14) break;
        v = 1.0 / rem;
    }
    if (q1 < 1 || std::abs(static_cast<double>(p1) / q1 - x) > 1e-12) return false;
    p = p1;
    q = q1;
    return true;
}

/// Smallest grid size >= m whose cell boundaries contain every jump of the
/// periodized width-h box (possible whenever h is a small rational). On an
/// aligned grid the sampled box has exact unit mass and the discrete optimum
/// reproduces the continuous constants to machine precision; unaligned grids
/// carry an O(1/m) quantization floor.
inline int aligned_grid(double h, int m) {
    long p, q;
    if (!as_fraction(h, 128, p, q)) return m;
    long step = 2 * q;
    return static_cast<int>((m + step - 1) / step * step);
}

}  // namespace detail

/// Samples of the periodized box power on the oracle grid (half-cell offset
/// so box jumps never coincide with samples), renormalized to exact unit
/// grid mass. Unit mass is an invariant of the kernel; raw point samples of
/// the narrow box carry a mass bias of up to (1/h)/m that would dominate the
/// oracle's error budget.
inline GridFunction box_power_samples(double h, int j, int m) {
    BoxPowerKernel kern(h, j);
    std::vector<double> v(static_cast<size_t>(m));
    KahanSum mass;
    for (int i = 0; i < m; ++i) {
        v[static_cast<size_t>(i)] = kern((i + 0.5) / m);
        mass.add(v[static_cast<size_t>(i)]);
    }
    double scale = static_cast<double>(m) / mass.value();
    for (double& x : v) x *= scale;
    return GridFunction(m, std::move(v));
}

/// Oracle fit of the box power chi_h^j; returns error, optimal polynomial and
/// the sampled target. The requested grid is rounded up to the nearest
/// jump-aligned size when the width is a small rational.
inline L1Fit en_chi_oracle_fit(int n, double h, int j, int m, GridFunction* samples_out = nullptr) {
    if (j < 1) throw std::invalid_argument("en_chi_oracle: j must be >= 1");
    GridFunction samples = box_power_samples(h, j, detail::aligned_grid(h, m));
    if (samples_out) *samples_out = samples;
    return best_l1_approx(L1FitProblem(std::move(samples), n, true));
}

/// Best-L1 constant of the box power from the discretized oracle.
inline double en_chi_oracle(int n, double h, int j, int m) {
    return en_chi_oracle_fit(n, h, j, m).error;
}

/// Markov optimality certificate: Fourier residuals (cosine and sine parts,
/// k < n) of sign(f - tau) on the grid, each paired with the mass the basis
/// function carries on the zero-residual set. The optimality criterion with
/// a nontrivial zero set is two-sided -- |sum_{r!=0} sign(r) phi| bounded by
/// sum_{r=0} |phi| -- so `residual <= allowance + eps` certifies the
/// optimum; for thin zero sets the allowance vanishes and the plain
/// near-zero check remains. Degenerate when f - tau vanishes identically.
struct MarkovCertificate {
    bool degenerate = false;
    std::vector<double> residuals;   ///< |c_0|, |c_1|, |s_1|, ..., per basis function
    std::vector<double> allowances;  ///< zero-set mass of the same basis function
    double max_residual() const {
        double w = 0.0;
        for (double r : residuals) w = std::max(w, r);
        return w;
    }
    double max_excess() const {
        double w = 0.0;
        for (size_t i = 0; i < residuals.size(); ++i)
            w = std::max(w, residuals[i] - allowances[i]);
        return w;
    }
};

inline MarkovCertificate markov_certificate(const GridFunction& f, const TrigPoly& tau, int n,
                                            bool half_offset = true) {
    const int m = f.m;
    double scale = sup_norm(f);
    std::vector<double> sgn(static_cast<size_t>(m));
    double maxres = 0.0;
    for (int i = 0; i < m; ++i) {
        double x = (static_cast<double>(i) + (half_offset ? 0.5 : 0.0)) / m;
        double r = f.values[static_cast<size_t>(i)] - tau(x);
        maxres = std::max(maxres, std::abs(r));
        sgn[static_cast<size_t>(i)] = std::abs(r) <= 1e-8 * std::max(1.0, scale)
                                          ? 0.0
                                          : (r > 0.0 ? 1.0 : -1.0);
    }
    MarkovCertificate cert;
    if (maxres <= 1e-10 * std::max(1.0, scale)) {
        cert.degenerate = true;
        return cert;
    }
    for (int k = 0; k < n; ++k) {
        KahanSum cs, ss, ca, sa;
        for (int i = 0; i < m; ++i) {
            double x = (static_cast<double>(i) + (half_offset ? 0.5 : 0.0)) / m;
            double c = std::cos(2.0 * pi * k * x);
            double s = sgn[static_cast<size_t>(i)];
            cs.add(s * c);
            if (s == 0.0) ca.add(std::abs(c));
            if (k > 0) {
                double sv = std::sin(2.0 * pi * k * x);
                ss.add(s * sv);
                if (s == 0.0) sa.add(std::abs(sv));
            }
        }
        cert.residuals.push_back(std::abs(cs.value()) / m);
        cert.allowances.push_back(ca.value() / m);
        if (k > 0) {
            cert.residuals.push_back(std::abs(ss.value()) / m);
            cert.allowances.push_back(sa.value() / m);
        }
    }
    return cert;
}

}  // namespace trigl1
