#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "test_util.hpp"
#include "trigl1/kernels.hpp"
#include "trigl1/random_trig.hpp"
#include "trigl1/stechkin.hpp"

using namespace trigl1;

TEST_CASE("reciprocal binomial constants") {
    REQUIRE(gamma_star(2).num == 1);
    REQUIRE(gamma_star(2).den == 2);
    REQUIRE(gamma_star(4).value() == approx(1.0 / 6.0, 1e-16));
    REQUIRE(gamma_star(3).value() == approx(1.0 / 3.0, 1e-16));
    REQUIRE(gamma_star(1).value() == approx(1.0, 1e-16));
    SECTION("matching lower constant") {
        REQUIRE(lower_constant_cprime(4).value() == 1.0);
        REQUIRE(lower_constant_cprime(3).value() == approx(0.75, 1e-16));
    }
}

TEST_CASE("symmetric differences") {
    SECTION("constants vanish") {
        for (int k : {1, 2, 4})
            REQUIRE(sym_diff([](double) { return 7.0; }, 0.13, k, 0.4) == approx(0.0, 1e-12));
    }
    SECTION("second difference of the cosine") {
        for (double t : {0.05, 0.2, 0.4}) {
            double got = sym_diff([](double x) { return std::cos(2 * pi * x); }, t, 1, 0.0);
            REQUIRE(got == approx(2.0 - 2.0 * std::cos(2 * pi * t), 1e-13));
        }
    }
    SECTION("zero step collapses") {
        Rng rng(3);
        TrigPoly p = random_trigpoly(rng, 5);
        for (int k : {1, 3})
            REQUIRE(sym_diff([&p](double x) { return p(x); }, 0.0, k, 0.3) ==
                    approx(0.0, 1e-12));
    }
}

TEST_CASE("forward-difference modulus") {
    REQUIRE(omega_r([](double) { return 1.5; }, 3, 0.3) == approx(0.0, 1e-12));
    SECTION("first modulus of the cosine reaches 2") {
        auto f = [](double x) { return std::cos(2 * pi * x); };
        REQUIRE(omega_r(f, 1, 0.5, 512, 64) == approx(2.0, 1e-10));
    }
    SECTION("agrees with the centered second modulus convention") {
        auto f = [](double x) { return std::cos(2 * pi * x); };
        // Centered steps of t/2 with t < h equal forward steps up to h/2.
        REQUIRE(omega_r(f, 2, 0.25, 512, 128) == approx(omega2(f, 0.5, 512, 128), 1e-6));
    }
}

TEST_CASE("smoothing kernel structure") {
    SECTION("weights for order 4") {
        StechkinKernel kern(2, 0.25);
        REQUIRE(kern.a[0] == approx(2.0 / 3.0, 1e-16));
        REQUIRE(kern.a[1] == approx(1.0 / 6.0, 1e-16));
    }
    SECTION("unit mass for every order up to 8") {
        for (int k = 1; k <= 8; ++k) {
            StechkinKernel kern(k, 0.2);
            REQUIRE(u_fourier(kern, 0) == approx(1.0, 1e-12));
        }
    }
    SECTION("order 2 collapses to the squared box") {
        StechkinKernel kern(1, 0.3);
        BoxPowerKernel sq(0.3, 2);
        for (double x : {0.0, 0.1, 0.22, 0.4})
            REQUIRE(kern.u_periodic(x) == approx(sq(x), 1e-12));
        for (int freq : {0, 1, 3, 7})
            REQUIRE(u_fourier(kern, freq) == approx(chi_fourier(0.3, freq, 2), 1e-14));
    }
    SECTION("coefficient matches quadrature of the periodized kernel") {
        StechkinKernel kern(2, 0.25);
        // Two routes: the sinc-square formula vs direct integration of
        // U(t) cos(2 pi t) over the support, split at the triangle corners.
        double direct = 0.0;
        for (int piece = -2; piece < 2; ++piece)
            direct += detail::integrate(
                [&](double t) { return kern.u_line(t) * std::cos(2 * pi * t); },
                0.25 * piece, 0.25 * (piece + 1), 16);
        REQUIRE(u_fourier(kern, 1) == approx(direct, 1e-9));
        double expected = 2.0 * (2.0 / 3.0) * std::pow(sinc(pi * 0.25), 2) -
                          2.0 * (1.0 / 6.0) * std::pow(sinc(pi * 0.5), 2);
        REQUIRE(u_fourier(kern, 1) == approx(expected, 1e-14));
    }
}

TEST_CASE("smoothness functional") {
    StechkinKernel kern(2, 0.2);
    SECTION("constants vanish") {
        REQUIRE(w2k_value([](double) { return 4.0; }, kern, 0.3) == approx(0.0, 1e-12));
    }
    SECTION("box base kernel reproduces the Steklov deviation") {
        double h = 0.3;
        CompactKernel box{[h](double t) { return std::abs(t) < 0.5 * h ? 1.0 / h : 0.0; },
                          0.5 * h,
                          {-0.5 * h, 0.5 * h}};
        Rng rng(11);
        TrigPoly p = random_trigpoly(rng, 4);
        auto f = [&p](double x) { return p(x); };
        for (double x : {0.0, 0.2, 0.71})
            REQUIRE(w2k_value(f, 1, box, x, 32) == approx(w2(f, h, x, 32), 1e-9));
    }
    SECTION("equals f - U*f on trig functions") {
        Rng rng(13);
        TrigPoly p = random_trigpoly(rng, 6);
        auto f = [&p](double x) { return p(x); };
        auto u_conv = [&](double x) {
            double s = p.a[0] * u_fourier(kern, 0);
            for (int k = 1; k < p.n; ++k)
                s += u_fourier(kern, k) *
                     (p.a[static_cast<size_t>(k)] * std::cos(2 * pi * k * x) +
                      p.b[static_cast<size_t>(k - 1)] * std::sin(2 * pi * k * x));
            return s;
        };
        for (double x : {0.05, 0.33, 0.6, 0.92})
            REQUIRE(w2k_value(f, kern, x, 32) == approx(f(x) - u_conv(x), 1e-9));
    }
}

TEST_CASE("convolution powers of the smoothing kernel") {
    SECTION("order 2: power samples match the box powers") {
        StechkinKernel kern(1, 0.25);
        const int m = 512;
        auto g1 = u_power_samples(kern, 1, m);
        BoxPowerKernel sq(0.25, 2);
        for (int i = 0; i < m; ++i)
            REQUIRE(g1.values[static_cast<size_t>(i)] == approx(sq((i + 0.5) / m), 1e-8));
        auto g2 = u_power_samples(kern, 2, m);
        BoxPowerKernel fourth(0.25, 4);
        for (int i = 0; i < m; ++i)
            REQUIRE(g2.values[static_cast<size_t>(i)] == approx(fourth((i + 0.5) / m), 1e-8));
    }
    SECTION("grid mass stays 1") {
        StechkinKernel kern(2, 0.25);
        for (int j : {1, 2, 3}) {
            auto g = u_power_samples(kern, j, 512);
            KahanSum s;
            for (double v : g.values) s.add(v);
            REQUIRE(s.value() / g.m == approx(1.0, 1e-9));
        }
    }
}

TEST_CASE("series of constants for the smoothing kernel") {
    SECTION("order 2 at the half window reduces to even Favard constants") {
        int n = 4;
        StechkinKernel kern(1, 1.0 / (2.0 * n));
        auto r = stechkin_series(n, kern, 3, 4096);
        REQUIRE(r.terms[0] == 1.0);
        REQUIRE(r.terms[1] == approx(favard_F(2), 2e-3));
        REQUIRE(r.terms[2] == approx(favard_F(4), 2e-3));
        REQUIRE(r.terms[3] == approx(favard_F(6), 2e-3));
    }
    SECTION("partial sums are nondecreasing") {
        StechkinKernel kern(2, 0.1);
        auto r = stechkin_series(3, kern, 4, 1024);
        double run = 0.0;
        for (double t : r.terms) {
            REQUIRE(t >= -1e-12);
            run += t;
        }
        REQUIRE(r.partial_sum == approx(run, 1e-12));
    }
}

TEST_CASE("step constant") {
    REQUIRE(alpha_step_constant(2.0) == approx(std::sqrt(2.0), 1e-14));
    REQUIRE(alpha_step_constant(1.5) == approx(2.0, 1e-12));
    REQUIRE(alpha_step_constant(1e9) == approx(1.0, 1e-9));
    REQUIRE_THROWS_AS(alpha_step_constant(1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(alpha_step_constant(0.5), std::invalid_argument);
}

TEST_CASE("difference-bound inequality checks") {
    SECTION("top harmonic, order 2") {
        int n = 8;
        auto rep = stechkin_inequality_check(
            n, 1, 2.0, [n](double x) { return std::cos(2 * pi * n * x); }, 2048);
        REQUIRE(rep.lhs <= rep.rhs + 1e-9);
        REQUIRE(rep.ratio <= 1.0);
    }
    SECTION("order 4 with its constant 1/6") {
        int n = 4;
        auto rep = stechkin_inequality_check(
            n, 2, 2.0, [n](double x) { return std::cos(2 * pi * n * x); }, 2048);
        REQUIRE(rep.lhs <= rep.rhs + 1e-9);
    }
    SECTION("random trig sweep") {
        Rng rng(29);
        int n = 4;
        for (int t = 0; t < 8; ++t) {
            TrigPoly p = random_trigpoly(rng, 4 * n);
            auto rep = stechkin_inequality_check(
                n, 1, 2.0, [&p](double x) { return p(x); }, 2048, 256, 64);
            INFO("trial " << t);
            REQUIRE(rep.lhs <= rep.rhs + 5e-3);
        }
    }
    SECTION("order hierarchy of weighted moduli") {
        Rng rng(31);
        for (int t = 0; t < 6; ++t) {
            TrigPoly p = random_trigpoly(rng, 8);
            auto f = [&p](double x) { return p(x); };
            double d = rng.uniform(0.02, 0.2);
            double left = gamma_star(2).value() * omega_r(f, 2, d, 256, 64);
            double right = gamma_star(1).value() * omega_r(f, 1, d, 256, 64);
            REQUIRE(left <= right + 1e-6);
        }
    }
}

TEST_CASE("two-sided ratio bracket probe") {
    auto rep = ratio_bracket_probe(4, 2, 0.5412, 1024, 4, 42);
    REQUIRE(rep.exploratory);
    REQUIRE(rep.bracket_lo == approx(0.5 / (1.0 - 0.5412 * 0.5412), 1e-12));
    REQUIRE(rep.bracket_hi == approx(4.0 / pi * rep.bracket_lo, 1e-12));
    REQUIRE(rep.bracket_lo == approx(0.7071, 2e-4));
    REQUIRE(rep.bracket_hi == approx(0.9003, 3e-4));
    REQUIRE(rep.cprime == 1.0);
    REQUIRE(rep.empirical_lower > 0.0);
    REQUIRE(std::isfinite(rep.empirical_lower));
    // The mu entering the bracket is only approximately known, so
    // containment is reported, never asserted. The top-harmonic ratio is a
    // concrete lower bound for the sharp constant and pins the probe:
    // E = 2/pi against ||f - U*f|| = 1 - sinc^2(pi/2).
    double cos_ratio = (2.0 / pi) / (1.0 - std::pow(2.0 / pi, 2));
    REQUIRE(rep.empirical_lower >= cos_ratio - 5e-3);
    REQUIRE_THROWS_AS(ratio_bracket_probe(4, 3, 0.5, 512), std::invalid_argument);
}
