#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "test_util.hpp"
#include "trigl1/kernels.hpp"
#include "trigl1/random_trig.hpp"
#include "trigl1/trig_core.hpp"

using namespace trigl1;

TEST_CASE("chi_fourier") {
    REQUIRE(chi_fourier(0.37, 0, 1) == 1.0);
    REQUIRE(chi_fourier(0.37, 0, 3) == 1.0);

    SECTION("h=1/2, k=1: 2/pi, checked against direct quadrature") {
        double direct =
            detail::integrate([](double t) { return 2.0 * std::cos(2 * pi * t); }, -0.25, 0.25);
        REQUIRE(chi_fourier(0.5, 1, 1) == approx(2.0 / pi, 1e-12));
        REQUIRE(chi_fourier(0.5, 1, 1) == approx(direct, 1e-12));
    }
    SECTION("squared kernel: quadrature against the triangle built by convolution") {
        // chi_{1/4}^2 is the unit triangle on [-1/4, 1/4]; its k=2 coefficient.
        double h = 0.25;
        auto tri = [h](double t) {
            double u = 1.0 - std::abs(t) / h;
            return u > 0.0 ? u / h : 0.0;
        };
        double direct = detail::integrate(
                            [&](double t) { return tri(t) * std::cos(2 * pi * 2 * t); }, -h, 0.0) +
                        detail::integrate(
                            [&](double t) { return tri(t) * std::cos(2 * pi * 2 * t); }, 0.0, h);
        REQUIRE(chi_fourier(h, 2, 2) == approx(4.0 / (pi * pi), 1e-12));
        REQUIRE(chi_fourier(h, 2, 2) == approx(direct, 1e-12));
    }
    SECTION("power law chi_fourier(h,k,j) = chi_fourier(h,k,1)^j") {
        for (int k : {1, 2, 5})
            for (int j : {2, 3, 4}) {
                double b = chi_fourier(0.3, k, 1);
                REQUIRE(chi_fourier(0.3, k, j) == approx(std::pow(b, j), 1e-15));
            }
    }
}

TEST_CASE("box power evaluation") {
    SECTION("plain box") {
        BoxPowerKernel b(0.5, 1);
        REQUIRE(b(0.0) == 2.0);
        REQUIRE(b(0.4) == 0.0);
        REQUIRE(b(0.25) == 1.0);  // midpoint value at the jump
    }
    SECTION("triangle peak") {
        BoxPowerKernel b(0.25, 2);
        REQUIRE(b(0.0) == approx(4.0, 1e-12));
    }
    SECTION("j = 0 has no pointwise values") {
        BoxPowerKernel b(0.25, 0);
        REQUIRE_THROWS_AS(b(0.1), std::domain_error);
    }
    SECTION("evenness") {
        BoxPowerKernel b(0.3, 3);
        for (double x : {0.05, 0.12, 0.4, 0.77}) REQUIRE(b(x) == b(-x));
    }
    SECTION("width above 1 periodizes into overlap") {
        BoxPowerKernel b(1.7, 1);
        REQUIRE(b(0.0) == approx(1.0 / 1.7, 1e-15));   // one translate covers 0
        REQUIRE(b(0.5) == approx(2.0 / 1.7, 1e-15));   // two translates overlap
        // Exact mass on a grid whose cells align with the jumps.
        const int m = 1000;
        KahanSum s;
        for (int i = 0; i < m; ++i) s.add(b((i + 0.5) / m));
        REQUIRE(s.value() / m == approx(1.0, 1e-12));
    }
}

TEST_CASE("squared box equals the exact circle-overlap triangle") {
    // (chi_h * chi_h)(x) = (1/h^2) * overlap of two width-h arcs at circle
    // distance d(x), i.e. (h - d)/h^2 for d <= h -- an independent route with
    // no spline or Fourier machinery in it.
    for (double h : {0.1, 0.25, 0.5}) {
        BoxPowerKernel sq(h, 2);
        for (int i = 0; i < 997; ++i) {
            double x = static_cast<double>(i) / 997;
            double d = std::min(frac(x), 1.0 - frac(x));
            double expected = d < h ? (h - d) / (h * h) : 0.0;
            REQUIRE(sq(x) == approx(expected, 1e-12));
        }
    }
}

TEST_CASE("cube of the box against quadrature of the triangle's mean") {
    // chi_h^3 = S_h(chi_h^2): integrate the exact triangle over the window,
    // splitting the quadrature at the triangle's corners.
    for (double h : {0.1, 0.25, 0.5}) {
        BoxPowerKernel sq(h, 2);
        BoxPowerKernel cube(h, 3);
        for (double x : {0.0, 0.04, 0.11, 0.3, 0.62}) {
            double lo = x - 0.5 * h, hi = x + 0.5 * h;
            std::vector<double> cuts{lo, hi};
            for (int k = -2; k <= 2; ++k)
                for (double corner : {k - h, static_cast<double>(k), k + h})
                    if (corner > lo && corner < hi) cuts.push_back(corner);
            std::sort(cuts.begin(), cuts.end());
            KahanSum acc;
            for (size_t i = 0; i + 1 < cuts.size(); ++i)
                acc.add(detail::integrate([&sq](double t) { return sq(t); }, cuts[i],
                                          cuts[i + 1], 4));
            double mean = acc.value() / h;
            INFO("h = " << h << ", x = " << x);
            REQUIRE(cube(x) == approx(mean, 1e-9));
        }
    }
}

TEST_CASE("grid self-convolution route at grid-aligned widths") {
    // The discrete circular convolution of exact samples reproduces the
    // continuous convolution when the jumps sit on cell boundaries.
    const int m = 1024;
    for (double h : {0.25, 0.5}) {
        BoxPowerKernel box(h, 1);
        std::vector<double> s1(m);
        for (int i = 0; i < m; ++i) s1[static_cast<size_t>(i)] = box((i + 0.5) / m);
        BoxPowerKernel sq(h, 2);
        double worst = 0.0;
        for (int i = 0; i < m; ++i) {
            KahanSum acc;
            for (int k = 0; k < m; ++k) {
                int d = ((i - k) % m + m) % m;
                acc.add(s1[static_cast<size_t>(k)] * s1[static_cast<size_t>(d)]);
            }
            // offsets add: (k+1/2)/m + (i-k+1/2)/m = (i+1)/m
            worst = std::max(worst,
                             std::abs(acc.value() / m - sq((i + 1.0) / m)));
        }
        INFO("h = " << h);
        REQUIRE(worst < 1e-6);
    }
}

TEST_CASE("box power mass normalization") {
    // Exact unit mass shows on grids whose sampling frequency kills every
    // alias of the kernel (m h integral); elsewhere the grid mean carries an
    // aliasing floor that decays with j.
    const int m = 2048;
    for (double h : {0.125, 0.25, 0.5})
        for (int j : {2, 3, 5}) {
            BoxPowerKernel b(h, j);
            KahanSum s;
            for (int i = 0; i < m; ++i) s.add(b((i + 0.5) / m));
            INFO("h = " << h << ", j = " << j);
            REQUIRE(s.value() / m == approx(1.0, 1e-9));
        }
    SECTION("fast alias decay at high powers, unaligned width") {
        BoxPowerKernel b(0.1, 5);
        KahanSum s;
        for (int i = 0; i < m; ++i) s.add(b((i + 0.5) / m));
        REQUIRE(s.value() / m == approx(1.0, 1e-9));
    }
}

TEST_CASE("steklov_mean") {
    REQUIRE(steklov_mean([](double) { return 5.0; }, 0.3, 0.77) == approx(5.0, 1e-12));
    REQUIRE(steklov_mean([](double x) { return std::cos(2 * pi * x); }, 0.5, 0.0) ==
            approx(2.0 / pi, 1e-12));
    SECTION("mean of the box is the triangle") {
        BoxPowerKernel box(0.2, 1);
        BoxPowerKernel tri(0.2, 2);
        double mean = steklov_mean([&box](double t) { return box(t); }, 0.2, 0.0, 64);
        REQUIRE(mean == approx(tri(0.0), 1e-9));
        REQUIRE(mean == approx(5.0, 1e-9));
    }
}

TEST_CASE("w2 deviation") {
    REQUIRE(w2([](double) { return 3.0; }, 0.4, 0.2) == approx(0.0, 1e-12));
    REQUIRE(w2([](double x) { return std::cos(2 * pi * x); }, 0.5, 0.0) ==
            approx(1.0 - 2.0 / pi, 1e-12));
    REQUIRE(w2([](double x) { return std::sin(2 * pi * x); }, 0.37, 0.0) ==
            approx(0.0, 1e-12));
}

TEST_CASE("w2_norm") {
    REQUIRE(w2_norm([](double) { return 3.0; }, 0.4, 64) == approx(0.0, 1e-12));
    REQUIRE(w2_norm([](double x) { return std::cos(2 * pi * x); }, 0.5, 64) ==
            approx(1.0 - 2.0 / pi, 1e-10));
    SECTION("h = 1/n kills the n-th harmonic mean") {
        int n = 6;
        auto f = [n](double x) { return std::cos(2 * pi * n * x); };
        REQUIRE(w2_norm(f, 1.0 / n, 64) == approx(1.0, 1e-10));
    }
}

TEST_CASE("omega2 second modulus") {
    REQUIRE(omega2([](double) { return 2.0; }, 0.5, 64, 16) == approx(0.0, 1e-12));
    SECTION("cosine closed form 2(1 - cos(pi h))") {
        auto f = [](double x) { return std::cos(2 * pi * x); };
        REQUIRE(omega2(f, 0.5, 256, 64) == approx(2.0, 1e-10));
        REQUIRE(omega2(f, 0.25, 256, 64) ==
                approx(2.0 * (1.0 - std::cos(pi * 0.25)), 1e-10));
    }
    SECTION("2 w2_norm <= omega2 on random trig functions") {
        Rng rng(21);
        for (int t = 0; t < 10; ++t) {
            TrigPoly p = random_trigpoly(rng, 6);
            auto f = [&p](double x) { return p(x); };
            double h = rng.uniform(0.05, 0.6);
            REQUIRE(2.0 * w2_norm(f, h, 256) <= omega2(f, h, 512, 128) + 1e-9);
        }
    }
}
