#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

#include <cmath>

#include "trigl1/closed_forms.hpp"
#include "trigl1/extremal_signs.hpp"
#include "trigl1/l1_oracle.hpp"
#include "trigl1/random_trig.hpp"

using namespace trigl1;
using Catch::Approx;

TEST_CASE("breakpoint equation values") {
    SECTION("q = 0 reduces to the top cosine") {
        for (int n : {2, 5, 9}) {
            double t = 1.0 / (4.0 * (n + 1));
            REQUIRE(breakpoint_equation(n, 0.0, t) == approx(0.0, 1e-14));
        }
    }
    REQUIRE(breakpoint_equation(2, 0.0, 0.1) == Approx(-0.30901699437494742).epsilon(1e-13));
    REQUIRE(breakpoint_equation(2, 0.5, 0.0) == approx(0.25, 1e-15));
}

TEST_CASE("breakpoint roots") {
    SECTION("q = 0 closed form (2m+1)/(4(n+1))") {
        for (int n : {2, 3, 7, 12}) {
            auto roots = breakpoint_roots(n, 0.0);
            REQUIRE(static_cast<int>(roots.size()) == n + 1);
            for (int m = 0; m <= n; ++m)
                REQUIRE(roots[static_cast<size_t>(m)] ==
                        approx((2.0 * m + 1.0) / (4.0 * (n + 1)), 1e-13));
        }
    }
    SECTION("root count holds across the parameter range") {
        for (int n : {2, 5, 9, 16})
            for (double q : {-0.99, -0.6, -0.2, 0.3, 0.7, 0.99})
                REQUIRE(static_cast<int>(breakpoint_roots(n, q).size()) == n + 1);
    }
    SECTION("roots are sorted and interior") {
        auto roots = breakpoint_roots(6, 0.73);
        for (size_t i = 0; i + 1 < roots.size(); ++i) REQUIRE(roots[i] < roots[i + 1]);
        REQUIRE(roots.front() > 0.0);
        REQUIRE(roots.back() < 0.5);
    }
    REQUIRE_THROWS_AS(breakpoint_roots(2, 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(breakpoint_roots(1, 0.0), std::invalid_argument);
}

TEST_CASE("sign function evaluation") {
    SECTION("orientation at the origin") {
        auto g = SignFunction::from_parameter(2, 0.0);
        REQUIRE(g(0.0) == 1.0);
    }
    SECTION("crossing parity matches the direct sign of the cosine") {
        // For q = 0 the sign function is sign(cos(2 pi (n+1) t)).
        auto g = SignFunction::from_parameter(2, 0.0);
        REQUIRE(g(0.2) == -1.0);
        REQUIRE(g(0.2) == Approx(std::cos(6 * pi * 0.2) > 0 ? 1.0 : -1.0));
        Rng rng(5);
        for (int t = 0; t < 50; ++t) {
            double x = rng.uniform();
            double ref = std::cos(6 * pi * x);
            if (std::abs(ref) > 1e-6) REQUIRE(g(x) == (ref > 0 ? 1.0 : -1.0));
        }
    }
    SECTION("even extension") {
        auto g = SignFunction::from_parameter(5, 0.37);
        Rng rng(9);
        for (int t = 0; t < 30; ++t) {
            double x = rng.uniform();
            REQUIRE(g(-x) == g(x));
            REQUIRE(g(x + 1.0) == g(x));
        }
    }
    SECTION("breakpoints evaluate to zero") {
        auto g = SignFunction::from_parameter(3, 0.2);
        REQUIRE(g(g.breakpoints[1]) == 0.0);
    }
}

TEST_CASE("orthogonality of constructed sign functions") {
    SECTION("parameter family is orthogonal to all low cosine modes") {
        for (int n : {2, 4, 8})
            for (double q : {-0.9, -0.3, 0.5, 0.9}) {
                auto g = SignFunction::from_parameter(n, q);
                for (int k = 0; k < n; ++k) {
                    INFO("n=" << n << " q=" << q << " k=" << k);
                    REQUIRE(std::abs(orthogonality_residual(g, k)) <= 1e-10);
                }
            }
    }
    SECTION("classical candidate: zero mean, 2/pi at the top frequency") {
        auto g = SignFunction::classical(4);
        REQUIRE(std::abs(orthogonality_residual(g, 0)) <= 1e-14);
        for (int k = 1; k < 4; ++k) REQUIRE(std::abs(orthogonality_residual(g, k)) <= 1e-14);
        REQUIRE(orthogonality_residual(g, 4) == approx(2.0 / pi, 1e-12));
    }
}

TEST_CASE("pairing with the box window") {
    SECTION("window inside the first piece") {
        auto g = SignFunction::from_parameter(4, 0.3);
        double h = 1.9 * g.breakpoints[0];
        REQUIRE(pairing_value(g, h) == approx(1.0, 1e-14));
    }
    SECTION("classical value 1/(2nh) at h = 3/(2n)") {
        int n = 8;
        auto g = SignFunction::classical(n);
        REQUIRE(pairing_value(g, 3.0 / (2.0 * n)) == approx(1.0 / 3.0, 1e-14));
    }
    SECTION("orientation flip leaves the pairing unchanged") {
        auto gp = SignFunction::from_parameter(3, 0.41, +1);
        auto gm = SignFunction::from_parameter(3, 0.41, -1);
        for (double h : {0.2, 0.4, 0.77})
            REQUIRE(pairing_value(gp, h) == approx(pairing_value(gm, h), 0));
    }
    SECTION("two integration routes agree") {
        auto g = SignFunction::from_parameter(2, 0.5);
        double h = 0.3;
        // Independent route: quadrature of g over (0, h/2) split at breakpoints.
        double acc = 0.0;
        double lo = 0.0;
        for (double b : g.breakpoints) {
            if (b >= h / 2) break;
            acc += detail::integrate([&g](double t) { return g(t); }, lo + 1e-13, b - 1e-13, 2);
            lo = b;
        }
        acc += detail::integrate([&g](double t) { return g(t); }, lo + 1e-13, h / 2, 2);
        REQUIRE(pairing_value(g, h) == approx(std::abs(2.0 * acc / h), 1e-8));
    }
}

TEST_CASE("dual maximization") {
    SECTION("flat region gives 1") {
        REQUIRE(lower_bound_via_duality(4, 1.0 / 8.0).value == approx(1.0, 1e-12));
        REQUIRE(lower_bound_via_duality(4, 0.05).value == approx(1.0, 1e-12));
    }
    SECTION("lattice value 1/3 at h = 3/16, n = 8") {
        REQUIRE(lower_bound_via_duality(8, 3.0 / 16.0).value ==
                approx(1.0 / 3.0, 1e-9));
    }
    SECTION("agrees with the LP oracle away from the lattice") {
        double dual = lower_bound_via_duality(2, 0.4).value;
        double lp = en_chi_oracle(2, 0.4, 1, 2048);
        REQUIRE(dual == approx(lp, 2e-3));
    }
    SECTION("never exceeds the proven ceiling") {
        for (int n : {2, 5, 8})
            for (double h : {0.1, 0.3, 0.55, 0.8, 1.0}) {
                double v = lower_bound_via_duality(n, h).value;
                REQUIRE(v <= upper_bound(n, h) + 1e-12);
            }
    }
}

TEST_CASE("midrange value by window-edge inversion") {
    SECTION("triple agreement at n = 8, h = 1/8") {
        double mid = en_chi_midrange(8, 0.125);
        double dual = lower_bound_via_duality(8, 0.125).value;
        REQUIRE(mid == approx(dual, 1e-9));
        double lp = en_chi_oracle(8, 0.125, 1, 4096);
        REQUIRE(mid == approx(lp, 2e-3));
    }
    SECTION("continuity with the flat region") {
        int n = 6;
        double h = 1.0 / (2.0 * n) + 1e-6;
        REQUIRE(en_chi_midrange(n, h) == approx(1.0, 1e-3));
    }
    SECTION("rejects h outside the middle range") {
        REQUIRE_THROWS_AS(en_chi_midrange(4, 0.05), std::invalid_argument);
        REQUIRE_THROWS_AS(en_chi_midrange(4, 0.5), std::invalid_argument);
    }
    SECTION("values strictly increase along h = 1/n") {
        double prev = en_chi_midrange(2, 1.0 / 2.0);
        for (int n = 3; n <= 8; ++n) {
            double cur = en_chi_midrange(n, 1.0 / n);
            REQUIRE(cur > prev + 1e-9);
            prev = cur;
        }
    }
}
