#pragma once

#include <catch2/catch_amalgamated.hpp>

// Catch's Approx ORs the margin with a default relative epsilon, which
// silently loosens tight absolute tolerances near values of order 1. All
// numeric checks here want the margin to be exact, so epsilon is zeroed.
inline Catch::Approx approx(double value, double margin) {
    return Catch::Approx(value).margin(margin).epsilon(0.0);
}
