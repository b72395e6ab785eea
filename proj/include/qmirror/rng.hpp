// Seedable random source for simulation runs.
//
// The engine is std::mt19937_64, which the standard pins down bit for bit,
// so a given seed reproduces the same outcome sequence on every run and
// platform. Uniform doubles are built from the top 53 bits directly instead
// of going through std::uniform_real_distribution, whose output is
// implementation-defined.

#pragma once

#include <cstdint>
#include <random>

#include "qmirror/common.hpp"

namespace qmirror {

class random_source {
public:
    explicit random_source(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // e^{i t} with t uniform in [0, 2pi).
    cx unit_complex() {
        const double t = uniform(0.0, 6.283185307179586476925286766559);
        return {std::cos(t), std::sin(t)};
    }

    // Standard normal via Box-Muller (self-contained for reproducibility).
    double gaussian() {
        double u1 = uniform();
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(6.283185307179586476925286766559 * u2);
    }

    cx gaussian_complex() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

} // namespace qmirror
