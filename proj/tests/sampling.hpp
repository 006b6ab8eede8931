#pragma once

#include <cmath>
#include <random>

#include "hkappa/types.hpp"

namespace hkappa::testing {

// Fixed-seed point samplers shared by the property tests.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed = 20240611) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    // Log-uniform heights so both nearby and far-apart pairs occur.
    Complex halfplane()
    {
        return {uniform(-5.0, 5.0), std::exp(uniform(std::log(1e-2), std::log(1e2)))};
    }

    Complex disk()
    {
        const double r = std::sqrt(uniform(0.0, 1.0)) * 0.999;
        return std::polar(r, uniform(-M_PI, M_PI));
    }

    Complex strip(double half_width = 1.0)
    {
        return {uniform(-4.0, 4.0), uniform(-0.98, 0.98) * half_width};
    }

    Complex slit()
    {
        return std::polar(std::exp(uniform(-3.0, 3.0)), uniform(-0.98, 0.98) * M_PI);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace hkappa::testing
