#pragma once

#include "hkappa/domain.hpp"

namespace hkappa {

/// Axis-aligned rectangle [lo.re, hi.re] x [lo.im, hi.im].
struct Window {
    Complex lo;
    Complex hi;

    bool contains(Complex z) const noexcept
    {
        return z.real() >= lo.real() && z.real() <= hi.real() && z.imag() >= lo.imag() &&
               z.imag() <= hi.imag();
    }
};

/// Approximates the quasihyperbolic distance inf of the integral of |dz|/d(z, boundary)
/// by a shortest path on an 8-connected grid of spacing `step` anchored at z
/// and clipped to `window` and the domain. Edge weight is the edge length times
/// the mean of 1/d at its endpoints; w is joined to the corners of its cell.
double quasihyperbolic_oracle(const ModelDomain& domain, Complex z, Complex w,
                              const Window& window, double step);

}  // namespace hkappa
