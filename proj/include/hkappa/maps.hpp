#pragma once

#include "hkappa/point_set.hpp"
#include "hkappa/types.hpp"

namespace hkappa {

/// (2/pi) log((1+z)/(1-z)): the unit disk onto the strip |Im w| < 1.
Complex strip_map(Complex z);
/// tanh(pi w / 4): the strip |Im w| < 1 back onto the unit disk.
Complex strip_map_inverse(Complex w);

/// The conformal map f = T o L o S o M of H onto the lune
/// G = D \ cl(Delta2), where Delta2 is the disk with diameter [a, 1/a]
/// orthogonal to the unit circle. f(0) = a and f(iR+) = (-1, a).
class KeoghMap {
public:
    explicit KeoghMap(double a);

    double a() const noexcept { return a_; }

    /// Defined on H and on |z| < 1.
    Complex operator()(Complex z) const;
    Complex derivative(Complex z) const;

    /// Preimage in H of a point of G by damped Newton iteration.
    /// Throws DomainError if w is not in G and ConvergenceError on failure.
    Complex inverse(Complex w) const;

    /// The disk Delta2 = T(right half-plane).
    Complex disk2_center() const noexcept { return {0.5 * (a_ + 1.0 / a_), 0.0}; }
    double disk2_radius() const noexcept { return 0.5 * (1.0 / a_ - a_); }
    /// The corner of G in the upper half-plane, where the two boundary circles meet.
    Complex upper_corner() const noexcept;

    bool contains(Complex w) const noexcept;
    double boundary_distance(Complex w) const;

private:
    double a_;
};

struct TaylorCoefficients {
    Complex a1;
    Complex a2;
};

/// First two Taylor coefficients of the Keogh map at 0, by 4th-order central
/// differences along the real axis with step `step`.
TaylorCoefficients keogh_taylor_coefficients(double a, double step = 1e-3);

/// W(x) = (f(x z1) - f(x z2)) / (f(x z0) - a) for the triple {z0, z1, z2};
/// analytic for |x| max|z_j| < 1. No geometric checks.
Complex keogh_W(double a, double x, const PointSet& triple);

/// F(x) = d(E'_x) / d(E'_x, dG) with E'_x = f(x E). Checks that the diameter of
/// E'_x is |w1 - w2| and that the nearest boundary point is a, as seen from w0;
/// throws InvalidArgument when x is too large for these identities to hold.
double keogh_F(double a, double x, const PointSet& triple);

/// Limit value F(0) = |z1 - z2| / |z0|.
double keogh_F0(const PointSet& triple);

/// First-order slope F'(0) = a |z1 - z2| / (4 |z0|) Im(z1 + z2 - z0).
double keogh_F_slope(double a, const PointSet& triple);

}  // namespace hkappa
