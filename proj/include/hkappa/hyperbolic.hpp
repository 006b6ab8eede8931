#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hkappa/types.hpp"

namespace hkappa {

/// Hyperbolic distance in the upper half-plane (curvature -1, density 1/Im z).
double h_dist_halfplane(Complex z, Complex w);

/// Hyperbolic distance in the right half-plane (density 1/Re z).
double h_dist_right_halfplane(Complex z, Complex w);

/// Hyperbolic distance in the unit disk (density 2/(1-|z|^2)).
double h_dist_disk(Complex z, Complex w);

/// Euclidean description of the closed hyperbolic disk of radius r about z0 in H.
struct HyperbolicDisk {
    Complex center;          // hyperbolic center z0
    double radius;           // hyperbolic radius r
    Complex euclid_center;   // Re z0 + i Im z0 cosh r
    double euclid_radius;    // Im z0 sinh r

    /// Boundary point c + i R e^{i angle}; angle = 0 is the top of the circle.
    Complex boundary_point(double angle) const;
};

HyperbolicDisk hyperbolic_disk(Complex z0, double r);

/// Hyperbolic length of the horizontal Euclidean diameter of a hyperbolic
/// circle of radius r. This is the minimum over all Euclidean diameters.
double phi(double r);

/// Limit of phi(r) as r -> infinity: 2 log(sqrt 2 + 1).
double phi_limit();

}  // namespace hkappa
