#include "hkappa/hyperbolic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hkappa/errors.hpp"

namespace hkappa {

namespace {

void require_halfplane(Complex z, const char* what)
{
    if (!is_finite(z) || !(z.imag() > 0.0))
        throw DomainError(std::string(what) + ": point not in the upper half-plane");
}

void require_disk(Complex z, const char* what)
{
    if (!is_finite(z) || !(std::abs(z) < 1.0))
        throw DomainError(std::string(what) + ": point not in the unit disk");
}

}  // namespace

// The asinh forms are well conditioned both for nearby points and for points
// far apart, unlike 2 artanh(|z-w|/|z-conj w|) whose argument approaches 1.
double h_dist_halfplane(Complex z, Complex w)
{
    require_halfplane(z, "h_dist_halfplane");
    require_halfplane(w, "h_dist_halfplane");
    return 2.0 * std::asinh(std::abs(z - w) / (2.0 * std::sqrt(z.imag() * w.imag())));
}

double h_dist_right_halfplane(Complex z, Complex w)
{
    if (!is_finite(z) || !is_finite(w) || !(z.real() > 0.0) || !(w.real() > 0.0))
        throw DomainError("h_dist_right_halfplane: point not in the right half-plane");
    return 2.0 * std::asinh(std::abs(z - w) / (2.0 * std::sqrt(z.real() * w.real())));
}

double h_dist_disk(Complex z, Complex w)
{
    require_disk(z, "h_dist_disk");
    require_disk(w, "h_dist_disk");
    const double az = std::abs(z);
    const double aw = std::abs(w);
    // One factor per point so the product does not depend on argument order.
    const double gz = (1.0 - az) * (1.0 + az);
    const double gw = (1.0 - aw) * (1.0 + aw);
    return 2.0 * std::asinh(std::abs(z - w) / std::sqrt(gz * gw));
}

Complex HyperbolicDisk::boundary_point(double angle) const
{
    return euclid_center + kI * euclid_radius * std::polar(1.0, angle);
}

HyperbolicDisk hyperbolic_disk(Complex z0, double r)
{
    require_halfplane(z0, "hyperbolic_disk");
    if (!(r > 0.0) || !std::isfinite(r))
        throw InvalidArgument("hyperbolic_disk: radius must be positive and finite");
    const double y0 = z0.imag();
    return HyperbolicDisk{z0, r, Complex{z0.real(), y0 * std::cosh(r)}, y0 * std::sinh(r)};
}

double phi(double r)
{
    if (!(r > 0.0))
        throw InvalidArgument("phi: r must be positive");
    // (sqrt(cosh 2r) + sinh r) / cosh r = sqrt(2 - sech^2 r) + tanh r
    const double th = std::tanh(r);
    const double sech2 = 1.0 - th * th;
    const double root = std::sqrt(2.0 - sech2);
    return 2.0 * std::log1p(th * th / (root + 1.0) + th);
}

double phi_limit()
{
    return 2.0 * std::log(std::numbers::sqrt2 + 1.0);
}

}  // namespace hkappa
