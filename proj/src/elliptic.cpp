#include "hkappa/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hkappa/errors.hpp"

namespace hkappa {

EllipticModulus::EllipticModulus(double r) : r_(r)
{
    if (!(r > 0.0 && r < 1.0))
        throw InvalidArgument("EllipticModulus: r must lie in (0, 1)");
    rc_ = std::sqrt((1.0 - r) * (1.0 + r));
}

EllipticModulus::EllipticModulus(double r, double complement) : r_(r), rc_(complement)
{
    if (!(r > 0.0 && complement > 0.0 && r <= 1.0 && complement <= 1.0))
        throw InvalidArgument("EllipticModulus: r and its complement must lie in (0, 1]");
}

AgmResult agm(double a, double b)
{
    if (!(a >= 0.0 && b >= 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw InvalidArgument("agm: arguments must be finite and nonnegative");
    if (a == 0.0 || b == 0.0)
        return {0.0, 0};
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    int it = 0;
    while (std::abs(a - b) > 2.0 * kEps * std::max(a, b)) {
        if (++it > 64)
            throw ConvergenceError("agm: no convergence");
        const double m = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = m;
    }
    return {0.5 * (a + b), it};
}

double ellip_K(double r)
{
    if (!(r >= 0.0 && r < 1.0))
        throw InvalidArgument("ellip_K: modulus must lie in [0, 1)");
    return 0.5 * std::numbers::pi / agm(1.0, std::sqrt((1.0 - r) * (1.0 + r))).value;
}

// K(r') / K(r) = AGM(1, r') / AGM(1, r): using the two moduli symmetrically
// gives mu(r) mu(r') = pi^2/4 exactly in form, and no cancellation near either end.
double mu(const EllipticModulus& m)
{
    return 0.5 * std::numbers::pi * agm(1.0, m.complement()).value / agm(1.0, m.r()).value;
}

double mu(double r)
{
    if (!(r > 0.0 && r < 1.0))
        throw InvalidArgument("mu: r must lie in (0, 1)");
    return mu(EllipticModulus(r));
}

double Phi(double x)
{
    if (!(x > 0.0) || !std::isfinite(x))
        throw InvalidArgument("Phi: argument must be positive and finite");
    const double r = std::tanh(0.5 * x);
    const double rc = 1.0 / std::cosh(0.5 * x);
    if (rc == 0.0)
        return std::numeric_limits<double>::infinity();
    return 2.0 * std::numbers::pi / mu(EllipticModulus(r, rc));
}

double Phi_inverse(double y)
{
    if (!(y > 0.0) || !std::isfinite(y))
        throw InvalidArgument("Phi_inverse: argument must be positive and finite");
    double lo = std::numeric_limits<double>::min();
    double hi = 1.0;
    while (Phi(hi) < y) {
        hi *= 2.0;
        if (hi > 1e300)
            throw ConvergenceError("Phi_inverse: value out of range");
    }
    if (Phi(lo) >= y)
        throw InvalidArgument("Phi_inverse: value below the representable range");
    for (int it = 0; it < 2000; ++it) {
        const double mid = std::sqrt(lo) * std::sqrt(hi);
        if (!(mid > lo && mid < hi) || hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * hi)
            break;
        (Phi(mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double tau2(double t)
{
    if (!(t > 0.0) || !std::isfinite(t))
        throw InvalidArgument("tau2: t must be positive and finite");
    const double s = 1.0 + t;
    return std::numbers::pi / mu(EllipticModulus(1.0 / std::sqrt(s), std::sqrt(t / s)));
}

}  // namespace hkappa
