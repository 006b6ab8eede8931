#include "hkappa/extremal.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "hkappa/errors.hpp"
#include "hkappa/hyperbolic.hpp"
#include "hkappa/simd/kernels.hpp"

namespace hkappa {

namespace {

void require_positive(double u, const char* what)
{
    if (!(u > 0.0) || !std::isfinite(u))
        throw InvalidArgument(std::string(what) + ": argument must be positive and finite");
}

}  // namespace

double theta_of_u(double u)
{
    require_positive(u, "theta_of_u");
    return 2.0 * std::atan(std::tanh(0.5 * u));
}

// sinh t = sinh u sqrt(4 - sech^2 u) avoids arcosh of an argument near 1.
double t_of_u(double u)
{
    require_positive(u, "t_of_u");
    const double sech = 1.0 / std::cosh(u);
    return std::asinh(std::sinh(u) * std::sqrt(4.0 - sech * sech));
}

double chi(double u)
{
    require_positive(u, "chi");
    const double s = std::sinh(u);
    const double s2 = s * s;
    return 2.0 * s / (1.0 + s2) * (1.0 + 2.0 * s2 + s * std::sqrt(3.0 + 4.0 * s2));
}

double chi_derivative(double u)
{
    require_positive(u, "chi_derivative");
    const double s = std::sinh(u);
    const double s2 = s * s;
    const double root = std::sqrt(3.0 + 4.0 * s2);
    const double q = 2.0 * s / (1.0 + s2);
    const double dq = 2.0 * (1.0 - s2) / ((1.0 + s2) * (1.0 + s2));
    const double p = 1.0 + 2.0 * s2 + s * root;
    const double dp = 4.0 * s + root + 4.0 * s2 / root;
    return (dq * p + q * dp) * std::cosh(u);
}

double u0_solve()
{
    // cosh 4u / cosh^4 u increases from 1 to 8; the root is where it equals 4.
    const auto g = [](double u) {
        const double c = std::cosh(u);
        const double c2 = c * c;
        return std::cosh(4.0 * u) / (c2 * c2) - 4.0;
    };
    double lo = 0.0;
    double hi = 2.0;
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

double cached_u0()
{
    static const double u0 = u0_solve();
    return u0;
}

}  // namespace

double M_of_u(double u)
{
    require_positive(u, "M_of_u");
    return u < cached_u0() ? chi(u) : 2.0 * std::sinh(2.0 * u);
}

double xi(double u)
{
    return 2.0 * u / std::log1p(chi(u));
}

double xi_derivative(double u)
{
    const double c = chi(u);
    const double L = std::log1p(c);
    return (2.0 * L - 2.0 * u * chi_derivative(u) / (1.0 + c)) / (L * L);
}

double monotone_f(double x)
{
    require_positive(x, "monotone_f");
    // log(1 + 2 sinh x) = x + log1p(e^{-x} - e^{-2x}) stays finite for large x.
    if (x > 1.0) {
        const double e = std::exp(-x);
        return x / (x + std::log1p(e - e * e));
    }
    return x / std::log1p(2.0 * std::sinh(x));
}

double two_u_over_log1p_2sinh2u(double u)
{
    require_positive(u, "two_u_over_log1p_2sinh2u");
    return monotone_f(2.0 * u);
}

double two_u_over_log1p_M(double u)
{
    return u < cached_u0() ? xi(u) : two_u_over_log1p_2sinh2u(u);
}

ExtremalTriple extremal_triple(double u)
{
    const double t = t_of_u(u);
    const double theta = theta_of_u(u);
    const Complex left = kI * std::exp(Complex{t, theta});
    const Complex right = kI * std::exp(Complex{t, -theta});
    return ExtremalTriple{u, t, theta, PointSet{kI, left, right}};
}

KappaSolution solve_kappa_H(double tolerance)
{
    if (!(tolerance >= 1e-13) || !(tolerance <= 1e-3))
        throw InvalidArgument("solve_kappa_H: tolerance must lie in [1e-13, 1e-3]");

    const double u0 = cached_u0();
    const double lo = 1e-6;
    const double hi = u0 - 1e-6;
    if (!(xi_derivative(lo) < 0.0 && xi_derivative(hi) > 0.0))
        throw ConvergenceError("solve_kappa_H: xi' does not change sign on the search interval");

    // Golden-section localization on xi itself.
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo;
    double b = hi;
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    double fc = xi(c);
    double fd = xi(d);
    int iterations = 0;
    while (b - a > 1e-3) {
        ++iterations;
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = xi(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = xi(d);
        }
    }
    if (!(xi_derivative(a) < 0.0 && xi_derivative(b) > 0.0)) {
        a = lo;
        b = hi;
    }

    // Bisection on the sign of xi'.
    constexpr int kMaxIterations = 400;
    while (b - a > tolerance) {
        if (++iterations > kMaxIterations)
            throw ConvergenceError("solve_kappa_H: iteration cap reached");
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b)
            break;
        (xi_derivative(mid) < 0.0 ? a : b) = mid;
    }

    const double u_star = 0.5 * (a + b);
    const double kappa = xi(u_star);
    if (!(xi(lo) > kappa && xi(hi) > kappa))
        throw ConvergenceError("solve_kappa_H: minimum is not interior to the search interval");

    ExtremalTriple triple = extremal_triple(u_star);
    return KappaSolution{u_star, triple.t, triple.theta, kappa, std::move(triple), iterations};
}

BruteForceM brute_force_M(double u, std::size_t samples)
{
    require_positive(u, "brute_force_M");
    if (samples < 1000)
        throw InvalidArgument("brute_force_M: at least 1000 samples are required");

    const HyperbolicDisk disk = hyperbolic_disk(kI, 2.0 * u);
    std::vector<double> x, y, apex, angle;
    x.reserve(samples);
    y.reserve(samples);
    apex.reserve(samples);
    angle.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        const double alpha =
            -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
        const Complex z = disk.boundary_point(alpha);
        if (z.imag() < 1.0)
            continue;
        x.push_back(z.real());
        y.push_back(z.imag());
        apex.push_back(std::norm(z - kI));
        angle.push_back(alpha);
    }

    const double th = std::tanh(u);
    const simd::PairMax best =
        simd::active().max_constrained_diameter(simd::ConstrainedInput{x, y, apex, th * th});
    if (!best.found)
        throw InvalidArgument("brute_force_M: no feasible pair on the sampled circle");
    return BruteForceM{std::sqrt(best.value), Complex{x[best.i], y[best.i]},
                       Complex{x[best.j], y[best.j]}, angle[best.i], angle[best.j], x.size()};
}

}  // namespace hkappa
