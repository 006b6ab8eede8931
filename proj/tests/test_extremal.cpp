#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hkappa/errors.hpp"
#include "hkappa/extremal.hpp"
#include "hkappa/hyperbolic.hpp"
#include "hkappa/set_functionals.hpp"

using namespace hkappa;
using doctest::Approx;

namespace {

constexpr double kUStar = 0.432335123777;
constexpr double kKappa = 0.8750987500145;

double central4(double (*f)(double), double u, double h)
{
    return (-f(u + 2 * h) + 8 * f(u + h) - 8 * f(u - h) + f(u - 2 * h)) / (12 * h);
}

}  // namespace

TEST_CASE("theta and t")
{
    CHECK(theta_of_u(1e-9) < 2e-9);
    CHECK(t_of_u(1e-6) < 1e-5);
    for (double u : {0.05, 0.3, kUStar, 1.0, 2.0}) {
        const double t = t_of_u(u), th = theta_of_u(u);
        CHECK(th > 0.0);
        CHECK(th < std::numbers::pi / 2);
        CHECK(std::cosh(t) == Approx(std::cosh(2 * u) / std::cosh(u)).epsilon(1e-12));
        const Complex apex = kI * std::exp(Complex{t, th});
        CHECK(h_dist_halfplane(apex, kI * std::exp(t)) == Approx(u).epsilon(1e-12));
        CHECK(h_dist_halfplane(apex, kI) == Approx(2 * u).epsilon(1e-12));
    }
    CHECK(theta_of_u(kUStar) == Approx(0.419463976058).epsilon(1e-11));
    CHECK(t_of_u(kUStar) == Approx(0.727535978839).epsilon(1e-11));
    CHECK_THROWS_AS(theta_of_u(0.0), InvalidArgument);
    CHECK_THROWS_AS(t_of_u(-1.0), InvalidArgument);
}

TEST_CASE("extremal triple is equilateral")
{
    for (int k = 1; k <= 100; ++k) {
        const double u = 0.02 * k;
        const auto T = extremal_triple(u);
        const auto& E = T.points;
        CHECK(h_dist_halfplane(E[0], E[1]) == Approx(2 * u).epsilon(1e-12));
        CHECK(h_dist_halfplane(E[0], E[2]) == Approx(2 * u).epsilon(1e-12));
        CHECK(h_dist_halfplane(E[1], E[2]) == Approx(2 * u).epsilon(1e-12));
        CHECK(E[1].imag() > 1.0);
        CHECK(E[2].imag() > 1.0);
        CHECK(E[1].imag() > std::cosh(2 * u) / std::pow(std::cosh(u), 2) * (1 - 1e-14));
    }
}

TEST_CASE("chi")
{
    for (double u : {0.01, 0.4, 1.0, 3.0}) {
        const double t = t_of_u(u), th = theta_of_u(u);
        CHECK(chi(u) == Approx(2 * std::exp(t) * std::sin(th)).epsilon(1e-12));
        CHECK(chi_derivative(u) == Approx(central4(chi, u, 1e-4)).epsilon(1e-6));
    }
    // chi(u) = 2u + 2 sqrt3 u^2 + O(u^3)
    for (double u : {1e-2, 1e-3}) {
        const double rest = (chi(u) - 2 * u - 2 * std::sqrt(3.0) * u * u) / (u * u * u);
        CHECK(std::abs(rest) < 10.0);
    }
    CHECK(chi(kUStar) == Approx(std::expm1(2 * kUStar / kKappa)).epsilon(1e-11));
    const double top = std::log(11.0 / 4.0);
    for (int k = 1; k <= 200; ++k) {
        const double u = top * k / 200;
        CHECK(chi(u) > std::expm1(2 * u));
        const auto E = extremal_triple(u).points;
        CHECK(diam(E) == Approx(chi(u)).epsilon(1e-12));
        CHECK(std::abs(E[1] - E[2]) >= std::abs(E[1] - E[0]) * (1 - 1e-14));
    }
}

TEST_CASE("u0")
{
    const double u0 = u0_solve();
    CHECK(u0 == Approx(0.831443).epsilon(1e-5 / 0.831443));
    CHECK(std::abs(4 * std::pow(std::cosh(u0), 4) - std::cosh(4 * u0)) < 1e-10);
    CHECK(phi(u0) > u0);
    CHECK(phi(4 * u0) < 4 * u0);
}

TEST_CASE("M(u)")
{
    const double u0 = u0_solve();
    CHECK(chi(u0) == Approx(2 * std::sinh(2 * u0)).epsilon(1e-8));
    CHECK(M_of_u(1.0) == Approx(2 * std::sinh(2.0)));
    CHECK(M_of_u(1.0) == Approx(7.2537).epsilon(1e-5));
    CHECK(M_of_u(0.4) == chi(0.4));
    CHECK(std::abs(M_of_u(u0 - 1e-12) - M_of_u(u0 + 1e-12)) < 1e-9);
    CHECK_THROWS_AS(M_of_u(0.0), InvalidArgument);
}

TEST_CASE("xi")
{
    CHECK(xi(1e-7) == Approx(1.0).epsilon(1e-6));
    const double h = 1e-5;
    CHECK((xi(2 * h) - xi(h)) / h == Approx(1 - std::sqrt(3.0)).epsilon(1e-3));
    CHECK(xi_derivative(1e-6) == Approx(1 - std::sqrt(3.0)).epsilon(1e-4));
    const double u0 = u0_solve();
    CHECK(central4(xi, u0, 1e-4) == Approx(0.1917).epsilon(1e-3 / 0.1917));
    for (double u : {0.05, 0.3, 0.6, 1.5})
        CHECK(xi_derivative(u) == Approx(central4(xi, u, 1e-4)).epsilon(1e-6));
    for (int k = 1; k <= 1000; ++k)
        CHECK(two_u_over_log1p_M(5.0 * k / 1000) < 1.0);
    // xi itself stays below 1 only while the apex pair is the diameter.
    const double top = std::log(11.0 / 4.0);
    for (int k = 1; k <= 1000; ++k)
        CHECK(xi(top * k / 1000) < 1.0);
    CHECK(xi(5.0) > 1.0);
}

TEST_CASE("xi is unimodal on (0, u0)")
{
    const double u0 = u0_solve();
    int turns = 0;
    double prev = xi(u0 / 1000);
    int dir = -1;
    for (int k = 2; k < 1000; ++k) {
        const double v = xi(u0 * k / 1000);
        const int d = v < prev ? -1 : 1;
        if (d != dir) {
            ++turns;
            dir = d;
        }
        prev = v;
    }
    CHECK(turns == 1);
}

TEST_CASE("solve_kappa_H")
{
    const auto s = solve_kappa_H(1e-13);
    CHECK(std::abs(s.u_star - kUStar) < 1e-10);
    CHECK(std::abs(s.kappa - kKappa) < 1e-12);
    CHECK(std::abs(s.t_star - 0.727535978839) < 1e-10);
    CHECK(std::abs(s.theta_star - 0.419463976058) < 1e-10);
    CHECK(s.kappa == xi(s.u_star));
    CHECK(std::abs(xi_derivative(s.u_star)) < 1e-9);
    CHECK(s.kappa >= 0.5);
    CHECK(s.kappa < 1.0);
    CHECK(s.u_star < u0_solve());
    CHECK_THROWS_AS(solve_kappa_H(1e-14), InvalidArgument);
    CHECK_THROWS_AS(solve_kappa_H(1e-2), InvalidArgument);
    CHECK(std::abs(solve_kappa_H(1e-6).kappa - kKappa) < 1e-10);
}

TEST_CASE("the infimum of 2u/log(1+M(u)) is attained below u0")
{
    const double kappa = solve_kappa_H().kappa;
    const double u0 = u0_solve();
    for (int k = 0; k <= 2000; ++k) {
        const double u = u0 + (5.0 - u0) * k / 2000;
        CHECK(two_u_over_log1p_M(u) > kappa);
    }
}

TEST_CASE("monotone f")
{
    CHECK(monotone_f(1e-9) == Approx(0.5).epsilon(1e-6));
    CHECK(monotone_f(1e3) == Approx(1.0).epsilon(1e-2));
    double last = 0.0;
    for (int k = 1; k <= 500; ++k) {
        const double v = monotone_f(0.02 * k);
        CHECK(v > last);
        last = v;
    }
    CHECK(two_u_over_log1p_2sinh2u(0.7) == monotone_f(1.4));
    CHECK_THROWS_AS(monotone_f(0.0), InvalidArgument);
}

TEST_CASE("brute force M converges at rate 1/n")
{
    for (double u : {0.3, u0_solve(), 1.2}) {
        const double M = M_of_u(u);
        const double coarse = M - brute_force_M(u, 2000).value;
        const double fine = M - brute_force_M(u, 8000).value;
        CHECK(coarse >= -1e-12);
        CHECK(fine >= -1e-12);
        CHECK(coarse <= 5 * M / 2000);
        CHECK(fine <= 5 * M / 8000);
    }
    CHECK_THROWS_AS(brute_force_M(0.4, 999), InvalidArgument);
}

TEST_CASE("brute force maximizer is the extremal triple below u0")
{
    const double u = kUStar;
    const auto bf = brute_force_M(u, 20000);
    const auto E = extremal_triple(u).points;
    const auto D = hyperbolic_disk(kI, 2 * u);
    const double a1 = std::arg((E[1] - D.euclid_center) / (kI * D.euclid_radius));
    const double a2 = std::arg((E[2] - D.euclid_center) / (kI * D.euclid_radius));
    CHECK(std::abs(std::min(bf.angle1, bf.angle2) - std::min(a1, a2)) < 1e-2);
    CHECK(std::abs(std::max(bf.angle1, bf.angle2) - std::max(a1, a2)) < 1e-2);
}
