#pragma once

#include <cstddef>

#include "hkappa/point_set.hpp"
#include "hkappa/types.hpp"

namespace hkappa {

/// Half apex angle of the equilateral configuration with side 2u.
double theta_of_u(double u);
/// log-height of the apexes: cosh t = cosh 2u / cosh u.
double t_of_u(double u);

/// Euclidean distance between the two apexes of E*(u).
double chi(double u);
double chi_derivative(double u);

/// Positive root of 4 cosh^4 u = cosh 4u, found by bisection on (0, 2).
double u0_solve();

/// Supremum of d(E) over normalized three-point sets of hyperbolic diameter 2u:
/// chi(u) below u0 and 2 sinh 2u from u0 on.
double M_of_u(double u);

/// xi(u) = 2u / log(1 + chi(u)).
double xi(double u);
double xi_derivative(double u);

/// 2u / log(1 + M(u)); the function whose infimum over u > 0 is kappa(H).
double two_u_over_log1p_M(double u);
/// 2u / log(1 + 2 sinh 2u).
double two_u_over_log1p_2sinh2u(double u);

/// x / log(1 + 2 sinh x), increasing from 1/2 to 1.
double monotone_f(double x);

/// Vertices {i, i e^{t+i theta}, i e^{t-i theta}} of the hyperbolic equilateral
/// triangle with side 2u.
struct ExtremalTriple {
    double u;
    double t;
    double theta;
    PointSet points;
};

ExtremalTriple extremal_triple(double u);

struct KappaSolution {
    double u_star;
    double t_star;
    double theta_star;
    double kappa;
    ExtremalTriple triple;
    int iterations;
};

/// Minimizes xi on (1e-6, u0 - 1e-6): golden-section localization followed by
/// bisection on the sign of xi'. `tolerance` bounds the final bracket width.
KappaSolution solve_kappa_H(double tolerance = 1e-13);

/// Result of the exhaustive search for M(u).
struct BruteForceM {
    double value;        // sampled maximum of d({i, z1, z2}); a lower bound for M(u)
    Complex z1;
    Complex z2;
    double angle1;       // z = c + i R e^{i angle} on the circle of hyperbolic radius 2u about i
    double angle2;
    std::size_t candidates;  // sampled circle points with Im z >= 1
};

/// Samples `samples` equally spaced points on the hyperbolic circle of radius
/// 2u about i and maximizes d({i, z1, z2}) over all pairs subject to
/// h(z1, z2) <= 2u and Im z1, Im z2 >= 1.
BruteForceM brute_force_M(double u, std::size_t samples);

}  // namespace hkappa
