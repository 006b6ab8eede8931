#include "hkappa/maps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "hkappa/errors.hpp"

namespace hkappa {

Complex strip_map(Complex z)
{
    if (!is_finite(z) || !(std::abs(z) < 1.0))
        throw DomainError("strip_map: point not in the unit disk");
    return (2.0 / std::numbers::pi) * std::log((1.0 + z) / (1.0 - z));
}

Complex strip_map_inverse(Complex w)
{
    if (!is_finite(w) || !(std::abs(w.imag()) < 1.0))
        throw DomainError("strip_map_inverse: point not in the strip |Im w| < 1");
    return std::tanh(0.25 * std::numbers::pi * w);
}

KeoghMap::KeoghMap(double a) : a_(a)
{
    if (!(a > 0.0 && a < 1.0))
        throw InvalidArgument("KeoghMap: parameter a must lie in (0, 1)");
}

// With p = sqrt(1 + z/2) and q = sqrt(1 - z/2) (principal branches), the inner
// map L o S o M is i (p - q)/(p + q), which is analytic on H and on |z| < 2.
Complex KeoghMap::operator()(Complex z) const
{
    if (!is_finite(z) || !(z.imag() > 0.0 || std::abs(z) < 1.0))
        throw DomainError("KeoghMap: argument must lie in H or in the unit disk");
    const Complex p = std::sqrt(1.0 + 0.5 * z);
    const Complex q = std::sqrt(1.0 - 0.5 * z);
    const Complex g = kI * (p - q) / (p + q);
    return (g + a_) / (1.0 + a_ * g);
}

Complex KeoghMap::derivative(Complex z) const
{
    if (!is_finite(z) || !(z.imag() > 0.0 || std::abs(z) < 1.0))
        throw DomainError("KeoghMap: argument must lie in H or in the unit disk");
    const Complex p = std::sqrt(1.0 + 0.5 * z);
    const Complex q = std::sqrt(1.0 - 0.5 * z);
    const Complex g = kI * (p - q) / (p + q);
    const Complex dg = kI / (p * q * (p + q) * (p + q));
    const Complex den = 1.0 + a_ * g;
    return (1.0 - a_ * a_) / (den * den) * dg;
}

Complex KeoghMap::upper_corner() const noexcept
{
    const double x = 1.0 / disk2_center().real();
    return {x, std::sqrt((1.0 - x) * (1.0 + x))};
}

bool KeoghMap::contains(Complex w) const noexcept
{
    return is_finite(w) && std::abs(w) < 1.0 && std::abs(w - disk2_center()) > disk2_radius();
}

double KeoghMap::boundary_distance(Complex w) const
{
    if (!contains(w))
        throw DomainError("KeoghLune: point outside the lune");
    const Complex c2 = disk2_center();
    const double r2 = disk2_radius();
    const Complex corner = upper_corner();
    const double to_corner = std::min(std::abs(w - corner), std::abs(w - std::conj(corner)));

    // Arc of the unit circle outside Delta2: Re <= 1/c2.
    double d1 = to_corner;
    const double modulus = std::abs(w);
    if (modulus == 0.0 || w.real() / modulus <= corner.real())
        d1 = 1.0 - modulus;

    // Arc of the circle of Delta2 inside the unit disk: cos(beta) <= -r2/c2.
    double d2 = to_corner;
    const Complex v = w - c2;
    const double dist_c2 = std::abs(v);
    if (v.real() / dist_c2 <= -r2 / c2.real())
        d2 = dist_c2 - r2;

    return std::min({d1, d2, to_corner});
}

Complex KeoghMap::inverse(Complex w) const
{
    if (!contains(w))
        throw DomainError("KeoghMap::inverse: point outside the lune");

    // Seeds on a fixed grid in H; the closest image starts the iteration.
    static constexpr std::array<double, 9> xs{-4.0, -2.0, -1.0, -0.4, 0.0, 0.4, 1.0, 2.0, 4.0};
    static constexpr std::array<double, 7> ys{0.02, 0.1, 0.3, 1.0, 3.0, 10.0, 40.0};
    Complex z{0.0, 1.0};
    double best = std::numeric_limits<double>::infinity();
    for (double x : xs) {
        for (double y : ys) {
            const Complex s{x, y};
            const double r = std::abs((*this)(s) - w);
            if (r < best) {
                best = r;
                z = s;
            }
        }
    }

    constexpr int kMaxIterations = 60;
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    double residual = best;
    for (int it = 0; it < kMaxIterations && residual > 2.0 * kEps; ++it) {
        const Complex step = ((*this)(z) - w) / derivative(z);
        double lambda = 1.0;
        bool accepted = false;
        for (int halving = 0; halving < 40 && !accepted; ++halving, lambda *= 0.5) {
            const Complex next = z - lambda * step;
            if (!(next.imag() > 0.0))
                continue;
            const double next_residual = std::abs((*this)(next) - w);
            if (next_residual < residual) {
                accepted = true;
                const double moved = std::abs(next - z);
                z = next;
                residual = next_residual;
                if (moved <= 4.0 * kEps * (1.0 + std::abs(z)))
                    return z;
            }
        }
        if (!accepted)
            break;
    }
    if (residual <= 64.0 * kEps)
        return z;
    throw ConvergenceError("KeoghMap::inverse: Newton iteration did not converge");
}

TaylorCoefficients keogh_taylor_coefficients(double a, double step)
{
    if (!(step > 0.0 && step < 0.25))
        throw InvalidArgument("keogh_taylor_coefficients: step must lie in (0, 0.25)");
    const KeoghMap f(a);
    const double h = step;
    const Complex fp1 = f(Complex{h, 0.0});
    const Complex fm1 = f(Complex{-h, 0.0});
    const Complex fp2 = f(Complex{2.0 * h, 0.0});
    const Complex fm2 = f(Complex{-2.0 * h, 0.0});
    const Complex f0 = f(Complex{0.0, 0.0});
    const Complex d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    const Complex d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    return {d1, 0.5 * d2};
}

namespace {

void require_triple(const PointSet& triple)
{
    if (triple.size() != 3)
        throw InvalidArgument("Keogh quantities need a three-point set {z0, z1, z2}");
    for (const Complex& z : triple)
        if (!is_finite(z) || !(z.imag() > 0.0))
            throw DomainError("Keogh quantities need points in the upper half-plane");
}

}  // namespace

Complex keogh_W(double a, double x, const PointSet& triple)
{
    require_triple(triple);
    const KeoghMap f(a);
    const Complex w0 = f(x * triple[0]);
    const Complex w1 = f(x * triple[1]);
    const Complex w2 = f(x * triple[2]);
    return (w1 - w2) / (w0 - a);
}

double keogh_F(double a, double x, const PointSet& triple)
{
    require_triple(triple);
    if (!(x > 0.0))
        throw InvalidArgument("keogh_F: x must be positive");
    const KeoghMap f(a);
    const Complex w0 = f(x * triple[0]);
    const Complex w1 = f(x * triple[1]);
    const Complex w2 = f(x * triple[2]);

    const double d12 = std::abs(w1 - w2);
    if (d12 < std::abs(w0 - w1) || d12 < std::abs(w0 - w2))
        throw InvalidArgument("keogh_F: x too large, |w1 - w2| is not the diameter of the image");
    const double d0 = f.boundary_distance(w0);
    const double to_a = std::abs(w0 - a);
    if (std::abs(d0 - to_a) > 1e-12 * std::max(1.0, to_a) || f.boundary_distance(w1) < d0 ||
        f.boundary_distance(w2) < d0)
        throw InvalidArgument("keogh_F: x too large, the nearest boundary point is not a");
    return d12 / to_a;
}

double keogh_F0(const PointSet& triple)
{
    require_triple(triple);
    return std::abs(triple[1] - triple[2]) / std::abs(triple[0]);
}

double keogh_F_slope(double a, const PointSet& triple)
{
    require_triple(triple);
    return a * std::abs(triple[1] - triple[2]) / (4.0 * std::abs(triple[0])) *
           (triple[1] + triple[2] - triple[0]).imag();
}

}  // namespace hkappa
