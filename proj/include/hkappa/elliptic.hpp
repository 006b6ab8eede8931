#pragma once

namespace hkappa {

/// A modulus r in (0, 1) together with its complement r' = sqrt(1 - r^2),
/// computed as sqrt((1 - r)(1 + r)) so that r' keeps full relative accuracy.
class EllipticModulus {
public:
    explicit EllipticModulus(double r);
    /// Construct from a modulus whose complement is known more accurately than
    /// sqrt(1 - r^2) would give (e.g. r = tanh x, r' = sech x).
    EllipticModulus(double r, double complement);

    double r() const noexcept { return r_; }
    double complement() const noexcept { return rc_; }

private:
    double r_;
    double rc_;
};

struct AgmResult {
    double value;
    int iterations;
};

/// Arithmetic-geometric mean of a, b >= 0, iterated to relative accuracy 2 eps.
AgmResult agm(double a, double b);

/// Complete elliptic integral of the first kind, K(r) = pi / (2 AGM(1, r')), 0 <= r < 1.
double ellip_K(double r);

/// Modulus of the Groetzsch ring D \ [0, r]: (pi/2) K(r')/K(r).
double mu(double r);
double mu(const EllipticModulus& m);

/// Phi(x) = 2 pi / mu(tanh(x/2)), increasing from 0 to infinity.
double Phi(double x);
/// Inverse of Phi by bisection in log x.
double Phi_inverse(double y);

/// Capacity of the Teichmueller ring C \ ([-1, 0] u [t, inf)): pi / mu(1/sqrt(1+t)).
double tau2(double t);

}  // namespace hkappa
