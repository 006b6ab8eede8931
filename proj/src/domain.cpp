#include "hkappa/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hkappa/errors.hpp"
#include "hkappa/hyperbolic.hpp"
#include "hkappa/maps.hpp"

namespace hkappa {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

double distance_to_segment(Complex c, Complex p, Complex q)
{
    const Complex d = q - p;
    const double len2 = std::norm(d);
    if (len2 == 0.0)
        return std::abs(c - p);
    const double t = std::clamp(((c - p) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(c - (p + t * d));
}

void require_inside(const ModelDomain& domain, Complex z, const char* what)
{
    if (!domain.contains(z))
        throw DomainError(std::string(what) + ": point outside " + domain.name());
}

}  // namespace

ModelDomain ModelDomain::expanding_disk(double radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw InvalidArgument("ExpandingDisk: radius must be positive and finite");
    return ModelDomain(kinds::ExpandingDisk{radius});
}

ModelDomain ModelDomain::strip(double half_width)
{
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw InvalidArgument("Strip: half_width must be positive and finite");
    return ModelDomain(kinds::Strip{half_width});
}

ModelDomain ModelDomain::keogh_lune(double a)
{
    if (!(a > 0.0 && a < 1.0))
        throw InvalidArgument("KeoghLune: parameter a must lie in (0, 1)");
    return ModelDomain(kinds::KeoghLune{a});
}

std::string ModelDomain::name() const
{
    return std::visit(overloaded{
                          [](kinds::UpperHalfPlane) { return "UpperHalfPlane"; },
                          [](kinds::RightHalfPlane) { return "RightHalfPlane"; },
                          [](kinds::UnitDisk) { return "UnitDisk"; },
                          [](kinds::ExpandingDisk) { return "ExpandingDisk"; },
                          [](kinds::Strip) { return "Strip"; },
                          [](kinds::SlitPlane) { return "SlitPlane"; },
                          [](kinds::KeoghLune) { return "KeoghLune"; },
                      },
                      kind_);
}

bool ModelDomain::is_convex() const noexcept
{
    return !std::holds_alternative<kinds::SlitPlane>(kind_) &&
           !std::holds_alternative<kinds::KeoghLune>(kind_);
}

bool ModelDomain::contains(Complex z) const noexcept
{
    if (!is_finite(z))
        return false;
    return std::visit(overloaded{
                          [&](kinds::UpperHalfPlane) { return z.imag() > 0.0; },
                          [&](kinds::RightHalfPlane) { return z.real() > 0.0; },
                          [&](kinds::UnitDisk) { return std::abs(z) < 1.0; },
                          [&](kinds::ExpandingDisk d) {
                              return std::abs(z - d.radius) < d.radius;
                          },
                          [&](kinds::Strip s) { return std::abs(z.imag()) < s.half_width; },
                          [&](kinds::SlitPlane) { return !(z.imag() == 0.0 && z.real() <= 0.0); },
                          [&](kinds::KeoghLune k) { return KeoghMap(k.a).contains(z); },
                      },
                      kind_);
}

bool ModelDomain::contains_segment(Complex p, Complex q) const noexcept
{
    if (!contains(p) || !contains(q))
        return false;
    if (is_convex())
        return true;
    if (std::holds_alternative<kinds::SlitPlane>(kind_)) {
        const double yp = p.imag();
        const double yq = q.imag();
        if ((yp > 0.0 && yq < 0.0) || (yp < 0.0 && yq > 0.0)) {
            const double x = p.real() + (q.real() - p.real()) * (-yp) / (yq - yp);
            return x > 0.0;
        }
        return true;
    }
    const KeoghMap map(std::get<kinds::KeoghLune>(kind_).a);
    return distance_to_segment(map.disk2_center(), p, q) > map.disk2_radius();
}

double boundary_distance(const ModelDomain& domain, Complex z)
{
    require_inside(domain, z, "boundary_distance");
    return std::visit(overloaded{
                          [&](kinds::UpperHalfPlane) { return z.imag(); },
                          [&](kinds::RightHalfPlane) { return z.real(); },
                          [&](kinds::UnitDisk) { return 1.0 - std::abs(z); },
                          [&](kinds::ExpandingDisk d) {
                              return d.radius - std::abs(z - d.radius);
                          },
                          [&](kinds::Strip s) { return s.half_width - std::abs(z.imag()); },
                          [&](kinds::SlitPlane) {
                              return z.real() >= 0.0 ? std::abs(z) : std::abs(z.imag());
                          },
                          [&](kinds::KeoghLune k) { return KeoghMap(k.a).boundary_distance(z); },
                      },
                      domain.kind());
}

ModelPoint to_model(const ModelDomain& domain, Complex z)
{
    require_inside(domain, z, "to_model");
    return std::visit(
        overloaded{
            [&](kinds::UpperHalfPlane) { return ModelPoint{Model::HalfPlane, z, 1.0}; },
            [&](kinds::RightHalfPlane) { return ModelPoint{Model::HalfPlane, kI * z, 1.0}; },
            [&](kinds::UnitDisk) { return ModelPoint{Model::Disk, z, 1.0}; },
            [&](kinds::ExpandingDisk d) {
                return ModelPoint{Model::Disk, (z - d.radius) / d.radius, 1.0 / d.radius};
            },
            [&](kinds::Strip s) {
                const double k = std::numbers::pi / (4.0 * s.half_width);
                const Complex zeta = std::tanh(k * z);
                return ModelPoint{Model::Disk, zeta, k * std::abs(1.0 - zeta * zeta)};
            },
            [&](kinds::SlitPlane) {
                const Complex root = std::sqrt(z);
                return ModelPoint{Model::HalfPlane, kI * root, 0.5 / std::abs(root)};
            },
            [&](kinds::KeoghLune k) {
                const KeoghMap map(k.a);
                const Complex zeta = map.inverse(z);
                return ModelPoint{Model::HalfPlane, zeta, 1.0 / std::abs(map.derivative(zeta))};
            },
        },
        domain.kind());
}

double rho_density(const ModelDomain& domain, Complex z)
{
    const ModelPoint m = to_model(domain, z);
    if (m.model == Model::HalfPlane)
        return m.scale / m.point.imag();
    const double r = std::abs(m.point);
    return m.scale * 2.0 / ((1.0 - r) * (1.0 + r));
}

double h_dist_slitplane(Complex z, Complex w)
{
    const ModelDomain slit = ModelDomain::slit_plane();
    require_inside(slit, z, "h_dist_slitplane");
    require_inside(slit, w, "h_dist_slitplane");
    return h_dist_right_halfplane(std::sqrt(z), std::sqrt(w));
}

double h_dist_pullback(const ModelDomain& domain, Complex z, Complex w)
{
    if (std::holds_alternative<kinds::UpperHalfPlane>(domain.kind()))
        return h_dist_halfplane(z, w);
    if (std::holds_alternative<kinds::RightHalfPlane>(domain.kind()))
        return h_dist_right_halfplane(z, w);
    if (std::holds_alternative<kinds::UnitDisk>(domain.kind()))
        return h_dist_disk(z, w);
    if (std::holds_alternative<kinds::SlitPlane>(domain.kind()))
        return h_dist_slitplane(z, w);
    const ModelPoint mz = to_model(domain, z);
    const ModelPoint mw = to_model(domain, w);
    return mz.model == Model::HalfPlane ? h_dist_halfplane(mz.point, mw.point)
                                        : h_dist_disk(mz.point, mw.point);
}

double j_dist(const ModelDomain& domain, Complex z, Complex w)
{
    const double dz = boundary_distance(domain, z);
    const double dw = boundary_distance(domain, w);
    return std::log1p(std::abs(z - w) / std::min(dz, dw));
}

}  // namespace hkappa
