#include "hkappa/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hkappa/elliptic.hpp"
#include "hkappa/errors.hpp"
#include "hkappa/set_functionals.hpp"

namespace hkappa {

std::string_view bound_kind_name(BoundKind kind) noexcept
{
    switch (kind) {
    case BoundKind::Kappa0: return "kappa0_bound";
    case BoundKind::Kappa1: return "kappa1_bound";
    case BoundKind::Exact: return "exact";
    case BoundKind::Teichmuller: return "teichmuller_bound";
    case BoundKind::HalfPlaneSymmetrization: return "halfplane_symmetrization_bound";
    }
    return "unknown";
}

namespace {

constexpr std::size_t kSkeletonPoints = 65;

void require_segment_inside(const ModelDomain& domain, const Segment& s)
{
    if (!domain.contains_segment(s.a, s.b))
        throw DomainError("segment is not contained in " + domain.name());
}

PointSet skeleton(const Segment& s)
{
    std::vector<Complex> pts(kSkeletonPoints);
    for (std::size_t k = 0; k < kSkeletonPoints; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(kSkeletonPoints - 1);
        pts[k] = s.a + t * (s.b - s.a);
    }
    return PointSet(std::move(pts));
}

// Minimum of d(p(t), boundary) over t in [0, 1]. The boundary distance is
// concave on convex domains, so the endpoints suffice there.
double segment_boundary_distance(const ModelDomain& domain, const Segment& s)
{
    require_segment_inside(domain, s);
    const auto d = [&](double t) { return boundary_distance(domain, s.a + t * (s.b - s.a)); };
    if (domain.is_convex())
        return std::min(d(0.0), d(1.0));

    constexpr int kSamples = 2048;
    int best = 0;
    double dmin = d(0.0);
    for (int k = 1; k <= kSamples; ++k) {
        const double v = d(static_cast<double>(k) / kSamples);
        if (v < dmin) {
            dmin = v;
            best = k;
        }
    }
    double lo = std::max(0, best - 1) / static_cast<double>(kSamples);
    double hi = std::min(kSamples, best + 1) / static_cast<double>(kSamples);
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int it = 0; it < 80; ++it) {
        const double c = hi - g * (hi - lo);
        const double e = lo + g * (hi - lo);
        if (d(c) < d(e))
            hi = e;
        else
            lo = c;
    }
    return std::min(dmin, d(0.5 * (lo + hi)));
}

bool is_real_axis_segment(const Segment& s)
{
    return s.a.imag() == 0.0 && s.b.imag() == 0.0;
}

// For [a, b] on the axis of a strip with half-width <= a < b (or the mirror image).
// Closer to the origin the symmetrized complement no longer contains the
// left half-plane and both bounds can exceed the true capacity.
std::pair<double, double> positive_axis_endpoints(const ModelDomain& domain, const SetDescriptor& set)
{
    const auto* seg = std::get_if<Segment>(&set);
    if (!seg)
        throw InvalidArgument("symmetrization bounds need a segment");
    const Segment& s = *seg;
    if (!std::holds_alternative<kinds::Strip>(domain.kind()) || !is_real_axis_segment(s))
        throw InvalidArgument("symmetrization bounds need a real segment in a strip");
    double a = std::min(s.a.real(), s.b.real());
    double b = std::max(s.a.real(), s.b.real());
    if (b < 0.0) {
        const double na = -b;
        b = -a;
        a = na;
    }
    const double half_width = std::get<kinds::Strip>(domain.kind()).half_width;
    if (!(a >= half_width && b > a))
        throw InvalidArgument("symmetrization bounds need a segment at distance >= half-width from the origin");
    return {a, b};
}

std::optional<double> exact_capacity(const ModelDomain& domain, const SetDescriptor& set)
{
    const auto* seg = std::get_if<Segment>(&set);
    if (!seg || seg->a == seg->b)
        return std::nullopt;
    require_segment_inside(domain, *seg);
    const Segment& s = *seg;
    if (const auto* strip = std::get_if<kinds::Strip>(&domain.kind())) {
        if (!is_real_axis_segment(s))
            return std::nullopt;
        return cap_strip_segment_exact(s.a.real() / strip->half_width, s.b.real() / strip->half_width);
    }
    // Hyperbolic geodesic segments map onto a radius [0, tanh(h/2)] of the disk.
    bool geodesic = false;
    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, kinds::UpperHalfPlane>)
                geodesic = s.a.real() == s.b.real();
            else if constexpr (std::is_same_v<K, kinds::RightHalfPlane>)
                geodesic = s.a.imag() == s.b.imag();
            else if constexpr (std::is_same_v<K, kinds::UnitDisk>)
                geodesic = (s.a * std::conj(s.b)).imag() == 0.0;
            else if constexpr (std::is_same_v<K, kinds::ExpandingDisk>)
                geodesic = is_real_axis_segment(s);
        },
        domain.kind());
    if (!geodesic)
        return std::nullopt;
    return Phi(h_dist_pullback(domain, s.a, s.b));
}

}  // namespace

double set_diameter(const SetDescriptor& set)
{
    if (const auto* s = std::get_if<Segment>(&set))
        return std::abs(s->b - s->a);
    return diam(std::get<PointSet>(set));
}

double set_boundary_distance(const ModelDomain& domain, const SetDescriptor& set)
{
    if (const auto* s = std::get_if<Segment>(&set))
        return segment_boundary_distance(domain, *s);
    return set_boundary_distance(domain, std::get<PointSet>(set));
}

double J_functional(const ModelDomain& domain, const SetDescriptor& set)
{
    if (const auto* s = std::get_if<Segment>(&set)) {
        const double d = std::abs(s->b - s->a);
        if (!(d > 0.0))
            throw InvalidArgument("J_functional: degenerate segment with zero diameter");
        return std::log1p(d / segment_boundary_distance(domain, *s));
    }
    return J_functional(domain, std::get<PointSet>(set));
}

double cap_groetzsch(double r)
{
    if (!(r > 0.0 && r < 1.0))
        throw InvalidArgument("cap_groetzsch: r must lie in (0, 1)");
    return 2.0 * std::numbers::pi / mu(r);
}

// The inverse strip map sends [a, b] to [tanh(pi a/4), tanh(pi b/4)]; the disk
// automorphism moving the left end to 0 sends the right end to tanh(pi (b-a)/4).
double cap_strip_segment_exact(double a, double b)
{
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw InvalidArgument("cap_strip_segment_exact: need finite a < b");
    const double x = 0.25 * std::numbers::pi * (b - a);
    return 2.0 * std::numbers::pi / mu(EllipticModulus(std::tanh(x), 1.0 / std::cosh(x)));
}

double cap_hyperbolic_diameter_bound(const ModelDomain& domain, const SetDescriptor& set)
{
    if (!domain.is_simply_connected())
        throw InvalidArgument("cap_hyperbolic_diameter_bound: domain must be simply connected");
    if (const auto* s = std::get_if<Segment>(&set)) {
        require_segment_inside(domain, *s);
        return Phi(h_diam(domain, skeleton(*s)));
    }
    return Phi(h_diam(domain, std::get<PointSet>(set)));
}

CapacityBound cap_lower_bound(const ModelDomain& domain, const SetDescriptor& set, BoundKind kind)
{
    if (!domain.is_simply_connected())
        throw InvalidArgument("cap_lower_bound: domain must be simply connected");
    const double J = J_functional(domain, set);
    double value = 0.0;
    switch (kind) {
    case BoundKind::Kappa0:
        value = Phi(kKappa0 * J);
        break;
    case BoundKind::Kappa1:
        if (!domain.is_convex())
            throw InvalidArgument("kappa1_bound requires a convex domain");
        value = Phi(kKappa1Lower * J);
        break;
    case BoundKind::Exact: {
        const auto exact = exact_capacity(domain, set);
        if (!exact)
            throw InvalidArgument("no exact capacity formula for this condenser");
        value = *exact;
        break;
    }
    case BoundKind::Teichmuller: {
        const auto [a, b] = positive_axis_endpoints(domain, set);
        value = tau2(a / (b - a));
        break;
    }
    case BoundKind::HalfPlaneSymmetrization: {
        const auto [a, b] = positive_axis_endpoints(domain, set);
        value = Phi(std::log(b / a));
        break;
    }
    }
    return CapacityBound{domain, set, kind, value, J};
}

CapacityReport capacity_report(const ModelDomain& domain, const SetDescriptor& set)
{
    CapacityReport report;
    report.exact = exact_capacity(domain, set);

    bool symmetrization = false;
    try {
        positive_axis_endpoints(domain, set);
        symmetrization = true;
    } catch (const InvalidArgument&) {
    }
    if (symmetrization)
        report.bounds.push_back(cap_lower_bound(domain, set, BoundKind::Teichmuller));
    report.bounds.push_back(cap_lower_bound(domain, set, BoundKind::Kappa0));
    if (domain.is_convex())
        report.bounds.push_back(cap_lower_bound(domain, set, BoundKind::Kappa1));
    if (symmetrization)
        report.bounds.push_back(cap_lower_bound(domain, set, BoundKind::HalfPlaneSymmetrization));
    report.hyperbolic_diameter_bound = cap_hyperbolic_diameter_bound(domain, set);

    constexpr double kRel = 1e-12;
    const auto le = [](double x, double y) { return x <= y * (1.0 + kRel); };
    double k0 = 0.0;
    double k1 = 0.0;
    bool ok = true;
    for (const CapacityBound& b : report.bounds) {
        if (b.kind == BoundKind::Kappa0)
            k0 = b.value;
        if (b.kind == BoundKind::Kappa1)
            k1 = b.value;
        if (report.exact)
            ok = ok && le(b.value, *report.exact);
    }
    const double hb = *report.hyperbolic_diameter_bound;
    ok = ok && le(k0, hb);
    if (domain.is_convex())
        ok = ok && le(k0, k1) && le(k1, hb);
    if (report.exact)
        ok = ok && le(hb, *report.exact);
    report.ordering_ok = ok;
    return report;
}

}  // namespace hkappa
