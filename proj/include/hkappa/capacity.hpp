#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "hkappa/domain.hpp"
#include "hkappa/point_set.hpp"

namespace hkappa {

/// Closed segment [a, b] (a continuum E).
struct Segment {
    Complex a;
    Complex b;
};

using SetDescriptor = std::variant<PointSet, Segment>;

enum class BoundKind {
    Kappa0,        // Phi(kappa0 J), any simply connected domain
    Kappa1,        // Phi(kappa1 J), convex domains
    Exact,         // closed-form capacity where a conformal reduction is implemented
    Teichmuller,   // symmetrization bound tau2(a/(b-a)) for [a, b] on the axis of a strip
    HalfPlaneSymmetrization,  // Phi(log(b/a)) for the same condensers
};

std::string_view bound_kind_name(BoundKind kind) noexcept;

/// Lower end of the proven range for the simply connected constant.
inline constexpr double kKappa0 = 0.25;

/// Enclosure of kappa(D) = kappa(H); bounds use the lower endpoint.
inline constexpr double kKappa1Lower = 0.8750987500;
inline constexpr double kKappa1Upper = 0.8750987501;

struct CapacityBound {
    ModelDomain domain;
    SetDescriptor set;
    BoundKind kind;
    double value;
    double J_value;
};

/// d(E) and d(E, boundary) for a segment or a point set.
double set_diameter(const SetDescriptor& set);
double set_boundary_distance(const ModelDomain& domain, const SetDescriptor& set);
double J_functional(const ModelDomain& domain, const SetDescriptor& set);

CapacityBound cap_lower_bound(const ModelDomain& domain, const SetDescriptor& set, BoundKind kind);

/// 2 pi / mu(r): capacity of the Groetzsch ring D \ [0, r].
double cap_groetzsch(double r);

/// Exact capacity of (Strip(1), [a, b]) for real a < b.
double cap_strip_segment_exact(double a, double b);

/// Phi(h(E)); a segment is represented by 65 equally spaced points.
double cap_hyperbolic_diameter_bound(const ModelDomain& domain, const SetDescriptor& set);

struct CapacityReport {
    std::vector<CapacityBound> bounds;
    std::optional<double> hyperbolic_diameter_bound;
    std::optional<double> exact;
    bool ordering_ok;
};

/// Every bound applicable to the condenser, the exact value when available,
/// and whether kappa0 <= kappa1 <= Phi(h) <= exact holds (with the
/// symmetrization bounds also below the exact value).
CapacityReport capacity_report(const ModelDomain& domain, const SetDescriptor& set);

}  // namespace hkappa
