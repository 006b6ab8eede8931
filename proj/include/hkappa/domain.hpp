#pragma once

#include <string>
#include <variant>

#include "hkappa/types.hpp"

namespace hkappa {

namespace kinds {
struct UpperHalfPlane { friend bool operator==(UpperHalfPlane, UpperHalfPlane) = default; };
struct RightHalfPlane { friend bool operator==(RightHalfPlane, RightHalfPlane) = default; };
struct UnitDisk { friend bool operator==(UnitDisk, UnitDisk) = default; };
/// The disk |z - R| < R, tangent to the imaginary axis at 0.
struct ExpandingDisk {
    double radius;
    friend bool operator==(ExpandingDisk, ExpandingDisk) = default;
};
/// |Im z| < half_width.
struct Strip {
    double half_width;
    friend bool operator==(Strip, Strip) = default;
};
/// C minus the closed ray (-inf, 0].
struct SlitPlane { friend bool operator==(SlitPlane, SlitPlane) = default; };
/// D minus the closure of T(right half-plane), T(z) = (z + a)/(1 + a z).
struct KeoghLune {
    double a;
    friend bool operator==(KeoghLune, KeoghLune) = default;
};
}  // namespace kinds

/// Which standard model a domain is conformally pulled back from.
enum class Model { HalfPlane, Disk };

/// A point in a standard model together with |g'(z)| of the chart g: domain -> model.
struct ModelPoint {
    Model model;
    Complex point;
    double scale;
};

/// One of the supported hyperbolic plane domains. Immutable value type.
class ModelDomain {
public:
    using Kind = std::variant<kinds::UpperHalfPlane, kinds::RightHalfPlane, kinds::UnitDisk,
                              kinds::ExpandingDisk, kinds::Strip, kinds::SlitPlane,
                              kinds::KeoghLune>;

    static ModelDomain upper_halfplane() { return ModelDomain(kinds::UpperHalfPlane{}); }
    static ModelDomain right_halfplane() { return ModelDomain(kinds::RightHalfPlane{}); }
    static ModelDomain unit_disk() { return ModelDomain(kinds::UnitDisk{}); }
    static ModelDomain expanding_disk(double radius);
    static ModelDomain strip(double half_width);
    static ModelDomain slit_plane() { return ModelDomain(kinds::SlitPlane{}); }
    static ModelDomain keogh_lune(double a);

    const Kind& kind() const noexcept { return kind_; }

    /// Kind name as used in the JSON descriptor ("UpperHalfPlane", "Strip", ...).
    std::string name() const;

    bool is_convex() const noexcept;
    bool is_simply_connected() const noexcept { return true; }

    /// Open-set membership. Non-finite points are never members.
    bool contains(Complex z) const noexcept;

    /// Whether the closed segment [p, q] lies in the domain.
    bool contains_segment(Complex p, Complex q) const noexcept;

    friend bool operator==(const ModelDomain&, const ModelDomain&) = default;

private:
    explicit ModelDomain(Kind kind) : kind_(kind) {}
    Kind kind_;
};

/// Euclidean distance from an interior point to the boundary.
double boundary_distance(const ModelDomain& domain, Complex z);

/// Map an interior point into the standard model the domain's metric is pulled back from.
ModelPoint to_model(const ModelDomain& domain, Complex z);

/// Hyperbolic density at an interior point.
double rho_density(const ModelDomain& domain, Complex z);

/// Hyperbolic distance: closed form where available, otherwise by inverting the stored map.
double h_dist_pullback(const ModelDomain& domain, Complex z, Complex w);

/// Distance-ratio metric log(1 + |z - w| / min(d(z), d(w))).
double j_dist(const ModelDomain& domain, Complex z, Complex w);

/// Hyperbolic distance in the slit plane via the principal square root.
double h_dist_slitplane(Complex z, Complex w);

}  // namespace hkappa
