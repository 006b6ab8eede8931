#pragma once

#include <cstddef>
#include <utility>

#include "hkappa/domain.hpp"
#include "hkappa/point_set.hpp"

namespace hkappa {

/// Euclidean diameter d(E); needs at least two points.
double diam(const PointSet& E);

/// Indices of the first pair realizing d(E).
std::pair<std::size_t, std::size_t> diameter_pair(const PointSet& E);

/// d(E, boundary): minimum boundary distance over the points.
double set_boundary_distance(const ModelDomain& domain, const PointSet& E);

/// Index of the first point realizing d(E, boundary).
std::size_t nearest_boundary_index(const ModelDomain& domain, const PointSet& E);

/// Hyperbolic diameter h(E) = max pairwise hyperbolic distance.
double h_diam(const ModelDomain& domain, const PointSet& E);

/// J(E) = log(1 + d(E)/d(E, boundary)). Throws InvalidArgument when d(E) = 0.
double J_functional(const ModelDomain& domain, const PointSet& E);

/// Diameter of E in the distance-ratio metric j.
double j_diam(const ModelDomain& domain, const PointSet& E);

/// h(E) / J(E).
double ratio(const ModelDomain& domain, const PointSet& E);

/// {nearest point to the boundary, first diameter pair}: the three points that
/// control J(E). Duplicates are kept when the nearest point is in the pair.
PointSet reduce_to_triple(const ModelDomain& domain, const PointSet& E);

}  // namespace hkappa
