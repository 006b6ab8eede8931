#include "hkappa/set_functionals.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hkappa/errors.hpp"
#include "hkappa/hyperbolic.hpp"
#include "hkappa/simd/kernels.hpp"

namespace hkappa {

PointSet::PointSet(std::initializer_list<Complex> points) : PointSet(std::vector<Complex>(points)) {}

PointSet::PointSet(std::vector<Complex> points) : points_(std::move(points))
{
    for (const Complex& z : points_)
        if (!is_finite(z))
            throw InvalidArgument("PointSet: points must be finite");
}

PointSet PointSet::with(Complex z) const
{
    std::vector<Complex> pts = points_;
    pts.push_back(z);
    return PointSet(std::move(pts));
}

namespace {

void require_pair(const PointSet& E, const char* what)
{
    if (E.size() < 2)
        throw InvalidArgument(std::string(what) + ": the set needs at least two points");
}

struct Columns {
    std::vector<double> x;
    std::vector<double> y;
};

Columns split(std::span<const Complex> points)
{
    Columns c;
    c.x.reserve(points.size());
    c.y.reserve(points.size());
    for (const Complex& z : points) {
        c.x.push_back(z.real());
        c.y.push_back(z.imag());
    }
    return c;
}

}  // namespace

std::pair<std::size_t, std::size_t> diameter_pair(const PointSet& E)
{
    require_pair(E, "diameter_pair");
    const Columns c = split(E.points());
    const simd::PairMax best = simd::active().max_sq_distance(c.x, c.y);
    return {best.i, best.j};
}

double diam(const PointSet& E)
{
    const auto [i, j] = diameter_pair(E);
    return std::abs(E[i] - E[j]);
}

std::size_t nearest_boundary_index(const ModelDomain& domain, const PointSet& E)
{
    if (E.empty())
        throw InvalidArgument("nearest_boundary_index: empty set");
    std::size_t best = 0;
    double dmin = boundary_distance(domain, E[0]);
    for (std::size_t k = 1; k < E.size(); ++k) {
        const double d = boundary_distance(domain, E[k]);
        if (d < dmin) {
            dmin = d;
            best = k;
        }
    }
    return best;
}

double set_boundary_distance(const ModelDomain& domain, const PointSet& E)
{
    return boundary_distance(domain, E[nearest_boundary_index(domain, E)]);
}

double h_diam(const ModelDomain& domain, const PointSet& E)
{
    require_pair(E, "h_diam");
    std::vector<Complex> model;
    model.reserve(E.size());
    Model kind = Model::HalfPlane;
    for (const Complex& z : E) {
        const ModelPoint m = to_model(domain, z);
        kind = m.model;
        model.push_back(m.point);
    }
    const Columns c = split(model);
    const simd::KernelTable& k = simd::active();
    const simd::PairMax best =
        kind == Model::HalfPlane ? k.max_halfplane_ratio(c.x, c.y) : k.max_disk_ratio(c.x, c.y);
    const Complex p = model[best.i];
    const Complex q = model[best.j];
    return kind == Model::HalfPlane ? h_dist_halfplane(p, q) : h_dist_disk(p, q);
}

double J_functional(const ModelDomain& domain, const PointSet& E)
{
    require_pair(E, "J_functional");
    const double d = diam(E);
    const double dist = set_boundary_distance(domain, E);
    if (!(d > 0.0))
        throw InvalidArgument("J_functional: degenerate set with zero diameter");
    return std::log1p(d / dist);
}

double j_diam(const ModelDomain& domain, const PointSet& E)
{
    require_pair(E, "j_diam");
    std::vector<double> dist(E.size());
    for (std::size_t k = 0; k < E.size(); ++k)
        dist[k] = boundary_distance(domain, E[k]);
    double best = 0.0;
    for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = i + 1; j < E.size(); ++j)
            best = std::max(best, std::log1p(std::abs(E[i] - E[j]) / std::min(dist[i], dist[j])));
    return best;
}

double ratio(const ModelDomain& domain, const PointSet& E)
{
    const double J = J_functional(domain, E);
    return h_diam(domain, E) / J;
}

PointSet reduce_to_triple(const ModelDomain& domain, const PointSet& E)
{
    require_pair(E, "reduce_to_triple");
    const std::size_t k = nearest_boundary_index(domain, E);
    const auto [i, j] = diameter_pair(E);
    return PointSet{E[k], E[i], E[j]};
}

}  // namespace hkappa
