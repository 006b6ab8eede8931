#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "hkappa/domain.hpp"
#include "hkappa/errors.hpp"
#include "hkappa/extremal.hpp"
#include "hkappa/hyperbolic.hpp"
#include "hkappa/set_functionals.hpp"
#include "sampling.hpp"

using namespace hkappa;
using doctest::Approx;

namespace {

const ModelDomain H = ModelDomain::upper_halfplane();
constexpr double kKappaH = 0.8750987500145;

PointSet random_set(testing::Sampler& s, std::size_t n)
{
    std::vector<Complex> pts(n);
    for (auto& p : pts)
        p = s.halfplane();
    return PointSet(pts);
}

// Max over pairs by direct enumeration.
template <class F>
double pair_max(const PointSet& E, F f)
{
    double best = 0.0;
    for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = i + 1; j < E.size(); ++j)
            best = std::max(best, f(E[i], E[j]));
    return best;
}

}  // namespace

TEST_CASE("diameter")
{
    CHECK(diam(PointSet{0.0, 1.0}) == 1.0);
    CHECK(diam(PointSet{kI, kI}) == 0.0);
    CHECK_THROWS_AS(diam(PointSet{kI}), InvalidArgument);
    CHECK_THROWS_AS(PointSet({kI, Complex{NAN, 0.0}}), InvalidArgument);
    const auto T = extremal_triple(0.4);
    CHECK(diam(T.points) == Approx(2 * std::exp(T.t) * std::sin(T.theta)).epsilon(1e-13));
    CHECK(diam(T.points) == Approx(chi(0.4)).epsilon(1e-12));
    // First pair wins on ties.
    const auto pair = diameter_pair(PointSet{0.0, 1.0, 2.0, 3.0, 0.0});
    CHECK(pair.first == 0);
    CHECK(pair.second == 3);
}

TEST_CASE("boundary distance of a set")
{
    CHECK(set_boundary_distance(H, PointSet{kI, 2.0 * kI}) == 1.0);
    CHECK(set_boundary_distance(ModelDomain::slit_plane(), PointSet{1.0, Complex{2.0, 1.0}}) == 1.0);
    for (double u : {0.05, 0.4, 1.0, 3.0})
        CHECK(set_boundary_distance(H, extremal_triple(u).points) == Approx(1.0).epsilon(1e-15));
    CHECK(nearest_boundary_index(H, PointSet{2.0 * kI, kI, kI}) == 1);
    CHECK_THROWS_AS(set_boundary_distance(H, PointSet{kI, -kI}), DomainError);
}

TEST_CASE("hyperbolic diameter")
{
    CHECK(h_diam(H, PointSet{kI, 2.0 * kI}) == Approx(std::log(2.0)).epsilon(1e-15));
    for (double u : {0.1, 0.43, 0.8, 2.0})
        CHECK(h_diam(H, extremal_triple(u).points) == Approx(2 * u).epsilon(1e-12));
    testing::Sampler s(37);
    const ModelDomain domains[] = {H, ModelDomain::unit_disk(), ModelDomain::strip(1.0),
                                   ModelDomain::slit_plane()};
    for (const auto& D : domains) {
        for (int k = 0; k < 100; ++k) {
            std::vector<Complex> pts;
            while (pts.size() < 7) {
                const Complex z{s.uniform(-3, 3), s.uniform(-3, 3)};
                if (D.contains(z))
                    pts.push_back(z);
            }
            const PointSet E(pts);
            const double ref = pair_max(E, [&](Complex a, Complex b) { return h_dist_pullback(D, a, b); });
            CHECK(h_diam(D, E) == Approx(ref).epsilon(1e-12));
        }
    }
}

TEST_CASE("J and j diameters")
{
    CHECK(J_functional(H, PointSet{kI, Complex{1.0, 1.0}}) == Approx(std::log(2.0)));
    CHECK(J_functional(ModelDomain::strip(1.0), PointSet{1.0, 2.0}) == Approx(std::log(2.0)));
    CHECK_THROWS_AS(J_functional(H, PointSet{kI, kI}), InvalidArgument);
    CHECK_THROWS_AS(ratio(H, PointSet{kI, kI}), InvalidArgument);
    const double u = 0.3;
    CHECK(J_functional(H, extremal_triple(u).points) == Approx(std::log1p(chi(u))).epsilon(1e-13));

    const PointSet two{Complex{0.2, 0.5}, Complex{1.0, 3.0}};
    CHECK(j_diam(H, two) == Approx(J_functional(H, two)).epsilon(1e-15));
    const PointSet three{kI, 2.0 * kI, Complex{1.0, 1.0}};
    const double jd = pair_max(three, [](Complex a, Complex b) { return j_dist(H, a, b); });
    CHECK(j_diam(H, three) == jd);
    CHECK(jd >= J_functional(H, three) / 2);
    CHECK(jd <= J_functional(H, three));
    CHECK(j_diam(H, PointSet{kI, kI, 3.0 * kI}) == j_diam(H, PointSet{kI, 3.0 * kI}));
}

TEST_CASE("ratio examples")
{
    const PointSet w{1.0, Complex{2.121820474, 1.198476681}, Complex{2.121820474, -1.198476681}};
    CHECK(ratio(ModelDomain::slit_plane(), w) == Approx(0.4251604).epsilon(1e-6 / 0.4251604));
    CHECK(ratio(H, extremal_triple(0.432335123777).points) == Approx(kKappaH).epsilon(1e-11));
    // On the vertical ray h = J = log y, so the two-point infimum 1 is attained.
    for (double y : {1.5, 1e1, 1e3, 1e6, 1e12})
        CHECK(ratio(H, PointSet{kI, y * kI}) == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("monotone under supersets")
{
    testing::Sampler s(41);
    for (int k = 0; k < 500; ++k) {
        PointSet E = random_set(s, 3);
        const PointSet F = E.with(s.halfplane()).with(s.halfplane());
        CHECK(h_diam(H, E) <= h_diam(H, F));
        CHECK(J_functional(H, E) <= J_functional(H, F));
    }
}

TEST_CASE("reduction to three controlling points does not increase the ratio")
{
    testing::Sampler s(43);
    for (int k = 0; k < 50; ++k) {
        const PointSet E = random_set(s, 5);
        const PointSet E0 = reduce_to_triple(H, E);
        CHECK(J_functional(H, E0) == Approx(J_functional(H, E)).epsilon(1e-15));
        CHECK(ratio(H, E) >= ratio(H, E0) * (1 - 1e-15));
    }
}

TEST_CASE("two- and three-point lower bounds on H and D")
{
    testing::Sampler s(47);
    const ModelDomain D = ModelDomain::unit_disk();
    double inf2[2] = {INFINITY, INFINITY}, inf3[2] = {INFINITY, INFINITY};
    for (int k = 0; k < 3000; ++k) {
        const PointSet two = random_set(s, 2);
        const PointSet three = random_set(s, 3);
        const double r2 = ratio(H, two), r3 = ratio(H, three);
        CHECK(r2 >= 1.0 - 1e-12);
        CHECK(r3 >= kKappaH - 1e-9);
        inf2[0] = std::min(inf2[0], r2);
        inf3[0] = std::min(inf3[0], r3);
        const PointSet d2{s.disk(), s.disk()}, d3{s.disk(), s.disk(), s.disk()};
        inf2[1] = std::min(inf2[1], ratio(D, d2));
        inf3[1] = std::min(inf3[1], ratio(D, d3));
    }
    CHECK(inf2[0] <= 2 * inf3[0]);
    CHECK(inf2[1] <= 2 * inf3[1]);
}
