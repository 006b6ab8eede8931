#include "hkappa/simd/kernels.hpp"

#include <algorithm>

namespace hkappa::simd::scalar {

namespace {

template <class Pair>
PairMax scan(std::size_t n, Pair pair)
{
    PairMax best;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double v;
            if (!pair(i, j, v))
                continue;
            if (!best.found || v > best.value)
                best = PairMax{v, i, j, true};
        }
    }
    return best;
}

PairMax max_sq_distance(std::span<const double> x, std::span<const double> y)
{
    return scan(x.size(), [&](std::size_t i, std::size_t j, double& v) {
        const double dx = x[i] - x[j];
        const double dy = y[i] - y[j];
        v = dx * dx + dy * dy;
        return true;
    });
}

PairMax max_halfplane_ratio(std::span<const double> x, std::span<const double> y)
{
    return scan(x.size(), [&](std::size_t i, std::size_t j, double& v) {
        const double dx = x[i] - x[j];
        const double dy = y[i] - y[j];
        const double sy = y[i] + y[j];
        const double dx2 = dx * dx;
        v = (dx2 + dy * dy) / (dx2 + sy * sy);
        return true;
    });
}

PairMax max_disk_ratio(std::span<const double> x, std::span<const double> y)
{
    return scan(x.size(), [&](std::size_t i, std::size_t j, double& v) {
        const double dx = x[i] - x[j];
        const double dy = y[i] - y[j];
        const double re = 1.0 - (x[j] * x[i] + y[j] * y[i]);
        const double im = x[j] * y[i] - y[j] * x[i];
        v = (dx * dx + dy * dy) / (re * re + im * im);
        return true;
    });
}

PairMax max_constrained_diameter(const ConstrainedInput& in)
{
    const auto& x = in.x;
    const auto& y = in.y;
    const auto& apex = in.apex;
    return scan(x.size(), [&](std::size_t i, std::size_t j, double& v) {
        const double dx = x[i] - x[j];
        const double dy = y[i] - y[j];
        const double sy = y[i] + y[j];
        const double dx2 = dx * dx;
        const double d2 = dx2 + dy * dy;
        const double conj2 = dx2 + sy * sy;
        if (!(d2 <= in.limit * conj2))
            return false;
        v = std::max(d2, std::max(apex[i], apex[j]));
        return true;
    });
}

}  // namespace

const KernelTable& table()
{
    static const KernelTable t{Backend::Scalar, &max_sq_distance, &max_halfplane_ratio,
                               &max_disk_ratio, &max_constrained_diameter};
    return t;
}

}  // namespace hkappa::simd::scalar
