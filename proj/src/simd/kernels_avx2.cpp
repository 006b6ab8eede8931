#include "hkappa/simd/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <array>
#include <limits>

namespace hkappa::simd::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

// Per-lane running maximum with the (i, j) of its first occurrence.
struct LaneBest {
    __m256d value = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
    __m256d i = _mm256_setzero_pd();
    __m256d j = _mm256_setzero_pd();

    void update(__m256d v, __m256d mask, double row, __m256d cols)
    {
        const __m256d better = _mm256_and_pd(mask, _mm256_cmp_pd(v, value, _CMP_GT_OQ));
        value = _mm256_blendv_pd(value, v, better);
        i = _mm256_blendv_pd(i, _mm256_set1_pd(row), better);
        j = _mm256_blendv_pd(j, cols, better);
    }
};

void merge(PairMax& best, double v, std::size_t i, std::size_t j)
{
    if (!best.found || v > best.value ||
        (v == best.value && (i < best.i || (i == best.i && j < best.j))))
        best = PairMax{v, i, j, true};
}

PairMax finish(const LaneBest& lanes, PairMax tail)
{
    alignas(32) std::array<double, kLanes> v, li, lj;
    _mm256_store_pd(v.data(), lanes.value);
    _mm256_store_pd(li.data(), lanes.i);
    _mm256_store_pd(lj.data(), lanes.j);
    PairMax best = tail;
    for (std::size_t k = 0; k < kLanes; ++k) {
        if (v[k] == -std::numeric_limits<double>::infinity())
            continue;
        merge(best, v[k], static_cast<std::size_t>(li[k]), static_cast<std::size_t>(lj[k]));
    }
    return best;
}

// Drives the i < j loop: `vec(i, j)` evaluates columns j..j+3 and returns
// {values, feasibility mask}; `one(i, j, v)` is the scalar form for the tail.
template <class Vec, class One>
PairMax scan(std::size_t n, Vec vec, One one)
{
    LaneBest lanes;
    PairMax tail;
    const __m256d offsets = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i + 1;
        for (; j + kLanes <= n; j += kLanes) {
            const auto [v, mask] = vec(i, j);
            const __m256d cols = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(j)), offsets);
            lanes.update(v, mask, static_cast<double>(i), cols);
        }
        for (; j < n; ++j) {
            double v;
            if (one(i, j, v) && (!tail.found || v > tail.value))
                tail = PairMax{v, i, j, true};
        }
    }
    return finish(lanes, tail);
}

struct Lanes {
    __m256d value;
    __m256d mask;
};

inline __m256d all_lanes()
{
    return _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
}

PairMax max_sq_distance(std::span<const double> x, std::span<const double> y)
{
    return scan(
        x.size(),
        [&](std::size_t i, std::size_t j) {
            const __m256d dx = _mm256_sub_pd(_mm256_set1_pd(x[i]), _mm256_loadu_pd(&x[j]));
            const __m256d dy = _mm256_sub_pd(_mm256_set1_pd(y[i]), _mm256_loadu_pd(&y[j]));
            return Lanes{_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)), all_lanes()};
        },
        [&](std::size_t i, std::size_t j, double& v) {
            const double dx = x[i] - x[j];
            const double dy = y[i] - y[j];
            v = dx * dx + dy * dy;
            return true;
        });
}

PairMax max_halfplane_ratio(std::span<const double> x, std::span<const double> y)
{
    return scan(
        x.size(),
        [&](std::size_t i, std::size_t j) {
            const __m256d xi = _mm256_set1_pd(x[i]);
            const __m256d yi = _mm256_set1_pd(y[i]);
            const __m256d yj = _mm256_loadu_pd(&y[j]);
            const __m256d dx = _mm256_sub_pd(xi, _mm256_loadu_pd(&x[j]));
            const __m256d dy = _mm256_sub_pd(yi, yj);
            const __m256d sy = _mm256_add_pd(yi, yj);
            const __m256d dx2 = _mm256_mul_pd(dx, dx);
            const __m256d num = _mm256_add_pd(dx2, _mm256_mul_pd(dy, dy));
            const __m256d den = _mm256_add_pd(dx2, _mm256_mul_pd(sy, sy));
            return Lanes{_mm256_div_pd(num, den), all_lanes()};
        },
        [&](std::size_t i, std::size_t j, double& v) {
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
    const __m256d one = _mm256_set1_pd(1.0);
    return scan(
        x.size(),
        [&](std::size_t i, std::size_t j) {
            const __m256d xi = _mm256_set1_pd(x[i]);
            const __m256d yi = _mm256_set1_pd(y[i]);
            const __m256d xj = _mm256_loadu_pd(&x[j]);
            const __m256d yj = _mm256_loadu_pd(&y[j]);
            const __m256d dx = _mm256_sub_pd(xi, xj);
            const __m256d dy = _mm256_sub_pd(yi, yj);
            const __m256d re =
                _mm256_sub_pd(one, _mm256_add_pd(_mm256_mul_pd(xj, xi), _mm256_mul_pd(yj, yi)));
            const __m256d im = _mm256_sub_pd(_mm256_mul_pd(xj, yi), _mm256_mul_pd(yj, xi));
            const __m256d num = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
            const __m256d den = _mm256_add_pd(_mm256_mul_pd(re, re), _mm256_mul_pd(im, im));
            return Lanes{_mm256_div_pd(num, den), all_lanes()};
        },
        [&](std::size_t i, std::size_t j, double& v) {
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
    const __m256d limit = _mm256_set1_pd(in.limit);
    return scan(
        x.size(),
        [&](std::size_t i, std::size_t j) {
            const __m256d xi = _mm256_set1_pd(x[i]);
            const __m256d yi = _mm256_set1_pd(y[i]);
            const __m256d yj = _mm256_loadu_pd(&y[j]);
            const __m256d dx = _mm256_sub_pd(xi, _mm256_loadu_pd(&x[j]));
            const __m256d dy = _mm256_sub_pd(yi, yj);
            const __m256d sy = _mm256_add_pd(yi, yj);
            const __m256d dx2 = _mm256_mul_pd(dx, dx);
            const __m256d d2 = _mm256_add_pd(dx2, _mm256_mul_pd(dy, dy));
            const __m256d conj2 = _mm256_add_pd(dx2, _mm256_mul_pd(sy, sy));
            const __m256d ok = _mm256_cmp_pd(d2, _mm256_mul_pd(limit, conj2), _CMP_LE_OQ);
            const __m256d apexes =
                _mm256_max_pd(_mm256_set1_pd(apex[i]), _mm256_loadu_pd(&apex[j]));
            return Lanes{_mm256_max_pd(d2, apexes), ok};
        },
        [&](std::size_t i, std::size_t j, double& v) {
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
    static const KernelTable t{Backend::Avx2, &max_sq_distance, &max_halfplane_ratio,
                               &max_disk_ratio, &max_constrained_diameter};
    return t;
}

}  // namespace hkappa::simd::avx2
