#pragma once

// Pairwise reduction kernels behind the set functionals and the brute-force
// extremal search. Each kernel has a scalar reference and, where the CPU
// supports it, an AVX2 variant; both perform the same IEEE operations in the
// same order per pair, so results (value and argmax pair) are bit-identical.

#include <cstddef>
#include <span>
#include <string_view>

namespace hkappa::simd {

enum class Backend { Scalar, Avx2 };

/// Maximum of a pair functional over i < j. Ties keep the lexicographically
/// first (i, j). `found` is false when no pair qualifies.
struct PairMax {
    double value = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
    bool found = false;
};

/// Arguments for the constrained diameter search: maximize
/// max(|z_i - z_j|^2, apex_i, apex_j) subject to
/// |z_i - z_j|^2 <= limit * |z_i - conj z_j|^2.
struct ConstrainedInput {
    std::span<const double> x;
    std::span<const double> y;
    std::span<const double> apex;
    double limit;
};

struct KernelTable {
    Backend backend;
    /// max |z_i - z_j|^2
    PairMax (*max_sq_distance)(std::span<const double> x, std::span<const double> y);
    /// max |z_i - z_j|^2 / |z_i - conj z_j|^2 (upper half-plane)
    PairMax (*max_halfplane_ratio)(std::span<const double> x, std::span<const double> y);
    /// max |z_i - z_j|^2 / |1 - conj z_j z_i|^2 (unit disk)
    PairMax (*max_disk_ratio)(std::span<const double> x, std::span<const double> y);
    PairMax (*max_constrained_diameter)(const ConstrainedInput& in);
};

namespace scalar {
const KernelTable& table();
}
#if defined(HKAPPA_WITH_AVX2)
namespace avx2 {
const KernelTable& table();
}
#endif

bool backend_available(Backend backend) noexcept;

/// The kernels used by the library. Defaults to the fastest available
/// backend; the environment variable HKAPPA_SIMD=scalar forces the reference.
const KernelTable& active();

/// Override the active backend (throws InvalidArgument if unavailable).
void set_backend(Backend backend);

/// Kernels of a specific backend (throws InvalidArgument if unavailable).
const KernelTable& table(Backend backend);

std::string_view backend_name(Backend backend) noexcept;

}  // namespace hkappa::simd
