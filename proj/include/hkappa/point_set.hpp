#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hkappa/types.hpp"

namespace hkappa {

/// Finite ordered list of points (the compact set E of the set functionals).
/// Order is significant only for tie-breaking: the first qualifying pair wins.
class PointSet {
public:
    PointSet() = default;
    PointSet(std::initializer_list<Complex> points);
    explicit PointSet(std::vector<Complex> points);

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const Complex& operator[](std::size_t i) const { return points_[i]; }
    std::span<const Complex> points() const noexcept { return points_; }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    PointSet with(Complex z) const;

private:
    std::vector<Complex> points_;
};

}  // namespace hkappa
