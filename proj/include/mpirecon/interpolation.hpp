#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <string_view>

#include "mpirecon/grid.hpp"

namespace mpirecon {

/// Separable interpolation between the four nodes of the grid cell holding a
/// point. `cosine` weights the fractional offset a in [0,1] with
/// (1 - cos(pi a)) / 2; `bilinear` uses a directly.
enum class InterpolationKind { cosine, bilinear };

InterpolationKind parse_interpolation_kind(std::string_view name);
std::string_view to_string(InterpolationKind kind);

/// Node indices (into the row-major image) and weights of one query point.
/// Weights are nonnegative and sum to 1.
struct InterpolationStencil {
  std::array<std::size_t, 4> index{};
  std::array<double, 4> weight{};
};

/// Points within `hull_tolerance` spacings outside the node hull are clamped
/// onto it; points further out throw std::out_of_range.
inline constexpr double kHullTolerance = 1e-9;

bool inside_hull(const GridGeometry& grid, const Eigen::Vector2d& point,
                 double tolerance = kHullTolerance);

InterpolationStencil interpolation_stencil(const GridGeometry& grid, const Eigen::Vector2d& point,
                                           InterpolationKind kind);

double interpolate(const Image& field, const Eigen::Vector2d& point, InterpolationKind kind);

/// Sparse increment produced by the adjoint: `value` scattered onto the
/// stencil nodes with the interpolation weights.
struct GridIncrement {
  std::array<std::size_t, 4> index{};
  std::array<double, 4> value{};

  void add_to(Image& image) const {
    for (int i = 0; i < 4; ++i) image[index[i]] += value[i];
  }
};

GridIncrement interpolation_adjoint(const GridGeometry& grid, const Eigen::Vector2d& point,
                                    double value, InterpolationKind kind);

}  // namespace mpirecon
