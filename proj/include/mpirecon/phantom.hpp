#pragma once

#include <Eigen/Dense>

#include <string_view>
#include <vector>

#include "mpirecon/grid.hpp"

namespace mpirecon {

enum class PhantomKind { empty, dot, two_bar, snake, disk_cone, snail };

PhantomKind parse_phantom_kind(std::string_view name);
std::string_view to_string(PhantomKind kind);

/// Geometric phantom description. Lengths are in millimeters and positions are
/// relative to `center_mm`, which is itself in grid coordinates.
struct PhantomSpec {
  PhantomKind kind = PhantomKind::empty;
  GridGeometry grid{};
  Eigen::Vector2d center_mm{0.0, 0.0};

  // dot: a disk at center_mm; radius 0 lights the single nearest pixel
  double dot_radius_mm = 0.0;

  // two-bar: two bars parallel to y with an edge-to-edge gap along x
  double bar_gap_mm = 3.0;
  double bar_width_mm = 2.5;
  double bar_lengths_mm[2] = {20.0, 17.5};

  // snake: rods laid end to end along +x, -y, -x, -y, +x, ...; the default
  // order keeps the five rods inside a 24 mm field of view
  double rod_width_mm = 2.5;
  std::vector<double> rod_lengths_mm{20.0, 5.0, 17.5, 8.75, 15.0};

  // disk-cone: disk on top of an isosceles triangle pointing to -y
  double disk_radius_mm = 5.0;
  double cone_height_mm = 10.0;

  // snail: Archimedean spiral stroke
  double spiral_outer_radius_mm = 9.0;
  double spiral_turns = 2.5;
  double spiral_width_mm = 1.5;

  void validate() const;
};

/// Binary rasterization: a pixel is 1 when its center lies inside the shape.
/// Throws std::out_of_range when the shape leaves the grid.
Image generate_phantom(const PhantomSpec& spec);

}  // namespace mpirecon
