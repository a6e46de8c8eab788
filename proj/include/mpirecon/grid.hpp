#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mpirecon {

/// Regular 2D grid of pixel centers. Rows run along y, columns along x; images
/// are stored row-major. Node (r, c) sits at (origin_x + c*spacing_x,
/// origin_y + r*spacing_y), in meters.
struct GridGeometry {
  std::size_t rows = 0;
  std::size_t cols = 0;
  double origin_x = 0.0;
  double origin_y = 0.0;
  double spacing_x = 0.0;
  double spacing_y = 0.0;

  /// Grid whose outermost nodes lie on the given extent.
  static GridGeometry spanning(std::size_t rows, std::size_t cols, double x_min,
                               double x_max, double y_min, double y_max);

  std::size_t size() const noexcept { return rows * cols; }
  std::size_t index(std::size_t row, std::size_t col) const noexcept {
    return row * cols + col;
  }
  double x(std::size_t col) const noexcept { return origin_x + spacing_x * static_cast<double>(col); }
  double y(std::size_t row) const noexcept { return origin_y + spacing_y * static_cast<double>(row); }
  double x_max() const noexcept { return x(cols - 1); }
  double y_max() const noexcept { return y(rows - 1); }
  double pixel_area() const noexcept { return spacing_x * spacing_y; }

  /// Throws std::invalid_argument on empty grids or non-positive spacing.
  void validate() const;

  bool same_shape(const GridGeometry& other) const noexcept {
    return rows == other.rows && cols == other.cols;
  }
  bool operator==(const GridGeometry&) const = default;
};

/// Scalar field on a GridGeometry.
class Image {
public:
  Image() = default;
  explicit Image(const GridGeometry& geometry, double fill = 0.0);
  Image(const GridGeometry& geometry, std::vector<double> values);

  const GridGeometry& geometry() const noexcept { return geometry_; }
  std::size_t rows() const noexcept { return geometry_.rows; }
  std::size_t cols() const noexcept { return geometry_.cols; }
  std::size_t size() const noexcept { return values_.size(); }

  double& operator()(std::size_t row, std::size_t col) noexcept {
    return values_[geometry_.index(row, col)];
  }
  double operator()(std::size_t row, std::size_t col) const noexcept {
    return values_[geometry_.index(row, col)];
  }
  double& operator[](std::size_t i) noexcept { return values_[i]; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }
  std::vector<double>& storage() noexcept { return values_; }

  double min() const;
  double max() const;
  double sum() const;

  Image& operator+=(const Image& other);
  Image& operator-=(const Image& other);
  Image& operator*=(double factor);

private:
  GridGeometry geometry_{};
  std::vector<double> values_;
};

Image operator+(Image a, const Image& b);
Image operator-(Image a, const Image& b);
Image operator*(double factor, Image a);

double dot(const Image& a, const Image& b);
double norm(const Image& a);

/// Swaps quadrants so the zero-shift pixel (0,0) of a wrapped kernel moves to
/// the image center, and back. `centered` then `uncentered` is the identity.
Image centered(const Image& wrapped);
Image uncentered(const Image& centered_image);

}  // namespace mpirecon
