#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "mpirecon/grid.hpp"

namespace mpirecon {

using Complex = std::complex<double>;

/// Real-to-complex 1D transform of a fixed length. The half spectrum has
/// length/2 + 1 bins. `inverse` is normalized so that inverse(forward(x)) == x.
///
/// Plans own scratch buffers, so one instance must not be used from several
/// threads at once.
class RealFft1d {
public:
  explicit RealFft1d(std::size_t length);
  ~RealFft1d();
  RealFft1d(const RealFft1d&) = delete;
  RealFft1d& operator=(const RealFft1d&) = delete;

  std::size_t length() const noexcept { return length_; }
  std::size_t bins() const noexcept { return length_ / 2 + 1; }

  std::vector<Complex> forward(std::span<const double> signal) const;
  std::vector<double> inverse(std::span<const Complex> spectrum) const;

private:
  struct Plans;
  std::size_t length_;
  std::unique_ptr<Plans> plans_;
};

/// Real-to-complex 2D transform on rows x cols, half spectrum of
/// rows x (cols/2 + 1) bins stored row-major.
class RealFft2d {
public:
  RealFft2d(std::size_t rows, std::size_t cols);
  ~RealFft2d();
  RealFft2d(const RealFft2d&) = delete;
  RealFft2d& operator=(const RealFft2d&) = delete;

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t spectrum_size() const noexcept { return rows_ * (cols_ / 2 + 1); }

  std::vector<Complex> forward(std::span<const double> values) const;
  std::vector<double> inverse(std::span<const Complex> spectrum) const;

private:
  struct Plans;
  std::size_t rows_;
  std::size_t cols_;
  std::unique_ptr<Plans> plans_;
};

/// Circular convolution with a fixed kernel image in wrapped layout
/// (zero shift at pixel (0,0)).
class CircularConvolution {
public:
  explicit CircularConvolution(const Image& kernel);

  const GridGeometry& geometry() const noexcept { return geometry_; }
  /// Half spectrum of the kernel.
  std::span<const Complex> spectrum() const noexcept { return spectrum_; }

  Image apply(const Image& input) const;
  /// Correlation with the kernel, the adjoint of apply.
  Image apply_adjoint(const Image& input) const;
  /// apply_adjoint(apply(input)) in a single pair of transforms.
  Image apply_normal(const Image& input) const;

private:
  Image filter(const Image& input, int mode) const;

  GridGeometry geometry_;
  std::shared_ptr<RealFft2d> fft_;
  std::vector<Complex> spectrum_;
};

/// Convolution of images on an inner grid carried out as a circular
/// convolution on a larger grid: the input is zero-extended into the top-left
/// block, convolved and cropped back. With at least size - 1 padding pixels per
/// axis there is no wrap-around and the operator is the "same"-size linear
/// (Toeplitz) convolution; without padding it is plain circular convolution.
class PaddedConvolution {
public:
  /// `kernel` in wrapped layout on the padded grid, which must be at least as
  /// large as `image_grid` along both axes.
  PaddedConvolution(const Image& kernel, const GridGeometry& image_grid);

  const GridGeometry& geometry() const noexcept { return image_grid_; }
  std::size_t pad_rows() const noexcept { return circular_.geometry().rows - image_grid_.rows; }
  std::size_t pad_cols() const noexcept { return circular_.geometry().cols - image_grid_.cols; }

  Image apply(const Image& input) const;
  Image apply_adjoint(const Image& input) const;
  Image apply_normal(const Image& input) const;

private:
  Image embed(const Image& input) const;
  Image crop(const Image& padded) const;

  GridGeometry image_grid_;
  CircularConvolution circular_;
};

/// Full complex DFT (forward, unnormalized). Reference transform for tests
/// and for inspecting imaginary residues.
std::vector<Complex> complex_dft(std::span<const Complex> input);

}  // namespace mpirecon
