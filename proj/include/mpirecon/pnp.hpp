#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mpirecon/cg.hpp"
#include "mpirecon/denoisers.hpp"
#include "mpirecon/fft.hpp"
#include "mpirecon/grid.hpp"

namespace mpirecon {

struct PnPConfig {
  double nu0 = 1e-5;
  std::size_t n_iterations = 10;
  double trim_percentile = 5.0;
  double cg_tolerance = 1e-3;
  std::size_t cg_max_iterations = 10000;
  DenoiserRef denoiser{};

  void validate() const;
};

struct TikhonovResult {
  Image rho;
  CgReport cg;
};

/// argmin |u - C rho|^2 + nu |rho - rho2|^2 by CG on
/// (C^T C + nu I) rho = C^T u + nu rho2, started at rho2. The stopping test
/// is relative to the initial residual, i.e. the gradient norm at rho2.
TikhonovResult tikhonov_step(const Image& u, const Image& rho2, double nu,
                             const PaddedConvolution& blur, double cg_tolerance,
                             std::size_t cg_max_iterations);

/// Population standard deviation of the pixel values.
double estimate_noise(const Image& image);

/// p-th percentile with linear interpolation between order statistics
/// (position p/100 * (N - 1) in the sorted values).
double percentile_value(std::span<const double> values, double percentile);

/// Raises every value below the p-th percentile to the percentile.
Image percentile_trim(const Image& image, double percentile);

/// Record of one PnP iteration k.
struct PnPIteration {
  std::size_t k = 0;
  double nu = 0.0;       // coupling used in the Tikhonov step
  double sigma = 0.0;    // noise level estimated from the trimmed iterate
  double nu_next = 0.0;  // lambda / sigma^2
  double lambda = 0.0;
  std::size_t cg_iterations = 0;
  double cg_relative_residual = 0.0;
  bool cg_converged = false;
};

struct PnPResult {
  Image rho;
  double lambda = 0.0;
  std::vector<PnPIteration> iterations;
  /// Set when a noise estimate of zero stopped the loop.
  bool terminated_early = false;
};

/// ZeroShot plug-and-play deconvolution by half-quadratic splitting:
///
///   rho2 = 0, nu = nu0
///   repeat n_iterations times:
///     rho1  = tikhonov_step(u, rho2, nu)
///     rho1  = percentile_trim(rho1)
///     sigma = estimate_noise(rho1)
///     lambda = nu0 sigma^2              (first iteration only)
///     rho2  = denoise(rho1, sigma)
///     nu    = lambda / sigma^2
///
/// `kernel` is in wrapped layout, either of u's shape (circular convolution)
/// or larger (zero-padded convolution, see PaddedConvolution). A zero noise
/// estimate ends the loop and returns the current rho2.
PnPResult zero_shot_pnp(const Image& u, const Image& kernel, const PnPConfig& config);

/// Scales a kernel image to unit sum.
Image normalize_kernel(const Image& kernel);

}  // namespace mpirecon
