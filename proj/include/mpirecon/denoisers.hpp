#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mpirecon/grid.hpp"

namespace mpirecon {

enum class DenoiserKind { gaussian_blur, total_variation, external };

DenoiserKind parse_denoiser_kind(std::string_view name);
std::string_view to_string(DenoiserKind kind);

/// Selects and parameterizes the denoiser plugged into the PnP loop. Noise
/// levels arrive in the normalized [0,1] intensity range.
struct DenoiserRef {
  DenoiserKind kind = DenoiserKind::gaussian_blur;
  /// Gaussian blur standard deviation in pixels per unit noise level.
  double blur_scale = 1.0;
  /// TV weight per squared noise level.
  double tv_scale = 1.0;
  std::size_t tv_iterations = 200;
  /// External denoiser executable and arguments.
  std::vector<std::string> command;
  std::chrono::milliseconds timeout{30000};

  void validate() const;
};

/// Separable Gaussian blur with replicated edges; sigma_pixels = 0 is the
/// identity.
Image gaussian_blur(const Image& image, double sigma_pixels);

/// ROF denoising argmin_u 1/2 |u - f|^2 + weight * TV(u) by Chambolle's dual
/// projection iteration (isotropic TV, forward differences, Neumann edges).
Image tv_denoise(const Image& image, double weight, std::size_t iterations);

/// Discrete isotropic total variation with forward differences.
double total_variation(const Image& image);

/// Wire format of the external denoiser bridge. Little-endian:
///   "ZSPD" | u32 version = 1 | u32 height | u32 width | f64 sigma |
///   height*width f64 pixels, row-major.
/// Requests and responses share the layout.
inline constexpr std::uint32_t kZspdVersion = 1;

struct ZspdMessage {
  std::uint32_t height = 0;
  std::uint32_t width = 0;
  double sigma = 0.0;
  std::vector<double> pixels;
};

std::vector<std::uint8_t> encode_zspd(const ZspdMessage& message);
/// Throws std::runtime_error on a malformed buffer.
ZspdMessage decode_zspd(std::span<const std::uint8_t> bytes);

/// Spawns `command`, writes one request to its stdin and reads one reply from
/// its stdout. Fails on timeout, non-zero exit or a malformed reply.
ZspdMessage run_external_denoiser(const std::vector<std::string>& command,
                                  const ZspdMessage& request, std::chrono::milliseconds timeout);

/// Denoises at noise level `sigma` (in the image's own units). The image is
/// mapped affinely to [0,1] first, sigma with it, and the map is inverted on
/// the result. Constant images are returned unchanged.
Image denoise(const Image& image, double sigma, const DenoiserRef& ref);

}  // namespace mpirecon
