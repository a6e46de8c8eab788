#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mpirecon/grid.hpp"
#include "mpirecon/interpolation.hpp"
#include "mpirecon/physics.hpp"
#include "mpirecon/scanner.hpp"

namespace mpirecon {

/// Matrix-valued field A(x) on a grid, stored one image per populated entry.
/// Partial fields hold whole rows only.
class CoreOperatorField {
public:
  CoreOperatorField() = default;
  CoreOperatorField(const GridGeometry& geometry, int dimension);

  const GridGeometry& geometry() const noexcept { return geometry_; }
  int dimension() const noexcept { return dimension_; }
  const std::vector<int>& populated_rows() const noexcept { return rows_; }

  bool has(int row, int col) const;
  const Image& entry(int row, int col) const;
  /// Inserts or replaces a full row of entries; images must share the geometry.
  void set_row(int row, std::vector<Image> entries);

  const std::map<std::pair<int, int>, Image>& entries() const noexcept { return entries_; }

private:
  GridGeometry geometry_{};
  int dimension_ = 0;
  std::vector<int> rows_;
  std::map<std::pair<int, int>, Image> entries_;
};

/// Per-channel time series on a shared time base.
struct ScanSignal {
  std::vector<double> times;
  std::vector<std::vector<double>> channels;
  double sample_rate = 0.0;

  std::size_t length() const noexcept { return times.size(); }
  std::size_t channel_count() const noexcept { return channels.size(); }
  void validate() const;
};

/// A_h[rho] = K_h * rho for every kernel entry. The convolution is circular
/// on the image grid and includes the pixel area, so it approximates the
/// continuous integral. The grid must cover the scanner's FFP range.
CoreOperatorField core_operator(const Image& rho, const KernelSpec& spec,
                                const ScannerConfig& config);

/// Signal s_k = I[A](r_k) v_k, channel i reading row i of A.
ScanSignal simulate_signal(const CoreOperatorField& field, const Trajectory& trajectory,
                           InterpolationKind interpolation);
ScanSignal simulate_signal(const Image& rho, const Trajectory& trajectory, const KernelSpec& spec,
                           const ScannerConfig& config, InterpolationKind interpolation);

/// Circular convolution of every channel with a periodic filter kernel in the
/// Fourier domain. Either one kernel for all channels or one per channel.
ScanSignal apply_analog_filter(const ScanSignal& signal,
                               const std::vector<std::vector<double>>& kernels);

/// White Gaussian noise with standard deviation relative_level * RMS(channel).
ScanSignal add_noise(const ScanSignal& signal, double relative_level, std::uint64_t seed);

double rms(const std::vector<double>& values);

/// CSV `t,s_x[,s_y]`.
ScanSignal read_signal_csv(std::istream& in);
ScanSignal read_signal_csv(const std::string& path);
void write_signal_csv(std::ostream& out, const ScanSignal& signal);
void write_signal_csv(const std::string& path, const ScanSignal& signal);

}  // namespace mpirecon
