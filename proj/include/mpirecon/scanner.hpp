#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace mpirecon {

/// FFP scanner description. Field quantities are stored in A/m (i.e. the
/// tesla values of the data sheet divided by mu0), the gradient in A/m per m.
struct ScannerConfig {
  Eigen::Vector2d gradient{0.0, 0.0};           // diagonal of G
  Eigen::Vector2d drive_amplitudes{0.0, 0.0};   // A/m
  Eigen::Vector2d drive_frequencies{0.0, 0.0};  // Hz
  double excitation_amplitude = 0.0;            // A/m, along x
  double excitation_frequency = 0.0;            // Hz
  double sample_rate = 0.0;                     // Hz
  double repetition_time = 0.0;                 // s
  Eigen::Matrix2d sensitivity = Eigen::Matrix2d::Identity();

  /// Bruker preclinical scanner: mu0 G = diag(-1, -1) T/m, 12 mT drive
  /// amplitudes, 2.5 MHz / (102, 96) drive frequencies, 1632 samples per
  /// 6.528e-4 s repetition.
  static ScannerConfig bruker_preclinical();

  void validate() const;
  /// Number of samples in one repetition period, sample_rate * repetition_time.
  std::size_t samples_per_period() const;
  /// Drive amplitudes converted to position space, A / |G| per axis (m).
  Eigen::Vector2d position_amplitudes() const;
  double excitation_position_amplitude() const;
  /// Half extent of the region the FFP can reach (m).
  Eigen::Vector2d fov_half_extent() const;
};

enum class TrajectorySource { analytic, sampled };

struct Trajectory {
  std::vector<double> times;                // s
  std::vector<Eigen::Vector2d> positions;   // m
  std::vector<Eigen::Vector2d> velocities;  // m/s
  TrajectorySource source = TrajectorySource::analytic;

  std::size_t size() const noexcept { return times.size(); }
  void validate() const;
};

/// r(t) = (a_x cos(2 pi f_x t), a_y cos(2 pi f_y t)) sampled uniformly over
/// one repetition period, with analytic velocities.
Trajectory lissajous(const ScannerConfig& config, std::size_t sample_count);

/// r_x(t) = a_x sin(2 pi f_x t) + a_e sin(2 pi f_e t), r_y(t) = a_y sin(2 pi f_y t).
Trajectory excited_trajectory(const ScannerConfig& config, std::size_t sample_count);

/// Velocities by forward differences; the last sample repeats the previous
/// velocity.
Trajectory trajectory_from_samples(std::vector<Eigen::Vector2d> positions,
                                   std::vector<double> times);

/// Keeps samples 0, k, 2k, ... with their already computed velocities.
Trajectory decimate(const Trajectory& trajectory, std::size_t keep_every);

/// Applied field G (x - r(t)) in A/m.
Eigen::Vector2d field_at(const ScannerConfig& config, const Eigen::Vector2d& x,
                         std::size_t t_index, const Trajectory& trajectory);

/// CSV with header `t,x,y` or `t,x,y,vx,vy`, SI units. Missing velocities are
/// computed by forward differences.
Trajectory read_trajectory_csv(std::istream& in);
Trajectory read_trajectory_csv(const std::string& path);
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);
void write_trajectory_csv(const std::string& path, const Trajectory& trajectory);

}  // namespace mpirecon
