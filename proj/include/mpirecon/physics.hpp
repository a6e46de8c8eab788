#pragma once

#include <Eigen/Dense>

#include "mpirecon/grid.hpp"

namespace mpirecon {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kVacuumPermeability = 4.0e-7 * kPi;  // H/m
inline constexpr double kBoltzmann = 1.38064852e-23;         // J/K
inline constexpr double kDefaultTaylorCutoff = 1e-4;

/// Langevin function L(z) = coth(z) - 1/z. Below `taylor_cutoff` the series
/// z/3 - z^3/45 + 2z^5/945 is used.
double langevin(double z, double taylor_cutoff = kDefaultTaylorCutoff);

/// L'(z) = 1/z^2 - 1/sinh^2(z); series 1/3 - z^2/15 + 2z^4/189 below the cutoff.
double langevin_prime(double z, double taylor_cutoff = kDefaultTaylorCutoff);

/// L(z)/z, continuous at zero with value 1/3.
double langevin_over_z(double z, double taylor_cutoff = kDefaultTaylorCutoff);

struct ParticleModel {
  double temperature = 293.0;                 // K
  double saturation_magnetization = 4.74e5;   // J/(m^3 T)
  double core_diameter = 21e-9;               // m
  double boltzmann_constant = kBoltzmann;     // J/K
  double vacuum_permeability = kVacuumPermeability;  // H/m

  void validate() const;
};

/// Saturation field kT / (mu0 Msat (pi/6) d^3), in A/m.
double hsat(const ParticleModel& model);

struct KernelSpec {
  double h = 0.0;  // resolution parameter, A/m
  int dimension = 2;
  double taylor_cutoff = kDefaultTaylorCutoff;

  void validate() const;
};

/// Matrix MPI kernel K_h(y) = K(y/h)/h for a field-space offset y (A/m).
/// `y` must have `spec.dimension` components.
Eigen::MatrixXd kernel_matrix(const Eigen::VectorXd& y, const KernelSpec& spec);

/// Trace of kernel_matrix: (L'(r) + (n-1) L(r)/r) / h with r = |y|/h.
double trace_kernel(const Eigen::VectorXd& y, const KernelSpec& spec);

/// Single entry (row, col) of kernel_matrix.
double kernel_entry(const Eigen::VectorXd& y, int row, int col, const KernelSpec& spec);

/// Which scalar function of the kernel to discretize.
struct KernelEntry {
  bool is_trace = true;
  int row = 0;
  int col = 0;

  static KernelEntry trace() { return {}; }
  static KernelEntry at(int row, int col) { return {false, row, col}; }
};

/// Samples the selected kernel function at the grid's circular offsets.
///
/// The result has the grid's pixel count and the zero offset at pixel (0,0)
/// (wrapped layout), so it can be fed straight into a circular convolution.
/// Spatial offsets d map to field space through the diagonal gradient,
/// y = G d. On even-sized axes the Nyquist offset is ambiguous in sign; the
/// two candidates are averaged so the image keeps its 180-degree symmetry.
Image discretize_kernel(const GridGeometry& grid, const Eigen::Vector2d& gradient,
                        const KernelSpec& spec, KernelEntry entry);

}  // namespace mpirecon
