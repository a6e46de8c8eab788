#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstddef>
#include <string_view>
#include <vector>

#include "mpirecon/cg.hpp"
#include "mpirecon/forward.hpp"
#include "mpirecon/grid.hpp"
#include "mpirecon/interpolation.hpp"
#include "mpirecon/scanner.hpp"

namespace mpirecon {

/// Boundary handling of the 5-point Laplacian. `replicate` mirrors the edge
/// value outward (Neumann), `zero` pads with zeros (Dirichlet).
enum class LaplacianBoundary { replicate, zero };

LaplacianBoundary parse_laplacian_boundary(std::string_view name);

/// 5-point Laplacian with spacing-aware weights. Requires at least 3x3 nodes.
Image laplacian_apply(const Image& field, LaplacianBoundary boundary = LaplacianBoundary::replicate);

/// The same operator as a sparse matrix on row-major pixel vectors.
Eigen::SparseMatrix<double> laplacian_matrix(const GridGeometry& grid, LaplacianBoundary boundary);

struct CoreStageConfig {
  double gamma = 1e-7;
  double cg_tolerance = 1e-3;
  std::size_t cg_max_iterations = 10000;
  GridGeometry grid{};
  std::vector<int> rows{0, 1};
  LaplacianBoundary boundary = LaplacianBoundary::replicate;

  void validate() const;
};

/// Time samples (s_k, r_k, v_k). `channel_rows[i]` names the operator row that
/// channel i measures, so single-channel data can say it holds row 0.
struct SampleSet {
  std::vector<Eigen::Vector2d> positions;
  std::vector<Eigen::Vector2d> velocities;
  std::vector<std::vector<double>> channels;
  std::vector<int> channel_rows;

  std::size_t size() const noexcept { return positions.size(); }
  void validate() const;
};

/// Pairs a signal with its trajectory. Channel i measures row channel_rows[i]
/// (default: row i).
SampleSet make_samples(const ScanSignal& signal, const Trajectory& trajectory,
                       std::vector<int> channel_rows = {});

/// Normal equations of the Core Stage functional for one operator row:
///
///   ((1/L) sum_k J_k^T J_k + gamma * area * D^T D) a = (1/L) sum_k J_k^T s_k
///
/// where a stacks the row's n entry images, J_k interpolates them at r_k and
/// contracts with v_k, and D is the Laplacian applied to each entry. The
/// regularizer is the discretized integral of |Laplacian|^2, hence the pixel
/// area factor. Samples outside the grid hull are dropped and counted.
class CoreStageSystem {
public:
  CoreStageSystem(const SampleSet& samples, int row, const CoreStageConfig& config,
                  InterpolationKind interpolation);

  const Eigen::SparseMatrix<double>& normal_matrix() const noexcept { return normal_; }
  const Eigen::VectorXd& rhs() const noexcept { return rhs_; }
  std::size_t unknowns() const noexcept { return static_cast<std::size_t>(rhs_.size()); }
  std::size_t used_samples() const noexcept { return used_; }
  std::size_t dropped_samples() const noexcept { return dropped_; }

  void apply(const Eigen::VectorXd& in, Eigen::VectorXd& out) const { out.noalias() = normal_ * in; }

  /// Value of the functional (data term plus regularizer) at a stacked row.
  double objective(const Eigen::VectorXd& row_entries) const;

private:
  Eigen::SparseMatrix<double> normal_;
  Eigen::VectorXd rhs_;
  double data_constant_ = 0.0;  // (1/L) sum_k s_k^2
  std::size_t used_ = 0;
  std::size_t dropped_ = 0;
};

struct CoreRowReport {
  int row = 0;
  CgReport cg;
};

struct CoreStageResult {
  CoreOperatorField field;
  std::vector<CoreRowReport> rows;
  std::size_t dropped_samples = 0;
};

/// Reconstructs the requested rows of the core operator; rows are solved
/// independently. Non-convergence is reported in the result, not thrown.
CoreStageResult solve_core_stage(const SampleSet& samples, const CoreStageConfig& config,
                                 InterpolationKind interpolation = InterpolationKind::cosine);

/// Pixel-wise sum of the diagonal entries.
Image extract_trace(const CoreOperatorField& field);
Image extract_entry(const CoreOperatorField& field, int row, int col);

}  // namespace mpirecon
