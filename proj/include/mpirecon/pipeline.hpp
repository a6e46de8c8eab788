#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mpirecon/config.hpp"
#include "mpirecon/core_stage.hpp"
#include "mpirecon/forward.hpp"
#include "mpirecon/phantom.hpp"
#include "mpirecon/physics.hpp"
#include "mpirecon/pnp.hpp"
#include "mpirecon/scanner.hpp"

namespace mpirecon {

enum class Stage { simulate, preprocess, core, deconvolve };

Stage parse_stage(std::string_view name);
std::string_view to_string(Stage stage);

/// Failure inside one pipeline stage; what() carries the cause only.
class StageError : public std::runtime_error {
public:
  StageError(std::string stage, const std::string& cause)
      : std::runtime_error(cause), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

private:
  std::string stage_;
};

enum class TrajectoryKind { lissajous, excited, file };

struct TrajectorySpec {
  TrajectoryKind kind = TrajectoryKind::lissajous;
  std::size_t samples = 0;  // 0: one sample per scanner clock tick
  std::string file;
};

/// Which kernel the deconvolution uses; `automatic` picks the trace when both
/// diagonal entries are available and K00 otherwise.
enum class DeconvolutionKernel { automatic, trace, k00 };

enum class SweepScore { automatic, dip, residual };

struct PipelineConfig {
  std::vector<Stage> stages{Stage::simulate, Stage::preprocess, Stage::core, Stage::deconvolve};
  std::uint64_t seed = 0;
  std::string out_dir = "out";

  ScannerConfig scanner = ScannerConfig::bruker_preclinical();
  TrajectorySpec trajectory{};
  ParticleModel particle{};
  std::optional<double> hsat_override;  // A/m
  double taylor_cutoff = kDefaultTaylorCutoff;

  GridGeometry grid{};  // reconstruction grid

  PhantomSpec phantom{};  // its grid is filled in per use
  std::string phantom_file;
  std::size_t padding_pixels = 8;
  std::size_t oversample = 1;
  InterpolationKind simulation_interpolation = InterpolationKind::cosine;
  double noise_level = 0.0;

  std::string transfer_function_file;
  std::string snr_file;
  std::vector<double> snr_thresholds;
  bool zero_fill = true;

  CoreStageConfig core{};
  InterpolationKind core_interpolation = InterpolationKind::cosine;
  std::size_t decimate = 1;

  PnPConfig pnp{};
  std::optional<double> deconvolution_hsat;  // A/m
  DeconvolutionKernel kernel = DeconvolutionKernel::automatic;
  /// Zero padding of the deconvolution grid per axis; unset means size - 1,
  /// i.e. exact linear convolution, and 0 gives circular convolution.
  std::optional<std::size_t> deconvolution_padding;

  std::string input_signal;
  std::string input_trajectory;
  std::string input_core_manifest;
  std::string input_image;  // deconvolution input image

  std::vector<std::pair<double, double>> sweep_pairs;  // (h_sat in A/m, nu0)
  SweepScore sweep_score = SweepScore::automatic;

  bool has_stage(Stage s) const;
  double particle_hsat() const;
  double kernel_hsat() const;
  /// Resolved deconvolution kernel for the configured core rows.
  DeconvolutionKernel resolved_kernel() const;
  void validate() const;
};

/// Builds a configuration from a document; every key must be recognized.
PipelineConfig load_pipeline_config(const ConfigDocument& doc);
PipelineConfig load_pipeline_config(const std::string& path);

struct StageTiming {
  std::string stage;
  double seconds = 0.0;
};

struct PipelineResult {
  std::optional<Image> phantom;  // ground truth on the reconstruction grid
  std::optional<ScanSignal> signal;
  std::optional<Trajectory> trajectory;
  std::optional<CoreStageResult> core;
  std::optional<Image> deconvolution_input;
  std::optional<Image> kernel;  // wrapped, dimensionless
  std::optional<PnPResult> pnp;
  std::optional<double> dip_ratio;       // center row of the reconstruction
  std::optional<double> data_residual;   // |u - C rho| / |u|
  std::vector<StageTiming> timings;
  std::vector<std::string> files;        // relative to out_dir
};

struct RunOptions {
  bool write_outputs = true;
};

/// Runs the selected stages in order. Stages whose predecessor did not run in
/// this call read their input from [input] paths or from the default output
/// files already in out_dir. Throws StageError.
PipelineResult run_pipeline(const PipelineConfig& config, RunOptions options = {});

/// Image on the configured reconstruction grid with the configured phantom.
Image reconstruction_phantom(const PipelineConfig& config);

/// Wrapped deconvolution kernel for images on `grid` and the given h (A/m):
/// the dimensionless kernel h*K_h sampled at the pixel offsets, so the zero
/// offset holds n/3 (trace) or 1/3 (K00). The kernel lives on `grid`
/// enlarged by the configured padding. `kind` must be resolved.
Image deconvolution_kernel(const GridGeometry& grid, const PipelineConfig& config, double h,
                           DeconvolutionKernel kind);

/// Deconvolution input as the deconvolve stage would load it from disk.
Image load_deconvolution_input(const PipelineConfig& config);

struct SweepRow {
  double hsat = 0.0;
  double nu0 = 0.0;
  double score = 0.0;
  bool ok = false;
  std::string error;
  std::size_t rank = 0;  // 1-based; failed rows rank last
};

struct SweepResult {
  SweepScore score = SweepScore::dip;
  std::vector<SweepRow> rows;  // in rank order
};

/// Deconvolves `u` once per (h_sat, nu0) pair. Scores are the center-row dip
/// ratio (higher is better) or the relative data residual (lower is better).
/// Failures are recorded per pair.
SweepResult sweep(const Image& u, const PipelineConfig& config,
                  const std::vector<std::pair<double, double>>& pairs);

void write_sweep_csv(std::ostream& out, const SweepResult& result);

/// Runs the configured stages up to the Core Stage (deconvolution excluded),
/// then sweeps the configured pairs and writes sweep.csv.
SweepResult run_sweep(const PipelineConfig& config, RunOptions options = {});

/// Relative data residual |u - C rho| / |u| with C the (padded) convolution.
double data_residual(const Image& u, const Image& kernel, const Image& rho);

}  // namespace mpirecon
