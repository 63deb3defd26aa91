#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vortex/midpoint.hpp"

namespace vortex {

/// One scheme run: freeze psi from the current vorticity, midpoint-map the
/// grid, resample the vorticity interpolant at the mapped points.
struct SchemeConfig {
  double tau = 0.0;
  double t_final = 0.0;
  FixedPointConfig fixed_point;
  bool recenter = true;
  double mean_tol = default_mean_tol;
  double sigma = 2.0;      // extra monitored Sobolev index (the "hs" column)
  int snapshot_every = 0;  // 0 disables snapshots

  void validate() const;
};

struct SchemeState {
  RealField omega;
  int step_index = 0;
  double time = 0.0;
};

struct StepStats {
  double mean_drift = 0.0;     // grid mean removed by re-centering
  double margin = 0.0;         // contraction margin used for the step
  int fp_max_iters = 0;
  double fp_max_residual = 0.0;
  int sampler_builds = 0;      // stream functions frozen during the step
};

struct StepResult {
  SchemeState state;
  StepStats stats;
};

struct MonitorRow {
  int step = 0;
  double time = 0.0;
  double mean_drift = 0.0;
  double l2 = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
  double hs = 0.0;
  int fp_max_iters = 0;
  double fp_max_residual = 0.0;
};

/// Trigonometric interpolant of F at an arbitrary point (Nyquist averaged).
double eval_field_offgrid(const SpectralField& F, Vec2 p);

/// One application of the semi-discrete operator. Throws StepRejectedError
/// wrapping NonContractive/NoConvergence diagnostics.
StepResult step(const SchemeState& state, const SchemeConfig& cfg);

struct RunResult {
  SchemeState final_state;
  std::vector<MonitorRow> monitors;  // row 0 is the initial state
  std::vector<std::pair<int, RealField>> snapshots;
};

/// Iterates step until time reaches t_final; omega0 must be zero-mean.
RunResult run(const RealField& omega0, const SchemeConfig& cfg);

}  // namespace vortex
