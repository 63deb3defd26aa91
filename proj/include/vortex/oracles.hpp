#pragma once

#include "vortex/midpoint.hpp"

namespace vortex {

/// High-accuracy reference solvers used as ground truth in error sweeps.
struct ReferenceConfig {
  double dt_ref = 0.0;   // 0 selects t/100 at call time
  bool dealias = true;   // 2/3-rule on the advection product
  double mean_tol = default_mean_tol;

  void validate() const;
  /// Sub-step count for an integration to time t; enforces dt <= t/10.
  int substeps(double t) const;
};

/// Euler flow phi_{E,t}: pseudo-spectral method of lines, classical RK4 in
/// time, 2/3 dealiasing of the advection product. Aborts with BlowUpError if
/// the sup norm doubles (under-resolution guard).
RealField exact_flow(const RealField& omega0, double t, const ReferenceConfig& cfg);

/// Frozen flow phi_{F,t}: psi solves Delta psi = omega0 once; characteristics
/// dX/ds = J grad psi(X) are integrated per node with RK4 and the initial
/// vorticity interpolant is evaluated at the endpoints.
RealField frozen_flow(const RealField& omega0, double t, const ReferenceConfig& cfg);

}  // namespace vortex
