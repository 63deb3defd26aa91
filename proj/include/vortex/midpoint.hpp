#pragma once

#include <string>
#include <vector>

#include "vortex/spectral.hpp"
#include "vortex/trig_eval.hpp"

namespace vortex {

/// Stopping rule for the Picard fixed-point solves.
struct FixedPointConfig {
  double fp_tol = 1e-12;  // sup distance between successive iterates
  int max_iter = 50;

  void validate() const;
};

/// Off-grid evaluator for the frozen velocity J grad psi and its derivatives,
/// built once per stream function and immutable afterwards.
class VelocitySampler {
 public:
  explicit VelocitySampler(const SpectralField& psi_hat);

  /// Builds psi from a zero-mean vorticity field.
  static VelocitySampler from_vorticity(const RealField& omega,
                                        double mean_tol = default_mean_tol);
  static VelocitySampler from_vorticity_spectrum(const SpectralField& omega_hat,
                                                 double mean_tol = default_mean_tol);

  GridSpec spec() const { return spec_; }
  const SpectralField& psi_hat() const { return psi_hat_; }

  /// (dx2 psi, -dx1 psi) at the point the phases were set to.
  Vec2 velocity(const PhasePair& phases) const;
  Vec2 velocity_at(Vec2 p) const;

  /// Hessian of psi, for Jacobians and the Newton gate.
  Mat2 hessian(const PhasePair& phases) const;
  Mat2 hessian_at(Vec2 p) const;

  /// max over grid nodes of the Frobenius norm of the Hessian.
  double hessian_sup_frobenius() const { return hess_sup_; }

 private:
  GridSpec spec_;
  SpectralField psi_hat_;
  HarmonicTable d1_, d2_;        // first derivatives
  HarmonicTable d11_, d12_, d22_;  // second derivatives
  double hess_sup_ = 0.0;
};

/// eval_velocity(sampler, p) = J grad psi (p) by direct trigonometric summation.
inline Vec2 eval_velocity(const VelocitySampler& sampler, Vec2 p) {
  return sampler.velocity_at(p);
}

/// 1 - (|t|/2) * sup-Frobenius of the Hessian; positive margin certifies the
/// Picard iteration contracts on the sampled grid.
double contraction_margin(const VelocitySampler& sampler, double t);

struct MidpointSolve {
  Vec2 point;       // Phi_t(x), unwrapped
  double residual;  // |point - x - t J grad psi((x+point)/2)|
  int iters;
};

/// Solves the implicit midpoint equation y = x + t J grad psi((x+y)/2) by
/// Picard iteration seeded with the explicit Euler point.
MidpointSolve solve_midpoint(const VelocitySampler& sampler, double t, Vec2 x,
                             const FixedPointConfig& cfg);
MidpointSolve solve_midpoint(const VelocitySampler& sampler, double t, Vec2 x,
                             const FixedPointConfig& cfg, PhasePair& scratch);

/// Per-node midpoint map images, stored as displacements Phi_t(x_ij) - x_ij.
struct FlowMap {
  GridSpec spec;
  double t = 0.0;
  std::vector<Vec2> disp;
  std::vector<double> residuals;
  int max_iters = 0;
  double max_residual = 0.0;

  Vec2 displacement(int i, int j) const {
    return disp[static_cast<size_t>(i) * spec.n + j];
  }
  Vec2 node_image(int i, int j) const {
    return spec.node(i, j) + displacement(i, j);
  }
};

/// Midpoint solve at every grid node, in parallel. Throws StepRejected-level
/// errors naming the worst node if any solve fails.
FlowMap flow_map(const VelocitySampler& sampler, double t, const FixedPointConfig& cfg);

/// Closed-form Jacobian D_x Phi_t(x) from the 2x2 identity
/// (I - (t/2) J Y) D Phi = (I + (t/2) J Y), Y the Hessian at the midpoint.
Mat2 flow_jacobian(const VelocitySampler& sampler, double t, Vec2 x,
                   const FixedPointConfig& cfg);

/// Explicit half-step Euler map E_t(x) = x + (t/2) J grad psi(x).
Vec2 euler_forward(const VelocitySampler& sampler, double t, Vec2 x);

/// Implicit half-step map E*_t: solves y = x + (t/2) J grad psi(y).
Vec2 euler_backward(const VelocitySampler& sampler, double t, Vec2 x,
                    const FixedPointConfig& cfg);

/// || d/dt [Phi_{-t} o Phi_t](x) + J grad psi(x) ||, the time derivative taken
/// by a centered difference with h = t/100. Decays like t^2 for smooth psi.
double backflow_velocity_defect(const VelocitySampler& sampler, double t, Vec2 x,
                                const FixedPointConfig& cfg);

}  // namespace vortex
