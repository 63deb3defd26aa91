#include "vortex/midpoint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "vortex/errors.hpp"
#include "vortex/parallel.hpp"

namespace vortex {

void FixedPointConfig::validate() const {
  if (!(fp_tol > 0.0)) throw ConfigError("fixed_point: fp_tol must be > 0");
  if (max_iter < 1) throw ConfigError("fixed_point: max_iter must be >= 1");
}

VelocitySampler::VelocitySampler(const SpectralField& psi_hat)
    : spec_(psi_hat.spec()), psi_hat_(psi_hat) {
  const SpectralField g1 = derivative(psi_hat_, 0);
  const SpectralField g2 = derivative(psi_hat_, 1);
  d1_ = HarmonicTable(g1);
  d2_ = HarmonicTable(g2);
  const SpectralField h11 = derivative(g1, 0);
  const SpectralField h12 = derivative(g1, 1);
  const SpectralField h22 = derivative(g2, 1);
  d11_ = HarmonicTable(h11);
  d12_ = HarmonicTable(h12);
  d22_ = HarmonicTable(h22);

  const RealField p11 = inverse_transform_unchecked(h11);
  const RealField p12 = inverse_transform_unchecked(h12);
  const RealField p22 = inverse_transform_unchecked(h22);
  double sup = 0.0;
  for (int i = 0; i < spec_.n; ++i)
    for (int j = 0; j < spec_.n; ++j) {
      const double f = std::sqrt(p11(i, j) * p11(i, j) + 2.0 * p12(i, j) * p12(i, j) +
                                 p22(i, j) * p22(i, j));
      sup = std::max(sup, f);
    }
  hess_sup_ = sup;
}

VelocitySampler VelocitySampler::from_vorticity_spectrum(const SpectralField& omega_hat,
                                                         double mean_tol) {
  return VelocitySampler(poisson_inverse_spectral(omega_hat, mean_tol));
}

VelocitySampler VelocitySampler::from_vorticity(const RealField& omega, double mean_tol) {
  return from_vorticity_spectrum(forward_transform(omega), mean_tol);
}

Vec2 VelocitySampler::velocity(const PhasePair& phases) const {
  return {d2_.eval(phases), -d1_.eval(phases)};
}

Vec2 VelocitySampler::velocity_at(Vec2 p) const {
  PhasePair phases(spec_);
  phases.set_point(p);
  return velocity(phases);
}

Mat2 VelocitySampler::hessian(const PhasePair& phases) const {
  const double h11 = d11_.eval(phases);
  const double h12 = d12_.eval(phases);
  const double h22 = d22_.eval(phases);
  return {h11, h12, h12, h22};
}

Mat2 VelocitySampler::hessian_at(Vec2 p) const {
  PhasePair phases(spec_);
  phases.set_point(p);
  return hessian(phases);
}

double contraction_margin(const VelocitySampler& sampler, double t) {
  return 1.0 - 0.5 * std::abs(t) * sampler.hessian_sup_frobenius();
}

namespace {

void require_margin(const VelocitySampler& sampler, double t) {
  const double margin = contraction_margin(sampler, t);
  if (!(margin > 0.0))
    throw NonContractiveError("midpoint solve at t = " + std::to_string(t) +
                              ": contraction margin " + std::to_string(margin) +
                              " is not positive");
}

// Picard loop shared by the midpoint map (rate = t) and the implicit Euler
// half-step (rate = t/2): y <- x + rate * velocity(anchor(y)).
template <typename Anchor>
MidpointSolve picard_solve(const VelocitySampler& sampler, double rate, Vec2 x,
                           const FixedPointConfig& cfg, PhasePair& phases,
                           Anchor&& anchor) {
  phases.set_point(anchor(x));
  Vec2 y = x + rate * sampler.velocity(phases);
  int iters = 1;
  double dist = std::numeric_limits<double>::infinity();
  for (; iters <= cfg.max_iter; ++iters) {
    phases.set_point(anchor(y));
    const Vec2 next = x + rate * sampler.velocity(phases);
    dist = (next - y).sup();
    y = next;
    if (dist <= cfg.fp_tol) break;
  }
  // Residual of the returned iterate, measured directly.
  phases.set_point(anchor(y));
  const Vec2 g = y - x - rate * sampler.velocity(phases);
  const double residual = g.norm();
  if (dist > cfg.fp_tol && residual > cfg.fp_tol)
    throw NoConvergenceError("fixed point did not converge in " +
                             std::to_string(cfg.max_iter) +
                             " iterations (residual " + std::to_string(residual) + ")");
  return {y, residual, iters};
}

}  // namespace

MidpointSolve solve_midpoint(const VelocitySampler& sampler, double t, Vec2 x,
                             const FixedPointConfig& cfg, PhasePair& scratch) {
  cfg.validate();
  require_margin(sampler, t);
  return picard_solve(sampler, t, x, cfg, scratch,
                      [&x](Vec2 y) { return (x + y) * 0.5; });
}

MidpointSolve solve_midpoint(const VelocitySampler& sampler, double t, Vec2 x,
                             const FixedPointConfig& cfg) {
  PhasePair scratch(sampler.spec());
  return solve_midpoint(sampler, t, x, cfg, scratch);
}

FlowMap flow_map(const VelocitySampler& sampler, double t, const FixedPointConfig& cfg) {
  cfg.validate();
  require_margin(sampler, t);
  const GridSpec spec = sampler.spec();
  const int n = spec.n;
  FlowMap fm;
  fm.spec = spec;
  fm.t = t;
  fm.disp.resize(static_cast<size_t>(spec.size()));
  fm.residuals.resize(static_cast<size_t>(spec.size()));
  std::vector<int> iters(static_cast<size_t>(spec.size()), 0);

  parallel_for(0, spec.size(), [&](int first, int last, int) {
    PhasePair phases(spec);
    for (int idx = first; idx < last; ++idx) {
      const Vec2 x = spec.node(idx / n, idx % n);
      try {
        const MidpointSolve s =
            picard_solve(sampler, t, x, cfg, phases,
                         [&x](Vec2 y) { return (x + y) * 0.5; });
        fm.disp[idx] = s.point - x;
        fm.residuals[idx] = s.residual;
        iters[idx] = s.iters;
      } catch (const NoConvergenceError& e) {
        throw NoConvergenceError("node (" + std::to_string(idx / n) + "," +
                                 std::to_string(idx % n) + "): " + e.what());
      }
    }
  });

  for (int idx = 0; idx < spec.size(); ++idx) {
    fm.max_iters = std::max(fm.max_iters, iters[idx]);
    fm.max_residual = std::max(fm.max_residual, fm.residuals[idx]);
  }
  return fm;
}

Mat2 flow_jacobian(const VelocitySampler& sampler, double t, Vec2 x,
                   const FixedPointConfig& cfg) {
  const MidpointSolve s = solve_midpoint(sampler, t, x, cfg);
  const Mat2 hess = sampler.hessian_at((x + s.point) * 0.5);
  const Mat2 jy = symplectic_j() * hess;
  const Mat2 a_plus = Mat2::identity() - jy * (0.5 * t);   // A_t(JY)
  const Mat2 a_minus = Mat2::identity() + jy * (0.5 * t);  // A_{-t}(JY)
  return a_plus.inverse() * a_minus;
}

Vec2 euler_forward(const VelocitySampler& sampler, double t, Vec2 x) {
  return x + (0.5 * t) * sampler.velocity_at(x);
}

Vec2 euler_backward(const VelocitySampler& sampler, double t, Vec2 x,
                    const FixedPointConfig& cfg) {
  cfg.validate();
  require_margin(sampler, t);
  PhasePair phases(sampler.spec());
  return picard_solve(sampler, 0.5 * t, x, cfg, phases, [](Vec2 y) { return y; })
      .point;
}

double backflow_velocity_defect(const VelocitySampler& sampler, double t, Vec2 x,
                                const FixedPointConfig& cfg) {
  if (!(t > 0.0))
    throw std::invalid_argument("backflow_velocity_defect: t must be positive");
  const double h = t / 100.0;
  require_margin(sampler, t + h);
  const Vec2 z = solve_midpoint(sampler, t, x, cfg).point;
  const Vec2 ahead = solve_midpoint(sampler, -(t + h), z, cfg).point;
  const Vec2 behind = solve_midpoint(sampler, -(t - h), z, cfg).point;
  const Vec2 v = (ahead - behind) * (1.0 / (2.0 * h));
  return (v + sampler.velocity_at(x)).norm();
}

}  // namespace vortex
