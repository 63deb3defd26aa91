#include "vortex/oracles.hpp"

#include <cmath>
#include <stdexcept>

#include "vortex/errors.hpp"
#include "vortex/parallel.hpp"

namespace vortex {

void ReferenceConfig::validate() const {
  if (dt_ref < 0.0) throw ConfigError("reference: dt_ref must be >= 0");
  if (!(mean_tol > 0.0)) throw ConfigError("reference: mean_tol must be > 0");
}

int ReferenceConfig::substeps(double t) const {
  const double dt = dt_ref > 0.0 ? std::min(dt_ref, t / 10.0) : t / 100.0;
  return std::max(10, static_cast<int>(std::ceil(t / dt - 1e-9)));
}

namespace {

// d omega_hat / dt for the vorticity equation d_t omega = U(omega).grad omega,
// products formed in physical space, optionally 2/3-dealiased.
SpectralField euler_rhs(const SpectralField& omega_hat, const ReferenceConfig& cfg) {
  SpectralField u1_hat, u2_hat;
  velocity_spectra(omega_hat, u1_hat, u2_hat, 1e300);  // mean gate handled upstream
  const RealField u1 = inverse_transform_unchecked(u1_hat);
  const RealField u2 = inverse_transform_unchecked(u2_hat);
  const RealField w1 = inverse_transform_unchecked(derivative(omega_hat, 0));
  const RealField w2 = inverse_transform_unchecked(derivative(omega_hat, 1));

  RealField product(omega_hat.spec());
  auto out = product.values();
  auto a = u1.values();
  auto b = w1.values();
  auto c = u2.values();
  auto d = w2.values();
  for (size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i] + c[i] * d[i];

  SpectralField rhs = forward_transform(product);
  rhs.raw(0, 0) = 0.0;  // advection of a periodic field has zero mean
  if (cfg.dealias) rhs = dealias_two_thirds(std::move(rhs));
  return rhs;
}

void axpy(SpectralField& y, double alpha, const SpectralField& x) {
  auto yd = y.data();
  auto xd = x.data();
  for (size_t i = 0; i < yd.size(); ++i) yd[i] += alpha * xd[i];
}

}  // namespace

RealField exact_flow(const RealField& omega0, double t, const ReferenceConfig& cfg) {
  cfg.validate();
  if (t < 0.0) throw std::invalid_argument("exact_flow: t must be >= 0");
  if (std::abs(omega0.mean()) > cfg.mean_tol)
    throw MeanNotZeroError("exact_flow: initial mean exceeds tolerance");
  if (t == 0.0) return omega0;

  const double sup0 = omega0.sup_norm();
  const int steps = cfg.substeps(t);
  const double h = t / steps;

  SpectralField w = forward_transform(omega0);
  for (int s = 0; s < steps; ++s) {
    const SpectralField k1 = euler_rhs(w, cfg);
    SpectralField stage = w;
    axpy(stage, 0.5 * h, k1);
    const SpectralField k2 = euler_rhs(stage, cfg);
    stage = w;
    axpy(stage, 0.5 * h, k2);
    const SpectralField k3 = euler_rhs(stage, cfg);
    stage = w;
    axpy(stage, h, k3);
    const SpectralField k4 = euler_rhs(stage, cfg);

    axpy(w, h / 6.0, k1);
    axpy(w, h / 3.0, k2);
    axpy(w, h / 3.0, k3);
    axpy(w, h / 6.0, k4);

    if ((s + 1) % 16 == 0 || s + 1 == steps) {
      const double sup = inverse_transform_unchecked(w).sup_norm();
      if (sup > 2.0 * sup0 && sup0 > 0.0)
        throw BlowUpError("exact_flow: sup norm " + std::to_string(sup) +
                          " doubled the initial " + std::to_string(sup0) +
                          " at step " + std::to_string(s + 1));
    }
  }
  return inverse_transform_unchecked(w);
}

RealField frozen_flow(const RealField& omega0, double t, const ReferenceConfig& cfg) {
  cfg.validate();
  if (t < 0.0) throw std::invalid_argument("frozen_flow: t must be >= 0");
  if (t == 0.0) return omega0;

  const GridSpec spec = omega0.spec();
  const int n = spec.n;
  const SpectralField omega_hat = forward_transform(omega0);
  const VelocitySampler sampler =
      VelocitySampler::from_vorticity_spectrum(omega_hat, cfg.mean_tol);
  const HarmonicTable interpolant(omega_hat);

  const int steps = cfg.substeps(t);
  const double h = t / steps;

  RealField result(spec);
  auto out = result.values();
  parallel_for(0, spec.size(), [&](int first, int last, int) {
    PhasePair phases(spec);
    auto vel = [&](Vec2 p) {
      phases.set_point(p);
      return sampler.velocity(phases);
    };
    for (int idx = first; idx < last; ++idx) {
      Vec2 x = spec.node(idx / n, idx % n);
      for (int s = 0; s < steps; ++s) {
        const Vec2 k1 = vel(x);
        const Vec2 k2 = vel(x + (0.5 * h) * k1);
        const Vec2 k3 = vel(x + (0.5 * h) * k2);
        const Vec2 k4 = vel(x + h * k3);
        x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
      phases.set_point(x);
      out[idx] = interpolant.eval(phases);
    }
  });
  return result;
}

}  // namespace vortex
