#include "vortex/scheme.hpp"

#include <cmath>
#include <stdexcept>

#include "vortex/errors.hpp"
#include "vortex/parallel.hpp"

namespace vortex {

void SchemeConfig::validate() const {
  if (!(tau > 0.0 && tau < 1.0))
    throw ConfigError("scheme: tau must lie in (0, 1), got " + std::to_string(tau));
  if (!(t_final >= tau))
    throw ConfigError("scheme: t_final must be >= tau");
  if (!(mean_tol > 0.0)) throw ConfigError("scheme: mean_tol must be > 0");
  if (snapshot_every < 0) throw ConfigError("scheme: snapshot_every must be >= 0");
  fixed_point.validate();
}

double eval_field_offgrid(const SpectralField& F, Vec2 p) {
  PhasePair phases(F.spec());
  phases.set_point(p);
  return HarmonicTable(F).eval(phases);
}

StepResult step(const SchemeState& state, const SchemeConfig& cfg) {
  cfg.validate();
  const GridSpec spec = state.omega.spec();
  const int n = spec.n;
  StepStats stats;

  try {
    const SpectralField omega_hat = forward_transform(state.omega);
    const VelocitySampler sampler =
        VelocitySampler::from_vorticity_spectrum(omega_hat, cfg.mean_tol);
    stats.sampler_builds = 1;  // psi frozen exactly once per step

    stats.margin = contraction_margin(sampler, cfg.tau);
    const FlowMap fm = flow_map(sampler, cfg.tau, cfg.fixed_point);
    stats.fp_max_iters = fm.max_iters;
    stats.fp_max_residual = fm.max_residual;

    const HarmonicTable interpolant(omega_hat);
    RealField next(spec);
    auto out = next.values();
    parallel_for(0, spec.size(), [&](int first, int last, int) {
      PhasePair phases(spec);
      for (int idx = first; idx < last; ++idx) {
        phases.set_point(fm.node_image(idx / n, idx % n));
        out[idx] = interpolant.eval(phases);
      }
    });

    stats.mean_drift = next.mean();
    if (cfg.recenter) next -= RealField(spec, stats.mean_drift);

    SchemeState advanced{std::move(next), state.step_index + 1,
                         (state.step_index + 1) * cfg.tau};
    return {std::move(advanced), stats};
  } catch (const NonContractiveError& e) {
    throw StepRejectedError(state.step_index, e.what());
  } catch (const NoConvergenceError& e) {
    throw StepRejectedError(state.step_index, e.what());
  } catch (const MeanNotZeroError& e) {
    throw StepRejectedError(state.step_index, e.what());
  }
}

namespace {

MonitorRow make_row(const SchemeState& s, const StepStats& stats, double sigma) {
  const SpectralField hat = forward_transform(s.omega);
  MonitorRow row;
  row.step = s.step_index;
  row.time = s.time;
  row.mean_drift = stats.mean_drift;
  row.l2 = sobolev_norm(hat, 0.0);
  row.h1 = sobolev_norm(hat, 1.0);
  row.h2 = sobolev_norm(hat, 2.0);
  row.hs = sobolev_norm(hat, sigma);
  row.fp_max_iters = stats.fp_max_iters;
  row.fp_max_residual = stats.fp_max_residual;
  return row;
}

}  // namespace

RunResult run(const RealField& omega0, const SchemeConfig& cfg) {
  cfg.validate();
  if (std::abs(omega0.mean()) > cfg.mean_tol)
    throw MeanNotZeroError("run: initial vorticity mean " +
                           std::to_string(omega0.mean()) + " exceeds tolerance");

  RunResult result;
  SchemeState state{omega0, 0, 0.0};
  result.monitors.push_back(make_row(state, StepStats{}, cfg.sigma));
  if (cfg.snapshot_every > 0) result.snapshots.emplace_back(0, state.omega);

  const double horizon = cfg.t_final * (1.0 - 1e-12);
  while (state.time < horizon) {
    StepResult sr = step(state, cfg);
    state = std::move(sr.state);
    result.monitors.push_back(make_row(state, sr.stats, cfg.sigma));
    if (cfg.snapshot_every > 0 && state.step_index % cfg.snapshot_every == 0)
      result.snapshots.emplace_back(state.step_index, state.omega);
  }
  result.final_state = std::move(state);
  return result;
}

}  // namespace vortex
