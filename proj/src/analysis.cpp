#include "vortex/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "vortex/errors.hpp"

namespace vortex {

double error_norm(const RealField& a, const RealField& b, double sigma) {
  if (!(a.spec() == b.spec()))
    throw std::invalid_argument("error_norm: grid mismatch");
  return sobolev_norm(a - b, sigma);
}

FitResult fit_order(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 3)
    throw std::invalid_argument("fit_order: need at least 3 pairs, got " +
                                std::to_string(pairs.size()));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [tau, err] : pairs) {
    if (!(tau > 0.0) || !(err > 0.0))
      throw std::invalid_argument("fit_order: pairs must be strictly positive");
    const double x = std::log(tau);
    const double y = std::log(err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(pairs.size());
  FitResult fit;
  fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / m;
  double rss = 0;
  for (auto [tau, err] : pairs) {
    const double r = std::log(err) - (fit.intercept + fit.slope * std::log(tau));
    rss += r * r;
  }
  fit.residual = std::sqrt(rss / m);
  return fit;
}

void ExperimentSpec::validate() const {
  if (tau_list.size() < 3)
    throw ConfigError("experiment: tau_list needs >= 3 entries");
  for (size_t i = 0; i < tau_list.size(); ++i) {
    const double tau = tau_list[i];
    if (!(tau > 0.0 && tau < 1.0))
      throw ConfigError("experiment: tau values must lie in (0, 1)");
    if (i > 0 && std::abs(tau_list[i - 1] - 2.0 * tau) > 1e-12 * tau_list[i - 1])
      throw ConfigError("experiment: tau_list must halve at each entry");
  }
  if (!(t_final > 0.0)) throw ConfigError("experiment: t_final must be > 0");
  if (!(sigma >= 0.0)) throw ConfigError("experiment: sigma must be >= 0");
  fixed_point.validate();
  reference.validate();
  ic.validate(grid);
}

double ExperimentSpec::degenerate_floor() const {
  return std::max(100.0 * fixed_point.fp_tol, 1e-8);
}

namespace {

double default_slope_tol(double target_order) {
  return target_order >= 3.0 ? 0.4 : 0.2;
}

std::string format_g(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << v;
  return os.str();
}

OrderReport assemble_report(const ExperimentSpec& spec, const char* law,
                            double target_order,
                            std::vector<std::pair<double, double>> pairs) {
  OrderReport report;
  report.law = law;
  report.sigma = spec.sigma;
  report.pairs = std::move(pairs);
  report.target_order = target_order;
  report.slope_tol =
      spec.slope_tol > 0.0 ? spec.slope_tol : default_slope_tol(target_order);

  const double floor = spec.degenerate_floor();
  std::vector<std::pair<double, double>> fit_pairs;
  for (auto& p : report.pairs) {
    if (p.second >= floor)
      fit_pairs.push_back(p);
    else
      report.flags.push_back("degenerate: below floor " + format_g(floor) +
                             " at tau " + format_g(p.first));
  }
  if (fit_pairs.size() < 3) {
    report.degenerate = true;
    report.flags.push_back("degenerate: fewer than 3 pairs above floor, not order-fitted");
    report.pass = false;
    return report;
  }
  for (size_t i = 1; i < fit_pairs.size(); ++i)
    if (fit_pairs[i].second > fit_pairs[i - 1].second) {
      report.flags.push_back("non-monotone: error increased at tau " +
                             format_g(fit_pairs[i].first));
      break;
    }

  const FitResult fit = fit_order(fit_pairs);
  report.slope = fit.slope;
  report.intercept = fit.intercept;
  report.pass = std::abs(fit.slope - target_order) <= report.slope_tol;
  return report;
}

}  // namespace

OrderReport global_error_sweep(const ExperimentSpec& spec) {
  spec.validate();
  const RealField omega0 = generate_initial(spec.ic, spec.grid);
  const RealField reference = exact_flow(omega0, spec.t_final, spec.reference);

  std::vector<std::pair<double, double>> pairs;
  for (double tau : spec.tau_list) {
    SchemeConfig cfg;
    cfg.tau = tau;
    cfg.t_final = spec.t_final;
    cfg.fixed_point = spec.fixed_point;
    cfg.mean_tol = spec.mean_tol;
    cfg.sigma = spec.sigma;
    const RunResult rr = run(omega0, cfg);
    pairs.emplace_back(tau, error_norm(rr.final_state.omega, reference, spec.sigma));
  }
  return assemble_report(spec, "global", 1.0, std::move(pairs));
}

OrderReport local_freeze_sweep(const ExperimentSpec& spec) {
  spec.validate();
  const RealField omega0 = generate_initial(spec.ic, spec.grid);

  std::vector<std::pair<double, double>> pairs;
  for (double t : spec.tau_list) {
    const RealField exact = exact_flow(omega0, t, spec.reference);
    const RealField frozen = frozen_flow(omega0, t, spec.reference);
    pairs.emplace_back(t, error_norm(exact, frozen, spec.sigma));
  }
  return assemble_report(spec, "local_freeze", 2.0, std::move(pairs));
}

OrderReport local_midpoint_sweep(const ExperimentSpec& spec) {
  spec.validate();
  const RealField omega0 = generate_initial(spec.ic, spec.grid);

  std::vector<std::pair<double, double>> pairs;
  for (double t : spec.tau_list) {
    const RealField frozen = frozen_flow(omega0, t, spec.reference);
    SchemeConfig cfg;
    cfg.tau = t;
    cfg.t_final = t;
    cfg.fixed_point = spec.fixed_point;
    cfg.mean_tol = spec.mean_tol;
    cfg.sigma = spec.sigma;
    cfg.recenter = false;  // single application of the raw operator
    const StepResult sr = step(SchemeState{omega0, 0, 0.0}, cfg);
    pairs.emplace_back(t, error_norm(sr.state.omega, frozen, spec.sigma));
  }
  return assemble_report(spec, "local_midpoint", 3.0, std::move(pairs));
}

StabilityReport stability_monitor_report(const std::vector<MonitorRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("stability report: no monitor rows");
  const MonitorRow& first = rows.front();
  StabilityReport rep;
  auto ratio = [](double value, double base) { return base > 0.0 ? value / base : 1.0; };
  for (const MonitorRow& row : rows) {
    rep.l2_ratio = std::max(rep.l2_ratio, ratio(row.l2, first.l2));
    rep.h1_ratio = std::max(rep.h1_ratio, ratio(row.h1, first.h1));
    rep.h2_ratio = std::max(rep.h2_ratio, ratio(row.h2, first.h2));
    rep.hs_ratio = std::max(rep.hs_ratio, ratio(row.hs, first.hs));
  }
  rep.pass = rep.l2_ratio <= 2.0 && rep.h1_ratio <= 2.0 && rep.h2_ratio <= 2.0 &&
             rep.hs_ratio <= 2.0;
  return rep;
}

std::string OrderReport::to_json() const {
  nlohmann::ordered_json j;
  j["law"] = law;
  j["sigma"] = sigma;
  auto arr = nlohmann::ordered_json::array();
  for (auto& [tau, err] : pairs) arr.push_back({tau, err});
  j["pairs"] = arr;
  if (degenerate) {
    j["slope"] = nullptr;
    j["intercept"] = nullptr;
  } else {
    j["slope"] = slope;
    j["intercept"] = intercept;
  }
  j["target_order"] = target_order;
  j["pass"] = pass;
  j["flags"] = flags;
  return j.dump(2) + "\n";
}

std::string OrderReport::to_csv() const {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << "tau,error\n";
  for (auto& [tau, err] : pairs) os << tau << "," << err << "\n";
  return os.str();
}

}  // namespace vortex
