#pragma once

#include <string>
#include <vector>

#include "vortex/initial_conditions.hpp"
#include "vortex/oracles.hpp"
#include "vortex/scheme.hpp"

namespace vortex {

/// H^sigma norm of a - b; grids must match.
double error_norm(const RealField& a, const RealField& b, double sigma);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS residual of the log-log fit
};

/// Ordinary least squares on (log tau, log error); needs >= 3 positive pairs.
FitResult fit_order(const std::vector<std::pair<double, double>>& pairs);

struct OrderReport {
  std::string law;
  double sigma = 0.0;
  std::vector<std::pair<double, double>> pairs;  // (tau, error), all measured
  double slope = 0.0;
  double intercept = 0.0;
  double target_order = 0.0;
  double slope_tol = 0.0;
  bool pass = false;
  bool degenerate = false;
  std::vector<std::string> flags;

  std::string to_json() const;  // keys: law, sigma, pairs, slope, intercept,
                                // target_order, pass, flags
  std::string to_csv() const;   // header tau,error
};

enum class ErrorLaw { global, local_freeze, local_midpoint };

struct ExperimentSpec {
  ErrorLaw law = ErrorLaw::global;
  InitialCondition ic;
  GridSpec grid{64};
  double sigma = 2.0;
  std::vector<double> tau_list;  // >= 3 entries, strictly halving
  double t_final = 0.5;
  FixedPointConfig fixed_point;
  ReferenceConfig reference;
  double mean_tol = default_mean_tol;
  double slope_tol = 0.0;  // 0 selects the default for the law's order

  void validate() const;
  double degenerate_floor() const;
};

/// Scheme error against phi_E at t_final for each tau; target order 1.
OrderReport global_error_sweep(const ExperimentSpec& spec);

/// phi_E vs phi_F at each t in tau_list; target order 2.
OrderReport local_freeze_sweep(const ExperimentSpec& spec);

/// phi_F vs one midpoint step at each t in tau_list; target order 3.
OrderReport local_midpoint_sweep(const ExperimentSpec& spec);

struct StabilityReport {
  double l2_ratio = 0.0;
  double h1_ratio = 0.0;
  double h2_ratio = 0.0;
  double hs_ratio = 0.0;
  bool pass = false;  // every ratio <= 2
};

/// Max over steps of monitored norms relative to the initial ones.
StabilityReport stability_monitor_report(const std::vector<MonitorRow>& rows);

}  // namespace vortex
