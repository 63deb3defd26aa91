#pragma once

#include <cstdint>
#include <string>

#include "vortex/field.hpp"

namespace vortex {

/// Named zero-mean band-limited initial vorticity generators.
/// random_band synthesizes modes 1 <= max(|k1|,|k2|) <= kmax with coefficients
/// decaying like (1+|k|^2)^{-(smoothness+1)/2}, deterministically from seed.
struct InitialCondition {
  std::string name = "perturbed_eigen";  // zero|shear|eigen_pair|perturbed_eigen|random_band
  double amplitude = 1.0;
  double perturbation = 0.1;  // perturbed_eigen only
  int kmax = 4;               // random_band cutoff, must be <= n/4
  double smoothness = 6.0;    // random_band decay exponent s
  std::uint64_t seed = 7;

  void validate(const GridSpec& grid) const;
};

RealField generate_initial(const InitialCondition& ic, const GridSpec& grid);

}  // namespace vortex
