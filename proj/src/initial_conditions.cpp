#include "vortex/initial_conditions.hpp"

#include <cmath>
#include <random>

#include "vortex/errors.hpp"
#include "vortex/fft.hpp"

namespace vortex {

void InitialCondition::validate(const GridSpec& grid) const {
  static const char* names[] = {"zero", "shear", "eigen_pair", "perturbed_eigen",
                                "random_band"};
  bool known = false;
  for (const char* n : names) known = known || name == n;
  if (!known) throw ConfigError("initial condition: unknown name '" + name + "'");
  if (name == "random_band") {
    if (kmax < 1) throw ConfigError("initial condition: kmax must be >= 1");
    if (kmax > grid.n / 4)
      throw ConfigError("initial condition: band limit kmax = " +
                        std::to_string(kmax) + " exceeds n/4 = " +
                        std::to_string(grid.n / 4));
  }
  if (!std::isfinite(amplitude) || !std::isfinite(perturbation) ||
      !std::isfinite(smoothness))
    throw ConfigError("initial condition: non-finite parameter");
}

namespace {

// Uniform in [-1, 1) from the top 53 bits; keeps the stream identical across
// standard libraries, unlike std::uniform_real_distribution.
double uniform_pm1(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

RealField random_band(const InitialCondition& ic, const GridSpec& grid) {
  std::mt19937_64 rng(ic.seed);
  SpectralField hat(grid);
  // Half-plane walk (k1 > 0, or k1 == 0 and k2 > 0); conjugate mirror fills
  // the rest, so the synthesized field is exactly real.
  for (int k1 = 0; k1 <= ic.kmax; ++k1) {
    for (int k2 = (k1 == 0 ? 1 : -ic.kmax); k2 <= ic.kmax; ++k2) {
      if (std::max(std::abs(k1), std::abs(k2)) < 1) continue;
      const double u = uniform_pm1(rng);
      const double v = uniform_pm1(rng);
      const double decay =
          std::pow(1.0 + k1 * k1 + k2 * k2, -(ic.smoothness + 1.0) / 2.0);
      const std::complex<double> c = ic.amplitude * decay *
                                     std::complex<double>(u, v) / std::sqrt(2.0);
      hat.coeff(k1, k2) = c;
      hat.coeff(-k1, -k2) = std::conj(c);
    }
  }
  return inverse_transform_unchecked(hat);
}

}  // namespace

RealField generate_initial(const InitialCondition& ic, const GridSpec& grid) {
  ic.validate(grid);
  const double a = ic.amplitude;
  if (ic.name == "zero") return RealField(grid);
  if (ic.name == "shear")
    return RealField::sample(grid, [a](Vec2 p) { return a * std::cos(p.x1); });
  if (ic.name == "eigen_pair")
    return RealField::sample(
        grid, [a](Vec2 p) { return a * (std::cos(p.x1) + std::cos(p.x2)); });
  if (ic.name == "perturbed_eigen") {
    const double eps = ic.perturbation;
    return RealField::sample(grid, [a, eps](Vec2 p) {
      return a * (std::cos(p.x1) + std::cos(p.x2) +
                  eps * std::cos(2.0 * p.x1) * std::cos(p.x2));
    });
  }
  return random_band(ic, grid);
}

}  // namespace vortex
