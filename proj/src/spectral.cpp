#include "vortex/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "vortex/errors.hpp"

namespace vortex {

SpectralField derivative(const SpectralField& F, int axis) {
  if (axis != 0 && axis != 1) throw std::invalid_argument("derivative: axis must be 0 or 1");
  const int n = F.n();
  SpectralField out(F.spec());
  for (int a = 0; a < n; ++a) {
    const int k1 = mode_of(a, n);
    for (int b = 0; b < n; ++b) {
      const int k2 = mode_of(b, n);
      const int m = axis == 0 ? k1 : k2;
      // Odd-derivative multiplier has no symmetric partner at -n/2; drop it.
      if (m == -n / 2)
        out.raw(a, b) = 0.0;
      else
        out.raw(a, b) = std::complex<double>(0.0, m) * F.raw(a, b);
    }
  }
  return out;
}

SpectralField laplacian(const SpectralField& F) {
  const int n = F.n();
  SpectralField out(F.spec());
  for (int a = 0; a < n; ++a) {
    const double k1 = mode_of(a, n);
    for (int b = 0; b < n; ++b) {
      const double k2 = mode_of(b, n);
      out.raw(a, b) = -(k1 * k1 + k2 * k2) * F.raw(a, b);
    }
  }
  return out;
}

SpectralField poisson_inverse_spectral(const SpectralField& F, double mean_tol) {
  const double mean = std::abs(F.raw(0, 0));
  if (!(mean <= mean_tol))
    throw MeanNotZeroError("poisson_inverse: |mean| = " + std::to_string(mean) +
                           " exceeds tolerance " + std::to_string(mean_tol));
  const int n = F.n();
  SpectralField out(F.spec());
  for (int a = 0; a < n; ++a) {
    const double k1 = mode_of(a, n);
    for (int b = 0; b < n; ++b) {
      if (a == 0 && b == 0) continue;  // zero-mean solution
      const double k2 = mode_of(b, n);
      out.raw(a, b) = F.raw(a, b) / (-(k1 * k1 + k2 * k2));
    }
  }
  return out;
}

RealField poisson_inverse(const RealField& f, double mean_tol) {
  return inverse_transform_unchecked(
      poisson_inverse_spectral(forward_transform(f), mean_tol));
}

VectorField gradient(const RealField& f) {
  SpectralField F = forward_transform(f);
  return {inverse_transform_unchecked(derivative(F, 0)),
          inverse_transform_unchecked(derivative(F, 1))};
}

void velocity_spectra(const SpectralField& omega_hat, SpectralField& u1_hat,
                      SpectralField& u2_hat, double mean_tol) {
  SpectralField psi = poisson_inverse_spectral(omega_hat, mean_tol);
  u1_hat = derivative(psi, 1);
  u2_hat = derivative(psi, 0);
  for (auto& c : u2_hat.data()) c = -c;
}

VectorField velocity(const RealField& omega, double mean_tol) {
  SpectralField u1, u2;
  velocity_spectra(forward_transform(omega), u1, u2, mean_tol);
  return {inverse_transform_unchecked(u1), inverse_transform_unchecked(u2)};
}

double sobolev_norm(const SpectralField& F, double sigma) {
  if (!std::isfinite(sigma) || sigma < 0.0)
    throw std::invalid_argument("sobolev_norm: sigma must be finite and >= 0");
  const int n = F.n();
  double acc = 0.0;
  for (int a = 0; a < n; ++a) {
    const double k1 = mode_of(a, n);
    for (int b = 0; b < n; ++b) {
      const double k2 = mode_of(b, n);
      const double c2 = std::norm(F.raw(a, b));
      if (c2 == 0.0) continue;
      acc += c2 * std::pow(1.0 + k1 * k1 + k2 * k2, sigma);
    }
  }
  return std::sqrt(acc);
}

double sobolev_norm(const RealField& f, double sigma) {
  return sobolev_norm(forward_transform(f), sigma);
}

SpectralField dealias_two_thirds(SpectralField F) {
  const int n = F.n();
  for (int a = 0; a < n; ++a) {
    const int k1 = std::abs(mode_of(a, n));
    for (int b = 0; b < n; ++b) {
      const int k2 = std::abs(mode_of(b, n));
      if (3 * std::max(k1, k2) > n) F.raw(a, b) = 0.0;
    }
  }
  return F;
}

RealField divergence(const VectorField& X) {
  SpectralField d = derivative(forward_transform(X.x1), 0);
  const SpectralField d2 = derivative(forward_transform(X.x2), 1);
  auto dd = d.data();
  auto dd2 = d2.data();
  for (size_t i = 0; i < dd.size(); ++i) dd[i] += dd2[i];
  return inverse_transform_unchecked(d);
}

}  // namespace vortex
