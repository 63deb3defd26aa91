#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "vortex/grid.hpp"

namespace vortex {

/// Real samples on the grid, row major: value(i, j) = f(x_ij), i the x1 index.
class RealField {
 public:
  RealField() = default;
  explicit RealField(GridSpec spec, double fill = 0.0)
      : spec_(spec), values_(static_cast<size_t>(spec.size()), fill) {}

  static RealField sample(GridSpec spec, const std::function<double(Vec2)>& f) {
    RealField out(spec);
    for (int i = 0; i < spec.n; ++i)
      for (int j = 0; j < spec.n; ++j) out(i, j) = f(spec.node(i, j));
    return out;
  }

  GridSpec spec() const { return spec_; }
  int n() const { return spec_.n; }

  double& operator()(int i, int j) { return values_[static_cast<size_t>(i) * spec_.n + j]; }
  double operator()(int i, int j) const {
    return values_[static_cast<size_t>(i) * spec_.n + j];
  }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  double mean() const;
  double sup_norm() const;
  bool all_finite() const;

  RealField& operator+=(const RealField& o);
  RealField& operator-=(const RealField& o);
  RealField& operator*=(double s);

  friend RealField operator+(RealField a, const RealField& b) { return a += b; }
  friend RealField operator-(RealField a, const RealField& b) { return a -= b; }
  friend RealField operator*(RealField a, double s) { return a *= s; }
  friend RealField operator*(double s, RealField a) { return a *= s; }

 private:
  GridSpec spec_;
  std::vector<double> values_;
};

/// Fourier coefficients in FFT storage order; coeff at k=0 equals the grid mean.
/// Mode indices run over k in {-n/2, ..., n/2-1}^2.
class SpectralField {
 public:
  SpectralField() = default;
  explicit SpectralField(GridSpec spec)
      : spec_(spec), coeffs_(static_cast<size_t>(spec.size())) {}

  GridSpec spec() const { return spec_; }
  int n() const { return spec_.n; }

  /// Storage-order access, a,b in [0, n).
  std::complex<double>& raw(int a, int b) {
    return coeffs_[static_cast<size_t>(a) * spec_.n + b];
  }
  std::complex<double> raw(int a, int b) const {
    return coeffs_[static_cast<size_t>(a) * spec_.n + b];
  }

  /// Signed-mode access, k1,k2 in [-n/2, n/2).
  std::complex<double>& coeff(int k1, int k2) {
    return raw(index_of(k1, spec_.n), index_of(k2, spec_.n));
  }
  std::complex<double> coeff(int k1, int k2) const {
    return raw(index_of(k1, spec_.n), index_of(k2, spec_.n));
  }

  std::span<std::complex<double>> data() { return coeffs_; }
  std::span<const std::complex<double>> data() const { return coeffs_; }

  double sup_modulus() const;
  /// max over modes of |c(-k) - conj(c(k))|; zero for spectra of real data.
  double hermitian_defect() const;

 private:
  GridSpec spec_;
  std::vector<std::complex<double>> coeffs_;
};

/// Pair of real fields on one grid, components (X1, X2).
struct VectorField {
  RealField x1;
  RealField x2;

  VectorField() = default;
  VectorField(RealField c1, RealField c2);

  GridSpec spec() const { return x1.spec(); }
};

}  // namespace vortex
