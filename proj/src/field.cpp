#include "vortex/field.hpp"

#include <cmath>
#include <stdexcept>

namespace vortex {

double RealField::mean() const {
  double acc = 0.0;
  for (double v : values_) acc += v;
  return acc / static_cast<double>(values_.size());
}

double RealField::sup_norm() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

bool RealField::all_finite() const {
  for (double v : values_)
    if (!std::isfinite(v)) return false;
  return true;
}

namespace {
void require_same_spec(const RealField& a, const RealField& b) {
  if (!(a.spec() == b.spec()))
    throw std::invalid_argument("RealField: grid mismatch (" +
                                std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()) + ")");
}
}  // namespace

RealField& RealField::operator+=(const RealField& o) {
  require_same_spec(*this, o);
  for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

RealField& RealField::operator-=(const RealField& o) {
  require_same_spec(*this, o);
  for (size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

RealField& RealField::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

double SpectralField::sup_modulus() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double SpectralField::hermitian_defect() const {
  const int n = spec_.n;
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    const int am = (n - a) % n;
    for (int b = 0; b < n; ++b) {
      const int bm = (n - b) % n;
      worst = std::max(worst, std::abs(raw(am, bm) - std::conj(raw(a, b))));
    }
  }
  return worst;
}

VectorField::VectorField(RealField c1, RealField c2) : x1(std::move(c1)), x2(std::move(c2)) {
  if (!(x1.spec() == x2.spec()))
    throw std::invalid_argument("VectorField: component grids differ");
}

}  // namespace vortex
