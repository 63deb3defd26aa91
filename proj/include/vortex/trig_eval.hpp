#pragma once

#include <vector>

#include "vortex/field.hpp"

namespace vortex {

/// Per-point phase factors cos(m*p), sin(m*p) for both coordinates, laid out
/// in spectrum storage order. The unpaired Nyquist mode m = -n/2 is averaged
/// symmetrically: its entry holds cos((n/2)p) with zero sine, which keeps the
/// interpolant real and matches grid samples at the nodes.
class PhasePair {
 public:
  explicit PhasePair(GridSpec spec);

  void set_point(Vec2 p);

  int n() const { return n_; }
  const double* c1() const { return c1_.data(); }
  const double* s1() const { return s1_.data(); }
  const double* c2() const { return c2_.data(); }
  const double* s2() const { return s2_.data(); }

 private:
  int n_;
  std::vector<double> c1_, s1_, c2_, s2_;
};

/// Hermitian spectrum packed into separate real/imag planes for direct
/// summation: eval(p) = Re sum_k c_k e^{i k.p}, exact on band-limited data.
class HarmonicTable {
 public:
  HarmonicTable() = default;
  explicit HarmonicTable(const SpectralField& F);

  GridSpec spec() const { return spec_; }
  double eval(const PhasePair& phases) const;

 private:
  GridSpec spec_;
  std::vector<double> re_, im_;
};

}  // namespace vortex
