#include "vortex/trig_eval.hpp"

#include <cmath>

namespace vortex {

PhasePair::PhasePair(GridSpec spec)
    : n_(spec.n), c1_(spec.n), s1_(spec.n), c2_(spec.n), s2_(spec.n) {}

namespace {

// Fills one coordinate's phase arrays in storage order via the recurrence
// e^{i(m+1)p} = e^{imp} e^{ip}, anchored at exact cos/sin of the reduced angle.
void fill_phases(double p, int n, double* c, double* s) {
  p = std::remainder(p, two_pi);
  const double cp = std::cos(p);
  const double sp = std::sin(p);
  c[0] = 1.0;
  s[0] = 0.0;
  double cj = 1.0, sj = 0.0;
  for (int j = 1; j <= n / 2; ++j) {
    const double cn = cj * cp - sj * sp;
    const double sn = sj * cp + cj * sp;
    cj = cn;
    sj = sn;
    if (j < n / 2) {
      c[j] = cj;          // mode +j
      s[j] = sj;
      c[n - j] = cj;      // mode -j
      s[n - j] = -sj;
    } else {
      c[j] = cj;          // Nyquist -n/2, symmetric average: cosine only
      s[j] = 0.0;
    }
  }
}

}  // namespace

void PhasePair::set_point(Vec2 p) {
  fill_phases(p.x1, n_, c1_.data(), s1_.data());
  fill_phases(p.x2, n_, c2_.data(), s2_.data());
}

HarmonicTable::HarmonicTable(const SpectralField& F)
    : spec_(F.spec()),
      re_(static_cast<size_t>(F.spec().size())),
      im_(static_cast<size_t>(F.spec().size())) {
  auto src = F.data();
  for (size_t i = 0; i < src.size(); ++i) {
    re_[i] = src[i].real();
    im_[i] = src[i].imag();
  }
}

double HarmonicTable::eval(const PhasePair& phases) const {
  const int n = spec_.n;
  const double* c2 = phases.c2();
  const double* s2 = phases.s2();
  const double* c1 = phases.c1();
  const double* s1 = phases.s1();
  double acc = 0.0;
  for (int a = 0; a < n; ++a) {
    const double* re = re_.data() + static_cast<size_t>(a) * n;
    const double* im = im_.data() + static_cast<size_t>(a) * n;
    double row_re = 0.0, row_im = 0.0;
    for (int b = 0; b < n; ++b) {
      row_re += re[b] * c2[b] - im[b] * s2[b];
      row_im += re[b] * s2[b] + im[b] * c2[b];
    }
    acc += c1[a] * row_re - s1[a] * row_im;
  }
  return acc;
}

}  // namespace vortex
