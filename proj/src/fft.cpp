#include "vortex/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace vortex {

namespace {

// One forward/backward plan pair per grid size. Plans are created with
// FFTW_UNALIGNED so they can execute on any caller buffer via
// fftw_execute_dft, which is thread-safe; only planning needs the lock.
struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

PlanPair& plans_for(int n) {
  static std::mutex mtx;
  static std::map<int, PlanPair> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<std::complex<double>> in(static_cast<size_t>(n) * n);
  std::vector<std::complex<double>> out(in.size());
  auto* in_p = reinterpret_cast<fftw_complex*>(in.data());
  auto* out_p = reinterpret_cast<fftw_complex*>(out.data());
  PlanPair p;
  p.fwd = fftw_plan_dft_2d(n, n, in_p, out_p, FFTW_FORWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_2d(n, n, in_p, out_p, FFTW_BACKWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  return cache.emplace(n, p).first->second;
}

}  // namespace

SpectralField forward_transform(const RealField& f) {
  if (!f.all_finite())
    throw std::invalid_argument("forward_transform: non-finite sample");
  const int n = f.n();
  SpectralField out(f.spec());
  std::vector<std::complex<double>> in(f.values().begin(), f.values().end());
  auto& plans = plans_for(n);
  fftw_execute_dft(plans.fwd, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data().data()));
  const double scale = 1.0 / (static_cast<double>(n) * n);
  for (auto& c : out.data()) c *= scale;
  return out;
}

RealField inverse_transform_unchecked(const SpectralField& F) {
  const int n = F.n();
  std::vector<std::complex<double>> out(static_cast<size_t>(n) * n);
  std::vector<std::complex<double>> in(F.data().begin(), F.data().end());
  auto& plans = plans_for(n);
  fftw_execute_dft(plans.bwd, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  RealField res(F.spec());
  auto vals = res.values();
  for (size_t i = 0; i < out.size(); ++i) vals[i] = out[i].real();
  return res;
}

RealField inverse_transform(const SpectralField& F) {
  const double scale = F.sup_modulus();
  if (F.hermitian_defect() > 1e-12 * scale)
    throw std::invalid_argument(
        "inverse_transform: spectrum is not Hermitian within tolerance");
  return inverse_transform_unchecked(F);
}

}  // namespace vortex
