#pragma once

#include "vortex/fft.hpp"
#include "vortex/field.hpp"

namespace vortex {

inline constexpr double default_mean_tol = 1e-10;

/// ik-multiplier derivative along axis (0 -> x1, 1 -> x2).
/// The Nyquist line k = -n/2 of that axis is zeroed.
SpectralField derivative(const SpectralField& F, int axis);

/// Spectral Laplacian (multiplier -|k|^2).
SpectralField laplacian(const SpectralField& F);

/// Solves Delta u = f with zero-mean u; requires |coeff(0,0)| <= mean_tol.
SpectralField poisson_inverse_spectral(const SpectralField& F,
                                       double mean_tol = default_mean_tol);

/// Solves Delta u = f on the grid; requires |grid mean of f| <= mean_tol.
RealField poisson_inverse(const RealField& f, double mean_tol = default_mean_tol);

/// Spectrally exact gradient (dx1 f, dx2 f).
VectorField gradient(const RealField& f);

/// Divergence-free velocity U = J grad Delta^{-1} omega = (dx2 psi, -dx1 psi).
VectorField velocity(const RealField& omega, double mean_tol = default_mean_tol);

/// Velocity component spectra straight from the vorticity spectrum.
void velocity_spectra(const SpectralField& omega_hat, SpectralField& u1_hat,
                      SpectralField& u2_hat, double mean_tol = default_mean_tol);

/// Discrete H^sigma norm: (sum |f_k|^2 (1+|k|^2)^sigma)^(1/2).
double sobolev_norm(const SpectralField& F, double sigma);
double sobolev_norm(const RealField& f, double sigma);

/// Zeroes every coefficient with max(|k1|, |k2|) > n/3.
SpectralField dealias_two_thirds(SpectralField F);

/// Spectral divergence dx1 X1 + dx2 X2, for diagnostics.
RealField divergence(const VectorField& X);

}  // namespace vortex
