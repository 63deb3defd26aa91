#pragma once

#include "vortex/field.hpp"

namespace vortex {

/// Discrete Fourier coefficients normalized so coeff(0,0) is the grid mean.
/// Rejects non-finite input.
SpectralField forward_transform(const RealField& f);

/// Exact inverse of forward_transform. Rejects spectra whose Hermitian
/// defect exceeds 1e-12 relative to the largest coefficient modulus.
RealField inverse_transform(const SpectralField& F);

/// Inverse transform without the Hermitian gate, for internal use on spectra
/// that are Hermitian by construction.
RealField inverse_transform_unchecked(const SpectralField& F);

}  // namespace vortex
