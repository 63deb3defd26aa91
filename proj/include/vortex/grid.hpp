#pragma once

#include <stdexcept>
#include <string>

#include "vortex/vec2.hpp"

namespace vortex {

/// Uniform n x n grid on the periodic box [0, 2*pi)^2.
/// Nodes are x_ij = (2*pi*i/n, 2*pi*j/n).
struct GridSpec {
  int n = 0;

  GridSpec() = default;
  explicit GridSpec(int points) : n(points) {
    if (n < 8 || n % 2 != 0)
      throw std::invalid_argument("GridSpec: n must be even and >= 8, got " +
                                  std::to_string(n));
  }

  double spacing() const { return two_pi / n; }
  int size() const { return n * n; }
  Vec2 node(int i, int j) const { return {two_pi * i / n, two_pi * j / n}; }

  bool operator==(const GridSpec&) const = default;
};

/// Signed Fourier mode for storage index a in [0, n): 0,1,...,n/2-1,-n/2,...,-1.
inline int mode_of(int a, int n) { return a < n / 2 ? a : a - n; }

/// Storage index of signed mode k in [-n/2, n/2).
inline int index_of(int k, int n) { return k >= 0 ? k : k + n; }

}  // namespace vortex
