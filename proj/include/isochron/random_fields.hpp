#pragma once

#include <cstdint>
#include <random>

#include "isochron/prepared.hpp"

namespace isochron {

/// Seeded source of small Gaussian rationals and structured random fields.
/// Uses only raw mt19937_64 output, so draws are identical across platforms.
class RandomFields {
 public:
  explicit RandomFields(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);
  /// (a/b) + (c/d) i with |a|, |c| <= 9 and 1 <= b, d <= 6.
  GaussianRational scalar();
  GaussianRational nonzero_scalar();
  mpq_class real_rational();

  /// Every coefficient with 2 <= i+j <= d drawn independently (some zero).
  PlanarField generic(int d);
  /// Homogeneous of degree d, all coefficients drawn.
  PlanarField homogeneous(int d);
  /// Homogeneous uniform: p_{0,d} = 0 and p_{i,d-i} = conj(p_{d-i+1,i-1}).
  /// For odd d = 2m+1 the real middle coefficient p_{m+1,m} is zeroed when
  /// `zero_middle`, otherwise drawn nonzero.
  PlanarField uniform_homogeneous(int d, bool zero_middle);
  /// Cauchy–Riemann: only the p_{n,0}, n = 2..d, are nonzero.
  PlanarField cauchy_riemann(int d);
  /// Quadratic with p_{2,0} = conj(p_{1,1}), p_{0,2} = 0.
  PlanarField quadratic_uniform();
  /// Quadratic with p_{1,1} = p_{0,2} = 0.
  PlanarField quadratic_holomorphic();

 private:
  std::mt19937_64 rng_;
};

}  // namespace isochron
