#pragma once

// Seeded generators for law checks and tests. Only the raw 64-bit engine
// output is used (no std distributions), so a seed gives the same stream on
// every standard library.

#include "falg/hamel.hpp"

#include <cstdint>
#include <random>

namespace falg {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }

  /// Small nonzero-biased scalar: integers in [-9, 9]; rationals p/q with
  /// |p| <= 9, 1 <= q <= 6; floats from the same rationals.
  Scalar scalar(Backend b);
  Scalar nonzero_scalar(Backend b);
  /// Up to max_support coordinates drawn from indices [0, max_index).
  Vector vector(Backend b, BasisIndex max_index, std::size_t max_support = 4);
  /// Up to max_cols columns with indices in [0, max_index).
  LinearMap linear_map(Backend b, BasisIndex max_index, std::size_t max_cols = 4,
                       std::size_t max_support = 3);
  /// Curried map of the given arity with slices over [0, max_index).
  PolyMap poly_map(Backend b, std::size_t arity, BasisIndex max_index, std::size_t max_slices = 3);

 private:
  std::mt19937_64 engine_;
};

}  // namespace falg
