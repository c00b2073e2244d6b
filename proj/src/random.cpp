#include "falg/random.hpp"

namespace falg {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n <= 1) return 0;
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Scalar Rng::scalar(Backend b) {
  long p = between(-9, 9);
  switch (b) {
    case Backend::Integer: return embed_int(b, p);
    case Backend::Rational:
    case Backend::Float64: return embed_rational(b, p, between(1, 6));
  }
  return {};
}

Scalar Rng::nonzero_scalar(Backend b) {
  for (;;) {
    auto s = scalar(b);
    if (!s.is_zero()) return s;
  }
}

Vector Rng::vector(Backend b, BasisIndex max_index, std::size_t max_support) {
  Vector::Coords coords;
  auto n = below(max_support + 1);
  for (std::uint64_t k = 0; k < n; ++k) coords[below(max_index)] = nonzero_scalar(b);
  return Vector(b, std::move(coords));
}

LinearMap Rng::linear_map(Backend b, BasisIndex max_index, std::size_t max_cols,
                          std::size_t max_support) {
  LinearMap::Columns cols;
  auto n = below(max_cols + 1);
  for (std::uint64_t k = 0; k < n; ++k) cols[below(max_index)] = vector(b, max_index, max_support);
  return LinearMap(b, std::move(cols));
}

PolyMap Rng::poly_map(Backend b, std::size_t arity, BasisIndex max_index, std::size_t max_slices) {
  if (arity == 1) return PolyMap(linear_map(b, max_index));
  std::map<BasisIndex, PolyMap> slices;
  auto n = below(max_slices + 1);
  for (std::uint64_t k = 0; k < n; ++k)
    slices.insert_or_assign(below(max_index), poly_map(b, arity - 1, max_index, max_slices));
  return PolyMap(arity, b, std::move(slices));
}

}  // namespace falg
