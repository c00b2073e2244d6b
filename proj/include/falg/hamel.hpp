#pragma once

/**
 * @file hamel.hpp
 * @brief Finite-support vectors, dual functionals and column-finite maps over
 * the countable basis {e_0, e_1, ...}.
 *
 * Every value is kept in zero-free canonical form: a stored coordinate is
 * never the ring zero, so two values are equal iff their coordinate maps are
 * equal. Each value also carries the scalar backend it lives over; that makes
 * backend mismatches detectable even when supports are disjoint.
 */

#include "falg/ring.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace falg {

using BasisIndex = std::uint64_t;

class Vector {
 public:
  using Coords = std::map<BasisIndex, Scalar>;

  explicit Vector(Backend b = Backend::Rational) : backend_(b) {}
  /// Zero coordinates are dropped; a coordinate of another backend throws.
  Vector(Backend b, Coords coords);

  static Vector basis(Backend b, BasisIndex i);

  Backend backend() const { return backend_; }
  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  std::size_t support_size() const { return coords_.size(); }
  /// The i-th coordinate, ring zero when i is off the support.
  Scalar coord(BasisIndex i) const;

  /// Zero-free, single-backend.
  bool well_formed() const;

  friend bool operator==(const Vector& a, const Vector& b) {
    return a.backend_ == b.backend_ && a.coords_ == b.coords_;
  }

 private:
  Backend backend_;
  Coords coords_;
};

Vector add(const Vector& u, const Vector& v);
Vector sub(const Vector& u, const Vector& v);
Vector scale(const Scalar& d, const Vector& v);
Vector negate(const Vector& v);
inline Vector operator+(const Vector& u, const Vector& v) { return add(u, v); }
inline Vector operator-(const Vector& u, const Vector& v) { return sub(u, v); }
inline Vector operator-(const Vector& v) { return negate(v); }
inline Vector operator*(const Scalar& d, const Vector& v) { return scale(d, v); }

/// Compact rendering "{0:1,5:3}".
std::string to_string(const Vector& v);
std::ostream& operator<<(std::ostream& os, const Vector& v);

/// Element of the span of the dual basis {e^i}, e^i(e_j) = delta^i_j.
class Functional {
 public:
  explicit Functional(Backend b = Backend::Rational) : coords_(b) {}
  explicit Functional(Vector coords) : coords_(std::move(coords)) {}

  static Functional dual_basis(Backend b, BasisIndex i) { return Functional(Vector::basis(b, i)); }

  Backend backend() const { return coords_.backend(); }
  const Vector& coords() const { return coords_; }

  friend bool operator==(const Functional&, const Functional&) = default;

 private:
  Vector coords_;
};

Scalar dual_eval(const Functional& phi, const Vector& v);

/// Linear map stored column-major: column j is the image f(e_j), a finite
/// vector. Absent columns are zero.
class LinearMap {
 public:
  using Columns = std::map<BasisIndex, Vector>;

  explicit LinearMap(Backend b = Backend::Rational) : backend_(b) {}
  /// Empty columns are dropped.
  LinearMap(Backend b, Columns cols);

  /// Identity restricted to the columns 0..n-1 (the identity of an infinite
  /// basis is not column-finite as stored data).
  static LinearMap identity(Backend b, BasisIndex n);

  Backend backend() const { return backend_; }
  const Columns& columns() const { return cols_; }
  bool is_zero() const { return cols_.empty(); }
  Vector column(BasisIndex j) const;
  Scalar entry(BasisIndex i, BasisIndex j) const;
  std::size_t entry_count() const;

  bool well_formed() const;

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.backend_ == b.backend_ && a.cols_ == b.cols_;
  }

 private:
  Backend backend_;
  Columns cols_;
};

Vector apply(const LinearMap& f, const Vector& v);
LinearMap add(const LinearMap& f, const LinearMap& g);
LinearMap scale(const Scalar& d, const LinearMap& f);
/// (f o g)(v) = f(g(v)).
LinearMap compose(const LinearMap& f, const LinearMap& g);
/// The map with the single column j = e_i.
LinearMap basis_map(Backend b, BasisIndex i, BasisIndex j);

inline Vector map_apply(const LinearMap& f, const Vector& v) { return apply(f, v); }
inline LinearMap map_add(const LinearMap& f, const LinearMap& g) { return add(f, g); }
inline LinearMap map_scale(const Scalar& d, const LinearMap& f) { return scale(d, f); }
inline LinearMap map_compose(const LinearMap& f, const LinearMap& g) { return compose(f, g); }

/**
 * Polylinear map f(x_1, ..., x_n) stored curried: an arity-n map is the
 * family of arity-(n-1) maps h(e_j), one per basis index j of the first
 * slot, so f(x_1, ..., x_n) = sum_j x_1^j h(e_j)(x_2, ..., x_n). Arity 1 is a
 * LinearMap.
 */
class PolyMap {
 public:
  using Slices = std::vector<std::pair<BasisIndex, PolyMap>>;

  explicit PolyMap(LinearMap leaf);
  /// Arity >= 2. Slices must have arity-1 and the same backend; zero slices
  /// are dropped.
  PolyMap(std::size_t arity, Backend b, std::map<BasisIndex, PolyMap> slices);

  static PolyMap zero(std::size_t arity, Backend b);

  std::size_t arity() const { return arity_; }
  Backend backend() const { return leaf_.backend(); }
  bool is_zero() const;
  /// Only meaningful for arity 1.
  const LinearMap& leaf() const { return leaf_; }
  /// Sorted by index, arity >= 2.
  const Slices& slices() const { return slices_; }
  /// h(e_j); the zero map of arity-1 when absent.
  PolyMap slice(BasisIndex j) const;

  /// Fix the first argument: returns the arity-(n-1) map h(x). Arity >= 2.
  PolyMap peel(const Vector& x) const;

  /// Sum of |coefficient| over every stored coefficient.
  NormValue coefficient_mass() const;

  friend bool operator==(const PolyMap& a, const PolyMap& b);

 private:
  PolyMap(std::size_t arity, LinearMap leaf, Slices slices)
      : arity_(arity), leaf_(std::move(leaf)), slices_(std::move(slices)) {}

  friend PolyMap add(const PolyMap& f, const PolyMap& g);
  friend PolyMap scale(const Scalar& d, const PolyMap& f);

  std::size_t arity_;
  LinearMap leaf_;  // arity 1; for higher arities carries only the backend
  Slices slices_;
};

PolyMap add(const PolyMap& f, const PolyMap& g);
PolyMap scale(const Scalar& d, const PolyMap& f);

/// Throws DomainError when xs.size() != arity.
Vector poly_apply(const PolyMap& f, std::span<const Vector> xs);

/// Sum of |coordinate|; exact for exact backends, rounded as requested for
/// Float64.
NormValue l1_norm(const Vector& v, Rounding r = Rounding::Up);
NormValue l1_norm(const LinearMap& f, Rounding r = Rounding::Up);

}  // namespace falg
