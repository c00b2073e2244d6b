#pragma once

/**
 * @file schauder.hpp
 * @brief Certified truncation: infinite l1 expansions as a finite prefix plus
 * a sound bound on everything that was not stored.
 *
 * The module norm is l1 over coordinates, so every basis vector has norm 1.
 * A TailVector (p, t) represents any vector a with ||a - p||_1 <= t. When
 * `exact_prefix` holds the stronger reading applies: the stored coordinates
 * are the true ones and t bounds the mass on unstored indices only, which
 * makes sum |p_i| a lower bound for ||a||. Freshly made and truncated values
 * have exact prefixes; arithmetic keeps the flag only where it provably
 * survives.
 *
 * Caller-supplied tails are trusted; every tail computed here is sound
 * whenever the inputs' tails are. Float64 bounds round toward +inf.
 */

#include "falg/algebra.hpp"

#include <set>
#include <span>
#include <string>

namespace falg {

struct NormInterval {
  NormValue lo, hi;

  bool contains(const NormValue& x) const { return lo <= x && x <= hi; }
  /// "[lo, hi]"
  std::string to_string() const;
};

class TailVector {
 public:
  explicit TailVector(Backend b = Backend::Rational);
  TailVector(Vector prefix, NormValue tail, bool exact_prefix = true);

  static TailVector lift(Vector v);

  Backend backend() const { return prefix_.backend(); }
  const Vector& prefix() const { return prefix_; }
  const NormValue& tail() const { return tail_; }
  bool exact_prefix() const { return exact_prefix_; }
  bool well_formed() const;

  friend bool operator==(const TailVector&, const TailVector&) = default;

 private:
  Vector prefix_;
  NormValue tail_;
  bool exact_prefix_;
};

/// Throws DomainError for a negative tail.
TailVector tv_make(Vector prefix, const Scalar& tail);
TailVector tv_add(const TailVector& u, const TailVector& v);
TailVector tv_scale(const Scalar& d, const TailVector& v);
NormInterval tv_norm(const TailVector& v);
/// Keeps only the listed prefix coordinates; dropped mass moves into the tail.
TailVector tv_truncate(const TailVector& v, const std::set<BasisIndex>& keep);

/// A map with a finite column-finite part and a bound on the summed |f^i_j|
/// of every entry outside that part (the class of maps with sum |f^i_j| finite).
class TailMap {
 public:
  explicit TailMap(Backend b = Backend::Rational);
  TailMap(LinearMap finite, NormValue tail, bool exact_part = true);

  static TailMap lift(LinearMap f);

  Backend backend() const { return finite_.backend(); }
  const LinearMap& finite() const { return finite_; }
  const NormValue& tail() const { return tail_; }
  bool exact_part() const { return exact_part_; }

  friend bool operator==(const TailMap&, const TailMap&) = default;

 private:
  LinearMap finite_;
  NormValue tail_;
  bool exact_part_;
};

TailMap tm_make(LinearMap finite, const Scalar& tail);

/// [max column sum, total sum + tail]: brackets the operator norm.
NormInterval tm_bound(const TailMap& f);
/// tail = Ff * tail(v) + Ft * (S_v + tail(v)).
TailVector tm_apply(const TailMap& f, const TailVector& v);
/// tail = Ff * Gt + Ft * (Gf + Gt).
TailMap tm_compose(const TailMap& f, const TailMap& g);

class MissingPairBound : public Error {
 public:
  using Error::Error;
};

/// Product in an algebra whose structure constants satisfy
/// sum_k |C^k_ij| <= K for all i, j:
///   tail = K * (Sa * tail(b) + tail(a) * Sb + tail(a) * tail(b)).
TailVector tv_mul(const StructureTable& t, const TailVector& a, const TailVector& b);

/// Polylinear map with a finite curried part and one tail bound covering the
/// summed |coefficient| of everything outside it.
class TailPolyMap {
 public:
  TailPolyMap(PolyMap finite, NormValue tail) : finite_(std::move(finite)), tail_(std::move(tail)) {}

  std::size_t arity() const { return finite_.arity(); }
  Backend backend() const { return finite_.backend(); }
  const PolyMap& finite() const { return finite_; }
  const NormValue& tail() const { return tail_; }

  /// Fix the first argument. The result's tail is the tm_apply bound with the
  /// whole nest viewed as one linear map out of the first slot.
  TailPolyMap peel(const TailVector& x) const;

 private:
  PolyMap finite_;
  NormValue tail_;
};

/// B = total coefficient mass + tail; ||f(x_1..x_n)|| <= B * prod ||x_s||.
NormValue tpoly_bound(const TailPolyMap& f);
/// The same bound read off the top curried level: sum over first-slot indices
/// j of the bound of h(e_j), plus the tail.
NormValue tpoly_top_level_bound(const TailPolyMap& f);
TailVector tpoly_apply(const TailPolyMap& f, std::span<const TailVector> xs);

}  // namespace falg
