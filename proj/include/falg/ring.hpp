#pragma once

/**
 * @file ring.hpp
 * @brief Scalars of a commutative ring of characteristic 0.
 *
 * Three backends share one value type: arbitrary-precision integers and
 * rationals (exact, the reference backends) and binary64 floats (used only by
 * the certified-truncation layer). Mixing backends in one operation is an
 * error, never a silent promotion.
 */

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace falg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BackendMismatch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

enum class Backend { Integer, Rational, Float64 };

std::string_view backend_name(Backend b);
Backend parse_backend(std::string_view name);  // "int" | "rat" | "f64"

/// Element of the coefficient ring. Immutable value type; rationals are kept
/// in canonical form (reduced, positive denominator) so equality is structural.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpz_class v) : value_(std::move(v)) {}
  explicit Scalar(mpq_class v) : value_(std::move(v)) { std::get<mpq_class>(value_).canonicalize(); }
  explicit Scalar(double v) : value_(v) {}

  static Scalar zero(Backend b);
  static Scalar one(Backend b);

  Backend backend() const { return static_cast<Backend>(value_.index()); }
  bool is_zero() const;
  bool is_one() const;

  const mpz_class& as_integer() const { return std::get<mpz_class>(value_); }
  const mpq_class& as_rational() const { return std::get<mpq_class>(value_); }
  double as_float() const { return std::get<double>(value_); }

  /// Integers "-3", rationals "3/2" (or "2" when integral), floats as the
  /// shortest decimal that round-trips.
  std::string to_string() const;
  static Scalar parse(Backend b, std::string_view text);

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<mpz_class, mpq_class, double> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline Scalar ring_add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar ring_mul(const Scalar& a, const Scalar& b) { return a * b; }

/// n -> n*1; injective for every backend.
Scalar embed_int(Backend b, const mpz_class& n);
inline Scalar embed_int(Backend b, long n) { return embed_int(b, mpz_class(n)); }

/// p/q; Rational gives the reduced fraction, Float64 the nearest double.
/// Throws DomainError for q == 0 or the Integer backend.
Scalar embed_rational(Backend b, const mpz_class& p, const mpz_class& q);
inline Scalar embed_rational(Backend b, long p, long q) {
  return embed_rational(b, mpz_class(p), mpz_class(q));
}

enum class Rounding { Up, Down };

/// Non-negative magnitude. Exact rational for the exact backends, a double for
/// Float64. Arithmetic on double magnitudes is directed: operators round up so
/// that bounds built from them stay upper bounds; `add(..., Rounding::Down)`
/// is available for lower bounds.
class NormValue {
 public:
  NormValue() : value_(mpq_class(0)) {}
  explicit NormValue(mpq_class v);
  explicit NormValue(double v);

  static NormValue zero_for(Backend b);
  static NormValue from_scalar(const Scalar& s);  // requires s >= 0

  bool is_exact() const { return value_.index() == 0; }
  bool is_zero() const;
  const mpq_class& as_rational() const { return std::get<mpq_class>(value_); }
  double to_double(Rounding r = Rounding::Up) const;
  std::string to_string() const;

  static NormValue add(const NormValue& a, const NormValue& b, Rounding r);
  static NormValue mul(const NormValue& a, const NormValue& b, Rounding r);
  /// max(0, a - b)
  static NormValue monus(const NormValue& a, const NormValue& b, Rounding r);

  friend NormValue operator+(const NormValue& a, const NormValue& b) {
    return add(a, b, Rounding::Up);
  }
  friend NormValue operator*(const NormValue& a, const NormValue& b) {
    return mul(a, b, Rounding::Up);
  }
  friend bool operator==(const NormValue& a, const NormValue& b);
  friend bool operator<(const NormValue& a, const NormValue& b);
  friend bool operator<=(const NormValue& a, const NormValue& b) { return !(b < a); }
  friend bool operator>(const NormValue& a, const NormValue& b) { return b < a; }
  friend bool operator>=(const NormValue& a, const NormValue& b) { return !(a < b); }

 private:
  std::variant<mpq_class, double> value_;
};

NormValue max(const NormValue& a, const NormValue& b);
std::ostream& operator<<(std::ostream& os, const NormValue& n);

/// |a|: absolute value, multiplicative and subadditive.
NormValue ring_norm(const Scalar& a);

}  // namespace falg
