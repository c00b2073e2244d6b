#include "falg/ring.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace falg {

namespace {

[[noreturn]] void mismatch(const Scalar& a, const Scalar& b) {
  throw BackendMismatch("backend mismatch: " + std::string(backend_name(a.backend())) +
                        " vs " + std::string(backend_name(b.backend())));
}

bool valid_integer_text(std::string_view t) {
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
  if (t.empty()) return false;
  for (char c : t)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view t) {
  if (!valid_integer_text(t)) throw DomainError("malformed integer '" + std::string(t) + "'");
  if (t.front() == '+') t.remove_prefix(1);
  return mpz_class(std::string(t), 10);
}

double round_rational(const mpq_class& q, Rounding r) {
  double d = q.get_d();
  mpq_class back(d);
  if (r == Rounding::Up && back < q) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  if (r == Rounding::Down && back > q) d = std::nextafter(d, -std::numeric_limits<double>::infinity());
  return d;
}

// Error-free transformations decide which way the rounded result went.
double add_directed(double a, double b, Rounding r) {
  double s = a + b;
  if (!std::isfinite(s)) return s;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  if (r == Rounding::Up && err > 0) return std::nextafter(s, std::numeric_limits<double>::infinity());
  if (r == Rounding::Down && err < 0) return std::nextafter(s, -std::numeric_limits<double>::infinity());
  return s;
}

double mul_directed(double a, double b, Rounding r) {
  double p = a * b;
  if (!std::isfinite(p)) return p;
  double err = std::fma(a, b, -p);
  if (r == Rounding::Up && err > 0) return std::nextafter(p, std::numeric_limits<double>::infinity());
  if (r == Rounding::Down && err < 0) return std::nextafter(p, -std::numeric_limits<double>::infinity());
  return p;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Integer: return "int";
    case Backend::Rational: return "rat";
    case Backend::Float64: return "f64";
  }
  return "?";
}

Backend parse_backend(std::string_view name) {
  if (name == "int") return Backend::Integer;
  if (name == "rat") return Backend::Rational;
  if (name == "f64") return Backend::Float64;
  throw DomainError("unknown backend '" + std::string(name) + "'");
}

Scalar Scalar::zero(Backend b) {
  switch (b) {
    case Backend::Integer: return Scalar(mpz_class(0));
    case Backend::Rational: return Scalar(mpq_class(0));
    case Backend::Float64: return Scalar(0.0);
  }
  return {};
}

Scalar Scalar::one(Backend b) {
  switch (b) {
    case Backend::Integer: return Scalar(mpz_class(1));
    case Backend::Rational: return Scalar(mpq_class(1));
    case Backend::Float64: return Scalar(1.0);
  }
  return {};
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { return v == 0; }, value_);
}

bool Scalar::is_one() const {
  return std::visit([](const auto& v) { return v == 1; }, value_);
}

std::string Scalar::to_string() const {
  switch (backend()) {
    case Backend::Integer: return as_integer().get_str();
    case Backend::Rational: return as_rational().get_str();
    case Backend::Float64: return format_double(as_float());
  }
  return {};
}

Scalar Scalar::parse(Backend b, std::string_view text) {
  auto slash = text.find('/');
  switch (b) {
    case Backend::Integer:
      if (slash != std::string_view::npos)
        throw DomainError("rational literal '" + std::string(text) + "' in integer backend");
      return Scalar(parse_integer(text));
    case Backend::Rational:
      if (slash == std::string_view::npos) return Scalar(mpq_class(parse_integer(text)));
      return embed_rational(b, parse_integer(text.substr(0, slash)),
                            parse_integer(text.substr(slash + 1)));
    case Backend::Float64: {
      if (slash != std::string_view::npos)
        return embed_rational(b, parse_integer(text.substr(0, slash)),
                              parse_integer(text.substr(slash + 1)));
      double v = 0;
      auto* first = text.data();
      if (!text.empty() && text.front() == '+') ++first;
      auto res = std::from_chars(first, text.data() + text.size(), v);
      if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(v))
        throw DomainError("malformed float '" + std::string(text) + "'");
      return Scalar(v);
    }
  }
  throw DomainError("unknown backend");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) mismatch(a, b);
  return std::visit(
      [&](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        return Scalar(T(x + std::get<T>(b.value_)));
      },
      a.value_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) mismatch(a, b);
  return std::visit(
      [&](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        return Scalar(T(x - std::get<T>(b.value_)));
      },
      a.value_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) mismatch(a, b);
  return std::visit(
      [&](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        return Scalar(T(x * std::get<T>(b.value_)));
      },
      a.value_);
}

Scalar operator-(const Scalar& a) {
  return std::visit([](const auto& x) -> Scalar {
    using T = std::decay_t<decltype(x)>;
    return Scalar(T(-x));
  }, a.value_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return x == std::get<T>(b.value_);
      },
      a.value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar embed_int(Backend b, const mpz_class& n) {
  switch (b) {
    case Backend::Integer: return Scalar(n);
    case Backend::Rational: return Scalar(mpq_class(n));
    case Backend::Float64: return Scalar(n.get_d());
  }
  return {};
}

Scalar embed_rational(Backend b, const mpz_class& p, const mpz_class& q) {
  if (q == 0) throw DomainError("embed_rational: zero denominator");
  switch (b) {
    case Backend::Integer:
      throw DomainError("embed_rational: integer backend is not a Q-algebra");
    case Backend::Rational: return Scalar(mpq_class(p, q));
    case Backend::Float64: {
      mpq_class v(p, q);
      v.canonicalize();
      return Scalar(v.get_d());
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

NormValue::NormValue(mpq_class v) : value_(std::move(v)) {
  auto& q = std::get<mpq_class>(value_);
  q.canonicalize();
  if (q < 0) throw DomainError("negative norm value " + q.get_str());
}

NormValue::NormValue(double v) : value_(v) {
  if (!(v >= 0)) throw DomainError("negative or NaN norm value " + format_double(v));
}

NormValue NormValue::zero_for(Backend b) {
  return b == Backend::Float64 ? NormValue(0.0) : NormValue(mpq_class(0));
}

NormValue NormValue::from_scalar(const Scalar& s) {
  switch (s.backend()) {
    case Backend::Integer: return NormValue(mpq_class(s.as_integer()));
    case Backend::Rational: return NormValue(s.as_rational());
    case Backend::Float64: return NormValue(s.as_float());
  }
  return {};
}

bool NormValue::is_zero() const {
  return std::visit([](const auto& v) { return v == 0; }, value_);
}

double NormValue::to_double(Rounding r) const {
  if (is_exact()) return round_rational(as_rational(), r);
  return std::get<double>(value_);
}

std::string NormValue::to_string() const {
  if (is_exact()) return as_rational().get_str();
  return format_double(std::get<double>(value_));
}

NormValue NormValue::add(const NormValue& a, const NormValue& b, Rounding r) {
  if (a.is_exact() && b.is_exact()) return NormValue(mpq_class(a.as_rational() + b.as_rational()));
  return NormValue(add_directed(a.to_double(r), b.to_double(r), r));
}

NormValue NormValue::mul(const NormValue& a, const NormValue& b, Rounding r) {
  if (a.is_exact() && b.is_exact()) return NormValue(mpq_class(a.as_rational() * b.as_rational()));
  return NormValue(mul_directed(a.to_double(r), b.to_double(r), r));
}

NormValue NormValue::monus(const NormValue& a, const NormValue& b, Rounding r) {
  if (a.is_exact() && b.is_exact()) {
    mpq_class d = a.as_rational() - b.as_rational();
    return NormValue(d < 0 ? mpq_class(0) : d);
  }
  Rounding opposite = r == Rounding::Up ? Rounding::Down : Rounding::Up;
  double d = add_directed(a.to_double(r), -b.to_double(opposite), r);
  return NormValue(d < 0 ? 0.0 : d);
}

bool operator==(const NormValue& a, const NormValue& b) {
  if (a.is_exact() && b.is_exact()) return a.as_rational() == b.as_rational();
  if (!a.is_exact() && !b.is_exact()) return std::get<double>(a.value_) == std::get<double>(b.value_);
  const auto& q = a.is_exact() ? a.as_rational() : b.as_rational();
  double d = a.is_exact() ? std::get<double>(b.value_) : std::get<double>(a.value_);
  return q == mpq_class(d);
}

bool operator<(const NormValue& a, const NormValue& b) {
  auto exact = [](const NormValue& n) {
    return n.is_exact() ? n.as_rational() : mpq_class(std::get<double>(n.value_));
  };
  if (!a.is_exact() && !b.is_exact()) return std::get<double>(a.value_) < std::get<double>(b.value_);
  if (!a.is_exact() && std::isinf(std::get<double>(a.value_))) return false;
  if (!b.is_exact() && std::isinf(std::get<double>(b.value_))) return true;
  return exact(a) < exact(b);
}

NormValue max(const NormValue& a, const NormValue& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const NormValue& n) { return os << n.to_string(); }

NormValue ring_norm(const Scalar& a) {
  switch (a.backend()) {
    case Backend::Integer: return NormValue(mpq_class(abs(a.as_integer())));
    case Backend::Rational: return NormValue(mpq_class(abs(a.as_rational())));
    case Backend::Float64: return NormValue(std::fabs(a.as_float()));
  }
  return {};
}

}  // namespace falg
