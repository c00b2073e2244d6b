#include "falg/schauder.hpp"

namespace falg {

namespace {

constexpr auto Up = Rounding::Up;
constexpr auto Down = Rounding::Down;

NormValue tail_from_scalar(const Scalar& s) {
  switch (s.backend()) {
    case Backend::Integer:
      if (s.as_integer() < 0) throw DomainError("negative tail bound " + s.to_string());
      break;
    case Backend::Rational:
      if (s.as_rational() < 0) throw DomainError("negative tail bound " + s.to_string());
      break;
    case Backend::Float64:
      if (!(s.as_float() >= 0)) throw DomainError("negative tail bound " + s.to_string());
      break;
  }
  return NormValue::from_scalar(s);
}

// Largest column sum, rounded as requested.
NormValue max_column(const LinearMap& f, Rounding r) {
  NormValue best = NormValue::zero_for(f.backend());
  for (const auto& [j, col] : f.columns()) best = max(best, l1_norm(col, r));
  return best;
}

bool covers(const Vector& v, const Vector& w) {
  for (const auto& [i, c] : w.coords())
    if (v.coords().count(i) == 0) return false;
  return true;
}

}  // namespace

std::string NormInterval::to_string() const { return "[" + lo.to_string() + ", " + hi.to_string() + "]"; }

TailVector::TailVector(Backend b) : prefix_(b), tail_(NormValue::zero_for(b)), exact_prefix_(true) {}

TailVector::TailVector(Vector prefix, NormValue tail, bool exact_prefix)
    : prefix_(std::move(prefix)), tail_(std::move(tail)), exact_prefix_(exact_prefix || tail_.is_zero()) {}

TailVector TailVector::lift(Vector v) {
  auto b = v.backend();
  return TailVector(std::move(v), NormValue::zero_for(b));
}

bool TailVector::well_formed() const { return prefix_.well_formed(); }

TailVector tv_make(Vector prefix, const Scalar& tail) {
  return TailVector(std::move(prefix), tail_from_scalar(tail));
}

TailVector tv_add(const TailVector& u, const TailVector& v) {
  // With exact prefixes, an index stored in one operand but not the other
  // picks up unknown tail mass from the other side.
  bool exact = u.exact_prefix() && v.exact_prefix() &&
               (u.tail().is_zero() || covers(u.prefix(), v.prefix())) &&
               (v.tail().is_zero() || covers(v.prefix(), u.prefix()));
  return TailVector(u.prefix() + v.prefix(), u.tail() + v.tail(), exact);
}

TailVector tv_scale(const Scalar& d, const TailVector& v) {
  if (d.is_zero()) return TailVector(v.backend());
  return TailVector(scale(d, v.prefix()), ring_norm(d) * v.tail(), v.exact_prefix());
}

NormInterval tv_norm(const TailVector& v) {
  auto lo_sum = l1_norm(v.prefix(), Down);
  auto hi_sum = l1_norm(v.prefix(), Up);
  NormValue lo = v.exact_prefix() ? lo_sum : NormValue::monus(lo_sum, v.tail(), Down);
  return {lo, hi_sum + v.tail()};
}

TailVector tv_truncate(const TailVector& v, const std::set<BasisIndex>& keep) {
  Vector::Coords kept;
  NormValue dropped = NormValue::zero_for(v.backend());
  for (const auto& [i, c] : v.prefix().coords()) {
    if (keep.count(i))
      kept.emplace_hint(kept.end(), i, c);
    else
      dropped = dropped + ring_norm(c);
  }
  return TailVector(Vector(v.backend(), std::move(kept)), v.tail() + dropped, v.exact_prefix());
}

// ---------------------------------------------------------------------------

TailMap::TailMap(Backend b) : finite_(b), tail_(NormValue::zero_for(b)), exact_part_(true) {}

TailMap::TailMap(LinearMap finite, NormValue tail, bool exact_part)
    : finite_(std::move(finite)), tail_(std::move(tail)), exact_part_(exact_part || tail_.is_zero()) {}

TailMap TailMap::lift(LinearMap f) {
  auto b = f.backend();
  return TailMap(std::move(f), NormValue::zero_for(b));
}

TailMap tm_make(LinearMap finite, const Scalar& tail) {
  return TailMap(std::move(finite), tail_from_scalar(tail));
}

NormInterval tm_bound(const TailMap& f) {
  auto col = max_column(f.finite(), Down);
  NormValue lo = f.exact_part() ? col : NormValue::monus(col, f.tail(), Down);
  return {lo, l1_norm(f.finite(), Up) + f.tail()};
}

TailVector tm_apply(const TailMap& f, const TailVector& v) {
  auto prefix = apply(f.finite(), v.prefix());
  auto ff = l1_norm(f.finite(), Up);
  auto sv = l1_norm(v.prefix(), Up);
  auto tail = ff * v.tail() + f.tail() * (sv + v.tail());
  return TailVector(std::move(prefix), std::move(tail), false);
}

TailMap tm_compose(const TailMap& f, const TailMap& g) {
  auto finite = compose(f.finite(), g.finite());
  auto ff = l1_norm(f.finite(), Up);
  auto gf = l1_norm(g.finite(), Up);
  auto tail = ff * g.tail() + f.tail() * (gf + g.tail());
  return TailMap(std::move(finite), std::move(tail), false);
}

TailVector tv_mul(const StructureTable& t, const TailVector& a, const TailVector& b) {
  if (!t.pair_bound())
    throw MissingPairBound("tv_mul: algebra '" + t.name() + "' declares no pairBound");
  const auto& k = *t.pair_bound();
  auto prefix = alg_mul(t, a.prefix(), b.prefix());
  auto sa = l1_norm(a.prefix(), Up);
  auto sb = l1_norm(b.prefix(), Up);
  auto tail = k * (sa * b.tail() + a.tail() * sb + a.tail() * b.tail());
  return TailVector(std::move(prefix), std::move(tail), false);
}

// ---------------------------------------------------------------------------

TailPolyMap TailPolyMap::peel(const TailVector& x) const {
  auto ff = finite_.coefficient_mass();
  auto sx = l1_norm(x.prefix(), Up);
  auto tail = ff * x.tail() + tail_ * (sx + x.tail());
  return TailPolyMap(finite_.peel(x.prefix()), std::move(tail));
}

NormValue tpoly_bound(const TailPolyMap& f) { return f.finite().coefficient_mass() + f.tail(); }

NormValue tpoly_top_level_bound(const TailPolyMap& f) {
  NormValue total = NormValue::zero_for(f.backend());
  if (f.arity() == 1) {
    for (const auto& [j, col] : f.finite().leaf().columns()) total = total + l1_norm(col, Up);
  } else {
    for (const auto& [j, s] : f.finite().slices()) total = total + s.coefficient_mass();
  }
  return total + f.tail();
}

TailVector tpoly_apply(const TailPolyMap& f, std::span<const TailVector> xs) {
  if (xs.size() != f.arity())
    throw DomainError("tpoly_apply: arity " + std::to_string(f.arity()) + " but " +
                      std::to_string(xs.size()) + " arguments");
  TailPolyMap h = f;
  for (std::size_t s = 0; s + 1 < xs.size(); ++s) h = h.peel(xs[s]);
  return tm_apply(TailMap(h.finite().leaf(), h.tail(), false), xs.back());
}

}  // namespace falg
