#include "falg/hamel.hpp"

#include <algorithm>
#include <sstream>

namespace falg {

namespace {

void require_same(Backend a, Backend b, const char* op) {
  if (a != b)
    throw BackendMismatch(std::string(op) + ": backend mismatch (" + std::string(backend_name(a)) +
                          " vs " + std::string(backend_name(b)) + ")");
}

// v += d * w, pruning cancellations.
void axpy(Vector::Coords& acc, const Scalar& d, const Vector::Coords& w) {
  for (const auto& [i, c] : w) {
    auto prod = d * c;
    if (prod.is_zero()) continue;
    auto it = acc.find(i);
    if (it == acc.end()) {
      acc.emplace(i, std::move(prod));
    } else {
      it->second = it->second + prod;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

}  // namespace

Vector::Vector(Backend b, Coords coords) : backend_(b) {
  for (auto it = coords.begin(); it != coords.end();) {
    if (it->second.backend() != b)
      throw BackendMismatch("vector coordinate of backend " +
                            std::string(backend_name(it->second.backend())) + " in " +
                            std::string(backend_name(b)) + " vector");
    if (it->second.is_zero())
      it = coords.erase(it);
    else
      ++it;
  }
  coords_ = std::move(coords);
}

Vector Vector::basis(Backend b, BasisIndex i) { return Vector(b, {{i, Scalar::one(b)}}); }

Scalar Vector::coord(BasisIndex i) const {
  auto it = coords_.find(i);
  return it == coords_.end() ? Scalar::zero(backend_) : it->second;
}

bool Vector::well_formed() const {
  return std::all_of(coords_.begin(), coords_.end(), [&](const auto& kv) {
    return !kv.second.is_zero() && kv.second.backend() == backend_;
  });
}

Vector add(const Vector& u, const Vector& v) {
  require_same(u.backend(), v.backend(), "vec_add");
  Vector::Coords acc = u.coords();
  axpy(acc, Scalar::one(u.backend()), v.coords());
  return Vector(u.backend(), std::move(acc));
}

Vector sub(const Vector& u, const Vector& v) {
  require_same(u.backend(), v.backend(), "vec_sub");
  Vector::Coords acc = u.coords();
  axpy(acc, -Scalar::one(u.backend()), v.coords());
  return Vector(u.backend(), std::move(acc));
}

Vector scale(const Scalar& d, const Vector& v) {
  require_same(d.backend(), v.backend(), "vec_scale");
  Vector::Coords out;
  if (d.is_zero()) return Vector(v.backend());
  for (const auto& [i, c] : v.coords()) out.emplace_hint(out.end(), i, d * c);
  return Vector(v.backend(), std::move(out));
}

Vector negate(const Vector& v) { return scale(-Scalar::one(v.backend()), v); }

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [i, c] : v.coords()) {
    if (!first) os << ',';
    first = false;
    os << i << ':' << c;
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Vector& v) { return os << to_string(v); }

Scalar dual_eval(const Functional& phi, const Vector& v) {
  require_same(phi.backend(), v.backend(), "dual_eval");
  const auto& small = phi.coords().support_size() <= v.support_size() ? phi.coords() : v;
  const auto& large = &small == &v ? phi.coords() : v;
  Scalar sum = Scalar::zero(v.backend());
  for (const auto& [i, c] : small.coords()) {
    auto it = large.coords().find(i);
    if (it != large.coords().end()) sum = sum + c * it->second;
  }
  return sum;
}

// ---------------------------------------------------------------------------

LinearMap::LinearMap(Backend b, Columns cols) : backend_(b) {
  for (auto it = cols.begin(); it != cols.end();) {
    require_same(b, it->second.backend(), "LinearMap");
    if (it->second.is_zero())
      it = cols.erase(it);
    else
      ++it;
  }
  cols_ = std::move(cols);
}

LinearMap LinearMap::identity(Backend b, BasisIndex n) {
  Columns cols;
  for (BasisIndex j = 0; j < n; ++j) cols.emplace_hint(cols.end(), j, Vector::basis(b, j));
  return LinearMap(b, std::move(cols));
}

Vector LinearMap::column(BasisIndex j) const {
  auto it = cols_.find(j);
  return it == cols_.end() ? Vector(backend_) : it->second;
}

Scalar LinearMap::entry(BasisIndex i, BasisIndex j) const {
  auto it = cols_.find(j);
  return it == cols_.end() ? Scalar::zero(backend_) : it->second.coord(i);
}

std::size_t LinearMap::entry_count() const {
  std::size_t n = 0;
  for (const auto& [j, col] : cols_) n += col.support_size();
  return n;
}

bool LinearMap::well_formed() const {
  return std::all_of(cols_.begin(), cols_.end(), [&](const auto& kv) {
    return !kv.second.is_zero() && kv.second.well_formed() && kv.second.backend() == backend_;
  });
}

Vector apply(const LinearMap& f, const Vector& v) {
  require_same(f.backend(), v.backend(), "map_apply");
  Vector::Coords acc;
  for (const auto& [j, vj] : v.coords()) {
    auto it = f.columns().find(j);
    if (it != f.columns().end()) axpy(acc, vj, it->second.coords());
  }
  return Vector(v.backend(), std::move(acc));
}

LinearMap add(const LinearMap& f, const LinearMap& g) {
  require_same(f.backend(), g.backend(), "map_add");
  LinearMap::Columns cols = f.columns();
  for (const auto& [j, col] : g.columns()) {
    auto it = cols.find(j);
    if (it == cols.end())
      cols.emplace(j, col);
    else
      it->second = add(it->second, col);
  }
  return LinearMap(f.backend(), std::move(cols));
}

LinearMap scale(const Scalar& d, const LinearMap& f) {
  require_same(d.backend(), f.backend(), "map_scale");
  if (d.is_zero()) return LinearMap(f.backend());
  LinearMap::Columns cols;
  for (const auto& [j, col] : f.columns()) cols.emplace_hint(cols.end(), j, scale(d, col));
  return LinearMap(f.backend(), std::move(cols));
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  require_same(f.backend(), g.backend(), "map_compose");
  LinearMap::Columns cols;
  for (const auto& [j, col] : g.columns()) cols.emplace_hint(cols.end(), j, apply(f, col));
  return LinearMap(f.backend(), std::move(cols));
}

LinearMap basis_map(Backend b, BasisIndex i, BasisIndex j) {
  return LinearMap(b, {{j, Vector::basis(b, i)}});
}

// ---------------------------------------------------------------------------

PolyMap::PolyMap(LinearMap leaf) : arity_(1), leaf_(std::move(leaf)) {}

PolyMap::PolyMap(std::size_t arity, Backend b, std::map<BasisIndex, PolyMap> slices)
    : arity_(arity), leaf_(b) {
  if (arity < 2) throw DomainError("PolyMap: sliced form needs arity >= 2");
  for (auto& [j, s] : slices) {
    if (s.arity() != arity - 1) throw DomainError("PolyMap: slice arity mismatch");
    require_same(b, s.backend(), "PolyMap");
    if (!s.is_zero()) slices_.emplace_back(j, std::move(s));
  }
}

PolyMap PolyMap::zero(std::size_t arity, Backend b) {
  if (arity == 0) throw DomainError("PolyMap: arity 0");
  if (arity == 1) return PolyMap(LinearMap(b));
  return PolyMap(arity, b, {});
}

bool PolyMap::is_zero() const { return arity_ == 1 ? leaf_.is_zero() : slices_.empty(); }

PolyMap PolyMap::slice(BasisIndex j) const {
  if (arity_ < 2) throw DomainError("PolyMap::slice on a linear map");
  auto it = std::lower_bound(slices_.begin(), slices_.end(), j,
                             [](const auto& kv, BasisIndex k) { return kv.first < k; });
  if (it != slices_.end() && it->first == j) return it->second;
  return zero(arity_ - 1, backend());
}

PolyMap PolyMap::peel(const Vector& x) const {
  if (arity_ < 2) throw DomainError("PolyMap::peel on a linear map");
  require_same(backend(), x.backend(), "poly_apply");
  PolyMap acc = zero(arity_ - 1, backend());
  for (const auto& [j, xj] : x.coords()) {
    auto it = std::lower_bound(slices_.begin(), slices_.end(), j,
                               [](const auto& kv, BasisIndex k) { return kv.first < k; });
    if (it != slices_.end() && it->first == j) acc = add(acc, scale(xj, it->second));
  }
  return acc;
}

NormValue PolyMap::coefficient_mass() const {
  if (arity_ == 1) return l1_norm(leaf_);
  NormValue total = NormValue::zero_for(backend());
  for (const auto& [j, s] : slices_) total = total + s.coefficient_mass();
  return total;
}

bool operator==(const PolyMap& a, const PolyMap& b) {
  if (a.arity_ != b.arity_ || a.backend() != b.backend()) return false;
  if (a.arity_ == 1) return a.leaf_ == b.leaf_;
  return a.slices_ == b.slices_;
}

PolyMap add(const PolyMap& f, const PolyMap& g) {
  if (f.arity() != g.arity()) throw DomainError("PolyMap add: arity mismatch");
  require_same(f.backend(), g.backend(), "PolyMap add");
  if (f.arity() == 1) return PolyMap(add(f.leaf(), g.leaf()));
  PolyMap::Slices out;
  auto a = f.slices().begin(), ae = f.slices().end();
  auto b = g.slices().begin(), be = g.slices().end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      out.push_back(*b++);
    } else {
      auto s = add(a->second, b->second);
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  return PolyMap(f.arity(), LinearMap(f.backend()), std::move(out));
}

PolyMap scale(const Scalar& d, const PolyMap& f) {
  require_same(d.backend(), f.backend(), "PolyMap scale");
  if (f.arity() == 1) return PolyMap(scale(d, f.leaf()));
  if (d.is_zero()) return PolyMap::zero(f.arity(), f.backend());
  PolyMap::Slices out;
  out.reserve(f.slices().size());
  for (const auto& [j, s] : f.slices()) out.emplace_back(j, scale(d, s));
  return PolyMap(f.arity(), LinearMap(f.backend()), std::move(out));
}

Vector poly_apply(const PolyMap& f, std::span<const Vector> xs) {
  if (xs.size() != f.arity())
    throw DomainError("poly_apply: arity " + std::to_string(f.arity()) + " but " +
                      std::to_string(xs.size()) + " arguments");
  PolyMap h = f;
  for (std::size_t s = 0; s + 1 < xs.size(); ++s) h = h.peel(xs[s]);
  return apply(h.leaf(), xs.back());
}

NormValue l1_norm(const Vector& v, Rounding r) {
  NormValue total = NormValue::zero_for(v.backend());
  for (const auto& [i, c] : v.coords()) total = NormValue::add(total, ring_norm(c), r);
  return total;
}

NormValue l1_norm(const LinearMap& f, Rounding r) {
  NormValue total = NormValue::zero_for(f.backend());
  for (const auto& [j, col] : f.columns()) total = NormValue::add(total, l1_norm(col, r), r);
  return total;
}

}  // namespace falg
