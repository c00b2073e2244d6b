#include "falg/algebra.hpp"

#include "falg/random.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace falg {

struct StructureTable::Impl {
  std::string name;
  Backend backend;
  std::optional<NormValue> pair_bound;
  Claims claims;
  Entries entries;
  Rule rule;
  std::optional<BasisIndex> dimension;

  mutable std::mutex mutex;
  mutable Entries cache;
};

namespace {

void check_bound(const StructureTable& t, BasisIndex i, BasisIndex j, const Vector& v) {
  if (!t.pair_bound()) return;
  auto mass = l1_norm(v);
  if (*t.pair_bound() < mass) {
    std::ostringstream os;
    os << "structure table '" << t.name() << "': entry (" << i << "," << j << ") has mass "
       << mass << " above pairBound " << *t.pair_bound();
    throw PairBoundViolation(os.str());
  }
}

}  // namespace

StructureTable StructureTable::extensional(std::string name, Backend b, Entries entries,
                                           std::optional<NormValue> pair_bound, Claims claims) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->backend = b;
  impl->pair_bound = std::move(pair_bound);
  impl->claims = claims;
  BasisIndex dim = 0;
  for (auto it = entries.begin(); it != entries.end();) {
    if (it->second.backend() != b) throw BackendMismatch("structure entry backend mismatch");
    if (it->second.is_zero()) {
      it = entries.erase(it);
      continue;
    }
    dim = std::max({dim, it->first.first + 1, it->first.second + 1,
                    it->second.coords().rbegin()->first + 1});
    ++it;
  }
  impl->entries = std::move(entries);
  impl->dimension = dim;
  return StructureTable(std::move(impl));
}

StructureTable StructureTable::from_rule(std::string name, Backend b, Rule rule,
                                         std::optional<NormValue> pair_bound, Claims claims) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->backend = b;
  impl->pair_bound = std::move(pair_bound);
  impl->claims = claims;
  impl->rule = std::move(rule);
  return StructureTable(std::move(impl));
}

const std::string& StructureTable::name() const { return impl_->name; }
Backend StructureTable::backend() const { return impl_->backend; }
const std::optional<NormValue>& StructureTable::pair_bound() const { return impl_->pair_bound; }
const Claims& StructureTable::claims() const { return impl_->claims; }
bool StructureTable::is_extensional() const { return !impl_->rule; }
std::optional<BasisIndex> StructureTable::dimension() const { return impl_->dimension; }
const StructureTable::Entries& StructureTable::entries() const { return impl_->entries; }

Vector StructureTable::lookup(BasisIndex i, BasisIndex j) const {
  if (!impl_->rule) {
    auto it = impl_->entries.find({i, j});
    if (it == impl_->entries.end()) return Vector(impl_->backend);
    check_bound(*this, i, j, it->second);
    return it->second;
  }
  {
    std::lock_guard lock(impl_->mutex);
    auto it = impl_->cache.find({i, j});
    if (it != impl_->cache.end()) return it->second;
  }
  Vector v = impl_->rule(i, j);
  if (v.backend() != impl_->backend) throw BackendMismatch("structure rule backend mismatch");
  check_bound(*this, i, j, v);
  std::lock_guard lock(impl_->mutex);
  return impl_->cache.try_emplace({i, j}, std::move(v)).first->second;
}

Vector alg_mul(const StructureTable& t, const Vector& a, const Vector& b) {
  if (a.backend() != b.backend() || a.backend() != t.backend())
    throw BackendMismatch("alg_mul: backend mismatch");
  Vector::Coords acc;
  for (const auto& [i, ai] : a.coords()) {
    for (const auto& [j, bj] : b.coords()) {
      auto ab = ai * bj;
      const Vector eij = t.lookup(i, j);
      for (const auto& [k, c] : eij.coords()) {
        auto term = ab * c;
        auto it = acc.find(k);
        if (it == acc.end()) {
          acc.emplace(k, std::move(term));
        } else {
          it->second = it->second + term;
        }
      }
    }
  }
  return Vector(a.backend(), std::move(acc));
}

Vector commutator(const StructureTable& t, const Vector& a, const Vector& b) {
  return sub(alg_mul(t, a, b), alg_mul(t, b, a));
}

Vector associator(const StructureTable& t, const Vector& a, const Vector& b, const Vector& c) {
  return sub(alg_mul(t, alg_mul(t, a, b), c), alg_mul(t, a, alg_mul(t, b, c)));
}

std::vector<AssociatorDefect> nucleus_defect(const StructureTable& t, const Vector& a,
                                             const std::vector<std::pair<Vector, Vector>>& witnesses) {
  using P = AssociatorDefect::Position;
  std::vector<AssociatorDefect> out;
  for (const auto& [x, y] : witnesses) {
    if (auto v = associator(t, a, x, y); !v.is_zero()) out.push_back({P::First, x, y, std::move(v)});
    if (auto v = associator(t, x, a, y); !v.is_zero()) out.push_back({P::Second, x, y, std::move(v)});
    if (auto v = associator(t, x, y, a); !v.is_zero()) out.push_back({P::Third, x, y, std::move(v)});
  }
  return out;
}

CenterDefect center_defect(const StructureTable& t, const Vector& a,
                           const std::vector<Vector>& witnesses) {
  CenterDefect out;
  for (const auto& x : witnesses)
    if (auto v = commutator(t, a, x); !v.is_zero()) out.commutators.push_back({x, std::move(v)});
  std::vector<std::pair<Vector, Vector>> pairs;
  for (const auto& x : witnesses)
    for (const auto& y : witnesses) pairs.emplace_back(x, y);
  out.associators = nucleus_defect(t, a, pairs);
  return out;
}

// ---------------------------------------------------------------------------

bool LawReport::all_passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const auto& l) { return l.passed; });
}

namespace {

constexpr std::size_t kMaxBasisSweep = 4096;

std::string describe(std::initializer_list<std::pair<const char*, const Vector*>> args) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, v] : args) {
    if (!first) os << ", ";
    first = false;
    os << name << "=" << *v;
  }
  return os.str();
}

std::string basis_tuple(std::initializer_list<BasisIndex> idx) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (auto i : idx) {
    if (!first) os << ',';
    first = false;
    os << 'e' << i;
  }
  os << ')';
  return os.str();
}

void fail(LawResult& r, std::string what) {
  if (!r.passed) return;
  r.passed = false;
  r.counterexample = std::move(what);
}

}  // namespace

LawReport check_laws(const StructureTable& t, std::size_t trials, BasisIndex max_index,
                     std::uint64_t seed) {
  if (trials == 0) throw DomainError("check_laws: trials must be >= 1");
  if (max_index == 0) throw DomainError("check_laws: max index must be >= 1");
  const Backend b = t.backend();
  if (b == Backend::Float64) throw DomainError("check_laws: exact laws are not checkable over f64");

  BasisIndex range = max_index;
  if (auto dim = t.dimension()) range = std::max<BasisIndex>(1, std::min(range, *dim));

  LawReport report;
  report.algebra = t.name();
  report.seed = seed;
  report.trials = trials;

  auto named = [](const char* law) {
    LawResult r;
    r.law = law;
    return r;
  };
  LawResult left = named("left_distributive"), right = named("right_distributive"),
            scal_l = named("scalar_left"), scal_r = named("scalar_right"),
            comm = named("commutative"), assoc = named("associative");

  if (t.claims().commutative) {
    for (BasisIndex i = 0; i < range && comm.passed; ++i)
      for (BasisIndex j = i + 1; j < range && comm.passed && comm.cases < kMaxBasisSweep; ++j) {
        ++comm.cases;
        if (t.lookup(i, j) != t.lookup(j, i)) fail(comm, basis_tuple({i, j}));
      }
  }
  if (t.claims().associative) {
    for (BasisIndex i = 0; i < range && assoc.passed; ++i)
      for (BasisIndex j = 0; j < range && assoc.passed; ++j)
        for (BasisIndex k = 0; k < range && assoc.passed && assoc.cases < kMaxBasisSweep; ++k) {
          ++assoc.cases;
          auto ei = Vector::basis(b, i), ej = Vector::basis(b, j), ek = Vector::basis(b, k);
          if (!associator(t, ei, ej, ek).is_zero()) fail(assoc, basis_tuple({i, j, k}));
        }
  }

  Rng rng(seed);
  for (std::size_t n = 0; n < trials; ++n) {
    auto u = rng.vector(b, range), v = rng.vector(b, range), w = rng.vector(b, range);
    auto d = rng.scalar(b);
    auto uv = alg_mul(t, u, v);

    ++left.cases;
    if (alg_mul(t, u + v, w) != alg_mul(t, u, w) + alg_mul(t, v, w))
      fail(left, describe({{"u", &u}, {"v", &v}, {"w", &w}}));
    ++right.cases;
    if (alg_mul(t, u, v + w) != uv + alg_mul(t, u, w))
      fail(right, describe({{"u", &u}, {"v", &v}, {"w", &w}}));
    ++scal_l.cases;
    if (alg_mul(t, d * u, v) != d * uv)
      fail(scal_l, "d=" + d.to_string() + ", " + describe({{"u", &u}, {"v", &v}}));
    ++scal_r.cases;
    if (alg_mul(t, u, d * v) != d * uv)
      fail(scal_r, "d=" + d.to_string() + ", " + describe({{"u", &u}, {"v", &v}}));
    if (t.claims().commutative) {
      ++comm.cases;
      if (uv != alg_mul(t, v, u)) fail(comm, describe({{"u", &u}, {"v", &v}}));
    }
    if (t.claims().associative) {
      ++assoc.cases;
      if (!associator(t, u, v, w).is_zero()) fail(assoc, describe({{"u", &u}, {"v", &v}, {"w", &w}}));
    }
  }

  report.laws = {left, right, scal_l, scal_r};
  if (t.claims().commutative) report.laws.push_back(comm);
  if (t.claims().associative) report.laws.push_back(assoc);
  return report;
}

}  // namespace falg
