#include "falg/tensor.hpp"

#include "falg/random.hpp"

#include <charconv>
#include <sstream>

namespace falg {

Tensor::Tensor(std::size_t arity, Backend b) : arity_(arity), backend_(b) {
  if (arity == 0) throw DomainError("tensor arity must be >= 1");
}

Tensor::Tensor(std::size_t arity, Backend b, Coords coords) : Tensor(arity, b) {
  for (auto it = coords.begin(); it != coords.end();) {
    if (it->first.size() != arity) throw DomainError("tensor component key has wrong arity");
    if (it->second.backend() != b) throw BackendMismatch("tensor component backend mismatch");
    if (it->second.is_zero())
      it = coords.erase(it);
    else
      ++it;
  }
  coords_ = std::move(coords);
}

Scalar Tensor::component(const MultiIndex& idx) const {
  auto it = coords_.find(idx);
  return it == coords_.end() ? Scalar::zero(backend_) : it->second;
}

bool Tensor::well_formed() const {
  for (const auto& [k, c] : coords_)
    if (k.size() != arity_ || c.is_zero() || c.backend() != backend_) return false;
  return true;
}

Tensor tensor_pure(std::span<const Vector> xs) {
  if (xs.empty()) throw DomainError("tensor_pure: arity 0");
  const Backend b = xs.front().backend();
  for (const auto& x : xs)
    if (x.backend() != b) throw BackendMismatch("tensor_pure: backend mismatch");

  // Cartesian product of supports, carrying the partial product.
  std::vector<std::pair<MultiIndex, Scalar>> partial{{MultiIndex{}, Scalar::one(b)}};
  for (const auto& x : xs) {
    std::vector<std::pair<MultiIndex, Scalar>> next;
    next.reserve(partial.size() * x.support_size());
    for (const auto& [idx, c] : partial)
      for (const auto& [i, xi] : x.coords()) {
        auto key = idx;
        key.push_back(i);
        next.emplace_back(std::move(key), c * xi);
      }
    partial = std::move(next);
  }
  Tensor::Coords coords(std::make_move_iterator(partial.begin()),
                        std::make_move_iterator(partial.end()));
  return Tensor(xs.size(), b, std::move(coords));
}

Tensor add(const Tensor& s, const Tensor& t) {
  if (s.arity() != t.arity()) throw DomainError("tensor_add: arity mismatch");
  if (s.backend() != t.backend()) throw BackendMismatch("tensor_add: backend mismatch");
  Tensor::Coords acc = s.coords();
  for (const auto& [k, c] : t.coords()) {
    auto [it, inserted] = acc.try_emplace(k, c);
    if (!inserted) it->second = it->second + c;
  }
  return Tensor(s.arity(), s.backend(), std::move(acc));
}

Tensor scale(const Scalar& d, const Tensor& t) {
  if (d.backend() != t.backend()) throw BackendMismatch("tensor_scale: backend mismatch");
  Tensor::Coords out;
  if (!d.is_zero())
    for (const auto& [k, c] : t.coords()) out.emplace_hint(out.end(), k, d * c);
  return Tensor(t.arity(), t.backend(), std::move(out));
}

std::string multi_index_key(const MultiIndex& idx) {
  std::string out;
  for (std::size_t s = 0; s < idx.size(); ++s) {
    if (s) out += ',';
    out += std::to_string(idx[s]);
  }
  return out;
}

MultiIndex parse_multi_index(std::string_view key) {
  MultiIndex out;
  for (;;) {
    auto comma = key.find(',');
    auto part = key.substr(0, comma);
    BasisIndex v = 0;
    auto res = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || res.ec != std::errc() || res.ptr != part.data() + part.size())
      throw DomainError("malformed multi-index '" + std::string(key) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    key.remove_prefix(comma + 1);
  }
  return out;
}

Vector map_via_tensor(const StructureTable& a2, const Tensor& t, const LinearMap& f, const Vector& x,
                      const AssociativitySample& sample) {
  if (t.arity() != 2) throw DomainError("map_via_tensor: tensor arity must be 2");
  if (!a2.claims().associative)
    throw NotAssociative("map_via_tensor: algebra '" + a2.name() + "' does not claim associativity");

  const Backend b = a2.backend();
  BasisIndex range = sample.max_index;
  if (auto dim = a2.dimension()) range = std::min(range, *dim);
  Rng rng(sample.seed);
  for (std::size_t n = 0; n < sample.triples && range > 0; ++n) {
    auto i = rng.below(range), j = rng.below(range), k = rng.below(range);
    if (!associator(a2, Vector::basis(b, i), Vector::basis(b, j), Vector::basis(b, k)).is_zero()) {
      std::ostringstream os;
      os << "map_via_tensor: algebra '" << a2.name() << "' fails associativity at (e" << i << ",e"
         << j << ",e" << k << ")";
      throw NotAssociative(os.str());
    }
  }

  const Vector fx = apply(f, x);
  Vector out(b);
  for (const auto& [idx, c] : t.coords()) {
    auto left = alg_mul(a2, Vector::basis(b, idx[0]), fx);
    out = out + scale(c, alg_mul(a2, left, Vector::basis(b, idx[1])));
  }
  return out;
}

}  // namespace falg
