#pragma once

/**
 * @file tensor.hpp
 * @brief Tensor products A_1 (x) ... (x) A_n of Hamel modules.
 *
 * A tensor is stored by its standard components: coordinates on the basis
 * tensors e_{i_1} (x) ... (x) e_{i_n}. The free module on the set product and
 * its balancing submodule are never materialized; the balancing relations
 * are identities satisfied by tensor_pure.
 */

#include "falg/algebra.hpp"

#include <map>
#include <span>
#include <vector>

namespace falg {

using MultiIndex = std::vector<BasisIndex>;

class Tensor {
 public:
  using Coords = std::map<MultiIndex, Scalar>;

  Tensor(std::size_t arity, Backend b);
  /// Drops zero components; every key must have length `arity`.
  Tensor(std::size_t arity, Backend b, Coords coords);

  std::size_t arity() const { return arity_; }
  Backend backend() const { return backend_; }
  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  Scalar component(const MultiIndex& idx) const;
  bool well_formed() const;

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  std::size_t arity_;
  Backend backend_;
  Coords coords_;
};

/// x_1 (x) ... (x) x_n; component (i_1..i_n) = prod_s x_s^{i_s}.
Tensor tensor_pure(std::span<const Vector> xs);
Tensor add(const Tensor& s, const Tensor& t);
Tensor scale(const Scalar& d, const Tensor& t);

inline Tensor tensor_add(const Tensor& s, const Tensor& t) { return add(s, t); }
inline Tensor tensor_scale(const Scalar& d, const Tensor& t) { return scale(d, t); }
inline const Tensor::Coords& standard_components(const Tensor& t) { return t.coords(); }

/// Comma-joined decimal key, "2,0,5".
std::string multi_index_key(const MultiIndex& idx);
MultiIndex parse_multi_index(std::string_view key);

/// Rejected precondition of map_via_tensor.
class NotAssociative : public Error {
 public:
  using Error::Error;
};

struct AssociativitySample {
  std::size_t triples = 64;
  std::uint64_t seed = 0;
  BasisIndex max_index = 16;
};

/**
 * The map A_1 -> A_2 generated by f through a 2-tensor t over A_2:
 *   x |-> sum_{i,j} t^{ij} (e_i f(x)) e_j.
 * A_2 must claim associativity and pass a seeded spot check on random basis
 * triples; otherwise NotAssociative is thrown.
 */
Vector map_via_tensor(const StructureTable& a2, const Tensor& t, const LinearMap& f, const Vector& x,
                      const AssociativitySample& sample = {});

}  // namespace falg
