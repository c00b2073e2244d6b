#pragma once

// JSON wire formats. Indices are decimal strings, scalars are strings in the
// ring serialization, and absent keys mean zero.
//
//   vector / functional  {"coords": {"<i>": "<scalar>", ...}}
//   map                  {"cols": {"<j>": {"<i>": "<scalar>", ...}, ...}}
//   tensor               {"arity": n, "coords": {"i1,...,in": "<scalar>", ...}}
//   tail vector          {"coords": {...}, "tail": "<scalar >= 0>"}
//   tail map             {"cols": {...}, "tail": "<scalar >= 0>"}
//   algebra              {"name": str, "builtin": str | absent,
//                         "structure": [{"i":int,"j":int,"k":int,"c":"<scalar>"}, ...],
//                         "pairBound": "<scalar>", "claims": {"associative": bool,
//                         "commutative": bool}}

#include "falg/catalog.hpp"
#include "falg/schauder.hpp"
#include "falg/tensor.hpp"

#include <json.hpp>

namespace falg::json {

using nlohmann::json;

class FormatError : public Error {
 public:
  using Error::Error;
};

json to_json(const Scalar& s);
json to_json(const Vector& v);
json to_json(const Functional& phi);
json to_json(const LinearMap& f);
json to_json(const Tensor& t);
json to_json(const TailVector& v);
json to_json(const TailMap& f);
json to_json(const NormInterval& n);

Scalar scalar_from_json(const json& j, Backend b);
Vector vector_from_json(const json& j, Backend b);
Functional functional_from_json(const json& j, Backend b);
LinearMap map_from_json(const json& j, Backend b);
Tensor tensor_from_json(const json& j, Backend b);
/// A missing "tail" reads as 0.
TailVector tail_vector_from_json(const json& j, Backend b);
TailMap tail_map_from_json(const json& j, Backend b);

/// Builtins resolve through the catalog; extensional tables get the generic
/// e<index> codec. Top-level "pairBound"/"claims" override a builtin's.
AlgebraFixture algebra_from_json(const json& j, Backend b);

}  // namespace falg::json
