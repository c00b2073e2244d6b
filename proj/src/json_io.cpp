#include "falg/json_io.hpp"

#include <charconv>

namespace falg::json {

namespace {

BasisIndex parse_index(const std::string& key) {
  BasisIndex i = 0;
  auto res = std::from_chars(key.data(), key.data() + key.size(), i);
  if (key.empty() || res.ec != std::errc() || res.ptr != key.data() + key.size())
    throw FormatError("malformed basis index '" + key + "'");
  return i;
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing \"") + key + "\"");
  return j.at(key);
}

json coords_object(const Vector& v) {
  json out = json::object();
  for (const auto& [i, c] : v.coords()) out[std::to_string(i)] = to_json(c);
  return out;
}

json cols_object(const LinearMap& f) {
  json out = json::object();
  for (const auto& [j, col] : f.columns()) out[std::to_string(j)] = coords_object(col);
  return out;
}

Vector coords_from(const json& obj, Backend b) {
  if (!obj.is_object()) throw FormatError("\"coords\" must be an object");
  Vector::Coords coords;
  for (const auto& [key, value] : obj.items()) coords.emplace(parse_index(key), scalar_from_json(value, b));
  return Vector(b, std::move(coords));
}

LinearMap cols_from(const json& obj, Backend b) {
  if (!obj.is_object()) throw FormatError("\"cols\" must be an object");
  LinearMap::Columns cols;
  for (const auto& [key, value] : obj.items()) cols.emplace(parse_index(key), coords_from(value, b));
  return LinearMap(b, std::move(cols));
}

Scalar tail_from(const json& j, Backend b) {
  if (!j.contains("tail")) return Scalar::zero(b);
  // Tails of integer-backend values may still be fractional.
  return scalar_from_json(j.at("tail"), b == Backend::Integer ? Backend::Rational : b);
}

}  // namespace

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const Vector& v) { return {{"coords", coords_object(v)}}; }

json to_json(const Functional& phi) { return to_json(phi.coords()); }

json to_json(const LinearMap& f) { return {{"cols", cols_object(f)}}; }

json to_json(const Tensor& t) {
  json coords = json::object();
  for (const auto& [idx, c] : t.coords()) coords[multi_index_key(idx)] = to_json(c);
  return {{"arity", t.arity()}, {"coords", coords}};
}

json to_json(const TailVector& v) {
  return {{"coords", coords_object(v.prefix())}, {"tail", v.tail().to_string()}};
}

json to_json(const TailMap& f) {
  return {{"cols", cols_object(f.finite())}, {"tail", f.tail().to_string()}};
}

json to_json(const NormInterval& n) { return {{"lo", n.lo.to_string()}, {"hi", n.hi.to_string()}}; }

Scalar scalar_from_json(const json& j, Backend b) {
  if (j.is_string()) return Scalar::parse(b, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::parse(b, j.dump());
  if (j.is_number_float() && b == Backend::Float64) return Scalar(j.get<double>());
  throw FormatError("scalar must be a string, got " + j.dump());
}

Vector vector_from_json(const json& j, Backend b) { return coords_from(member(j, "coords"), b); }

Functional functional_from_json(const json& j, Backend b) { return Functional(vector_from_json(j, b)); }

LinearMap map_from_json(const json& j, Backend b) { return cols_from(member(j, "cols"), b); }

Tensor tensor_from_json(const json& j, Backend b) {
  const auto& arity = member(j, "arity");
  if (!arity.is_number_unsigned() || arity.get<std::size_t>() == 0)
    throw FormatError("\"arity\" must be a positive integer");
  const auto& obj = member(j, "coords");
  if (!obj.is_object()) throw FormatError("\"coords\" must be an object");
  Tensor::Coords coords;
  for (const auto& [key, value] : obj.items()) coords.emplace(parse_multi_index(key), scalar_from_json(value, b));
  return Tensor(arity.get<std::size_t>(), b, std::move(coords));
}

TailVector tail_vector_from_json(const json& j, Backend b) {
  return tv_make(vector_from_json(j, b), tail_from(j, b));
}

TailMap tail_map_from_json(const json& j, Backend b) {
  return tm_make(map_from_json(j, b), tail_from(j, b));
}

AlgebraFixture algebra_from_json(const json& j, Backend b) {
  if (!j.is_object()) throw FormatError("algebra must be a JSON object");

  std::optional<NormValue> pair_bound;
  if (j.contains("pairBound")) {
    auto k = scalar_from_json(j.at("pairBound"), b == Backend::Integer ? Backend::Rational : b);
    pair_bound = NormValue::from_scalar(k);  // throws for negative bounds
  }
  std::optional<Claims> claims;
  if (j.contains("claims")) {
    const auto& c = j.at("claims");
    if (!c.is_object()) throw FormatError("\"claims\" must be an object");
    claims = Claims{c.value("associative", false), c.value("commutative", false)};
  }

  if (j.contains("builtin")) {
    auto fixture = load_builtin(j.at("builtin").get<std::string>(), b);
    if (pair_bound || claims) {
      const auto& t = fixture.table;
      auto rebuilt_claims = claims.value_or(t.claims());
      auto rebuilt_bound = pair_bound ? pair_bound : t.pair_bound();
      auto name = j.value("name", t.name());
      if (t.is_extensional())
        fixture.table = StructureTable::extensional(name, b, t.entries(), rebuilt_bound, rebuilt_claims);
      else
        fixture.table = StructureTable::from_rule(
            name, b, [t](BasisIndex i, BasisIndex k) { return t.lookup(i, k); }, rebuilt_bound,
            rebuilt_claims);
    }
    return fixture;
  }

  const auto& rows = member(j, "structure");
  if (!rows.is_array()) throw FormatError("\"structure\" must be an array");
  std::map<std::pair<BasisIndex, BasisIndex>, Vector::Coords> acc;
  for (const auto& row : rows) {
    auto idx = [&](const char* key) {
      const auto& v = member(row, key);
      if (!v.is_number_unsigned()) throw FormatError(std::string("\"") + key + "\" must be a non-negative integer");
      return v.get<BasisIndex>();
    };
    auto c = scalar_from_json(member(row, "c"), b);
    auto& coords = acc[{idx("i"), idx("j")}];
    auto [it, inserted] = coords.try_emplace(idx("k"), c);
    if (!inserted) it->second = it->second + c;
  }
  StructureTable::Entries entries;
  for (auto& [key, coords] : acc) entries.emplace(key, Vector(b, std::move(coords)));
  return {StructureTable::extensional(j.value("name", "custom"), b, std::move(entries), pair_bound,
                                      claims.value_or(Claims{})),
          generic_codec()};
}

}  // namespace falg::json
