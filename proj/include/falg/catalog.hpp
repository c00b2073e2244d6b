#pragma once

// Builtin algebras and their label codecs. Every fixture puts the unit at
// index 0.
//
//   polynomial   x^n <-> n, x^m x^n = x^(m+n)
//   free:k       words over k letters a, b, ... in length-lex order,
//                product = concatenation ("1" is the empty word)
//   quaternion   1, i, j, k <-> 0..3
//   complex      1, i <-> 0, 1
//   group_z      g^n <-> zig-zag(n) = 0, 1, -1, 2, -2, ... <-> 0, 1, 2, 3, 4, ...
//
// Every codec also understands the generic spelling e<index>.

#include "falg/algebra.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace falg {

class LabelError : public Error {
 public:
  using Error::Error;
};

class LabelCodec {
 public:
  virtual ~LabelCodec() = default;
  virtual BasisIndex encode(std::string_view label) const = 0;
  virtual std::string decode(BasisIndex index) const = 0;
};

/// Only e<index> labels; used for algebras loaded from JSON.
std::shared_ptr<const LabelCodec> generic_codec();

struct AlgebraFixture {
  StructureTable table;
  std::shared_ptr<const LabelCodec> codec;
};

/// Throws DomainError for unknown names and free:0.
AlgebraFixture load_builtin(std::string_view name, Backend b = Backend::Rational);

inline BasisIndex label_encode(const AlgebraFixture& f, std::string_view label) {
  return f.codec->encode(label);
}
inline std::string label_decode(const AlgebraFixture& f, BasisIndex index) {
  return f.codec->decode(index);
}

}  // namespace falg
