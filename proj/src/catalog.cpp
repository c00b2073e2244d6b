#include "falg/catalog.hpp"

#include <charconv>
#include <limits>

namespace falg {

namespace {

constexpr BasisIndex kIndexMax = std::numeric_limits<BasisIndex>::max();

bool parse_unsigned(std::string_view s, BasisIndex& out) {
  if (s.empty()) return false;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

bool parse_signed(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

// e<index>; nullopt when the label is not of that form.
std::optional<BasisIndex> generic_label(std::string_view label) {
  BasisIndex i = 0;
  if (label.size() >= 2 && label.front() == 'e' && parse_unsigned(label.substr(1), i)) return i;
  return std::nullopt;
}

[[noreturn]] void bad_label(std::string_view fixture, std::string_view label) {
  throw LabelError("malformed " + std::string(fixture) + " label '" + std::string(label) + "'");
}

class GenericCodec final : public LabelCodec {
 public:
  BasisIndex encode(std::string_view label) const override {
    if (auto i = generic_label(label)) return *i;
    bad_label("basis", label);
  }
  std::string decode(BasisIndex index) const override { return "e" + std::to_string(index); }
};

class PolynomialCodec final : public LabelCodec {
 public:
  BasisIndex encode(std::string_view label) const override {
    if (auto i = generic_label(label)) return *i;
    if (label == "1") return 0;
    if (label == "x") return 1;
    BasisIndex n = 0;
    if (label.substr(0, 2) == "x^" && parse_unsigned(label.substr(2), n)) return n;
    bad_label("polynomial", label);
  }
  std::string decode(BasisIndex index) const override {
    if (index == 0) return "1";
    if (index == 1) return "x";
    return "x^" + std::to_string(index);
  }
};

/// Length-lex enumeration of words over `letters` symbols.
class FreeCodec final : public LabelCodec {
 public:
  explicit FreeCodec(unsigned letters) : k_(letters) {}

  using Word = std::vector<unsigned>;

  BasisIndex encode(std::string_view label) const override {
    if (auto i = generic_label(label)) return *i;
    if (label == "1") return 0;
    Word w;
    for (char c : label) {
      if (c < 'a' || static_cast<unsigned>(c - 'a') >= k_) bad_label("free", label);
      w.push_back(static_cast<unsigned>(c - 'a'));
    }
    return index_of(w);
  }

  std::string decode(BasisIndex index) const override {
    auto w = word_of(index);
    if (w.empty()) return "1";
    std::string s;
    for (auto c : w) s += static_cast<char>('a' + c);
    return s;
  }

  BasisIndex index_of(const Word& w) const {
    // offset(L) = 1 + k + ... + k^(L-1); rank = base-k value of the word.
    BasisIndex offset = 0, power = 1, rank = 0;
    for (std::size_t l = 0; l < w.size(); ++l) {
      offset = checked_add(offset, power);
      power = checked_mul(power, k_);
      rank = checked_add(checked_mul(rank, k_), w[l]);
    }
    return checked_add(offset, rank);
  }

  Word word_of(BasisIndex index) const {
    std::size_t length = 0;
    BasisIndex power = 1;  // k^length = number of words of this length
    while (index >= power) {
      index -= power;
      ++length;
      power = power > kIndexMax / k_ ? kIndexMax : power * k_;
    }
    Word w(length);
    for (std::size_t l = length; l-- > 0;) {
      w[l] = static_cast<unsigned>(index % k_);
      index /= k_;
    }
    return w;
  }

 private:
  static BasisIndex checked_add(BasisIndex a, BasisIndex b) {
    if (a > kIndexMax - b) throw LabelError("free algebra index overflow");
    return a + b;
  }
  static BasisIndex checked_mul(BasisIndex a, BasisIndex b) {
    if (b != 0 && a > kIndexMax / b) throw LabelError("free algebra index overflow");
    return a * b;
  }

  unsigned k_;
};

class NamedCodec final : public LabelCodec {
 public:
  NamedCodec(std::string fixture, std::vector<std::string> names)
      : fixture_(std::move(fixture)), names_(std::move(names)) {}

  BasisIndex encode(std::string_view label) const override {
    if (auto i = generic_label(label)) return *i;
    for (std::size_t n = 0; n < names_.size(); ++n)
      if (names_[n] == label) return n;
    bad_label(fixture_, label);
  }
  std::string decode(BasisIndex index) const override {
    return index < names_.size() ? names_[index] : "e" + std::to_string(index);
  }

 private:
  std::string fixture_;
  std::vector<std::string> names_;
};

BasisIndex zigzag(std::int64_t n) {
  return n > 0 ? 2 * static_cast<BasisIndex>(n) - 1 : 2 * (static_cast<BasisIndex>(0) - static_cast<BasisIndex>(n));
}

std::int64_t unzigzag(BasisIndex i) {
  if (i == 0) return 0;
  if (i > 2 * static_cast<BasisIndex>(std::numeric_limits<std::int64_t>::max()))
    throw LabelError("group_z index out of range");
  return i % 2 == 1 ? static_cast<std::int64_t>((i + 1) / 2) : -static_cast<std::int64_t>(i / 2);
}

class GroupZCodec final : public LabelCodec {
 public:
  BasisIndex encode(std::string_view label) const override {
    if (auto i = generic_label(label)) return *i;
    if (label == "1") return 0;
    if (label == "g") return 1;
    std::int64_t n = 0;
    if (label.substr(0, 2) == "g^" && parse_signed(label.substr(2), n) &&
        n > std::numeric_limits<std::int64_t>::min())
      return zigzag(n);
    bad_label("group_z", label);
  }
  std::string decode(BasisIndex index) const override {
    auto n = unzigzag(index);
    if (n == 0) return "1";
    if (n == 1) return "g";
    return "g^" + std::to_string(n);
  }
};

StructureTable::Entries table_from(Backend b,
                                   std::initializer_list<std::tuple<BasisIndex, BasisIndex, BasisIndex, long>> rows) {
  StructureTable::Entries entries;
  for (const auto& [i, j, k, c] : rows) entries.emplace(std::pair{i, j}, Vector(b, {{k, embed_int(b, c)}}));
  return entries;
}

NormValue unit_bound() { return NormValue(mpq_class(1)); }

}  // namespace

std::shared_ptr<const LabelCodec> generic_codec() {
  static const auto codec = std::make_shared<GenericCodec>();
  return codec;
}

AlgebraFixture load_builtin(std::string_view name, Backend b) {
  if (name == "polynomial") {
    auto rule = [b](BasisIndex i, BasisIndex j) {
      if (i > kIndexMax - j) throw LabelError("polynomial degree overflow");
      return Vector::basis(b, i + j);
    };
    return {StructureTable::from_rule("polynomial", b, rule, unit_bound(), {true, true}),
            std::make_shared<PolynomialCodec>()};
  }
  if (name.substr(0, 5) == "free:") {
    BasisIndex k = 0;
    if (!parse_unsigned(name.substr(5), k) || k == 0 || k > 26)
      throw DomainError("free:<k> needs 1 <= k <= 26, got '" + std::string(name) + "'");
    auto codec = std::make_shared<FreeCodec>(static_cast<unsigned>(k));
    auto rule = [b, codec](BasisIndex i, BasisIndex j) {
      auto w = codec->word_of(i);
      auto tail = codec->word_of(j);
      w.insert(w.end(), tail.begin(), tail.end());
      return Vector::basis(b, codec->index_of(w));
    };
    return {StructureTable::from_rule(std::string(name), b, rule, unit_bound(), {true, k == 1}),
            codec};
  }
  if (name == "quaternion") {
    // 0..3 = 1, i, j, k
    auto entries = table_from(b, {
        {0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {0, 3, 3, 1},
        {1, 0, 1, 1}, {1, 1, 0, -1}, {1, 2, 3, 1}, {1, 3, 2, -1},
        {2, 0, 2, 1}, {2, 1, 3, -1}, {2, 2, 0, -1}, {2, 3, 1, 1},
        {3, 0, 3, 1}, {3, 1, 2, 1}, {3, 2, 1, -1}, {3, 3, 0, -1},
    });
    return {StructureTable::extensional("quaternion", b, std::move(entries), unit_bound(), {true, false}),
            std::make_shared<NamedCodec>("quaternion", std::vector<std::string>{"1", "i", "j", "k"})};
  }
  if (name == "complex") {
    auto entries = table_from(b, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, -1}});
    return {StructureTable::extensional("complex", b, std::move(entries), unit_bound(), {true, true}),
            std::make_shared<NamedCodec>("complex", std::vector<std::string>{"1", "i"})};
  }
  if (name == "group_z") {
    auto rule = [b](BasisIndex i, BasisIndex j) {
      auto m = unzigzag(i), n = unzigzag(j);
      if ((n > 0 && m > std::numeric_limits<std::int64_t>::max() - n) ||
          (n < 0 && m < std::numeric_limits<std::int64_t>::min() + 1 - n))
        throw LabelError("group_z exponent overflow");
      return Vector::basis(b, zigzag(m + n));
    };
    return {StructureTable::from_rule("group_z", b, rule, unit_bound(), {true, true}),
            std::make_shared<GroupZCodec>()};
  }
  throw DomainError("unknown builtin algebra '" + std::string(name) + "'");
}

}  // namespace falg
