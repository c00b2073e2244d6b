#pragma once

/**
 * @file algebra.hpp
 * @brief Algebras given by structure constants e_i e_j = sum_k C^k_ij e_k.
 *
 * A StructureTable is either extensional (a finite list of nonzero
 * constants, everything else zero) or intensional (a rule computing the
 * product of two basis vectors, memoized on first use). Both expose the same
 * lookup. Commutativity/associativity claims are metadata only: no product
 * ever relies on them.
 */

#include "falg/hamel.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace falg {

struct Claims {
  bool associative = false;
  bool commutative = false;
};

/// Thrown when a looked-up entry exceeds the declared pair bound.
class PairBoundViolation : public Error {
 public:
  using Error::Error;
};

class StructureTable {
 public:
  using Entries = std::map<std::pair<BasisIndex, BasisIndex>, Vector>;
  using Rule = std::function<Vector(BasisIndex, BasisIndex)>;

  static StructureTable extensional(std::string name, Backend b, Entries entries,
                                    std::optional<NormValue> pair_bound, Claims claims);
  static StructureTable from_rule(std::string name, Backend b, Rule rule,
                                  std::optional<NormValue> pair_bound, Claims claims);

  const std::string& name() const;
  Backend backend() const;
  const std::optional<NormValue>& pair_bound() const;
  const Claims& claims() const;
  bool is_extensional() const;
  /// One past the largest index mentioned by an extensional table; nullopt for
  /// rule-backed tables.
  std::optional<BasisIndex> dimension() const;
  /// Stored entries of an extensional table (empty for rules).
  const Entries& entries() const;

  /// e_i * e_j. Thread-safe; rule results are memoized. Throws
  /// PairBoundViolation when the entry's coefficient mass exceeds the bound.
  Vector lookup(BasisIndex i, BasisIndex j) const;

 private:
  struct Impl;
  explicit StructureTable(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

inline Vector structure_lookup(const StructureTable& t, BasisIndex i, BasisIndex j) {
  return t.lookup(i, j);
}

/// (ab)^k = sum_{i,j} a^i b^j C^k_ij.
Vector alg_mul(const StructureTable& t, const Vector& a, const Vector& b);
/// ab - ba
Vector commutator(const StructureTable& t, const Vector& a, const Vector& b);
/// (ab)c - a(bc)
Vector associator(const StructureTable& t, const Vector& a, const Vector& b, const Vector& c);

struct AssociatorDefect {
  enum class Position { First, Second, Third };  // a placed in slot 1, 2 or 3
  Position position;
  Vector x, y;
  Vector value;
};

/// Nonzero associators (a,x,y), (x,a,y), (x,y,a) for each witness pair.
/// Empty result: a lies in the nucleus as far as the witnesses can tell.
std::vector<AssociatorDefect> nucleus_defect(const StructureTable& t, const Vector& a,
                                             const std::vector<std::pair<Vector, Vector>>& witnesses);

struct CenterDefect {
  struct Commutator {
    Vector witness;
    Vector value;
  };
  std::vector<Commutator> commutators;
  std::vector<AssociatorDefect> associators;
  bool empty() const { return commutators.empty() && associators.empty(); }
};

/// Nonzero [a,x] for x in witnesses, plus nucleus_defect over all ordered
/// witness pairs.
CenterDefect center_defect(const StructureTable& t, const Vector& a,
                           const std::vector<Vector>& witnesses);

/// Product of the endomorphism algebra L(A;A): composition.
inline LinearMap endo_mul(const LinearMap& f, const LinearMap& g) { return compose(f, g); }

struct LawResult {
  std::string law;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;  // empty when passed
};

struct LawReport {
  std::string algebra;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<LawResult> laws;
  bool all_passed() const;
};

/**
 * Randomized law check, deterministic in `seed`. Bilinearity and both
 * distributive laws always run; commutativity/associativity run only when
 * claimed. Claimed laws are first swept over basis pairs/triples in
 * lexicographic order (indices below max_index, and below the dimension of an
 * extensional table), then over `trials` random vectors. The first failing
 * case is reported.
 *
 * Throws DomainError for trials == 0 or a Float64 table (exact equality does
 * not hold there).
 */
LawReport check_laws(const StructureTable& t, std::size_t trials, BasisIndex max_index,
                     std::uint64_t seed);

}  // namespace falg
