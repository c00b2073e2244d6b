#pragma once

// Test-only fixtures and reference oracles. The oracles deliberately avoid
// the library's own arithmetic paths (Vector add/scale, axpy, peel): they work
// on raw mpq_class values and rebuild a Vector only at the end for comparison.

#include "falg/algebra.hpp"
#include "falg/catalog.hpp"
#include "falg/tensor.hpp"

#include <gmpxx.h>

#include <array>
#include <map>
#include <vector>

namespace falg::testing {

constexpr Backend Q = Backend::Rational;

inline Scalar q(long p, long d = 1) { return embed_rational(Q, p, d); }

inline Vector vec(std::initializer_list<std::pair<const BasisIndex, long>> coords) {
  Vector::Coords c;
  for (const auto& [i, v] : coords) c.emplace(i, q(v));
  return Vector(Q, std::move(c));
}

inline Vector e(BasisIndex i) { return Vector::basis(Q, i); }

/// Columns j -> e_{j+1} for j < n.
inline LinearMap shift_map(BasisIndex n, Backend b = Q) {
  LinearMap::Columns cols;
  for (BasisIndex j = 0; j < n; ++j) cols.emplace(j, Vector::basis(b, j + 1));
  return LinearMap(b, std::move(cols));
}

/// e1 e1 = e2, e1 e2 = 0, e2 e1 = e1, e0 the unit, every other product 0.
/// Claims associativity so that check_laws exercises (and refutes) it.
inline StructureTable nonassociative_table() {
  StructureTable::Entries entries;
  for (BasisIndex j = 0; j < 3; ++j) {
    entries.emplace(std::pair{BasisIndex{0}, j}, e(j));
    entries.emplace(std::pair{j, BasisIndex{0}}, e(j));
  }
  entries.emplace(std::pair{BasisIndex{1}, BasisIndex{1}}, e(2));
  entries.emplace(std::pair{BasisIndex{2}, BasisIndex{1}}, e(1));
  return StructureTable::extensional("nonassoc", Q, std::move(entries), NormValue(mpq_class(1)),
                                     {true, false});
}

inline Vector from_raw(const std::map<BasisIndex, mpq_class>& raw) {
  Vector::Coords c;
  for (const auto& [k, v] : raw)
    if (v != 0) c.emplace(k, Scalar(v));
  return Vector(Q, std::move(c));
}

/// Double loop over the supports, accumulating raw rationals per output index.
inline Vector mul_oracle(const StructureTable& t, const Vector& a, const Vector& b) {
  std::map<BasisIndex, mpq_class> raw;
  for (const auto& [i, ai] : a.coords())
    for (const auto& [j, bj] : b.coords()) {
      const Vector eij = t.lookup(i, j);
      for (const auto& [k, c] : eij.coords())
        raw[k] += ai.as_rational() * bj.as_rational() * c.as_rational();
    }
  return from_raw(raw);
}

/// Output coordinate i = sum_j v^j f^i_j, computed one output index at a time.
inline Vector apply_oracle(const LinearMap& f, const Vector& v) {
  std::map<BasisIndex, mpq_class> raw;
  std::vector<BasisIndex> rows;
  for (const auto& [j, col] : f.columns())
    for (const auto& [i, c] : col.coords()) rows.push_back(i);
  for (auto i : rows) {
    mpq_class sum = 0;
    for (const auto& [j, vj] : v.coords()) sum += vj.as_rational() * f.entry(i, j).as_rational();
    raw[i] = sum;
  }
  return from_raw(raw);
}

/// Every tuple from the product of supports, with the product of coordinates.
inline std::map<MultiIndex, mpq_class> tensor_oracle(const std::vector<Vector>& xs) {
  std::map<MultiIndex, mpq_class> out;
  MultiIndex idx(xs.size());
  auto rec = [&](auto&& self, std::size_t s, mpq_class acc) -> void {
    if (s == xs.size()) {
      if (acc != 0) out[idx] = acc;
      return;
    }
    for (const auto& [i, c] : xs[s].coords()) {
      idx[s] = i;
      self(self, s + 1, acc * c.as_rational());
    }
  };
  if (!xs.empty()) rec(rec, 0, mpq_class(1));
  return out;
}

/// Dense coefficient convolution, the schoolbook polynomial product.
inline std::vector<mpq_class> convolve(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpq_class> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline std::vector<mpq_class> dense(const Vector& v) {
  if (v.is_zero()) return {};
  std::vector<mpq_class> out(v.coords().rbegin()->first + 1);
  for (const auto& [i, c] : v.coords()) out[i] = c.as_rational();
  return out;
}

/// Quaternions as pairs of Gaussian rationals: (a, b) = a + b j with
/// a = x0 + x1 i, b = x2 + x3 i, and (a,b)(c,d) = (ac - b conj(d), ad + b conj(c)).
using Quat = std::array<mpq_class, 4>;

inline Quat quat_oracle(const Quat& x, const Quat& y) {
  struct C {
    mpq_class re, im;
  };
  auto mul = [](const C& u, const C& v) { return C{u.re * v.re - u.im * v.im, u.re * v.im + u.im * v.re}; };
  auto conj = [](const C& u) { return C{u.re, -u.im}; };
  C a{x[0], x[1]}, b{x[2], x[3]}, c{y[0], y[1]}, d{y[2], y[3]};
  C ac = mul(a, c), bd = mul(b, conj(d)), ad = mul(a, d), bc = mul(b, conj(c));
  return {ac.re - bd.re, ac.im - bd.im, ad.re + bc.re, ad.im + bc.im};
}

inline Quat to_quat(const Vector& v) {
  Quat out{0, 0, 0, 0};
  for (const auto& [i, c] : v.coords()) out.at(i) = c.as_rational();
  return out;
}

}  // namespace falg::testing
