#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "dihom/matrix.hpp"

namespace dihom {

/// Result of Gauss-Jordan elimination restricted to the leading `limit` coordinates.
///
/// `pivot_rows` are in reduced echelon form on [0, limit): each has a 1 at its pivot, every
/// other pivot row is 0 there, and pivots increase. `rest` holds the remaining rows, all of
/// which vanish on [0, limit). With limit == width this is the ordinary RREF and `rest` is
/// all zero.
template <Field F>
struct PartialReduction {
  std::vector<Vector<F>> pivot_rows;
  std::vector<std::size_t> pivots;
  std::vector<Vector<F>> rest;
};

/// Elimination for any field, one scalar per entry.
template <Field F>
PartialReduction<F> partial_rref_dense(const F& field, std::vector<Vector<F>> rows, std::size_t width,
                                       std::size_t limit) {
  for (const auto& r : rows) require_input(r.size() == width, "row length does not match width");
  PartialReduction<F> out;
  std::size_t slot = 0;
  for (std::size_t c = 0; c < limit && slot < rows.size(); ++c) {
    std::size_t i = slot;
    while (i < rows.size() && field.is_zero(rows[i][c])) ++i;
    if (i == rows.size()) continue;
    std::swap(rows[i], rows[slot]);
    auto& piv = rows[slot];
    if (piv[c] != field.one()) {
      auto inv = field.inv(piv[c]);
      for (std::size_t k = c; k < width; ++k) piv[k] = field.mul(inv, piv[k]);
    }
    std::span<const typename F::value_type> tail(piv.data() + c, width - c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == slot || field.is_zero(rows[r][c])) continue;
      auto factor = field.neg(rows[r][c]);
      axpy(field, factor, tail, std::span<typename F::value_type>(rows[r].data() + c, width - c));
    }
    out.pivots.push_back(c);
    ++slot;
  }
  out.pivot_rows.assign(std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.begin() + slot));
  out.rest.assign(std::make_move_iterator(rows.begin() + slot), std::make_move_iterator(rows.end()));
  return out;
}

namespace gf2 {

using Word = std::uint64_t;
constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Packed bit row; bit i of the row lives in word i / 64 at position i % 64.
struct BitRow {
  std::vector<Word> words;

  explicit BitRow(std::size_t bits = 0) : words(words_for(bits), 0) {}
  bool get(std::size_t i) const { return (words[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void xor_from(const BitRow& o, std::size_t first_word) {
    for (std::size_t w = first_word; w < words.size(); ++w) words[w] ^= o.words[w];
  }
};

inline BitRow pack(std::span<const PrimeField::value_type> v) {
  BitRow r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] & 1U) r.set(i);
  return r;
}

inline Vector<PrimeField> unpack(const BitRow& r, std::size_t width) {
  Vector<PrimeField> v(width, 0);
  for (std::size_t w = 0; w < r.words.size(); ++w) {
    Word bits = r.words[w];
    while (bits) {
      std::size_t i = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
      if (i < width) v[i] = 1;
      bits &= bits - 1;
    }
  }
  return v;
}

}  // namespace gf2

/// Packed-bit elimination over GF(2). Produces exactly what partial_rref_dense produces.
inline PartialReduction<PrimeField> partial_rref_gf2(const std::vector<Vector<PrimeField>>& input,
                                                     std::size_t width, std::size_t limit) {
  using gf2::BitRow;
  std::vector<BitRow> rows;
  rows.reserve(input.size());
  for (const auto& r : input) {
    require_input(r.size() == width, "row length does not match width");
    rows.push_back(gf2::pack(r));
  }
  PartialReduction<PrimeField> out;
  std::size_t slot = 0;
  for (std::size_t c = 0; c < limit && slot < rows.size(); ++c) {
    std::size_t i = slot;
    while (i < rows.size() && !rows[i].get(c)) ++i;
    if (i == rows.size()) continue;
    std::swap(rows[i], rows[slot]);
    const std::size_t first_word = c / gf2::kWordBits;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != slot && rows[r].get(c)) rows[r].xor_from(rows[slot], first_word);
    out.pivots.push_back(c);
    ++slot;
  }
  for (std::size_t r = 0; r < slot; ++r) out.pivot_rows.push_back(gf2::unpack(rows[r], width));
  for (std::size_t r = slot; r < rows.size(); ++r) out.rest.push_back(gf2::unpack(rows[r], width));
  return out;
}

template <Field F>
PartialReduction<F> partial_rref(const F& field, std::vector<Vector<F>> rows, std::size_t width, std::size_t limit) {
  if constexpr (is_prime_field_v<F>) {
    if (field.is_gf2()) return partial_rref_gf2(rows, width, limit);
  }
  return partial_rref_dense(field, std::move(rows), width, limit);
}

/// A subspace of K^n held in canonical form: generators in reduced echelon form sorted by
/// pivot, so two subspaces are equal exactly when their generator lists are equal.
template <Field F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(const F& field, std::size_t ambient_dim, std::vector<Vector<F>> vectors) {
    Subspace s(ambient_dim);
    auto red = partial_rref(field, std::move(vectors), ambient_dim, ambient_dim);
    s.gens_ = std::move(red.pivot_rows);
    s.pivots_ = std::move(red.pivots);
    return s;
  }

  static Subspace full(const F& field, std::size_t n) {
    Subspace s(n);
    for (std::size_t i = 0; i < n; ++i) {
      s.gens_.push_back(unit_vector(field, n, i));
      s.pivots_.push_back(i);
    }
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return gens_.size(); }
  const std::vector<Vector<F>>& generators() const { return gens_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residue of v after reduction against the generators; zero iff v lies in the subspace.
  Vector<F> reduce(const F& field, Vector<F> v) const {
    require_input(v.size() == ambient_, "vector length does not match ambient dimension");
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      const auto& c = v[pivots_[k]];
      if (!field.is_zero(c)) axpy(field, field.neg(c), std::span<const typename F::value_type>(gens_[k]), std::span(v));
    }
    return v;
  }

  bool contains(const F& field, const Vector<F>& v) const {
    const auto r = reduce(field, v);
    return is_zero_vector(field, std::span<const typename F::value_type>(r));
  }

  /// Coordinates of a member in terms of the canonical generators.
  Vector<F> coordinates(const F& field, const Vector<F>& v) const {
    require_input(contains(field, v), "vector does not lie in the subspace");
    Vector<F> c(gens_.size(), field.zero());
    for (std::size_t k = 0; k < gens_.size(); ++k) c[k] = v[pivots_[k]];
    return c;
  }

  Matrix<F> as_matrix(const F& field) const { return Matrix<F>::from_columns(field, ambient_, gens_); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.gens_ == b.gens_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector<F>> gens_;
  std::vector<std::size_t> pivots_;
};

template <Field F>
struct EchelonForm {
  Matrix<F> reduced;                // canonical column echelon form, one column per pivot
  std::vector<std::size_t> pivots;  // leading coordinate of each reduced column
  std::size_t rank = 0;
};

/// Reduced column echelon form of m. Equal column spans give identical output.
template <Field F>
EchelonForm<F> echelonize(const F& field, const Matrix<F>& m) {
  auto s = Subspace<F>::span(field, m.rows(), m.columns());
  EchelonForm<F> e;
  e.reduced = s.as_matrix(field);
  e.pivots = s.pivots();
  e.rank = s.dim();
  return e;
}

template <Field F>
Subspace<F> image(const F& field, const Matrix<F>& m) {
  return Subspace<F>::span(field, m.rows(), m.columns());
}

template <Field F>
Subspace<F> kernel(const F& field, const Matrix<F>& m) {
  std::vector<Vector<F>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  auto red = partial_rref(field, std::move(rows), m.cols(), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector<F>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    auto v = unit_vector(field, m.cols(), f);
    for (std::size_t k = 0; k < red.pivots.size(); ++k) v[red.pivots[k]] = field.neg(red.pivot_rows[k][f]);
    basis.push_back(std::move(v));
  }
  return Subspace<F>::span(field, m.cols(), std::move(basis));
}

template <Field F>
std::size_t rank(const F& field, const Matrix<F>& m) {
  return image(field, m).dim();
}

template <Field F>
bool member(const F& field, const Subspace<F>& s, const Vector<F>& v) {
  return s.contains(field, v);
}

template <Field F>
Subspace<F> sum(const F& field, const Subspace<F>& a, const Subspace<F>& b) {
  require_input(a.ambient_dim() == b.ambient_dim(), "subspace sum: ambient dimension mismatch");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subspace<F>::span(field, a.ambient_dim(), std::move(gens));
}

/// Zassenhaus: rows [a | a] and [b | 0]; rows vanishing on the left half span a ∩ b on the right.
template <Field F>
Subspace<F> intersect(const F& field, const Subspace<F>& a, const Subspace<F>& b) {
  require_input(a.ambient_dim() == b.ambient_dim(), "subspace intersection: ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  std::vector<Vector<F>> rows;
  for (const auto& g : a.generators()) {
    Vector<F> r(g);
    r.insert(r.end(), g.begin(), g.end());
    rows.push_back(std::move(r));
  }
  for (const auto& g : b.generators()) {
    Vector<F> r(g);
    r.resize(2 * n, field.zero());
    rows.push_back(std::move(r));
  }
  auto red = partial_rref(field, std::move(rows), 2 * n, n);
  std::vector<Vector<F>> right;
  for (const auto& r : red.rest) right.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
  return Subspace<F>::span(field, n, std::move(right));
}

}  // namespace dihom
