#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dihom/matrix.hpp"
#include "dihom/space.hpp"

namespace dihom {

/// A chain x0 < x1 < ... < xn of the topology order, listed bottom first.
using Simplex = std::vector<std::size_t>;

/// All nonempty chains of the topology order of a finite space, grouped by dimension and
/// sorted lexicographically by point index within a dimension.
class OrderComplex {
 public:
  OrderComplex() = default;

  static OrderComplex build(const FinitePreorderedSpace& x) {
    OrderComplex k;
    k.points_ = x.size();
    std::vector<std::vector<std::size_t>> above(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j)
        if (x.topo_less(i, j)) above[i].push_back(j);
    Simplex chain;
    auto extend = [&](auto& self, std::size_t v) -> void {
      chain.push_back(v);
      k.add(chain);
      for (auto w : above[v]) self(self, w);
      chain.pop_back();
    };
    for (std::size_t v = 0; v < x.size(); ++v) extend(extend, v);
    for (std::size_t d = 0; d < k.simplices_.size(); ++d) {
      std::sort(k.simplices_[d].begin(), k.simplices_[d].end());
      for (std::size_t i = 0; i < k.simplices_[d].size(); ++i) {
        const auto& s = k.simplices_[d][i];
        k.index_[d].emplace(s, i);
        PointSet vs(x.size());
        for (auto v : s) vs.set(v);
        k.vertex_sets_[d].push_back(std::move(vs));
      }
    }
    return k;
  }

  std::size_t point_count() const { return points_; }
  /// Largest simplex dimension, or -1 for the empty complex.
  int top_dim() const { return static_cast<int>(simplices_.size()) - 1; }
  std::size_t count(int d) const {
    return d < 0 || d > top_dim() ? 0 : simplices_[static_cast<std::size_t>(d)].size();
  }
  const std::vector<Simplex>& simplices(int d) const {
    static const std::vector<Simplex> kEmpty;
    return d < 0 || d > top_dim() ? kEmpty : simplices_[static_cast<std::size_t>(d)];
  }
  const Simplex& simplex(int d, std::size_t i) const { return simplices_.at(static_cast<std::size_t>(d)).at(i); }
  const PointSet& vertices(int d, std::size_t i) const { return vertex_sets_.at(static_cast<std::size_t>(d)).at(i); }

  std::optional<std::size_t> find(const Simplex& s) const {
    if (s.empty() || s.size() > simplices_.size()) return std::nullopt;
    const auto& idx = index_[s.size() - 1];
    auto it = idx.find(s);
    if (it == idx.end()) return std::nullopt;
    return it->second;
  }

 private:
  void add(const Simplex& s) {
    const std::size_t d = s.size() - 1;
    if (simplices_.size() <= d) {
      simplices_.resize(d + 1);
      index_.resize(d + 1);
      vertex_sets_.resize(d + 1);
    }
    simplices_[d].push_back(s);
  }

  std::size_t points_ = 0;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, std::size_t>> index_;
  std::vector<std::vector<PointSet>> vertex_sets_;
};

inline std::string simplex_label(const FinitePreorderedSpace& x, const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += "<";
    out += x.id(s[i]);
  }
  return out + "]";
}

/// Cellular data of K(X) or of the quotient K(X)/K(A).
///
/// The chain basis in degree d lists the d-simplices not contained in A, in complex order.
/// boundary(d) is the matrix of C_d -> C_{d-1}; faces lying in A are dropped.
template <Field F>
class ChainComplexData {
 public:
  ChainComplexData() = default;

  static ChainComplexData build(const F& field, std::shared_ptr<const OrderComplex> complex, PointSet subset) {
    require_input(subset.size() == complex->point_count(), "chain complex: subset size mismatch");
    ChainComplexData c;
    c.complex_ = std::move(complex);
    c.subset_ = std::move(subset);
    const int top = c.complex_->top_dim();
    c.basis_.resize(static_cast<std::size_t>(std::max(top + 1, 0)));
    c.local_.resize(c.basis_.size());
    for (int d = 0; d <= top; ++d) {
      auto& loc = c.local_[static_cast<std::size_t>(d)];
      loc.assign(c.complex_->count(d), kNone);
      for (std::size_t i = 0; i < c.complex_->count(d); ++i) {
        if (c.subset_.any() && c.complex_->vertices(d, i).is_subset_of(c.subset_)) continue;
        loc[i] = c.basis_[static_cast<std::size_t>(d)].size();
        c.basis_[static_cast<std::size_t>(d)].push_back(i);
      }
    }
    for (int d = 1; d <= top; ++d) {
      Matrix<F> m = Matrix<F>::zero(field, c.rank(d - 1), c.rank(d));
      for (std::size_t col = 0; col < c.rank(d); ++col) {
        const Simplex& s = c.complex_->simplex(d, c.basis_[static_cast<std::size_t>(d)][col]);
        for (std::size_t del = 0; del < s.size(); ++del) {
          Simplex face;
          face.reserve(s.size() - 1);
          for (std::size_t v = 0; v < s.size(); ++v)
            if (v != del) face.push_back(s[v]);
          const auto row = c.local(d - 1, *c.complex_->find(face));
          if (!row) continue;
          m(*row, col) = (del % 2 == 0) ? field.one() : field.neg(field.one());
        }
      }
      c.boundary_[d] = std::move(m);
    }
    for (int d = 2; d <= top; ++d)
      ensure(is_zero_matrix(field, multiply(field, c.boundary_.at(d - 1), c.boundary_.at(d))),
             "boundary does not square to zero in degree " + std::to_string(d));
    return c;
  }

  const OrderComplex& complex() const { return *complex_; }
  const std::shared_ptr<const OrderComplex>& complex_ptr() const { return complex_; }
  const PointSet& subset() const { return subset_; }
  bool relative() const { return subset_.any(); }
  int top_dim() const { return complex_ ? complex_->top_dim() : -1; }

  /// Number of basis chains in degree d.
  std::size_t rank(int d) const {
    return d < 0 || d > top_dim() ? 0 : basis_[static_cast<std::size_t>(d)].size();
  }
  /// Complex index of the k-th basis simplex in degree d.
  std::size_t global(int d, std::size_t k) const { return basis_.at(static_cast<std::size_t>(d)).at(k); }
  const std::vector<std::size_t>& basis(int d) const {
    static const std::vector<std::size_t> kEmpty;
    return d < 0 || d > top_dim() ? kEmpty : basis_[static_cast<std::size_t>(d)];
  }
  /// Basis position of complex simplex i in degree d, if it is not in the subset.
  std::optional<std::size_t> local(int d, std::size_t i) const {
    if (d < 0 || d > top_dim()) return std::nullopt;
    const auto v = local_[static_cast<std::size_t>(d)].at(i);
    if (v == kNone) return std::nullopt;
    return v;
  }

  /// Boundary C_d -> C_{d-1}; the zero map out of degree 0.
  Matrix<F> boundary(const F& field, int d) const {
    auto it = boundary_.find(d);
    if (it != boundary_.end()) return it->second;
    return Matrix<F>::zero(field, rank(d - 1), rank(d));
  }
  const Matrix<F>* boundary_ptr(int d) const {
    auto it = boundary_.find(d);
    return it == boundary_.end() ? nullptr : &it->second;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::shared_ptr<const OrderComplex> complex_;
  PointSet subset_;
  std::vector<std::vector<std::size_t>> basis_;
  std::vector<std::vector<std::size_t>> local_;
  std::map<int, Matrix<F>> boundary_;
};

/// Boundary in the absolute complex of a chain given over all d-simplices of K.
template <Field F>
Vector<F> absolute_boundary(const F& field, const OrderComplex& k, int d, const Vector<F>& chain) {
  Vector<F> out = zero_vector(field, k.count(d - 1));
  if (d == 0) return out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (field.is_zero(chain[i])) continue;
    const Simplex& s = k.simplex(d, i);
    for (std::size_t del = 0; del < s.size(); ++del) {
      Simplex face;
      for (std::size_t v = 0; v < s.size(); ++v)
        if (v != del) face.push_back(s[v]);
      const auto row = *k.find(face);
      out[row] = (del % 2 == 0) ? field.add(out[row], chain[i]) : field.sub(out[row], chain[i]);
    }
  }
  return out;
}

}  // namespace dihom
