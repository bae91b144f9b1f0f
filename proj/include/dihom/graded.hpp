#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "dihom/echelon.hpp"

namespace dihom {

/// Finite-dimensional graded vector space described by its dimension in each degree.
/// Degrees of dimension zero are never stored.
class GradedVectorSpace {
 public:
  GradedVectorSpace() = default;

  void set_degree(int degree, std::vector<std::string> labels) {
    if (labels.empty()) {
      labels_.erase(degree);
      return;
    }
    labels_[degree] = std::move(labels);
  }

  static GradedVectorSpace from_dims(const std::map<int, std::size_t>& dims, const std::string& prefix = "e") {
    GradedVectorSpace v;
    for (const auto& [k, d] : dims) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < d; ++i) labels.push_back(prefix + std::to_string(k) + "_" + std::to_string(i));
      v.set_degree(k, std::move(labels));
    }
    return v;
  }

  std::size_t dim(int degree) const {
    auto it = labels_.find(degree);
    return it == labels_.end() ? 0 : it->second.size();
  }
  std::size_t total_dim() const {
    std::size_t n = 0;
    for (const auto& [k, l] : labels_) n += l.size();
    return n;
  }
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [k, l] : labels_) out.push_back(k);
    return out;
  }
  std::map<int, std::size_t> dims() const {
    std::map<int, std::size_t> out;
    for (const auto& [k, l] : labels_) out[k] = l.size();
    return out;
  }
  const std::vector<std::string>& labels(int degree) const {
    static const std::vector<std::string> kEmpty;
    auto it = labels_.find(degree);
    return it == labels_.end() ? kEmpty : it->second;
  }

  bool same_shape(const GradedVectorSpace& o) const { return dims() == o.dims(); }
  friend bool operator==(const GradedVectorSpace&, const GradedVectorSpace&) = default;

 private:
  std::map<int, std::vector<std::string>> labels_;
};

/// A homogeneous element: a degree plus coordinates in that degree.
template <Field F>
struct Homogeneous {
  int degree = 0;
  Vector<F> coords;
};

/// Graded subspace of a graded ambient space, one canonical Subspace per degree.
template <Field F>
class GradedSubspace {
 public:
  GradedSubspace() = default;
  explicit GradedSubspace(GradedVectorSpace ambient) : ambient_(std::move(ambient)) {}

  static GradedSubspace zero(GradedVectorSpace ambient) { return GradedSubspace(std::move(ambient)); }
  static GradedSubspace full(const F& field, GradedVectorSpace ambient) {
    GradedSubspace s(ambient);
    for (int k : ambient.degrees()) s.blocks_[k] = Subspace<F>::full(field, ambient.dim(k));
    return s;
  }

  /// Span of the given vectors in one degree.
  static GradedSubspace spanned(const F& field, GradedVectorSpace ambient,
                                const std::map<int, std::vector<Vector<F>>>& vectors) {
    GradedSubspace s(std::move(ambient));
    for (const auto& [k, vs] : vectors) s.set_block(Subspace<F>::span(field, s.ambient_.dim(k), vs), k);
    return s;
  }

  const GradedVectorSpace& ambient() const { return ambient_; }

  /// Block at a degree; the zero subspace when nothing is stored.
  Subspace<F> block(int degree) const {
    auto it = blocks_.find(degree);
    return it == blocks_.end() ? Subspace<F>(ambient_.dim(degree)) : it->second;
  }
  /// Canonical generators at a degree (empty when the block is zero).
  const std::vector<Vector<F>>& generators(int degree) const {
    static const std::vector<Vector<F>> kEmpty;
    auto it = blocks_.find(degree);
    return it == blocks_.end() ? kEmpty : it->second.generators();
  }
  std::size_t dim(int degree) const {
    auto it = blocks_.find(degree);
    return it == blocks_.end() ? 0 : it->second.dim();
  }
  std::map<int, std::size_t> dims() const {
    std::map<int, std::size_t> out;
    for (const auto& [k, b] : blocks_) out[k] = b.dim();
    return out;
  }
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [k, b] : blocks_) out.push_back(k);
    return out;
  }

  void set_block(Subspace<F> s, int degree) {
    require_input(s.ambient_dim() == ambient_.dim(degree), "block ambient dimension mismatch");
    if (s.dim() == 0)
      blocks_.erase(degree);
    else
      blocks_[degree] = std::move(s);
  }

  bool contains(const F& field, int degree, const Vector<F>& v) const {
    require_input(v.size() == ambient_.dim(degree), "vector length does not match ambient degree dimension");
    return block(degree).contains(field, v);
  }

  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
    return a.ambient_.dims() == b.ambient_.dims() && a.blocks_ == b.blocks_;
  }

 private:
  GradedVectorSpace ambient_;
  std::map<int, Subspace<F>> blocks_;
};

template <Field F>
GradedSubspace<F> sum(const F& field, const GradedSubspace<F>& a, const GradedSubspace<F>& b) {
  require_input(a.ambient().same_shape(b.ambient()), "graded sum: ambient mismatch");
  GradedSubspace<F> out(a.ambient());
  for (int k : a.ambient().degrees()) out.set_block(sum(field, a.block(k), b.block(k)), k);
  return out;
}

template <Field F>
GradedSubspace<F> intersect(const F& field, const GradedSubspace<F>& a, const GradedSubspace<F>& b) {
  require_input(a.ambient().same_shape(b.ambient()), "graded intersection: ambient mismatch");
  GradedSubspace<F> out(a.ambient());
  for (int k : a.ambient().degrees()) out.set_block(intersect(field, a.block(k), b.block(k)), k);
  return out;
}

/// Degree-shifting linear map; blocks[k] is dim(target, k + shift) x dim(source, k).
template <Field F>
class GradedLinearMap {
 public:
  GradedLinearMap() = default;
  GradedLinearMap(GradedVectorSpace source, GradedVectorSpace target, int shift = 0)
      : source_(std::move(source)), target_(std::move(target)), shift_(shift) {}

  static GradedLinearMap identity(const F& field, const GradedVectorSpace& v) {
    GradedLinearMap m(v, v, 0);
    for (int k : v.degrees()) m.set_block(k, Matrix<F>::identity(field, v.dim(k)));
    return m;
  }

  const GradedVectorSpace& source() const { return source_; }
  const GradedVectorSpace& target() const { return target_; }
  int shift() const { return shift_; }

  void set_block(int degree, Matrix<F> m) {
    require_input(m.cols() == source_.dim(degree) && m.rows() == target_.dim(degree + shift_),
                  "graded map block has wrong shape at degree " + std::to_string(degree));
    blocks_[degree] = std::move(m);
  }

  Matrix<F> block(const F& field, int degree) const {
    auto it = blocks_.find(degree);
    if (it != blocks_.end()) return it->second;
    return Matrix<F>::zero(field, target_.dim(degree + shift_), source_.dim(degree));
  }

  Vector<F> apply(const F& field, int degree, const Vector<F>& v) const {
    require_input(v.size() == source_.dim(degree), "graded map: vector length mismatch");
    auto it = blocks_.find(degree);
    if (it == blocks_.end()) return zero_vector(field, target_.dim(degree + shift_));
    return dihom::apply(field, it->second, std::span<const typename F::value_type>(v));
  }

  /// this ∘ other
  GradedLinearMap compose(const F& field, const GradedLinearMap& other) const {
    require_input(other.target_.same_shape(source_), "composition: shapes do not match");
    GradedLinearMap out(other.source_, target_, shift_ + other.shift_);
    for (int k : other.source_.degrees()) {
      if (target_.dim(k + out.shift_) == 0) continue;
      out.set_block(k, multiply(field, block(field, k + other.shift_), other.block(field, k)));
    }
    return out;
  }

  bool equals(const F& field, const GradedLinearMap& o) const {
    if (!source_.same_shape(o.source_) || !target_.same_shape(o.target_) || shift_ != o.shift_) return false;
    for (int k : source_.degrees())
      if (!(block(field, k) == o.block(field, k))) return false;
    return true;
  }

  /// Degreewise invertibility: square blocks of full rank, and no degree lost or gained.
  bool is_invertible(const F& field) const {
    if (shift_ != 0 || !source_.same_shape(target_)) return false;
    for (int k : source_.degrees())
      if (rank(field, block(field, k)) != source_.dim(k)) return false;
    return true;
  }

 private:
  GradedVectorSpace source_;
  GradedVectorSpace target_;
  int shift_ = 0;
  std::map<int, Matrix<F>> blocks_;
};

/// Image of a graded map as a graded subspace of its target.
template <Field F>
GradedSubspace<F> image(const F& field, const GradedLinearMap<F>& f) {
  GradedSubspace<F> out(f.target());
  for (int k : f.source().degrees()) {
    const int t = k + f.shift();
    if (f.target().dim(t) == 0) continue;
    out.set_block(image(field, f.block(field, k)), t);
  }
  return out;
}

template <Field F>
std::size_t rank(const F& field, const GradedLinearMap<F>& f, int degree) {
  return rank(field, f.block(field, degree));
}

/// Coordinate bookkeeping for V ⊗ W.
///
/// Total degree n is the direct sum of blocks V_i ⊗ W_j with i + j = n, laid out in
/// lexicographic (i, j) order. Inside a block the pair (a, b) of basis indices sits at
/// offset a * dim(W_j) + b.
class TensorIndexer {
 public:
  struct Block {
    int left_degree;
    int right_degree;
    std::size_t offset;
    std::size_t left_dim;
    std::size_t right_dim;
  };

  TensorIndexer() = default;
  TensorIndexer(GradedVectorSpace left, GradedVectorSpace right) : left_(std::move(left)), right_(std::move(right)) {
    for (int i : left_.degrees())
      for (int j : right_.degrees()) layout_[i + j];
    for (auto& [n, blocks] : layout_) {
      std::size_t off = 0;
      for (int i : left_.degrees()) {
        int j = n - i;
        if (right_.dim(j) == 0) continue;
        blocks.push_back({i, j, off, left_.dim(i), right_.dim(j)});
        off += left_.dim(i) * right_.dim(j);
      }
    }
    for (const auto& [n, blocks] : layout_) {
      std::vector<std::string> labels;
      for (const auto& b : blocks)
        for (std::size_t a = 0; a < b.left_dim; ++a)
          for (std::size_t c = 0; c < b.right_dim; ++c)
            labels.push_back(left_.labels(b.left_degree)[a] + "⊗" + right_.labels(b.right_degree)[c]);
      space_.set_degree(n, std::move(labels));
    }
  }

  const GradedVectorSpace& left() const { return left_; }
  const GradedVectorSpace& right() const { return right_; }
  /// The graded space V ⊗ W itself.
  const GradedVectorSpace& space() const { return space_; }
  std::size_t dim(int total) const { return space_.dim(total); }

  const std::vector<Block>& blocks(int total) const {
    static const std::vector<Block> kEmpty;
    auto it = layout_.find(total);
    return it == layout_.end() ? kEmpty : it->second;
  }

  const Block& block(int left_degree, int right_degree) const {
    for (const auto& b : blocks(left_degree + right_degree))
      if (b.left_degree == left_degree) return b;
    throw InputError("tensor block (" + std::to_string(left_degree) + "," + std::to_string(right_degree) +
                     ") is absent");
  }

  std::size_t index(int left_degree, std::size_t a, int right_degree, std::size_t b) const {
    const auto& blk = block(left_degree, right_degree);
    return blk.offset + a * blk.right_dim + b;
  }

  /// Inverse of index(): (left degree, left index, right degree, right index).
  std::tuple<int, std::size_t, int, std::size_t> locate(int total, std::size_t idx) const {
    for (const auto& b : blocks(total)) {
      if (idx < b.offset + b.left_dim * b.right_dim) {
        std::size_t local = idx - b.offset;
        return {b.left_degree, local / b.right_dim, b.right_degree, local % b.right_dim};
      }
    }
    throw InputError("tensor index out of range");
  }

  friend bool operator==(const TensorIndexer& a, const TensorIndexer& b) {
    return a.left_.dims() == b.left_.dims() && a.right_.dims() == b.right_.dims();
  }

 private:
  GradedVectorSpace left_;
  GradedVectorSpace right_;
  GradedVectorSpace space_;
  std::map<int, std::vector<Block>> layout_;
};

/// Coordinates of v ⊗ w in (V ⊗ W)_{i+j}.
template <Field F>
Vector<F> tensor_coords(const F& field, const TensorIndexer& ix, int i, const Vector<F>& v, int j,
                        const Vector<F>& w) {
  require_input(v.size() == ix.left().dim(i) && w.size() == ix.right().dim(j),
                "tensor_coords: vector length does not match degree dimension");
  const auto& blk = ix.block(i, j);
  Vector<F> out = zero_vector(field, ix.dim(i + j));
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (field.is_zero(v[a])) continue;
    for (std::size_t b = 0; b < w.size(); ++b)
      if (!field.is_zero(w[b])) out[blk.offset + a * blk.right_dim + b] = field.mul(v[a], w[b]);
  }
  return out;
}

/// Applies f ⊗ g to an element of (V ⊗ W)_total, landing in (V' ⊗ W')_{total + shifts}.
template <Field F>
Vector<F> tensor_apply(const F& field, const GradedLinearMap<F>& f, const GradedLinearMap<F>& g,
                       const TensorIndexer& src, const TensorIndexer& dst, int total, const Vector<F>& x) {
  require_input(x.size() == src.dim(total), "tensor_apply: vector length mismatch");
  const int out_total = total + f.shift() + g.shift();
  Vector<F> out = zero_vector(field, dst.dim(out_total));
  for (const auto& blk : src.blocks(total)) {
    const int fi = blk.left_degree + f.shift();
    const int gj = blk.right_degree + g.shift();
    if (dst.left().dim(fi) == 0 || dst.right().dim(gj) == 0) continue;
    const auto fm = f.block(field, blk.left_degree);
    const auto gm = g.block(field, blk.right_degree);
    const auto& out_blk = dst.block(fi, gj);
    for (std::size_t a = 0; a < blk.left_dim; ++a)
      for (std::size_t b = 0; b < blk.right_dim; ++b) {
        const auto& c = x[blk.offset + a * blk.right_dim + b];
        if (field.is_zero(c)) continue;
        for (std::size_t r = 0; r < fm.rows(); ++r) {
          if (field.is_zero(fm(r, a))) continue;
          auto cr = field.mul(c, fm(r, a));
          for (std::size_t s = 0; s < gm.rows(); ++s) {
            if (field.is_zero(gm(s, b))) continue;
            auto& slot = out[out_blk.offset + r * out_blk.right_dim + s];
            slot = field.add(slot, field.mul(cr, gm(s, b)));
          }
        }
      }
  }
  return out;
}

/// Middle-interchange index bijection (V⊗V)⊗(W⊗W) → (V⊗W)⊗(V⊗W), no signs.
///
/// `vv_ww` indexes (V⊗V)⊗(W⊗W) over indexers vv = V⊗V and ww = W⊗W; `vw_vw` indexes
/// (V⊗W)⊗(V⊗W) over vw = V⊗W. Returns the target index for source (total, idx).
inline std::size_t interchange_index(const TensorIndexer& vv, const TensorIndexer& ww, const TensorIndexer& vv_ww,
                                     const TensorIndexer& vw, const TensorIndexer& vw_vw, int total,
                                     std::size_t idx) {
  auto [dvv, ivv, dww, iww] = vv_ww.locate(total, idx);
  auto [i, a, i2, a2] = vv.locate(dvv, ivv);
  auto [j, b, j2, b2] = ww.locate(dww, iww);
  const std::size_t left = vw.index(i, a, j, b);
  const std::size_t right = vw.index(i2, a2, j2, b2);
  return vw_vw.index(i + j, left, i2 + j2, right);
}

}  // namespace dihom
