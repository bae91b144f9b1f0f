#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dihom/graded.hpp"

namespace dihom {

template <Field F>
using GeneratorPair = std::pair<Homogeneous<F>, Homogeneous<F>>;

/// A raw relation, given as the list of related pairs.
template <Field F>
using RelationGenerators = std::vector<GeneratorPair<F>>;

/// Bilinear relation on V stored through its smallest defining subspace R ⊆ V ⊗ V:
/// v points to w iff v ⊗ w ∈ R.
template <Field F>
class BilinearRelation {
 public:
  BilinearRelation() = default;
  BilinearRelation(GradedVectorSpace v, GradedSubspace<F> defining)
      : indexer_(v, v), space_(std::move(v)), defining_(std::move(defining)) {
    require_input(defining_.ambient().same_shape(indexer_.space()), "defining space does not live in V ⊗ V");
  }

  static BilinearRelation zero(const GradedVectorSpace& v) {
    TensorIndexer ix(v, v);
    return BilinearRelation(v, GradedSubspace<F>(ix.space()));
  }
  static BilinearRelation full(const F& field, const GradedVectorSpace& v) {
    TensorIndexer ix(v, v);
    return BilinearRelation(v, GradedSubspace<F>::full(field, ix.space()));
  }

  const GradedVectorSpace& space() const { return space_; }
  const GradedSubspace<F>& defining() const { return defining_; }
  const TensorIndexer& indexer() const { return indexer_; }

  bool points_to(const F& field, const Homogeneous<F>& v, const Homogeneous<F>& w) const {
    require_input(v.coords.size() == space_.dim(v.degree) && w.coords.size() == space_.dim(w.degree),
                  "points_to: vector does not conform to the space");
    if (is_zero_vector(field, std::span<const typename F::value_type>(v.coords)) ||
        is_zero_vector(field, std::span<const typename F::value_type>(w.coords)))
      return true;
    return defining_.contains(field, v.degree + w.degree,
                              tensor_coords(field, indexer_, v.degree, v.coords, w.degree, w.coords));
  }

  friend bool operator==(const BilinearRelation& a, const BilinearRelation& b) {
    return a.space_.same_shape(b.space_) && a.defining_ == b.defining_;
  }

 private:
  TensorIndexer indexer_;
  GradedVectorSpace space_;
  GradedSubspace<F> defining_;
};

/// A graded vector space with a pointing relation. `generators` is a generating relation when
/// one is known; it is what tensor products and generator-checked morphisms consume.
template <Field F>
struct DirectionalGVS {
  GradedVectorSpace space;
  BilinearRelation<F> pointing;
  RelationGenerators<F> generators;

  bool points_to(const F& field, const Homogeneous<F>& v, const Homogeneous<F>& w) const {
    return pointing.points_to(field, v, w);
  }
};

/// Smallest bilinear relation containing the given pairs: R = span{v ⊗ w}.
template <Field F>
BilinearRelation<F> generate(const F& field, const GradedVectorSpace& v, const RelationGenerators<F>& gens) {
  TensorIndexer ix(v, v);
  std::map<int, std::vector<Vector<F>>> vecs;
  for (const auto& [a, b] : gens) {
    require_input(a.coords.size() == v.dim(a.degree) && b.coords.size() == v.dim(b.degree),
                  "generate: generator does not conform to the space");
    if (a.coords.empty() || b.coords.empty()) continue;
    auto t = tensor_coords(field, ix, a.degree, a.coords, b.degree, b.coords);
    if (!is_zero_vector(field, std::span<const typename F::value_type>(t))) vecs[a.degree + b.degree].push_back(std::move(t));
  }
  return BilinearRelation<F>(v, GradedSubspace<F>::spanned(field, ix.space(), vecs));
}

template <Field F>
DirectionalGVS<F> make_dgvs(const F& field, const GradedVectorSpace& v, RelationGenerators<F> gens) {
  auto rel = generate(field, v, gens);
  return {v, std::move(rel), std::move(gens)};
}

template <Field F>
BilinearRelation<F> intersect_relations(const F& field, const std::vector<BilinearRelation<F>>& rels) {
  require_input(!rels.empty(), "intersection of an empty family of relations");
  auto r = rels.front().defining();
  for (std::size_t i = 1; i < rels.size(); ++i) {
    require_input(rels[i].space().same_shape(rels.front().space()), "intersection: relations live on different spaces");
    r = intersect(field, r, rels[i].defining());
  }
  return BilinearRelation<F>(rels.front().space(), std::move(r));
}

/// Image of a subspace of V ⊗ V under f ⊗ f, as a subspace of W ⊗ W.
template <Field F>
GradedSubspace<F> tensor_image(const F& field, const GradedLinearMap<F>& f, const TensorIndexer& src,
                               const TensorIndexer& dst, const GradedSubspace<F>& r) {
  std::map<int, std::vector<Vector<F>>> vecs;
  for (int n : r.degrees()) {
    const int t = n + 2 * f.shift();
    if (dst.dim(t) == 0) continue;
    for (const auto& g : r.generators(n)) vecs[t].push_back(tensor_apply(field, f, f, src, dst, n, g));
  }
  return GradedSubspace<F>::spanned(field, dst.space(), vecs);
}

template <Field F>
Homogeneous<F> apply(const F& field, const GradedLinearMap<F>& f, const Homogeneous<F>& v) {
  return {v.degree + f.shift(), f.apply(field, v.degree, v.coords)};
}

template <Field F>
struct DirectSum {
  DirectionalGVS<F> dgvs;
  std::vector<GradedLinearMap<F>> injections;
};

/// ⊕ V_i with R = ⊕ (ι_i ⊗ ι_i)(R_i); labels are tagged "i:label".
template <Field F>
DirectSum<F> direct_sum(const F& field, const std::vector<DirectionalGVS<F>>& parts) {
  GradedVectorSpace sum;
  std::map<int, std::vector<std::string>> labels;
  std::vector<std::map<int, std::size_t>> offsets(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int k : parts[i].space.degrees()) {
      offsets[i][k] = labels[k].size();
      for (const auto& l : parts[i].space.labels(k)) labels[k].push_back(std::to_string(i) + ":" + l);
    }
  for (auto& [k, l] : labels) sum.set_degree(k, std::move(l));

  DirectSum<F> out;
  const TensorIndexer sum_ix(sum, sum);
  GradedSubspace<F> r(sum_ix.space());
  RelationGenerators<F> gens;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& v = parts[i].space;
    GradedLinearMap<F> inj(v, sum, 0);
    for (int k : v.degrees()) {
      Matrix<F> m = Matrix<F>::zero(field, sum.dim(k), v.dim(k));
      for (std::size_t a = 0; a < v.dim(k); ++a) m(offsets[i][k] + a, a) = field.one();
      inj.set_block(k, std::move(m));
    }
    r = dihom::sum(field, r, tensor_image(field, inj, parts[i].pointing.indexer(), sum_ix, parts[i].pointing.defining()));
    for (const auto& [a, b] : parts[i].generators) gens.emplace_back(apply(field, inj, a), apply(field, inj, b));
    out.injections.push_back(std::move(inj));
  }
  out.dgvs = {sum, BilinearRelation<F>(sum, std::move(r)), std::move(gens)};
  return out;
}

/// Pointing of V ⊗ W computed from generators only:
/// R = span{(v ⊗ w) ⊗ (v' ⊗ w') | v → v' generates in V, w → w' generates in W}.
template <Field F>
DirectionalGVS<F> tensor(const F& field, const DirectionalGVS<F>& a, const DirectionalGVS<F>& b) {
  const TensorIndexer vw(a.space, b.space);
  const GradedVectorSpace& space = vw.space();
  RelationGenerators<F> gens;
  for (const auto& [v, v2] : a.generators)
    for (const auto& [w, w2] : b.generators) {
      if (a.space.dim(v.degree) == 0 || b.space.dim(w.degree) == 0 || a.space.dim(v2.degree) == 0 ||
          b.space.dim(w2.degree) == 0)
        continue;
      Homogeneous<F> left{v.degree + w.degree, tensor_coords(field, vw, v.degree, v.coords, w.degree, w.coords)};
      Homogeneous<F> right{v2.degree + w2.degree, tensor_coords(field, vw, v2.degree, v2.coords, w2.degree, w2.coords)};
      gens.emplace_back(std::move(left), std::move(right));
    }
  auto rel = generate(field, space, gens);
  return {space, std::move(rel), std::move(gens)};
}

/// The same defining space reached differently: R_V ⊗ R_W carried across the middle
/// interchange (V⊗V)⊗(W⊗W) -> (V⊗W)⊗(V⊗W).
template <Field F>
GradedSubspace<F> tensor_defining_by_interchange(const F& field, const DirectionalGVS<F>& a,
                                                 const DirectionalGVS<F>& b) {
  const TensorIndexer& vv = a.pointing.indexer();
  const TensorIndexer& ww = b.pointing.indexer();
  const TensorIndexer vv_ww(vv.space(), ww.space());
  const TensorIndexer vw(a.space, b.space);
  const TensorIndexer vw_vw(vw.space(), vw.space());
  std::map<int, std::vector<Vector<F>>> vecs;
  for (int p : a.pointing.defining().degrees())
    for (int q : b.pointing.defining().degrees())
      for (const auto& r : a.pointing.defining().generators(p))
        for (const auto& s : b.pointing.defining().generators(q)) {
          const auto src = tensor_coords(field, vv_ww, p, r, q, s);
          Vector<F> dst = zero_vector(field, vw_vw.dim(p + q));
          for (std::size_t i = 0; i < src.size(); ++i)
            if (!field.is_zero(src[i])) dst[interchange_index(vv, ww, vv_ww, vw, vw_vw, p + q, i)] = src[i];
          vecs[p + q].push_back(std::move(dst));
        }
  return GradedSubspace<F>::spanned(field, vw_vw.space(), vecs);
}

/// (f ⊗ f)(R_a) ⊆ R_b, degree shifts applied in both slots.
template <Field F>
bool is_morphism(const F& field, const GradedLinearMap<F>& f, const DirectionalGVS<F>& a, const DirectionalGVS<F>& b) {
  require_input(f.source().same_shape(a.space) && f.target().same_shape(b.space), "is_morphism: map does not match the spaces");
  const auto img = tensor_image(field, f, a.pointing.indexer(), b.pointing.indexer(), a.pointing.defining());
  for (int n : img.degrees()) {
    const auto target = b.pointing.defining().block(n);
    for (const auto& g : img.generators(n))
      if (!target.contains(field, g)) return false;
  }
  return true;
}

/// Checks only that generating pairs are sent to pointing pairs.
template <Field F>
bool is_morphism_from_generators(const F& field, const GradedLinearMap<F>& f, const DirectionalGVS<F>& a,
                                 const DirectionalGVS<F>& b) {
  require_input(f.source().same_shape(a.space) && f.target().same_shape(b.space),
                "is_morphism_from_generators: map does not match the spaces");
  for (const auto& [v, w] : a.generators) {
    const auto fv = apply(field, f, v);
    const auto fw = apply(field, f, w);
    if (b.space.dim(fv.degree) == 0 || b.space.dim(fw.degree) == 0) continue;
    if (!b.points_to(field, fv, fw)) return false;
  }
  return true;
}

/// For invertible f: (f ⊗ f)(R_a) = R_b.
template <Field F>
bool dgvs_isomorphic_check(const F& field, const GradedLinearMap<F>& f, const DirectionalGVS<F>& a,
                           const DirectionalGVS<F>& b) {
  require_input(f.source().same_shape(a.space) && f.target().same_shape(b.space),
                "isomorphism check: map does not match the spaces");
  require_input(f.is_invertible(field), "isomorphism check: map is not invertible");
  return tensor_image(field, f, a.pointing.indexer(), b.pointing.indexer(), a.pointing.defining()) ==
         b.pointing.defining();
}

}  // namespace dihom
