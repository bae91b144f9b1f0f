#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dihom/concepts.hpp"
#include "dihom/homology.hpp"
#include "dihom/parallel.hpp"
#include "dihom/relation.hpp"

namespace dihom {

template <Field F>
struct Witness {
  ConceptPair pair;
  GradedSubspace<F> image_e;
  GradedSubspace<F> image_f;
};

/// H_*(X, A) with its pointing relation and the concept pairs that generate it.
template <Field F>
struct HomologyDigraph {
  PairHomology<F> homology;
  DirectionalGVS<F> dgvs;
  std::vector<Witness<F>> witnesses;

  const GradedVectorSpace& gvs() const { return homology.gvs(); }
  const GradedSubspace<F>& defining() const { return dgvs.pointing.defining(); }
  bool points_to(const F& field, const Homogeneous<F>& v, const Homogeneous<F>& w) const {
    return dgvs.points_to(field, v, w);
  }
};

struct DigraphOptions {
  unsigned threads = 1;
};

namespace detail {

/// Pairs (u, v) for u, v running over the canonical bases of two image subspaces.
template <Field F>
void add_image_generators(const GradedSubspace<F>& e, const GradedSubspace<F>& f, RelationGenerators<F>& gens) {
  for (int i : e.degrees())
    for (const auto& u : e.generators(i))
      for (int j : f.degrees())
        for (const auto& v : f.generators(j)) gens.emplace_back(Homogeneous<F>{i, u}, Homogeneous<F>{j, v});
}

template <Field F>
DirectionalGVS<F> assemble(const F& field, const GradedVectorSpace& v,
                           const std::vector<std::pair<const GradedSubspace<F>*, const GradedSubspace<F>*>>& pairs) {
  RelationGenerators<F> gens;
  std::vector<std::pair<const GradedSubspace<F>*, const GradedSubspace<F>*>> seen;
  for (const auto& [e, f] : pairs) {
    if (e->degrees().empty() || f->degrees().empty()) continue;
    bool dup = false;
    for (const auto& [se, sf] : seen)
      if (*se == *e && *sf == *f) {
        dup = true;
        break;
      }
    if (dup) continue;
    seen.emplace_back(e, f);
    add_image_generators(*e, *f, gens);
  }
  return make_dgvs(field, v, std::move(gens));
}

}  // namespace detail

/// Digraph of a pair from the formal concepts of the direction; images use (E, E∩A).
template <Field F>
HomologyDigraph<F> homology_digraph_pair(const F& field, const PairSpace& p, const DigraphOptions& opts = {}) {
  HomologyDigraph<F> d;
  d.homology = compute_homology(field, p);
  const auto concepts = enumerate_concepts(p.space);
  d.witnesses.resize(concepts.size());
  parallel_for(concepts.size(), opts.threads, [&](std::size_t i) {
    d.witnesses[i] = {concepts[i], subset_image(field, d.homology, concepts[i].extent),
                      subset_image(field, d.homology, concepts[i].intent)};
  });
  std::vector<std::pair<const GradedSubspace<F>*, const GradedSubspace<F>*>> pairs;
  for (const auto& w : d.witnesses) pairs.emplace_back(&w.image_e, &w.image_f);
  d.dgvs = detail::assemble(field, d.gvs(), pairs);
  return d;
}

template <Field F>
HomologyDigraph<F> homology_digraph(const F& field, const FinitePreorderedSpace& x, const DigraphOptions& opts = {}) {
  return homology_digraph_pair(field, PairSpace::absolute(x), opts);
}

/// The definition taken literally: every pair of subsets (E, F) with E × F inside the
/// direction, images computed from the homology of each subspace.
template <Field F>
HomologyDigraph<F> brute_force_digraph(const F& field, const PairSpace& p, std::size_t cap = 10) {
  const std::size_t n = p.space.size();
  require_input(n <= cap, "brute-force oracle: " + std::to_string(n) + " points exceeds the cap of " +
                              std::to_string(cap));
  require_input(n < 32, "brute-force oracle: too many points");
  HomologyDigraph<F> d;
  d.homology = compute_homology(field, p);
  const std::uint32_t subsets = std::uint32_t{1} << n;
  auto to_set = [n](std::uint32_t mask) {
    PointSet s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s.set(i);
    return s;
  };

  // distinct images, and the image id of every subset
  std::vector<GradedSubspace<F>> distinct;
  std::vector<std::size_t> id(subsets);
  for (std::uint32_t m = 0; m < subsets; ++m) {
    const auto img = image(field, induced_inclusion(field, d.homology, to_set(m)));
    std::size_t k = 0;
    while (k < distinct.size() && !(distinct[k] == img)) ++k;
    if (k == distinct.size()) distinct.push_back(img);
    id[m] = k;
  }
  std::vector<std::uint32_t> up(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.space.dir_leq(i, j)) up[i] |= std::uint32_t{1} << j;

  std::set<std::pair<std::size_t, std::size_t>> image_pairs;
  for (std::uint32_t e = 0; e < subsets; ++e) {
    std::uint32_t allowed = subsets - 1;
    for (std::size_t i = 0; i < n; ++i)
      if (e >> i & 1U) allowed &= up[i];
    for (std::uint32_t f = allowed;; f = (f - 1) & allowed) {
      image_pairs.emplace(id[e], id[f]);
      if (f == 0) break;
    }
  }
  std::vector<std::pair<const GradedSubspace<F>*, const GradedSubspace<F>*>> pairs;
  for (const auto& [a, b] : image_pairs) pairs.emplace_back(&distinct[a], &distinct[b]);
  d.dgvs = detail::assemble(field, d.gvs(), pairs);
  return d;
}

template <Field F>
HomologyDigraph<F> brute_force_digraph(const F& field, const FinitePreorderedSpace& x, std::size_t cap = 10) {
  return brute_force_digraph(field, PairSpace::absolute(x), cap);
}

/// First witness whose images contain the two basis classes, in enumeration order.
template <Field F>
std::optional<std::size_t> witness_for(const F& field, const HomologyDigraph<F>& d, int di, std::size_t i, int dj,
                                       std::size_t j) {
  const auto u = unit_vector(field, d.gvs().dim(di), i);
  const auto v = unit_vector(field, d.gvs().dim(dj), j);
  for (std::size_t k = 0; k < d.witnesses.size(); ++k) {
    const auto& w = d.witnesses[k];
    if (w.image_e.dim(di) > 0 && w.image_f.dim(dj) > 0 && w.image_e.contains(field, di, u) &&
        w.image_f.contains(field, dj, v))
      return k;
  }
  return std::nullopt;
}

struct CheckReport {
  std::string check;
  bool passed = true;
  std::vector<std::pair<std::string, std::string>> details;

  void add(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
  void require(bool ok, const std::string& what) {
    add(what, ok ? "pass" : "FAIL");
    passed = passed && ok;
  }
};

inline std::string format_dims(const std::map<int, std::size_t>& dims) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, d] : dims) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(k) + ":" + std::to_string(d);
  }
  return out + "}";
}

template <Field F>
struct MorphismResult {
  GradedLinearMap<F> map;
  bool morphism = false;
  bool from_generators = false;
};

/// f_* between two digraphs together with both morphism checks.
template <Field F>
MorphismResult<F> induced_digraph_morphism(const F& field, const PointMap& f, const HomologyDigraph<F>& src,
                                           const HomologyDigraph<F>& dst) {
  MorphismResult<F> r;
  r.map = induced_map(field, src.homology, dst.homology, f);
  r.morphism = is_morphism(field, r.map, src.dgvs, dst.dgvs);
  r.from_generators = is_morphism_from_generators(field, r.map, src.dgvs, dst.dgvs);
  return r;
}

template <Field F>
CheckReport verify_morphism(const F& field, const PairSpace& src, const PairSpace& dst, const PointMap& f,
                            const DigraphOptions& opts = {}) {
  require_input(f.size() == src.space.size(), "map-check: the map is not total on the source points");
  require_input(is_monotone_continuous(src.space, dst.space, f), "map-check: the map is not monotone continuous");
  CheckReport rep{"map-check", true, {}};
  const auto a = homology_digraph_pair(field, src, opts);
  const auto b = homology_digraph_pair(field, dst, opts);
  const auto m = induced_digraph_morphism(field, f, a, b);
  rep.add("source betti", format_dims(a.gvs().dims()));
  rep.add("target betti", format_dims(b.gvs().dims()));
  rep.require(m.morphism, "(f⊗f)(R_source) ⊆ R_target");
  rep.require(m.from_generators, "generating pairs map to pointing pairs");
  return rep;
}

template <Field F>
CheckReport verify_coproduct(const F& field, const std::vector<FinitePreorderedSpace>& xs,
                             const DigraphOptions& opts = {}) {
  CheckReport rep{"coproduct", true, {}};
  const auto cop = coproduct(xs);
  std::vector<HomologyDigraph<F>> parts;
  std::vector<DirectionalGVS<F>> dgvs;
  for (const auto& x : xs) {
    parts.push_back(homology_digraph(field, x, opts));
    dgvs.push_back(parts.back().dgvs);
  }
  const auto sum = direct_sum(field, dgvs);
  const auto whole = homology_digraph(field, cop.space, opts);

  GradedLinearMap<F> phi(sum.dgvs.space, whole.gvs(), 0);
  for (int k : sum.dgvs.space.degrees()) {
    std::vector<Vector<F>> cols;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (parts[i].gvs().dim(k) == 0) continue;
      const auto m = induced_map(field, parts[i].homology, whole.homology, cop.injections[i]).block(field, k);
      for (auto& c : m.columns()) cols.push_back(std::move(c));
    }
    if (whole.gvs().dim(k) > 0) phi.set_block(k, Matrix<F>::from_columns(field, whole.gvs().dim(k), cols));
  }
  rep.add("sum betti", format_dims(sum.dgvs.space.dims()));
  rep.add("coproduct betti", format_dims(whole.gvs().dims()));
  rep.add("sum defining dims", format_dims(sum.dgvs.pointing.defining().dims()));
  rep.add("coproduct defining dims", format_dims(whole.defining().dims()));
  const bool inv = phi.is_invertible(field);
  rep.require(inv, "injections induce an isomorphism");
  rep.require(inv && dgvs_isomorphic_check(field, phi, sum.dgvs, whole.dgvs), "pointing relations correspond");
  return rep;
}

template <Field F>
CheckReport verify_excision(const F& field, const PairSpace& p, const PointSet& u, const DigraphOptions& opts = {}) {
  require_input(u.size() == p.space.size(), "excision: excised set does not match the space");
  if (!u.is_subset_of(p.subset)) throw HypothesisNotMet("excision: the excised set is not contained in the subspace");
  const auto cl = closure(p.space, u);
  const auto in = interior(p.space, p.subset);
  if (!cl.is_subset_of(in))
    throw HypothesisNotMet("excision: closure(U) = {" + join_ids(p.space, cl) + "} is not inside interior(A) = {" +
                           join_ids(p.space, in) + "}");
  CheckReport rep{"excision", true, {}};
  const PointSet keep = ~u;
  PairSpace small{restrict(p.space, keep), restrict_set(keep, p.subset)};
  const auto a = homology_digraph_pair(field, small, opts);
  const auto b = homology_digraph_pair(field, p, opts);
  const auto f = induced_map(field, a.homology, b.homology, inclusion_map(keep));
  rep.add("excised betti", format_dims(a.gvs().dims()));
  rep.add("pair betti", format_dims(b.gvs().dims()));
  rep.add("excised defining dims", format_dims(a.defining().dims()));
  rep.add("pair defining dims", format_dims(b.defining().dims()));
  const bool inv = f.is_invertible(field);
  rep.require(inv, "inclusion induces an isomorphism");
  rep.require(inv && dgvs_isomorphic_check(field, f, a.dgvs, b.dgvs), "pointing relations correspond");
  return rep;
}

template <Field F>
CheckReport verify_connecting(const F& field, const PairSpace& p, const DigraphOptions& opts = {}) {
  CheckReport rep{"connecting", true, {}};
  const auto pair = homology_digraph_pair(field, p, opts);
  const auto sub = homology_digraph(field, restrict(p.space, p.subset), opts);
  const auto delta = connecting(field, pair.homology, sub.homology);
  std::map<int, std::size_t> ranks;
  for (int k : pair.gvs().degrees())
    if (auto r = rank(field, delta, k)) ranks[k] = r;
  rep.add("pair betti", format_dims(pair.gvs().dims()));
  rep.add("subspace betti", format_dims(sub.gvs().dims()));
  rep.add("delta ranks", format_dims(ranks));
  rep.require(long_exact_sequence_holds(field, pair.homology), "long exact sequence is exact");
  rep.require(is_morphism(field, delta, pair.dgvs, sub.dgvs), "(δ⊗δ)(R_pair) ⊆ R_subspace");
  rep.require(is_morphism_from_generators(field, delta, pair.dgvs, sub.dgvs), "generating pairs map to pointing pairs");
  return rep;
}

/// A relabelled copy of a space has an isomorphic digraph, via the relabelling itself.
template <Field F>
CheckReport verify_relabel_invariance(const F& field, const PairSpace& p, const PointMap& perm,
                                      const DigraphOptions& opts = {}) {
  CheckReport rep{"relabel-invariance", true, {}};
  PointSet moved(p.space.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (p.subset[i]) moved.set(perm[i]);
  const PairSpace q{relabel(p.space, perm), moved};
  const auto a = homology_digraph_pair(field, p, opts);
  const auto b = homology_digraph_pair(field, q, opts);
  const auto f = induced_map(field, a.homology, b.homology, perm);
  const bool inv = f.is_invertible(field);
  rep.add("defining dims", format_dims(a.defining().dims()));
  rep.require(inv, "relabelling induces an isomorphism");
  rep.require(inv && dgvs_isomorphic_check(field, f, a.dgvs, b.dgvs), "pointing relations correspond");
  return rep;
}

/// Cross product H(X, A) ⊗ H(Y, B) -> H(X × Y, A×Y ∪ X×B) against the tensor digraph.
template <Field F>
struct KunnethData {
  HomologyDigraph<F> left, right, product;
  DirectionalGVS<F> tensor;
  GradedLinearMap<F> cross;
};

template <Field F>
KunnethData<F> kunneth_data(const F& field, const PairSpace& px, const PairSpace& py, const DigraphOptions& opts = {}) {
  KunnethData<F> k;
  k.left = homology_digraph_pair(field, px, opts);
  k.right = homology_digraph_pair(field, py, opts);
  auto prod = product(px.space, py.space);
  PointSet sub = product_set(px.subset, py.space.full_set()) | product_set(px.space.full_set(), py.subset);
  k.product = homology_digraph_pair(field, PairSpace{std::move(prod), std::move(sub)}, opts);
  k.tensor = tensor(field, k.left.dgvs, k.right.dgvs);
  k.cross = cross(field, k.left.homology, k.right.homology, k.product.homology);
  return k;
}

template <Field F>
CheckReport kunneth_report(const F& field, const KunnethData<F>& k, const std::string& name) {
  CheckReport rep{name, true, {}};
  rep.add("left betti", format_dims(k.left.gvs().dims()));
  rep.add("right betti", format_dims(k.right.gvs().dims()));
  rep.add("product betti", format_dims(k.product.gvs().dims()));
  rep.add("tensor defining dims", format_dims(k.tensor.pointing.defining().dims()));
  rep.add("product defining dims", format_dims(k.product.defining().dims()));
  rep.require(tensor_defining_by_interchange(field, k.left.dgvs, k.right.dgvs) == k.tensor.pointing.defining(),
              "generator route equals interchange route");
  const bool inv = k.cross.is_invertible(field);
  rep.require(inv, "cross product is an isomorphism");
  rep.require(inv && dgvs_isomorphic_check(field, k.cross, k.tensor, k.product.dgvs), "pointing relations correspond");
  return rep;
}

template <Field F>
CheckReport verify_kunneth(const F& field, const FinitePreorderedSpace& x, const FinitePreorderedSpace& y,
                           const DigraphOptions& opts = {}) {
  return kunneth_report(field, kunneth_data(field, PairSpace::absolute(x), PairSpace::absolute(y), opts), "kunneth");
}

template <Field F>
CheckReport relative_kunneth(const F& field, const PairSpace& px, const PairSpace& py, const DigraphOptions& opts = {}) {
  if (!is_open(px.space, px.subset)) throw HypothesisNotMet("relative Künneth: the first subspace is not open");
  if (!is_open(py.space, py.subset)) throw HypothesisNotMet("relative Künneth: the second subspace is not open");
  return kunneth_report(field, kunneth_data(field, px, py, opts), "relative-kunneth");
}

}  // namespace dihom
