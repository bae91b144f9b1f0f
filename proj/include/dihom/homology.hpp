#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dihom/chains.hpp"
#include "dihom/graded.hpp"

namespace dihom {

/// Homology with chosen representative cycles.
///
/// projector(d) has one row per class and one column per chain basis element; it sends a
/// cycle to the coordinates of its class and kills boundaries.
template <Field F>
struct HomologyBasis {
  GradedVectorSpace gvs;
  std::map<int, std::vector<Vector<F>>> cycle_reps;
  std::map<int, Matrix<F>> projector;

  const std::vector<Vector<F>>& reps(int d) const {
    static const std::vector<Vector<F>> kEmpty;
    auto it = cycle_reps.find(d);
    return it == cycle_reps.end() ? kEmpty : it->second;
  }

  Vector<F> classify(const F& field, int d, const Vector<F>& cycle) const {
    auto it = projector.find(d);
    if (it == projector.end()) return {};
    return apply(field, it->second, std::span<const typename F::value_type>(cycle));
  }
};

template <Field F>
HomologyBasis<F> homology(const F& field, const ChainComplexData<F>& c) {
  HomologyBasis<F> h;
  for (int d = 0; d <= c.top_dim(); ++d) {
    const std::size_t n = c.rank(d);
    if (n == 0) continue;
    const auto cycles = kernel(field, c.boundary(field, d));
    const auto bounds = image(field, c.boundary(field, d + 1));
    const std::size_t m = bounds.dim();
    const std::size_t z = cycles.dim();
    if (z == m) continue;

    // Greedy completion: a cycle generator is a representative iff it is a pivot column of
    // [boundary basis | cycle basis].
    std::vector<Vector<F>> rows(n, zero_vector(field, m + z));
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t r = 0; r < n; ++r) rows[r][k] = bounds.generators()[k][r];
    for (std::size_t k = 0; k < z; ++k)
      for (std::size_t r = 0; r < n; ++r) rows[r][m + k] = cycles.generators()[k][r];
    const auto red = partial_rref(field, std::move(rows), m + z, m + z);
    std::vector<Vector<F>> reps;
    for (auto p : red.pivots)
      if (p >= m) reps.push_back(cycles.generators()[p - m]);
    ensure(reps.size() == z - m, "homology: cycle completion produced the wrong number of classes");
    const std::size_t hdim = reps.size();

    // Coordinates relative to the basis (boundaries, reps): eliminate [basis | I] and read the
    // transform rows.
    std::vector<Vector<F>> aug;
    for (std::size_t k = 0; k < m + hdim; ++k) {
      Vector<F> r = k < m ? bounds.generators()[k] : reps[k - m];
      r.resize(n + m + hdim, field.zero());
      r[n + k] = field.one();
      aug.push_back(std::move(r));
    }
    const auto t = partial_rref(field, std::move(aug), n + m + hdim, n);
    ensure(t.rest.empty(), "homology: boundaries and representatives are dependent");
    Matrix<F> p = Matrix<F>::zero(field, hdim, n);
    for (std::size_t k = 0; k < t.pivots.size(); ++k)
      for (std::size_t j = 0; j < hdim; ++j) p(j, t.pivots[k]) = t.pivot_rows[k][n + m + j];

    for (std::size_t j = 0; j < hdim; ++j) {
      ensure(is_zero_vector(field, std::span<const typename F::value_type>(
                                       apply(field, c.boundary(field, d), std::span<const typename F::value_type>(reps[j])))),
             "homology: representative is not a cycle");
      ensure(apply(field, p, std::span<const typename F::value_type>(reps[j])) == unit_vector(field, hdim, j),
             "homology: projector does not fix representatives");
    }
    if (c.rank(d + 1) > 0)
      ensure(is_zero_matrix(field, multiply(field, p, c.boundary(field, d + 1))),
             "homology: projector does not kill boundaries");

    std::vector<std::string> labels;
    for (std::size_t j = 0; j < hdim; ++j) labels.push_back("h" + std::to_string(d) + "." + std::to_string(j));
    h.gvs.set_degree(d, std::move(labels));
    h.cycle_reps[d] = std::move(reps);
    h.projector[d] = std::move(p);
  }
  return h;
}

/// Everything needed to work with H_*(X, A): the space, its chains and a homology basis.
template <Field F>
struct PairHomology {
  FinitePreorderedSpace space;
  PointSet subset;
  ChainComplexData<F> chains;
  HomologyBasis<F> basis;

  const GradedVectorSpace& gvs() const { return basis.gvs; }
};

template <Field F>
PairHomology<F> compute_homology(const F& field, FinitePreorderedSpace x, PointSet subset) {
  require_input(subset.size() == x.size(), "pair subset does not match the space");
  auto k = std::make_shared<const OrderComplex>(OrderComplex::build(x));
  PairHomology<F> h{std::move(x), std::move(subset), {}, {}};
  h.chains = ChainComplexData<F>::build(field, std::move(k), h.subset);
  h.basis = homology(field, h.chains);
  return h;
}

template <Field F>
PairHomology<F> compute_homology(const F& field, FinitePreorderedSpace x) {
  PointSet empty = x.empty_set();
  return compute_homology(field, std::move(x), std::move(empty));
}

template <Field F>
PairHomology<F> compute_homology(const F& field, const PairSpace& p) {
  return compute_homology(field, p.space, p.subset);
}

/// Image of H_*(E, E∩A) -> H_*(X, A), read off the subcomplex spanned by simplices inside E.
template <Field F>
GradedSubspace<F> subset_image(const F& field, const PairHomology<F>& h, const PointSet& e) {
  GradedSubspace<F> out(h.gvs());
  const auto& k = h.chains.complex();
  for (int d : h.gvs().degrees()) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < h.chains.rank(d); ++j)
      if (k.vertices(d, h.chains.global(d, j)).is_subset_of(e)) cols.push_back(j);
    if (cols.empty()) continue;
    std::vector<Vector<F>> cycles;
    if (d == 0) {
      for (auto j : cols) cycles.push_back(unit_vector(field, h.chains.rank(0), j));
    } else {
      const Matrix<F>* bd = h.chains.boundary_ptr(d);
      Matrix<F> sub = Matrix<F>::zero(field, bd->rows(), cols.size());
      for (std::size_t r = 0; r < bd->rows(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) sub(r, c) = (*bd)(r, cols[c]);
      const auto ker = kernel(field, sub);
      for (const auto& g : ker.generators()) {
        Vector<F> full = zero_vector(field, h.chains.rank(d));
        for (std::size_t c = 0; c < cols.size(); ++c) full[cols[c]] = g[c];
        cycles.push_back(std::move(full));
      }
    }
    std::vector<Vector<F>> classes;
    for (const auto& z : cycles) classes.push_back(h.basis.classify(field, d, z));
    out.set_block(Subspace<F>::span(field, h.gvs().dim(d), std::move(classes)), d);
  }
  return out;
}

/// Chain map of a point map between pairs: a simplex goes to its image chain, or to zero when
/// two consecutive vertices collide or the image lies in the target subset.
template <Field F>
std::map<int, Matrix<F>> simplicial_chain_map(const F& field, const PairHomology<F>& src, const PairHomology<F>& dst,
                                               const PointMap& f) {
  std::map<int, Matrix<F>> out;
  const auto& ks = src.chains.complex();
  const auto& kt = dst.chains.complex();
  for (int d = 0; d <= src.chains.top_dim(); ++d) {
    Matrix<F> m = Matrix<F>::zero(field, dst.chains.rank(d), src.chains.rank(d));
    for (std::size_t j = 0; j < src.chains.rank(d); ++j) {
      const Simplex& s = ks.simplex(d, src.chains.global(d, j));
      Simplex img;
      bool degenerate = false;
      for (auto v : s) {
        if (!img.empty() && img.back() == f[v]) {
          degenerate = true;
          break;
        }
        img.push_back(f[v]);
      }
      if (degenerate) continue;
      const auto gi = kt.find(img);
      ensure(gi.has_value(), "chain map: image of a simplex is not a chain");
      const auto li = dst.chains.local(d, *gi);
      if (li) m(*li, j) = field.one();
    }
    out[d] = std::move(m);
  }
  for (int d = 1; d <= src.chains.top_dim(); ++d) {
    auto lhs = multiply(field, dst.chains.boundary(field, d), out[d]);
    auto rhs = multiply(field, out[d - 1], src.chains.boundary(field, d));
    ensure(lhs == rhs, "chain map does not commute with the boundary in degree " + std::to_string(d));
  }
  return out;
}

/// f_*: H_*(X, A) -> H_*(Y, B) for a monotone continuous f with f(A) ⊆ B.
template <Field F>
GradedLinearMap<F> induced_map(const F& field, const PairHomology<F>& src, const PairHomology<F>& dst,
                               const PointMap& f) {
  require_input(is_monotone_continuous(src.space, dst.space, f), "induced map: point map is not monotone continuous");
  for (std::size_t i = src.subset.find_first(); i != PointSet::npos; i = src.subset.find_next(i))
    require_input(dst.subset[f[i]], "induced map: the subset is not mapped into the target subset");
  const auto chain = simplicial_chain_map(field, src, dst, f);
  GradedLinearMap<F> out(src.gvs(), dst.gvs(), 0);
  for (int d : src.gvs().degrees()) {
    if (dst.gvs().dim(d) == 0) continue;
    std::vector<Vector<F>> cols;
    for (const auto& z : src.basis.reps(d))
      cols.push_back(dst.basis.classify(field, d, apply(field, chain.at(d), std::span<const typename F::value_type>(z))));
    out.set_block(d, Matrix<F>::from_columns(field, dst.gvs().dim(d), cols));
  }
  return out;
}

/// H_*(E, E∩A) -> H_*(X, A), computed from the homology of the subspace itself.
template <Field F>
GradedLinearMap<F> induced_inclusion(const F& field, const PairHomology<F>& h, const PointSet& e,
                                     PairHomology<F>* sub_out = nullptr) {
  require_input(e.size() == h.space.size(), "inclusion: subset is not a subset of the space's points");
  auto sub = compute_homology(field, restrict(h.space, e), restrict_set(e, h.subset));
  auto map = induced_map(field, sub, h, inclusion_map(e));
  if (sub_out) *sub_out = std::move(sub);
  return map;
}

/// δ: H_k(X, A) -> H_{k-1}(A). `sub` is the absolute homology of the subspace A.
template <Field F>
GradedLinearMap<F> connecting(const F& field, const PairHomology<F>& pair, const PairHomology<F>& sub) {
  require_input(sub.space.size() == pair.subset.count() && !sub.subset.any(),
                "connecting map: second argument must be the homology of the subspace");
  std::vector<std::size_t> to_sub(pair.space.size(), static_cast<std::size_t>(-1));
  {
    std::size_t k = 0;
    for (std::size_t i = pair.subset.find_first(); i != PointSet::npos; i = pair.subset.find_next(i)) to_sub[i] = k++;
  }
  const auto& kx = pair.chains.complex();
  const auto& ka = sub.chains.complex();
  GradedLinearMap<F> out(pair.gvs(), sub.gvs(), -1);
  for (int d : pair.gvs().degrees()) {
    if (d == 0 || sub.gvs().dim(d - 1) == 0) continue;
    std::vector<Vector<F>> cols;
    for (const auto& z : pair.basis.reps(d)) {
      Vector<F> lifted = zero_vector(field, kx.count(d));
      for (std::size_t j = 0; j < z.size(); ++j) lifted[pair.chains.global(d, j)] = z[j];
      const auto bd = absolute_boundary(field, kx, d, lifted);
      Vector<F> in_a = zero_vector(field, sub.chains.rank(d - 1));
      for (std::size_t i = 0; i < bd.size(); ++i) {
        if (field.is_zero(bd[i])) continue;
        Simplex s;
        for (auto v : kx.simplex(d - 1, i)) {
          ensure(to_sub[v] != static_cast<std::size_t>(-1), "connecting map: boundary leaves the subspace");
          s.push_back(to_sub[v]);
        }
        in_a[*sub.chains.local(d - 1, *ka.find(s))] = bd[i];
      }
      cols.push_back(sub.basis.classify(field, d - 1, in_a));
    }
    out.set_block(d, Matrix<F>::from_columns(field, sub.gvs().dim(d - 1), cols));
  }
  return out;
}

/// Terms of the shuffle product σ × τ in K(X × Y), with signs.
///
/// A shuffle is a staircase path from (0,0) to (p,q); its sign is (-1)^k where k counts the
/// pairs in which a step in τ precedes a step in σ.
template <Field F>
std::vector<std::pair<Simplex, typename F::value_type>> cross_chain(const F& field, std::size_t y_size,
                                                                    const Simplex& sigma, const Simplex& tau) {
  std::vector<std::pair<Simplex, typename F::value_type>> out;
  const std::size_t p = sigma.size() - 1, q = tau.size() - 1;
  Simplex path;
  auto walk = [&](auto& self, std::size_t i, std::size_t j, std::size_t y_steps, std::size_t inversions) -> void {
    path.push_back(sigma[i] * y_size + tau[j]);
    if (i == p && j == q) {
      out.emplace_back(path, inversions % 2 == 0 ? field.one() : field.neg(field.one()));
    } else {
      if (i < p) self(self, i + 1, j, y_steps, inversions + y_steps);
      if (j < q) self(self, i, j + 1, y_steps + 1, inversions);
    }
    path.pop_back();
  };
  walk(walk, 0, 0, 0, 0);
  return out;
}

/// The homology cross product H_*(X, A) ⊗ H_*(Y, B) -> H_*(X × Y, A×Y ∪ X×B). The source is
/// laid out by TensorIndexer(hx.gvs(), hy.gvs()).
template <Field F>
GradedLinearMap<F> cross(const F& field, const PairHomology<F>& hx, const PairHomology<F>& hy,
                         const PairHomology<F>& hp) {
  require_input(hp.space.size() == hx.space.size() * hy.space.size(), "cross product: product space size mismatch");
  const TensorIndexer ix(hx.gvs(), hy.gvs());
  const auto& kx = hx.chains.complex();
  const auto& ky = hy.chains.complex();
  const auto& kp = hp.chains.complex();
  const std::size_t ny = hy.space.size();
  GradedLinearMap<F> out(ix.space(), hp.gvs(), 0);
  for (int n : ix.space().degrees()) {
    if (hp.gvs().dim(n) == 0) continue;
    std::vector<Vector<F>> cols;
    for (const auto& blk : ix.blocks(n)) {
      const auto& zs = hx.basis.reps(blk.left_degree);
      const auto& ws = hy.basis.reps(blk.right_degree);
      for (const auto& z : zs)
        for (const auto& w : ws) {
          Vector<F> chain = zero_vector(field, hp.chains.rank(n));
          for (std::size_t a = 0; a < z.size(); ++a) {
            if (field.is_zero(z[a])) continue;
            const auto& sigma = kx.simplex(blk.left_degree, hx.chains.global(blk.left_degree, a));
            for (std::size_t b = 0; b < w.size(); ++b) {
              if (field.is_zero(w[b])) continue;
              const auto& tau = ky.simplex(blk.right_degree, hy.chains.global(blk.right_degree, b));
              const auto coeff = field.mul(z[a], w[b]);
              for (const auto& [s, sign] : cross_chain(field, ny, sigma, tau)) {
                const auto li = hp.chains.local(n, *kp.find(s));
                if (!li) continue;
                chain[*li] = field.add(chain[*li], field.mul(coeff, sign));
              }
            }
          }
          ensure(is_zero_vector(field, std::span<const typename F::value_type>(apply(
                                           field, hp.chains.boundary(field, n), std::span<const typename F::value_type>(chain)))),
                 "cross product of cycles is not a cycle");
          cols.push_back(hp.basis.classify(field, n, chain));
        }
    }
    out.set_block(n, Matrix<F>::from_columns(field, hp.gvs().dim(n), cols));
  }
  return out;
}

/// Exactness of ... -> H_k(A) -> H_k(X) -> H_k(X,A) -> H_{k-1}(A) -> ... at every joint.
template <Field F>
bool long_exact_sequence_holds(const F& field, const PairHomology<F>& pair) {
  auto sub = compute_homology(field, restrict(pair.space, pair.subset));
  auto abs = compute_homology(field, pair.space);
  const auto i = induced_map(field, sub, abs, inclusion_map(pair.subset));
  PointMap id(pair.space.size());
  for (std::size_t k = 0; k < id.size(); ++k) id[k] = k;
  const auto j = induced_map(field, abs, pair, id);
  const auto delta = connecting(field, pair, sub);

  int top = std::max({pair.chains.top_dim(), 0}) + 1;
  auto joint = [&](const GradedLinearMap<F>& in, int in_deg, const GradedLinearMap<F>& out, int mid_deg,
                   std::size_t mid_dim) {
    const auto a = in.block(field, in_deg);
    const auto b = out.block(field, mid_deg);
    if (a.cols() > 0 && b.rows() > 0 && !is_zero_matrix(field, multiply(field, b, a))) return false;
    return rank(field, a) + rank(field, b) == mid_dim;
  };
  for (int k = 0; k <= top; ++k) {
    if (!joint(delta, k + 1, i, k, sub.gvs().dim(k))) return false;
    if (!joint(i, k, j, k, abs.gvs().dim(k))) return false;
    if (!joint(j, k, delta, k, pair.gvs().dim(k))) return false;
  }
  return true;
}

}  // namespace dihom
