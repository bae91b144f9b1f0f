#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "dihom/errors.hpp"

namespace dihom {

using PointSet = boost::dynamic_bitset<>;
/// rows[i][j] set  <=>  i is related to j.
using Relation = std::vector<PointSet>;
/// Point map between finite spaces: image index of each source point.
using PointMap = std::vector<std::size_t>;
using PointPair = std::pair<std::string, std::string>;

enum class DirectionMode { Explicit, Discrete, Indiscrete };

inline std::string to_string(DirectionMode m) {
  switch (m) {
    case DirectionMode::Explicit: return "explicit";
    case DirectionMode::Discrete: return "discrete";
    case DirectionMode::Indiscrete: return "indiscrete";
  }
  return "?";
}

namespace relation {

inline Relation identity(std::size_t n) {
  Relation r(n, PointSet(n));
  for (std::size_t i = 0; i < n; ++i) r[i].set(i);
  return r;
}

inline Relation all(std::size_t n) {
  Relation r(n, PointSet(n));
  for (auto& row : r) row.set();
  return r;
}

/// Reflexive-transitive closure (Warshall over bit rows).
inline Relation closure(Relation r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) r[i].set(i);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k]) r[i] |= r[k];
  return r;
}

inline bool is_reflexive(const Relation& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!r[i][i]) return false;
  return true;
}

inline bool is_transitive(const Relation& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t k = r[i].find_first(); k != PointSet::npos; k = r[i].find_next(k))
      if (!r[k].is_subset_of(r[i])) return false;
  return true;
}

inline bool is_antisymmetric(const Relation& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = r[i].find_first(); j != PointSet::npos; j = r[i].find_next(j))
      if (j != i && r[j][i]) return false;
  return true;
}

inline Relation transpose(const Relation& r) {
  Relation t(r.size(), PointSet(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = r[i].find_first(); j != PointSet::npos; j = r[i].find_next(j)) t[j].set(i);
  return t;
}

}  // namespace relation

/// A finite T0 space, encoded by its specialization order, carrying an independent direction
/// preorder.
///
/// Convention: U is open iff U is an up-set of the topology order, so the closure of a set is
/// its down-set. Both relations are stored as "up" rows: topo_up(i)[j] iff i ≤ j.
class FinitePreorderedSpace {
 public:
  FinitePreorderedSpace() = default;

  /// Builds a space from generating pairs. The topology order and, in explicit mode, the
  /// direction are closed reflexively and transitively.
  static FinitePreorderedSpace validate(std::vector<std::string> points, const std::vector<PointPair>& topo_pairs,
                                        const std::vector<PointPair>& dir_pairs,
                                        DirectionMode mode = DirectionMode::Explicit) {
    FinitePreorderedSpace x;
    x.points_ = std::move(points);
    for (std::size_t i = 0; i < x.points_.size(); ++i) {
      require_input(!x.points_[i].empty(), "point ids must be nonempty");
      require_input(x.index_.emplace(x.points_[i], i).second, "duplicate point id '" + x.points_[i] + "'");
    }
    const std::size_t n = x.points_.size();
    Relation topo(n, PointSet(n));
    for (const auto& [a, b] : topo_pairs) topo[x.index(a)].set(x.index(b));
    x.topo_ = relation::closure(std::move(topo));
    if (!relation::is_antisymmetric(x.topo_))
      throw NotT0Error("topology is not T0: the closure of the topology pairs is not antisymmetric");

    switch (mode) {
      case DirectionMode::Explicit: {
        Relation dir(n, PointSet(n));
        for (const auto& [a, b] : dir_pairs) dir[x.index(a)].set(x.index(b));
        x.dir_ = relation::closure(std::move(dir));
        break;
      }
      case DirectionMode::Discrete:
        require_input(dir_pairs.empty(), "discrete direction takes no relations");
        x.dir_ = relation::identity(n);
        break;
      case DirectionMode::Indiscrete:
        require_input(dir_pairs.empty(), "indiscrete direction takes no relations");
        x.dir_ = relation::all(n);
        break;
    }
    return x;
  }

  /// Builds a space from already closed relations; the invariants are checked, not repaired.
  static FinitePreorderedSpace from_relations(std::vector<std::string> points, Relation topo, Relation dir) {
    FinitePreorderedSpace x;
    x.points_ = std::move(points);
    for (std::size_t i = 0; i < x.points_.size(); ++i)
      require_input(x.index_.emplace(x.points_[i], i).second, "duplicate point id '" + x.points_[i] + "'");
    const std::size_t n = x.points_.size();
    require_input(topo.size() == n && dir.size() == n, "relation size does not match point count");
    for (std::size_t i = 0; i < n; ++i) require_input(topo[i].size() == n && dir[i].size() == n, "relation row size");
    require_input(relation::is_reflexive(topo) && relation::is_transitive(topo), "topology order is not a preorder");
    if (!relation::is_antisymmetric(topo)) throw NotT0Error("topology order is not antisymmetric");
    require_input(relation::is_reflexive(dir) && relation::is_transitive(dir), "direction is not a preorder");
    x.topo_ = std::move(topo);
    x.dir_ = std::move(dir);
    return x;
  }

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& id(std::size_t i) const { return points_.at(i); }
  bool has(const std::string& id) const { return index_.count(id) != 0; }
  std::size_t index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw InputError("unknown point id '" + id + "'");
    return it->second;
  }

  bool topo_leq(std::size_t i, std::size_t j) const { return topo_[i][j]; }
  bool topo_less(std::size_t i, std::size_t j) const { return i != j && topo_[i][j]; }
  bool dir_leq(std::size_t i, std::size_t j) const { return dir_[i][j]; }
  const Relation& topo() const { return topo_; }
  const Relation& dir() const { return dir_; }
  const PointSet& topo_up(std::size_t i) const { return topo_[i]; }
  const PointSet& dir_up(std::size_t i) const { return dir_[i]; }

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const { return PointSet(size()).set(); }

  PointSet subset(const std::vector<std::string>& ids) const {
    PointSet s(size());
    for (const auto& id : ids) s.set(index(id));
    return s;
  }
  std::vector<std::string> ids(const PointSet& s) const {
    std::vector<std::string> out;
    for (std::size_t i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) out.push_back(points_[i]);
    return out;
  }

  bool dir_is_discrete() const { return dir_ == relation::identity(size()); }
  bool dir_is_indiscrete() const { return dir_ == relation::all(size()); }

  friend bool operator==(const FinitePreorderedSpace& a, const FinitePreorderedSpace& b) {
    return a.points_ == b.points_ && a.topo_ == b.topo_ && a.dir_ == b.dir_;
  }

 private:
  std::vector<std::string> points_;
  std::map<std::string, std::size_t> index_;
  Relation topo_;
  Relation dir_;
};

/// A space with a distinguished subset A; A carries the restricted relations.
struct PairSpace {
  FinitePreorderedSpace space;
  PointSet subset;

  static PairSpace absolute(FinitePreorderedSpace x) {
    PointSet a = x.empty_set();
    return {std::move(x), std::move(a)};
  }
  static PairSpace of(FinitePreorderedSpace x, const std::vector<std::string>& ids) {
    PointSet a = x.subset(ids);
    return {std::move(x), std::move(a)};
  }
};

inline FinitePreorderedSpace restrict(const FinitePreorderedSpace& x, const PointSet& s) {
  require_input(s.size() == x.size(), "restrict: subset is not a subset of the space's points");
  std::vector<std::size_t> keep;
  for (std::size_t i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) keep.push_back(i);
  const std::size_t m = keep.size();
  std::vector<std::string> pts;
  Relation topo(m, PointSet(m)), dir(m, PointSet(m));
  for (std::size_t a = 0; a < m; ++a) {
    pts.push_back(x.id(keep[a]));
    for (std::size_t b = 0; b < m; ++b) {
      if (x.topo_leq(keep[a], keep[b])) topo[a].set(b);
      if (x.dir_leq(keep[a], keep[b])) dir[a].set(b);
    }
  }
  // restrictions of closed relations are closed; from_relations asserts it
  return FinitePreorderedSpace::from_relations(std::move(pts), std::move(topo), std::move(dir));
}

inline FinitePreorderedSpace restrict(const FinitePreorderedSpace& x, const std::vector<std::string>& ids) {
  return restrict(x, x.subset(ids));
}

/// Point (i, j) of X × Y has index i * |Y| + j and id "(a,b)".
inline FinitePreorderedSpace product(const FinitePreorderedSpace& x, const FinitePreorderedSpace& y) {
  const std::size_t n = x.size() * y.size();
  std::vector<std::string> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) pts.push_back("(" + x.id(i) + "," + y.id(j) + ")");
  Relation topo(n, PointSet(n)), dir(n, PointSet(n));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      for (std::size_t k = 0; k < x.size(); ++k)
        for (std::size_t l = 0; l < y.size(); ++l) {
          const std::size_t p = i * y.size() + j, q = k * y.size() + l;
          if (x.topo_leq(i, k) && y.topo_leq(j, l)) topo[p].set(q);
          if (x.dir_leq(i, k) && y.dir_leq(j, l)) dir[p].set(q);
        }
  return FinitePreorderedSpace::from_relations(std::move(pts), std::move(topo), std::move(dir));
}

inline PointMap projection_left(const FinitePreorderedSpace& x, const FinitePreorderedSpace& y) {
  PointMap f(x.size() * y.size());
  for (std::size_t p = 0; p < f.size(); ++p) f[p] = p / y.size();
  return f;
}

inline PointMap projection_right(const FinitePreorderedSpace& x, const FinitePreorderedSpace& y) {
  PointMap f(x.size() * y.size());
  for (std::size_t p = 0; p < f.size(); ++p) f[p] = p % y.size();
  return f;
}

/// Subset E × F of X × Y.
inline PointSet product_set(const PointSet& e, const PointSet& f) {
  PointSet out(e.size() * f.size());
  for (std::size_t i = e.find_first(); i != PointSet::npos; i = e.find_next(i))
    for (std::size_t j = f.find_first(); j != PointSet::npos; j = f.find_next(j)) out.set(i * f.size() + j);
  return out;
}

struct Coproduct {
  FinitePreorderedSpace space;
  std::vector<PointMap> injections;
};

/// Disjoint union; point j of component i gets id "i:id".
inline Coproduct coproduct(const std::vector<FinitePreorderedSpace>& spaces) {
  std::size_t n = 0;
  for (const auto& s : spaces) n += s.size();
  std::vector<std::string> pts;
  Relation topo(n, PointSet(n)), dir(n, PointSet(n));
  std::vector<PointMap> inj;
  std::size_t off = 0;
  for (std::size_t c = 0; c < spaces.size(); ++c) {
    const auto& s = spaces[c];
    PointMap f(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      pts.push_back(std::to_string(c) + ":" + s.id(i));
      f[i] = off + i;
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (s.topo_leq(i, j)) topo[off + i].set(off + j);
        if (s.dir_leq(i, j)) dir[off + i].set(off + j);
      }
    }
    inj.push_back(std::move(f));
    off += s.size();
  }
  return {FinitePreorderedSpace::from_relations(std::move(pts), std::move(topo), std::move(dir)), std::move(inj)};
}

struct Wedge {
  FinitePreorderedSpace space;
  PointMap left_injection;
  PointMap right_injection;
  std::size_t basepoint = 0;
};

/// X ∨ Y glued at dir-minimal basepoints. Direction: a ≤ b iff both lie in X and a ≤_X b, or
/// both lie in Y and a ≤_Y b. Both relations are closed after glueing.
inline Wedge wedge(const FinitePreorderedSpace& x, const std::string& x0, const FinitePreorderedSpace& y,
                   const std::string& y0) {
  const std::size_t bx = x.index(x0), by = y.index(y0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.dir_leq(i, bx) && !x.dir_leq(bx, i))
      throw InputError("wedge basepoint '" + x0 + "' is not minimal in the direction preorder");
  for (std::size_t j = 0; j < y.size(); ++j)
    if (y.dir_leq(j, by) && !y.dir_leq(by, j))
      throw InputError("wedge basepoint '" + y0 + "' is not minimal in the direction preorder");

  Wedge w;
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < x.size(); ++i) {
    w.left_injection.push_back(pts.size());
    pts.push_back("0:" + x.id(i));
  }
  w.basepoint = w.left_injection[bx];
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (j == by) {
      w.right_injection.push_back(w.basepoint);
      continue;
    }
    w.right_injection.push_back(pts.size());
    pts.push_back("1:" + y.id(j));
  }
  const std::size_t n = pts.size();
  Relation topo(n, PointSet(n)), dir(n, PointSet(n));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x.topo_leq(i, k)) topo[w.left_injection[i]].set(w.left_injection[k]);
      if (x.dir_leq(i, k)) dir[w.left_injection[i]].set(w.left_injection[k]);
    }
  for (std::size_t j = 0; j < y.size(); ++j)
    for (std::size_t l = 0; l < y.size(); ++l) {
      if (y.topo_leq(j, l)) topo[w.right_injection[j]].set(w.right_injection[l]);
      if (y.dir_leq(j, l)) dir[w.right_injection[j]].set(w.right_injection[l]);
    }
  topo = relation::closure(std::move(topo));
  // the glueing rule is already transitive unless a basepoint has dir-equivalent partners
  dir = relation::closure(std::move(dir));
  w.space = FinitePreorderedSpace::from_relations(std::move(pts), std::move(topo), std::move(dir));
  return w;
}

/// Continuity (topology order preserved) and monotonicity (direction preserved).
inline bool is_monotone_continuous(const FinitePreorderedSpace& x, const FinitePreorderedSpace& y, const PointMap& f) {
  if (f.size() != x.size()) return false;
  for (auto v : f)
    if (v >= y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x.topo_leq(i, j) && !y.topo_leq(f[i], f[j])) return false;
      if (x.dir_leq(i, j) && !y.dir_leq(f[i], f[j])) return false;
    }
  return true;
}

/// Closure = down-set under the topology order.
inline PointSet closure(const FinitePreorderedSpace& x, const PointSet& s) {
  require_input(s.size() == x.size(), "closure: subset size mismatch");
  PointSet out(x.size());
  for (std::size_t p = 0; p < x.size(); ++p)
    if (x.topo_up(p).intersects(s)) out.set(p);
  return out;
}

/// Interior = largest up-set inside s.
inline PointSet interior(const FinitePreorderedSpace& x, const PointSet& s) {
  require_input(s.size() == x.size(), "interior: subset size mismatch");
  PointSet out(x.size());
  for (std::size_t p = s.find_first(); p != PointSet::npos; p = s.find_next(p))
    if (x.topo_up(p).is_subset_of(s)) out.set(p);
  return out;
}

inline bool is_open(const FinitePreorderedSpace& x, const PointSet& s) { return interior(x, s) == s; }

inline PointMap compose(const PointMap& g, const PointMap& f) {
  PointMap out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g.at(f[i]);
  return out;
}

/// Inclusion of the points of `sub` (in increasing index order) into x.
inline PointMap inclusion_map(const PointSet& sub) {
  PointMap f;
  for (std::size_t i = sub.find_first(); i != PointSet::npos; i = sub.find_next(i)) f.push_back(i);
  return f;
}

inline std::string join_ids(const FinitePreorderedSpace& x, const PointSet& s) {
  std::string out;
  for (std::size_t i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) {
    if (!out.empty()) out += ",";
    out += x.id(i);
  }
  return out;
}

/// a ∩ e re-expressed in the coordinates of restrict(x, e).
inline PointSet restrict_set(const PointSet& e, const PointSet& a) {
  PointSet out(e.count());
  std::size_t k = 0;
  for (std::size_t i = e.find_first(); i != PointSet::npos; i = e.find_next(i), ++k)
    if (a[i]) out.set(k);
  return out;
}

/// Relabels points by a permutation: point i of x becomes point perm[i] of the result.
inline FinitePreorderedSpace relabel(const FinitePreorderedSpace& x, const PointMap& perm) {
  const std::size_t n = x.size();
  std::vector<std::string> pts(n);
  Relation topo(n, PointSet(n)), dir(n, PointSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    pts[perm[i]] = x.id(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (x.topo_leq(i, j)) topo[perm[i]].set(perm[j]);
      if (x.dir_leq(i, j)) dir[perm[i]].set(perm[j]);
    }
  }
  return FinitePreorderedSpace::from_relations(std::move(pts), std::move(topo), std::move(dir));
}

}  // namespace dihom
