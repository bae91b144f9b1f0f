#pragma once

#include <vector>

#include "dihom/space.hpp"

namespace dihom {

/// A maximal pair (E, F) with every point of E below every point of F in the direction.
struct ConceptPair {
  PointSet extent;
  PointSet intent;

  friend bool operator==(const ConceptPair&, const ConceptPair&) = default;
};

/// Points above every point of e (all points when e is empty).
inline PointSet common_upper(const FinitePreorderedSpace& x, const PointSet& e) {
  PointSet out = x.full_set();
  for (std::size_t i = e.find_first(); i != PointSet::npos; i = e.find_next(i)) out &= x.dir_up(i);
  return out;
}

/// Points below every point of f, given the transposed direction rows.
inline PointSet common_lower(const Relation& down, const PointSet& f, std::size_t n) {
  PointSet out(n);
  out.set();
  for (std::size_t i = f.find_first(); i != PointSet::npos; i = f.find_next(i)) out &= down[i];
  return out;
}

/// Formal concepts of the direction relation, extents in lectic order (NextClosure).
inline std::vector<ConceptPair> enumerate_concepts(const FinitePreorderedSpace& x) {
  const std::size_t n = x.size();
  const Relation down = relation::transpose(x.dir());
  auto close = [&](const PointSet& e) { return common_lower(down, common_upper(x, e), n); };

  std::vector<ConceptPair> out;
  PointSet a = close(PointSet(n));
  for (;;) {
    out.push_back({a, common_upper(x, a)});
    if (a.all()) break;
    // lectic successor: try the largest index first
    bool found = false;
    for (std::size_t i = n; i-- > 0;) {
      if (a[i]) {
        a.reset(i);
        continue;
      }
      PointSet b = a;
      b.set(i);
      b = close(b);
      PointSet low_new = b - a;
      bool ok = true;
      for (std::size_t j = low_new.find_first(); j != PointSet::npos && j < i; j = low_new.find_next(j)) ok = false;
      if (ok) {
        a = std::move(b);
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  return out;
}

}  // namespace dihom
