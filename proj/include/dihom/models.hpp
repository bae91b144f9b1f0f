#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dihom/digraph.hpp"

namespace dihom {

using Gf2Digraph = HomologyDigraph<PrimeField>;

/// A fact about a model's digraph over GF(2) that can be checked mechanically.
struct ExpectedFact {
  std::string description;
  std::function<bool(const PrimeField&, const Gf2Digraph&)> holds;
};

struct NamedModel {
  std::string name;
  PairSpace pair;
  std::vector<ExpectedFact> expected;

  const FinitePreorderedSpace& space() const { return pair.space; }
};

namespace facts {

inline ExpectedFact betti(std::map<int, std::size_t> dims) {
  return {"betti numbers " + format_dims(dims),
          [dims](const PrimeField&, const Gf2Digraph& d) { return d.gvs().dims() == dims; }};
}

inline ExpectedFact defining_dim(int total, std::size_t dim) {
  return {"R block in total degree " + std::to_string(total) + " has dimension " + std::to_string(dim),
          [=](const PrimeField&, const Gf2Digraph& d) { return d.defining().dim(total) == dim; }};
}

/// Basis class i of degree di points (or not) to basis class j of degree dj.
inline ExpectedFact basis_points(int di, std::size_t i, int dj, std::size_t j, bool expected = true) {
  return {"h" + std::to_string(di) + "." + std::to_string(i) + (expected ? " points to " : " does not point to ") + "h" +
              std::to_string(dj) + "." + std::to_string(j),
          [=](const PrimeField& f, const Gf2Digraph& d) {
            if (d.gvs().dim(di) <= i || d.gvs().dim(dj) <= j) return false;
            return d.points_to(f, {di, unit_vector(f, d.gvs().dim(di), i)}, {dj, unit_vector(f, d.gvs().dim(dj), j)}) ==
                   expected;
          }};
}

/// Every class points to every class.
inline ExpectedFact full_pointing() {
  return {"every class points to every class", [](const PrimeField& f, const Gf2Digraph& d) {
            return d.defining() == GradedSubspace<PrimeField>::full(f, d.dgvs.pointing.indexer().space());
          }};
}

/// Nonzero classes point exactly when both have degree 0.
inline ExpectedFact degree_zero_pointing() {
  return {"nonzero classes point iff both have degree 0", [](const PrimeField& f, const Gf2Digraph& d) {
            const auto& ix = d.dgvs.pointing.indexer();
            GradedSubspace<PrimeField> expect(ix.space());
            if (ix.dim(0) > 0) {
              const auto& blk = ix.block(0, 0);
              std::vector<Vector<PrimeField>> gens;
              for (std::size_t k = 0; k < blk.left_dim * blk.right_dim; ++k)
                gens.push_back(unit_vector(f, ix.dim(0), blk.offset + k));
              expect.set_block(Subspace<PrimeField>::span(f, ix.dim(0), gens), 0);
            }
            return d.defining() == expect;
          }};
}

inline ExpectedFact concept_count(std::size_t n) {
  return {"direction has " + std::to_string(n) + " formal concepts",
          [n](const PrimeField&, const Gf2Digraph& d) { return d.witnesses.size() == n; }};
}

}  // namespace facts

inline NamedModel point() {
  auto x = FinitePreorderedSpace::validate({"p"}, {}, {}, DirectionMode::Discrete);
  return {"point", PairSpace::absolute(std::move(x)), {facts::betti({{0, 1}}), facts::basis_points(0, 0, 0, 0)}};
}

/// Two points a < b in both the topology and the direction.
inline NamedModel interval() {
  auto x = FinitePreorderedSpace::validate({"a", "b"}, {{"a", "b"}}, {{"a", "b"}});
  return {"interval", PairSpace::absolute(std::move(x)), {facts::betti({{0, 1}}), facts::basis_points(0, 0, 0, 0)}};
}

inline NamedModel discrete_set(std::size_t n) {
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back("p" + std::to_string(i));
  auto x = FinitePreorderedSpace::validate(pts, {}, {}, DirectionMode::Discrete);
  return {"discrete_set_" + std::to_string(n),
          PairSpace::absolute(std::move(x)),
          {facts::betti(n ? std::map<int, std::size_t>{{0, n}} : std::map<int, std::size_t>{})}};
}

inline NamedModel ordered_circle() {
  auto x = FinitePreorderedSpace::validate({"m", "l", "r", "t"}, {{"m", "l"}, {"m", "r"}, {"t", "l"}, {"t", "r"}},
                                           {{"m", "l"}, {"m", "r"}, {"l", "t"}, {"r", "t"}});
  return {"ordered_circle",
          PairSpace::absolute(std::move(x)),
          {facts::betti({{0, 1}, {1, 1}}), facts::basis_points(0, 0, 0, 0), facts::basis_points(0, 0, 1, 0),
           facts::basis_points(1, 0, 0, 0), facts::basis_points(1, 0, 1, 0, false), facts::defining_dim(2, 0)}};
}

inline NamedModel directed_circle() {
  auto x = FinitePreorderedSpace::validate({"m", "l", "r", "t"}, {{"m", "l"}, {"m", "r"}, {"t", "l"}, {"t", "r"}}, {},
                                           DirectionMode::Indiscrete);
  return {"directed_circle",
          PairSpace::absolute(std::move(x)),
          {facts::betti({{0, 1}, {1, 1}}), facts::full_pointing(), facts::basis_points(0, 0, 0, 0),
           facts::basis_points(0, 0, 1, 0), facts::basis_points(1, 0, 0, 0), facts::basis_points(1, 0, 1, 0),
           facts::concept_count(1)}};
}

/// Same topology, every point related to every point.
inline NamedModel indiscrete_on(const NamedModel& m) {
  auto x = FinitePreorderedSpace::from_relations(m.space().points(), m.space().topo(), relation::all(m.space().size()));
  return {"indiscrete_" + m.name, PairSpace::absolute(std::move(x)), {facts::full_pointing()}};
}

/// Same topology, each point related only to itself.
inline NamedModel discrete_on(const NamedModel& m) {
  auto x =
      FinitePreorderedSpace::from_relations(m.space().points(), m.space().topo(), relation::identity(m.space().size()));
  return {"discrete_" + m.name, PairSpace::absolute(std::move(x)), {facts::degree_zero_pointing()}};
}

namespace grid {

/// Closed cell [x0,x1] × [y0,y1] of the unit grid; each side has length 0 or 1.
struct Cell {
  int x0, x1, y0, y1;
};

inline std::string cell_id(const Cell& c) {
  auto side = [](int a, int b) { return a == b ? std::to_string(a) : std::to_string(a) + ".." + std::to_string(b); };
  return "(" + side(c.x0, c.x1) + "," + side(c.y0, c.y1) + ")";
}

/// Box [lo, hi] × [lo2, hi2] in grid coordinates.
struct Box {
  int x_lo, x_hi, y_lo, y_hi;
};

/// The relative interior of c lies inside the open box.
inline bool inside_open(const Cell& c, const Box& b) {
  auto axis = [](int a0, int a1, int lo, int hi) { return a0 == a1 ? (lo < a0 && a0 < hi) : (lo <= a0 && a1 <= hi); };
  return axis(c.x0, c.x1, b.x_lo, b.x_hi) && axis(c.y0, c.y1, b.y_lo, b.y_hi);
}

inline bool inside_closed(const Cell& c, const Box& b) {
  return b.x_lo <= c.x0 && c.x1 <= b.x_hi && b.y_lo <= c.y0 && c.y1 <= b.y_hi;
}

inline bool face_of(const Cell& c, const Cell& d) {
  return d.x0 <= c.x0 && c.x1 <= d.x1 && d.y0 <= c.y0 && c.y1 <= d.y1;
}

struct GridModel {
  FinitePreorderedSpace space;
  std::vector<Cell> cells;
};

/// Cell poset of the n × n grid with the given open boxes removed. Topology: faces below.
/// Direction: c ⪯ d iff c = d or the top corner of c is below the bottom corner of d.
inline GridModel build(int n, const std::vector<Box>& holes) {
  GridModel g;
  for (int x0 = 0; x0 <= n; ++x0)
    for (int y0 = 0; y0 <= n; ++y0)
      for (int dx = 0; dx <= 1; ++dx)
        for (int dy = 0; dy <= 1; ++dy) {
          Cell c{x0, x0 + dx, y0, y0 + dy};
          if (c.x1 > n || c.y1 > n) continue;
          bool removed = false;
          for (const auto& h : holes) removed = removed || inside_open(c, h);
          if (!removed) g.cells.push_back(c);
        }
  const std::size_t m = g.cells.size();
  std::vector<std::string> ids;
  Relation topo(m, PointSet(m)), dir(m, PointSet(m));
  for (std::size_t i = 0; i < m; ++i) {
    ids.push_back(cell_id(g.cells[i]));
    for (std::size_t j = 0; j < m; ++j) {
      const Cell& c = g.cells[i];
      const Cell& d = g.cells[j];
      if (face_of(c, d)) topo[i].set(j);
      if (i == j || (c.x1 <= d.x0 && c.y1 <= d.y0)) dir[i].set(j);
    }
  }
  g.space = FinitePreorderedSpace::from_relations(std::move(ids), std::move(topo), relation::closure(std::move(dir)));
  return g;
}

inline PointSet cells_in(const GridModel& g, const Box& b) {
  PointSet s(g.cells.size());
  for (std::size_t i = 0; i < g.cells.size(); ++i)
    if (inside_closed(g.cells[i], b)) s.set(i);
  return s;
}

/// Generator of the image of H_1 of the cells inside a box (one hole's class).
inline Vector<PrimeField> box_class(const PrimeField& f, const Gf2Digraph& d, const GridModel& g, const Box& b) {
  const auto img = subset_image(f, d.homology, cells_in(g, b));
  if (img.dim(1) != 1) return {};
  return img.generators(1).front();
}

}  // namespace grid

struct TwoHoles {
  int resolution;
  grid::Box lower_hole, upper_hole;  // open boxes removed from the square
  grid::Box lower_box, upper_box;    // closed boxes surrounding exactly one hole each
};

/// Hole layout for resolution n with a = n / 2. The comparable variant puts the holes on the
/// diagonal, the incomparable one on the anti-diagonal.
inline TwoHoles two_holes_layout(int n, bool comparable) {
  if (n < 5) throw InputError("two-holes grid: resolution " + std::to_string(n) + " is too small to separate the holes");
  const int a = n / 2;
  TwoHoles t{n, {}, {}, {}, {}};
  if (comparable) {
    t.lower_hole = {1, a, 1, a};
    t.upper_hole = {a + 1, n - 1, a + 1, n - 1};
    t.lower_box = {0, a + 1, 0, a + 1};
    t.upper_box = {a, n, a, n};
  } else {
    t.lower_hole = {a + 1, n - 1, 1, a};  // lower right
    t.upper_hole = {1, a, a + 1, n - 1};  // upper left
    t.lower_box = {a, n, 0, a + 1};
    t.upper_box = {0, a + 1, a, n};
  }
  return t;
}

inline NamedModel two_holes(int n, bool comparable) {
  const auto layout = two_holes_layout(n, comparable);
  auto g = std::make_shared<grid::GridModel>(grid::build(n, {layout.lower_hole, layout.upper_hole}));
  NamedModel m{std::string(comparable ? "two_holes_comparable_" : "two_holes_incomparable_") + std::to_string(n),
               PairSpace::absolute(g->space),
               {facts::betti({{0, 1}, {1, 2}})}};
  const ExpectedFact separated{"the two box classes are nonzero and independent",
                               [g, layout](const PrimeField& f, const Gf2Digraph& d) {
                                 const auto lo = grid::box_class(f, d, *g, layout.lower_box);
                                 const auto up = grid::box_class(f, d, *g, layout.upper_box);
                                 if (lo.empty() || up.empty()) return false;
                                 return Subspace<PrimeField>::span(f, d.gvs().dim(1), {lo, up}).dim() == 2;
                               }};
  m.expected.push_back(separated);
  if (comparable) {
    m.expected.push_back({"the lower-hole class points to the upper-hole class",
                          [g, layout](const PrimeField& f, const Gf2Digraph& d) {
                            const auto lo = grid::box_class(f, d, *g, layout.lower_box);
                            const auto up = grid::box_class(f, d, *g, layout.upper_box);
                            return !lo.empty() && !up.empty() && d.points_to(f, {1, lo}, {1, up});
                          }});
  } else {
    m.expected.push_back(facts::defining_dim(2, 0));
  }
  return m;
}

inline NamedModel two_holes_comparable(int n = 7) { return two_holes(n, true); }
inline NamedModel two_holes_incomparable(int n = 7) { return two_holes(n, false); }

/// Named classes of the torus: products of the basis classes of its two circle factors.
struct TorusClasses {
  std::map<std::string, Homogeneous<PrimeField>> classes;
  std::vector<std::string> order;
};

/// α, β span the homology of the directed circle, γ, δ that of the ordered circle; the five
/// nonzero classes are α×γ, α×δ, β×γ, α×δ+β×γ, β×δ, built with the cross product.
inline TorusClasses torus_classes(const PrimeField& f, const Gf2Digraph& torus) {
  const auto dc = compute_homology(f, directed_circle().space());
  const auto oc = compute_homology(f, ordered_circle().space());
  const auto x = cross(f, dc, oc, torus.homology);
  const TensorIndexer ix(dc.gvs(), oc.gvs());
  auto cls = [&](int i, int j) -> Homogeneous<PrimeField> {
    const auto t = tensor_coords(f, ix, i, unit_vector(f, 1, 0), j, unit_vector(f, 1, 0));
    return {i + j, x.apply(f, i + j, t)};
  };
  TorusClasses out;
  out.order = {"α×γ", "α×δ", "β×γ", "α×δ+β×γ", "β×δ"};
  out.classes["α×γ"] = cls(0, 0);
  out.classes["α×δ"] = cls(0, 1);
  out.classes["β×γ"] = cls(1, 0);
  auto sum = out.classes["α×δ"];
  for (std::size_t k = 0; k < sum.coords.size(); ++k) sum.coords[k] = f.add(sum.coords[k], out.classes["β×γ"].coords[k]);
  out.classes["α×δ+β×γ"] = sum;
  out.classes["β×δ"] = cls(1, 1);
  return out;
}

/// Expected pointing among the five nonzero torus classes.
inline bool torus_expected(const std::string& from, const std::string& to) {
  if (from == "α×γ" || from == "β×γ") return true;
  return to == "α×γ" || to == "β×γ";
}

inline NamedModel torus() {
  auto x = product(directed_circle().space(), ordered_circle().space());
  NamedModel m{"torus", PairSpace::absolute(std::move(x)), {facts::betti({{0, 1}, {1, 2}, {2, 1}})}};
  const std::vector<std::string> names{"α×γ", "α×δ", "β×γ", "α×δ+β×γ", "β×δ"};
  for (const auto& a : names)
    for (const auto& b : names) {
      const bool expect = torus_expected(a, b);
      m.expected.push_back({a + (expect ? " points to " : " does not point to ") + b,
                            [a, b, expect](const PrimeField& f, const Gf2Digraph& d) {
                              const auto c = torus_classes(f, d);
                              return d.points_to(f, c.classes.at(a), c.classes.at(b)) == expect;
                            }});
    }
  return m;
}

/// Every shipped model at its default size.
inline std::vector<NamedModel> all_models() {
  std::vector<NamedModel> out;
  out.push_back(point());
  out.push_back(interval());
  out.push_back(discrete_set(2));
  out.push_back(ordered_circle());
  out.push_back(directed_circle());
  out.push_back(indiscrete_on(ordered_circle()));
  out.push_back(discrete_on(ordered_circle()));
  out.push_back(discrete_on(interval()));
  out.push_back(torus());
  out.push_back(two_holes_comparable(7));
  out.push_back(two_holes_incomparable(7));
  return out;
}

}  // namespace dihom
