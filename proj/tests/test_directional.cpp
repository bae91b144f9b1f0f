#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace dihom;
using namespace testing_support;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);
const RationalField Q;

template <Field F>
using Span = std::span<const typename F::value_type>;

using H2 = Homogeneous<PrimeField>;

/// Every homogeneous vector of a GF(2) graded space, zero vectors included once per degree.
std::vector<H2> all_homogeneous(const GradedVectorSpace& v) {
  std::vector<H2> out;
  for (int k : v.degrees())
    for (std::size_t m = 0; m < (std::size_t{1} << v.dim(k)); ++m) out.push_back({k, mask_vector(m, v.dim(k))});
  return out;
}

H2 add(const H2& a, const H2& b) {
  H2 s = a;
  for (std::size_t i = 0; i < s.coords.size(); ++i) s.coords[i] = F2.add(s.coords[i], b.coords[i]);
  return s;
}

bool is_zero(const H2& v) { return is_zero_vector(F2, Span<PrimeField>(v.coords)); }

/// Zeros point both ways, scaling, and additivity in each slot, exhaustively over GF(2). Over GF(2) scaling only
/// involves the scalars 0 and 1, so it reduces to the zero case.
template <class Rel>
bool bilinear_properties_gf2(const GradedVectorSpace& v, Rel&& rel) {
  const auto all = all_homogeneous(v);
  for (const auto& a : all)
    for (const auto& b : all) {
      if ((is_zero(a) || is_zero(b)) && !rel(a, b)) return false;
      if (!rel(a, b)) continue;
      for (const auto& c : all) {
        if (c.degree == a.degree && rel(c, b) && !rel(add(a, c), b)) return false;
        if (c.degree == b.degree && rel(a, c) && !rel(a, add(b, c))) return false;
      }
    }
  return true;
}

template <Field F>
Homogeneous<F> random_homogeneous(const F& field, std::mt19937_64& rng, const GradedVectorSpace& v) {
  const auto ds = v.degrees();
  const int k = ds[rng() % ds.size()];
  return {k, random_vector(field, rng, v.dim(k), 1)};
}

template <Field F>
DirectionalGVS<F> random_dgvs(const F& field, std::mt19937_64& rng, std::size_t max_dim = 2, std::size_t max_gens = 3) {
  std::map<int, std::size_t> dims;
  dims[0] = 1 + rng() % max_dim;
  if (rng() % 2) dims[1] = 1 + rng() % max_dim;
  const auto v = GradedVectorSpace::from_dims(dims);
  RelationGenerators<F> gens;
  const std::size_t n = rng() % (max_gens + 1);
  for (std::size_t i = 0; i < n; ++i)
    gens.emplace_back(random_homogeneous(field, rng, v), random_homogeneous(field, rng, v));
  return make_dgvs(field, v, gens);
}

template <Field F>
GradedLinearMap<F> random_map(const F& field, std::mt19937_64& rng, const GradedVectorSpace& a,
                              const GradedVectorSpace& b, int spread) {
  GradedLinearMap<F> f(a, b, 0);
  for (int k : a.degrees())
    if (b.dim(k) > 0) f.set_block(k, random_matrix(field, rng, b.dim(k), a.dim(k), spread));
  return f;
}

/// Generators of the counterexample relation on GF(2)^3.
RelationGenerators<PrimeField> counterexample_pairs() {
  auto h = [](std::initializer_list<int> xs) { return H2{0, bits(xs)}; };
  return {{h({1, 0, 0}), h({0, 1, 1})},
          {h({0, 1, 0}), h({0, 1, 0})},
          {h({0, 0, 1}), h({1, 1, 0})},
          {h({1, 1, 0}), h({1, 0, 0})},
          {h({0, 1, 1}), h({0, 0, 1})}};
}

}  // namespace

TEST_CASE("generate examples", "[bilinear]") {
  const auto v = GradedVectorSpace::from_dims({{0, 2}});
  const auto none = generate(Q, v, {});
  CHECK(none.defining().dims().empty());
  CHECK(none.points_to(Q, {0, {0, 0}}, {0, {1, 1}}));
  CHECK_FALSE(none.points_to(Q, {0, {1, 0}}, {0, {1, 1}}));

  const Homogeneous<RationalField> a{0, {1, 2}}, b{0, {0, 1}};
  const auto one = generate(Q, v, {{a, b}});
  CHECK(one.defining().dim(0) == 1);
  CHECK(one.points_to(Q, a, b));
  CHECK(one.points_to(Q, {0, {2, 4}}, {0, {0, 3}}));
  CHECK_FALSE(one.points_to(Q, b, a));
  CHECK_THROWS_AS(generate(Q, v, {{Homogeneous<RationalField>{0, {1}}, b}}), InputError);
  CHECK_THROWS_AS(one.points_to(Q, {0, {1}}, b), InputError);
}

TEST_CASE("counterexample: the raw relation has the pointwise closure properties but is not bilinear", "[bilinear]") {
  const auto v = GradedVectorSpace::from_dims({{0, 3}});
  const auto pairs = counterexample_pairs();
  auto raw = [&](const H2& a, const H2& b) {
    if (is_zero(a) || is_zero(b)) return true;
    for (const auto& [x, y] : pairs)
      if (x.coords == a.coords && y.coords == b.coords) return true;
    return false;
  };
  REQUIRE(all_homogeneous(v).size() == 8);
  CHECK(bilinear_properties_gf2(v, raw));
  const H2 all_ones{0, bits({1, 1, 1})};
  CHECK_FALSE(raw(all_ones, all_ones));

  const auto hull = generate(F2, v, pairs);
  CHECK(hull.defining().dim(0) == 5);
  CHECK(hull.indexer().dim(0) == 9);
  CHECK(hull.points_to(F2, all_ones, all_ones));
  for (const auto& [x, y] : pairs) CHECK(hull.points_to(F2, x, y));
  CHECK(bilinear_properties_gf2(v, [&](const H2& a, const H2& b) { return hull.points_to(F2, a, b); }));
}

TEST_CASE("bilinear properties of generated relations, exhaustive over GF(2)", "[bilinear][property]") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    std::map<int, std::size_t> dims{{0, 1 + rng() % 2}};
    if (rng() % 2) dims[1] = 1 + rng() % 2;
    const auto v = GradedVectorSpace::from_dims(dims);
    REQUIRE(v.total_dim() <= 4);
    RelationGenerators<PrimeField> gens;
    for (std::size_t i = rng() % 5; i > 0; --i)
      gens.emplace_back(random_homogeneous(F2, rng, v), random_homogeneous(F2, rng, v));
    const auto rel = generate(F2, v, gens);
    CHECK(bilinear_properties_gf2(v, [&](const H2& a, const H2& b) { return rel.points_to(F2, a, b); }));
  }
}

TEST_CASE("bilinear properties of generated relations, random over Q", "[bilinear][property]") {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = random_dgvs(Q, rng, 3, 4);
    const auto& v = d.space;
    for (int k = 0; k < 40; ++k) {
      const auto a = random_homogeneous(Q, rng, v), b = random_homogeneous(Q, rng, v);
      const Homogeneous<RationalField> za{a.degree, zero_vector(Q, a.coords.size())};
      CHECK(d.points_to(Q, za, b));
      CHECK(d.points_to(Q, b, za));
      if (!d.points_to(Q, a, b)) continue;
      const auto l = random_scalar(Q, rng, 5), m = random_scalar(Q, rng, 5);
      CHECK(d.points_to(Q, {a.degree, scaled(Q, l, Span<RationalField>(a.coords))},
                        {b.degree, scaled(Q, m, Span<RationalField>(b.coords))}));
    }
    // additivity: sums of pointing pairs with a shared slot
    for (const auto& [a, b] : d.generators)
      for (const auto& [c, e] : d.generators) {
        if (a.degree == c.degree && d.points_to(Q, c, b)) {
          auto s = a.coords;
          axpy(Q, Q.one(), Span<RationalField>(c.coords), std::span(s));
          CHECK(d.points_to(Q, {a.degree, s}, b));
        }
        if (b.degree == e.degree && d.points_to(Q, a, e)) {
          auto s = b.coords;
          axpy(Q, Q.one(), Span<RationalField>(e.coords), std::span(s));
          CHECK(d.points_to(Q, a, {b.degree, s}));
        }
      }
  }
}

TEST_CASE("generate is a closure operator", "[bilinear][property]") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = random_dgvs(F2, rng, 2, 4);
    RelationGenerators<PrimeField> all;
    for (const auto& a : all_homogeneous(d.space))
      for (const auto& b : all_homogeneous(d.space))
        if (d.points_to(F2, a, b)) all.emplace_back(a, b);
    CHECK(generate(F2, d.space, all) == d.pointing);
    auto more = d.generators;
    more.emplace_back(random_homogeneous(F2, rng, d.space), random_homogeneous(F2, rng, d.space));
    const auto bigger = generate(F2, d.space, more);
    CHECK(sum(F2, bigger.defining(), d.pointing.defining()) == bigger.defining());
  }
}

TEST_CASE("intersections of relations", "[bilinear]") {
  const auto v = GradedVectorSpace::from_dims({{0, 2}});
  const H2 e1{0, bits({1, 0})}, e2{0, bits({0, 1})};
  const auto r1 = generate(F2, v, {{e1, e1}});
  const auto r2 = generate(F2, v, {{e1, e1}, {e2, e2}});
  CHECK(intersect_relations(F2, {r1, r1}) == r1);
  CHECK(intersect_relations(F2, {r1, BilinearRelation<PrimeField>::zero(v)}) == BilinearRelation<PrimeField>::zero(v));
  CHECK(intersect_relations(F2, {r1, r2}) == r1);
  CHECK_THROWS_AS(intersect_relations(F2, std::vector<BilinearRelation<PrimeField>>{}), InputError);
  CHECK_THROWS_AS(intersect_relations(F2, {r1, BilinearRelation<PrimeField>::zero(GradedVectorSpace::from_dims({{0, 3}}))}),
                  InputError);

  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_dgvs(F2, rng, 2, 4);
    RelationGenerators<PrimeField> g2;
    for (int i = 0; i < 4; ++i) g2.emplace_back(random_homogeneous(F2, rng, a.space), random_homogeneous(F2, rng, a.space));
    const auto b = generate(F2, a.space, g2);
    const auto both = intersect_relations(F2, {a.pointing, b});
    for (const auto& x : all_homogeneous(a.space))
      for (const auto& y : all_homogeneous(a.space))
        CHECK(both.points_to(F2, x, y) == (a.points_to(F2, x, y) && b.points_to(F2, x, y)));
  }
}

TEST_CASE("direct sums", "[oplus]") {
  std::mt19937_64 rng(105);
  const auto d = random_dgvs(Q, rng, 2, 3);
  const auto single = direct_sum(Q, {d});
  REQUIRE(single.injections.size() == 1);
  CHECK(single.injections[0].is_invertible(Q));
  CHECK(dgvs_isomorphic_check(Q, single.injections[0], d, single.dgvs));

  const auto v = GradedVectorSpace::from_dims({{0, 1}});
  const H2 e{0, bits({1})};
  const auto full = make_dgvs(F2, v, {{e, e}});
  const auto s = direct_sum(F2, {full, full});
  CHECK(s.dgvs.space.labels(0)[0] == "0:e0_0");
  const H2 a{0, bits({1, 0})}, b{0, bits({0, 1})}, ab{0, bits({1, 1})};
  CHECK(s.dgvs.points_to(F2, a, a));
  CHECK_FALSE(s.dgvs.points_to(F2, a, b));
  CHECK_FALSE(s.dgvs.points_to(F2, ab, a));
  CHECK_FALSE(s.dgvs.points_to(F2, ab, ab));
}

TEST_CASE("direct sum dichotomy, exhaustive over GF(2)", "[oplus][property]") {
  std::mt19937_64 rng(106);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<DirectionalGVS<PrimeField>> parts;
    const std::size_t count = 2 + rng() % 2;
    for (std::size_t i = 0; i < count; ++i) parts.push_back(random_dgvs(F2, rng, 1, 3));
    const auto s = direct_sum(F2, parts);
    // which summand owns each coordinate, per degree
    std::map<int, std::vector<std::size_t>> owner;
    std::map<int, std::vector<std::size_t>> local;
    for (std::size_t i = 0; i < count; ++i)
      for (int k : parts[i].space.degrees())
        for (std::size_t c = 0; c < parts[i].space.dim(k); ++c) {
          owner[k].push_back(i);
          local[k].push_back(c);
        }
    for (const auto& x : all_homogeneous(s.dgvs.space))
      for (const auto& y : all_homogeneous(s.dgvs.space)) {
        if (is_zero(x) || is_zero(y)) continue;
        std::set<std::size_t> sx, sy;
        for (std::size_t c = 0; c < x.coords.size(); ++c)
          if (x.coords[c]) sx.insert(owner[x.degree][c]);
        for (std::size_t c = 0; c < y.coords.size(); ++c)
          if (y.coords[c]) sy.insert(owner[y.degree][c]);
        bool expect = false;
        if (sx.size() == 1 && sx == sy) {
          const std::size_t j = *sx.begin();
          H2 px{x.degree, zero_vector(F2, parts[j].space.dim(x.degree))};
          H2 py{y.degree, zero_vector(F2, parts[j].space.dim(y.degree))};
          for (std::size_t c = 0; c < x.coords.size(); ++c)
            if (x.coords[c]) px.coords[local[x.degree][c]] = 1;
          for (std::size_t c = 0; c < y.coords.size(); ++c)
            if (y.coords[c]) py.coords[local[y.degree][c]] = 1;
          expect = parts[j].points_to(F2, px, py);
        }
        REQUIRE(s.dgvs.points_to(F2, x, y) == expect);
      }
  }
}

TEST_CASE("tensor examples", "[tensor]") {
  std::mt19937_64 rng(107);
  const auto unit_space = GradedVectorSpace::from_dims({{0, 1}});
  const auto unit = make_dgvs(Q, unit_space, {{Homogeneous<RationalField>{0, {1}}, Homogeneous<RationalField>{0, {1}}}});
  const auto d = random_dgvs(Q, rng, 2, 3);
  const auto t = tensor(Q, d, unit);
  GradedLinearMap<RationalField> iso(d.space, t.space, 0);
  for (int k : d.space.degrees()) iso.set_block(k, Matrix<RationalField>::identity(Q, d.space.dim(k)));
  CHECK(dgvs_isomorphic_check(Q, iso, d, t));

  const auto z1 = make_dgvs(F2, GradedVectorSpace::from_dims({{0, 2}}), {});
  const auto z2 = make_dgvs(F2, GradedVectorSpace::from_dims({{0, 1}, {1, 1}}), {});
  CHECK(tensor(F2, z1, z2).pointing.defining().dims().empty());

  // circle factors: α, β for the directed circle and γ, δ for the ordered circle
  const auto dc = homology_digraph(F2, directed_circle().space());
  const auto oc = homology_digraph(F2, ordered_circle().space());
  const auto td = tensor(F2, dc.dgvs, oc.dgvs);
  const TensorIndexer ix(dc.gvs(), oc.gvs());
  auto cls = [&](int i, int j) { return H2{i + j, tensor_coords(F2, ix, i, bits({1}), j, bits({1}))}; };
  const auto ag = cls(0, 0), ad = cls(0, 1), bg = cls(1, 0), bd = cls(1, 1);
  CHECK_FALSE(td.points_to(F2, ad, ad));
  CHECK(td.points_to(F2, ag, bd));
  CHECK(td.points_to(F2, bg, ad));
  CHECK(td.points_to(F2, ad, ag));
  CHECK_FALSE(td.points_to(F2, bd, bd));
}

TEST_CASE("tensor from generators equals tensor from all pointing pairs", "[tensor][property]") {
  std::mt19937_64 rng(108);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_dgvs(F2, rng, 2, 3);
    const auto b = random_dgvs(F2, rng, 2, 3);
    const auto t = tensor(F2, a, b);
    const TensorIndexer vw(a.space, b.space);
    RelationGenerators<PrimeField> all;
    std::vector<std::pair<H2, H2>> pa, pb;
    for (const auto& v : all_homogeneous(a.space))
      for (const auto& v2 : all_homogeneous(a.space))
        if (!is_zero(v) && !is_zero(v2) && a.points_to(F2, v, v2)) pa.emplace_back(v, v2);
    for (const auto& w : all_homogeneous(b.space))
      for (const auto& w2 : all_homogeneous(b.space))
        if (!is_zero(w) && !is_zero(w2) && b.points_to(F2, w, w2)) pb.emplace_back(w, w2);
    for (const auto& [v, v2] : pa)
      for (const auto& [w, w2] : pb)
        all.emplace_back(H2{v.degree + w.degree, tensor_coords(F2, vw, v.degree, v.coords, w.degree, w.coords)},
                         H2{v2.degree + w2.degree, tensor_coords(F2, vw, v2.degree, v2.coords, w2.degree, w2.coords)});
    CHECK(generate(F2, vw.space(), all) == t.pointing);
    CHECK(tensor_defining_by_interchange(F2, a, b) == t.pointing.defining());
  }
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_dgvs(Q, rng, 2, 3);
    const auto b = random_dgvs(Q, rng, 2, 3);
    CHECK(tensor_defining_by_interchange(Q, a, b) == tensor(Q, a, b).pointing.defining());
  }
}

TEST_CASE("morphism examples", "[morphism]") {
  std::mt19937_64 rng(109);
  const auto d = random_dgvs(Q, rng, 2, 3);
  const auto id = GradedLinearMap<RationalField>::identity(Q, d.space);
  CHECK(is_morphism(Q, id, d, d));
  CHECK(is_morphism_from_generators(Q, id, d, d));
  const GradedLinearMap<RationalField> zero(d.space, d.space, 0);
  CHECK(is_morphism(Q, zero, d, d));
  CHECK(is_morphism_from_generators(Q, zero, d, d));

  const auto v = GradedVectorSpace::from_dims({{0, 2}});
  const H2 e1{0, bits({1, 0})};
  const auto r = make_dgvs(F2, v, {{e1, e1}});
  GradedLinearMap<PrimeField> swap(v, v, 0);
  swap.set_block(0, Matrix<PrimeField>::from_columns(F2, 2, {bits({0, 1}), bits({1, 0})}));
  CHECK_FALSE(is_morphism(F2, swap, r, r));
  CHECK_FALSE(is_morphism_from_generators(F2, swap, r, r));

  CHECK(dgvs_isomorphic_check(Q, id, d, d));
  auto twice = id;
  for (int k : d.space.degrees()) {
    auto m = Matrix<RationalField>::identity(Q, d.space.dim(k));
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = 2;
    twice.set_block(k, m);
  }
  CHECK(dgvs_isomorphic_check(Q, twice, d, d));
  CHECK_THROWS_AS(dgvs_isomorphic_check(Q, zero, d, d), InputError);
}

TEST_CASE("morphism checks from generators agree with the full check", "[morphism][property]") {
  std::mt19937_64 rng(110);
  int agree = 0, positive = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto run = [&](const auto& field, int spread) {
      const auto a = random_dgvs(field, rng, 2, 3);
      const auto b = random_dgvs(field, rng, 2, 5);
      const auto f = random_map(field, rng, a.space, b.space, spread);
      const bool full = is_morphism(field, f, a, b);
      CHECK(full == is_morphism_from_generators(field, f, a, b));
      agree += 1;
      positive += full;
    };
    if (trial % 3 == 0)
      run(F2, 1);
    else if (trial % 3 == 1)
      run(F3, 1);
    else
      run(Q, 1);
  }
  CHECK(agree == 100);
  CHECK(positive > 0);
  CHECK(positive < 100);
}
