// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace dihom;
using namespace testing_support;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);
const RationalField Q;

using H2 = Homogeneous<PrimeField>;

/// Collects failed assertions for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  template <class Fn>
  void expect_throws(Fn&& fn, const std::string& what) {
    bool thrown = false;
    try {
      fn();
    } catch (const HypothesisNotMet&) {
      thrown = true;
    }
    expect(thrown, what);
  }
  std::size_t count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
};

bool run_criterion(int number, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  std::string error;
  try {
    body(c);
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = error.empty() && c.failures().empty();
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << "  " << title << "  (" << c.count()
       << " assertions, " << secs << " s)";
  std::cout << line.str() << "\n";
  for (const auto& f : c.failures()) std::cout << "    failed: " << f << "\n";
  if (!error.empty()) std::cout << "    error: " << error << "\n";
  return ok;
}

std::vector<std::string> failing_facts(const NamedModel& m) {
  const auto d = homology_digraph_pair(F2, m.pair);
  std::vector<std::string> out;
  for (const auto& fact : m.expected)
    if (!fact.holds(F2, d)) out.push_back(m.name + ": " + fact.description);
  return out;
}

void expect_facts(Check& c, const NamedModel& m) {
  const auto bad = failing_facts(m);
  c.expect(bad.empty(), bad.empty() ? m.name : bad.front());
}

PointMap identity_map(std::size_t n) {
  PointMap id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return id;
}

std::vector<H2> all_homogeneous(const GradedVectorSpace& v) {
  std::vector<H2> out;
  for (int k : v.degrees())
    for (std::size_t m = 0; m < (std::size_t{1} << v.dim(k)); ++m) out.push_back({k, mask_vector(m, v.dim(k))});
  return out;
}

bool is_zero(const H2& v) { return is_zero_vector(F2, std::span<const PrimeField::value_type>(v.coords)); }

H2 add(const H2& a, const H2& b) {
  H2 s = a;
  for (std::size_t i = 0; i < s.coords.size(); ++i) s.coords[i] = F2.add(s.coords[i], b.coords[i]);
  return s;
}

/// Zeros point both ways and pointing is additive in each slot, on every pair of homogeneous vectors over GF(2).
template <class Rel>
bool bilinear_properties(const GradedVectorSpace& v, Rel&& rel) {
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
DirectionalGVS<F> random_dgvs(const F& field, std::mt19937_64& rng, std::size_t max_dim, std::size_t max_gens) {
  std::map<int, std::size_t> dims{{0, 1 + rng() % max_dim}};
  if (rng() % 2) dims[1] = 1 + rng() % max_dim;
  const auto v = GradedVectorSpace::from_dims(dims);
  RelationGenerators<F> gens;
  for (std::size_t n = rng() % (max_gens + 1); n > 0; --n)
    gens.emplace_back(random_homogeneous(field, rng, v), random_homogeneous(field, rng, v));
  return make_dgvs(field, v, gens);
}

struct Run {
  int exit_code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(DIHOM_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

// 1 ----------------------------------------------------------------------------------------

void torus_table(Check& c) {
  const auto t = torus();
  const auto d = homology_digraph(F2, t.space());
  c.expect(d.gvs().dims() == std::map<int, std::size_t>{{0, 1}, {1, 2}, {2, 1}}, "torus betti numbers (1,2,1)");
  const auto cls = torus_classes(F2, d);
  for (const auto& a : cls.order)
    for (const auto& b : cls.order) {
      const bool expect = torus_expected(a, b);
      c.expect(d.points_to(F2, cls.classes.at(a), cls.classes.at(b)) == expect,
               a + (expect ? " points to " : " does not point to ") + b);
    }
}

// 2 ----------------------------------------------------------------------------------------

void examples_suite(Check& c) {
  // indiscrete direction
  expect_facts(c, directed_circle());
  expect_facts(c, indiscrete_on(ordered_circle()));
  // discrete direction on connected spaces
  expect_facts(c, discrete_on(interval()));
  expect_facts(c, discrete_on(ordered_circle()));
  // ordered circle
  const auto oc = homology_digraph(F2, ordered_circle().space());
  c.expect(oc.defining().dim(2) == 0, "ordered circle: R_2 = 0");
  const H2 g{0, bits({1})}, h{1, bits({1})};
  c.expect(oc.points_to(F2, g, h), "ordered circle: degree 0 points to degree 1");
  c.expect(oc.points_to(F2, h, g), "ordered circle: degree 1 points to degree 0");
  c.expect(!oc.points_to(F2, h, h), "ordered circle: degree 1 does not point to itself");
  // two holes
  expect_facts(c, two_holes_comparable(7));
  expect_facts(c, two_holes_incomparable(7));
  c.expect(homology_digraph(F2, two_holes_incomparable(7).space()).defining().dim(2) == 0, "incomparable: R_2 = 0");
}

// 3 ----------------------------------------------------------------------------------------

void counterexample(Check& c) {
  auto h = [](std::initializer_list<int> xs) { return H2{0, bits(xs)}; };
  const RelationGenerators<PrimeField> pairs{{h({1, 0, 0}), h({0, 1, 1})},
                                             {h({0, 1, 0}), h({0, 1, 0})},
                                             {h({0, 0, 1}), h({1, 1, 0})},
                                             {h({1, 1, 0}), h({1, 0, 0})},
                                             {h({0, 1, 1}), h({0, 0, 1})}};
  const auto v = GradedVectorSpace::from_dims({{0, 3}});
  auto raw = [&](const H2& a, const H2& b) {
    if (is_zero(a) || is_zero(b)) return true;
    for (const auto& [x, y] : pairs)
      if (x.coords == a.coords && y.coords == b.coords) return true;
    return false;
  };
  c.expect(all_homogeneous(v).size() * all_homogeneous(v).size() == 64, "64 pairs enumerated");
  c.expect(bilinear_properties(v, raw), "raw relation has the pointwise closure properties");
  const auto ones = h({1, 1, 1});
  c.expect(!raw(ones, ones), "raw relation lacks (e1+e2+e3, e1+e2+e3)");
  const auto hull = generate(F2, v, pairs);
  c.expect(hull.points_to(F2, ones, ones), "generated relation has (e1+e2+e3, e1+e2+e3)");
}

// 4 ----------------------------------------------------------------------------------------

void oracle_equivalence(Check& c) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(FIXTURES_DIR))
    if (e.path().extension() == ".doc") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::size_t used = 0;
  for (const auto& path : files) {
    const auto doc = load_document(path.string());
    const auto p = to_pair(doc);
    if (p.space.size() > 8) continue;
    ++used;
    c.expect(brute_force_digraph(F2, p).defining() == homology_digraph_pair(F2, p).defining(), doc.name + " over GF(2)");
    c.expect(brute_force_digraph(Q, p).defining() == homology_digraph_pair(Q, p).defining(), doc.name + " over Q");
  }
  c.expect(used >= 9, "at least nine small fixtures");
}

// 5 ----------------------------------------------------------------------------------------

void theorems(Check& c) {
  const auto x = ordered_circle().space();
  const auto dc = directed_circle().space();
  const auto pt = point().space();

  c.expect(verify_kunneth(F2, dc, x).passed, "kunneth directed x ordered");
  c.expect(verify_kunneth(F2, x, x).passed, "kunneth ordered x ordered");
  c.expect(verify_kunneth(F2, x, pt).passed, "kunneth ordered x point");

  c.expect(verify_coproduct(F2, {x}).passed, "coproduct of one space");
  c.expect(verify_coproduct(F2, {pt, pt}).passed, "coproduct of two points");
  c.expect(verify_coproduct(F2, {x, dc}).passed, "coproduct ordered + directed");

  c.expect(verify_excision(F2, PairSpace::of(x, {"m", "l", "r"}), x.subset({"m"})).passed, "excision of {m}");
  const auto cp = coproduct({x, pt});
  const auto comp = cp.space.subset({"1:p"});
  c.expect(verify_excision(F2, PairSpace{cp.space, comp}, comp).passed, "excision of a clopen component");
  c.expect_throws([&] { verify_excision(F2, PairSpace::of(x, {"l"}), x.subset({"m"})); },
                  "excision outside the hypothesis is rejected");

  c.expect(verify_connecting(F2, PairSpace{x, x.full_set()}).passed, "connecting with A = X");
  c.expect(verify_connecting(F2, PairSpace::of(x, {"m"})).passed, "connecting with A = {m}");
  c.expect(verify_connecting(F2, PairSpace::of(x, {"m", "t"})).passed, "connecting with A = {m, t}");

  const auto t = torus().space();
  const auto dt = homology_digraph(F2, t);
  const auto dx = homology_digraph(F2, x);
  auto morphism = [&](const FinitePreorderedSpace& s, const FinitePreorderedSpace& u, const PointMap& f,
                      const std::string& what) {
    const auto r = induced_digraph_morphism(F2, f, homology_digraph(F2, s), homology_digraph(F2, u));
    c.expect(r.morphism && r.from_generators, what);
  };
  morphism(x, x, identity_map(4), "identity of the ordered circle");
  morphism(pt, x, PointMap{x.index("m")}, "inclusion of the minimum");
  morphism(x, dc, identity_map(4), "ordered circle into directed circle");
  const auto pl = induced_digraph_morphism(F2, projection_left(dc, x), dt, homology_digraph(F2, dc));
  c.expect(pl.morphism && pl.from_generators, "torus projection to the directed circle");
  const auto pr = induced_digraph_morphism(F2, projection_right(dc, x), dt, dx);
  c.expect(pr.morphism && pr.from_generators, "torus projection to the ordered circle");
}

// 6 ----------------------------------------------------------------------------------------

void property_suites(Check& c) {
  std::mt19937_64 rng(2024);

  // closure properties on generated relations, and on the small fixture digraphs
  for (int trial = 0; trial < 120; ++trial) {
    const auto d = random_dgvs(F2, rng, 2, 4);
    c.expect(d.space.total_dim() <= 4 &&
                 bilinear_properties(d.space, [&](const H2& a, const H2& b) { return d.points_to(F2, a, b); }),
             "closure properties, random relation " + std::to_string(trial));
  }
  for (const auto& m : all_models()) {
    if (m.space().size() > 16) continue;
    const auto d = homology_digraph_pair(F2, m.pair);
    if (d.gvs().total_dim() > 4) continue;
    c.expect(bilinear_properties(d.gvs(), [&](const H2& a, const H2& b) { return d.points_to(F2, a, b); }),
             "closure properties on " + m.name);
  }
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = random_dgvs(Q, rng, 3, 4);
    for (int k = 0; k < 20; ++k) {
      const auto a = random_homogeneous(Q, rng, d.space), b = random_homogeneous(Q, rng, d.space);
      const Homogeneous<RationalField> z{a.degree, zero_vector(Q, a.coords.size())};
      c.expect(d.points_to(Q, z, b) && d.points_to(Q, b, z), "zero points both ways over Q");
      if (!d.points_to(Q, a, b)) continue;
      const auto l = random_scalar(Q, rng, 5), m = random_scalar(Q, rng, 5);
      c.expect(d.points_to(Q, {a.degree, scaled(Q, l, std::span<const RationalField::value_type>(a.coords))},
                           {b.degree, scaled(Q, m, std::span<const RationalField::value_type>(b.coords))}),
               "scaling over Q");
    }
  }

  // direct sum dichotomy, exhaustive over GF(2)
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<DirectionalGVS<PrimeField>> parts{random_dgvs(F2, rng, 1, 3), random_dgvs(F2, rng, 1, 3)};
    const auto s = direct_sum(F2, parts);
    std::map<int, std::vector<std::pair<std::size_t, std::size_t>>> where;
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (int k : parts[i].space.degrees())
        for (std::size_t j = 0; j < parts[i].space.dim(k); ++j) where[k].emplace_back(i, j);
    bool ok = true;
    for (const auto& x : all_homogeneous(s.dgvs.space))
      for (const auto& y : all_homogeneous(s.dgvs.space)) {
        if (is_zero(x) || is_zero(y)) continue;
        std::set<std::size_t> sx, sy;
        for (std::size_t k = 0; k < x.coords.size(); ++k)
          if (x.coords[k]) sx.insert(where[x.degree][k].first);
        for (std::size_t k = 0; k < y.coords.size(); ++k)
          if (y.coords[k]) sy.insert(where[y.degree][k].first);
        bool expect = false;
        if (sx.size() == 1 && sx == sy) {
          const auto i = *sx.begin();
          H2 px{x.degree, zero_vector(F2, parts[i].space.dim(x.degree))};
          H2 py{y.degree, zero_vector(F2, parts[i].space.dim(y.degree))};
          for (std::size_t k = 0; k < x.coords.size(); ++k)
            if (x.coords[k]) px.coords[where[x.degree][k].second] = 1;
          for (std::size_t k = 0; k < y.coords.size(); ++k)
            if (y.coords[k]) py.coords[where[y.degree][k].second] = 1;
          expect = parts[i].points_to(F2, px, py);
        }
        ok = ok && s.dgvs.points_to(F2, x, y) == expect;
      }
    c.expect(ok, "direct sum dichotomy " + std::to_string(trial));
  }

  // tensor from generators equals tensor from all pointing pairs
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_dgvs(F2, rng, 2, 3), b = random_dgvs(F2, rng, 2, 3);
    const auto t = tensor(F2, a, b);
    const TensorIndexer vw(a.space, b.space);
    std::vector<std::pair<H2, H2>> pa, pb;
    for (const auto& v : all_homogeneous(a.space))
      for (const auto& v2 : all_homogeneous(a.space))
        if (!is_zero(v) && !is_zero(v2) && a.points_to(F2, v, v2)) pa.emplace_back(v, v2);
    for (const auto& w : all_homogeneous(b.space))
      for (const auto& w2 : all_homogeneous(b.space))
        if (!is_zero(w) && !is_zero(w2) && b.points_to(F2, w, w2)) pb.emplace_back(w, w2);
    RelationGenerators<PrimeField> all;
    for (const auto& [v, v2] : pa)
      for (const auto& [w, w2] : pb)
        all.emplace_back(H2{v.degree + w.degree, tensor_coords(F2, vw, v.degree, v.coords, w.degree, w.coords)},
                         H2{v2.degree + w2.degree, tensor_coords(F2, vw, v2.degree, v2.coords, w2.degree, w2.coords)});
    c.expect(generate(F2, vw.space(), all) == t.pointing, "tensor generators vs all pairs " + std::to_string(trial));
  }

  // morphism test from generators agrees with the full test
  for (int trial = 0; trial < 100; ++trial) {
    auto one = [&](const auto& field) {
      const auto a = random_dgvs(field, rng, 2, 3), b = random_dgvs(field, rng, 2, 5);
      GradedLinearMap<std::decay_t<decltype(field)>> f(a.space, b.space, 0);
      for (int k : a.space.degrees())
        if (b.space.dim(k) > 0) f.set_block(k, random_matrix(field, rng, b.space.dim(k), a.space.dim(k), 1));
      c.expect(is_morphism(field, f, a, b) == is_morphism_from_generators(field, f, a, b),
               "generator morphism test agrees, map " + std::to_string(trial));
    };
    if (trial % 3 == 0)
      one(F2);
    else if (trial % 3 == 1)
      one(F3);
    else
      one(Q);
  }

  // long exact sequences and boundary squares on every fixture
  for (const auto& e : std::filesystem::directory_iterator(FIXTURES_DIR)) {
    if (e.path().extension() != ".doc") continue;
    const auto doc = load_document(e.path().string());
    const auto p = to_pair(doc);
    const auto h = compute_homology(F2, p);
    for (int d = 2; d <= h.chains.top_dim(); ++d)
      c.expect(is_zero_matrix(F2, multiply(F2, h.chains.boundary(F2, d - 1), h.chains.boundary(F2, d))),
               doc.name + ": boundary squares to zero in degree " + std::to_string(d));
    c.expect(long_exact_sequence_holds(F2, h), doc.name + ": long exact sequence of the pair");
    if (p.space.size() <= 8) {
      c.expect(long_exact_sequence_holds(Q, compute_homology(Q, p)), doc.name + ": long exact sequence over Q");
      for (const auto& y : p.space.points()) {
        const auto q = PairSpace::of(p.space, {y});
        c.expect(long_exact_sequence_holds(F2, compute_homology(F2, q)), doc.name + ": sequence for {" + y + "}");
      }
    }
  }

  // Betti numbers of products are the convolution of the factors'
  std::vector<NamedModel> small;
  for (auto& m : all_models())
    if (m.space().size() <= 4) small.push_back(m);
  for (const auto& a : small)
    for (const auto& b : small) {
      const auto ha = compute_homology(F2, a.space()).gvs(), hb = compute_homology(F2, b.space()).gvs();
      std::map<int, std::size_t> expect;
      for (int i : ha.degrees())
        for (int j : hb.degrees()) expect[i + j] += ha.dim(i) * hb.dim(j);
      const auto got = compute_homology(F2, product(a.space(), b.space())).gvs().dims();
      c.expect(got == expect, "betti numbers of " + a.name + " x " + b.name);
    }
}

// 7 ----------------------------------------------------------------------------------------

void determinism(Check& c) {
  const std::vector<std::string> commands{
      "--output structured --witnesses digraph " + fixture("torus.doc"),
      "--output structured --witnesses digraph " + fixture("two_holes_comparable_7.doc"),
      "--output structured --field rational digraph " + fixture("ordered_circle.doc"),
      "--output structured kunneth-check " + fixture("directed_circle.doc") + " " + fixture("ordered_circle.doc"),
      "--output structured kunneth-check " + fixture("ordered_circle.doc") + " " + fixture("ordered_circle.doc"),
  };
  for (const auto& cmd : commands) {
    const auto a = run_cli(cmd), b = run_cli(cmd), t2 = run_cli("--threads 2 " + cmd), t4 = run_cli("--threads 4 " + cmd);
    c.expect(a.exit_code == 0 && !a.out.empty(), "runs: " + cmd);
    c.expect(a.out == b.out, "two runs identical: " + cmd);
    c.expect(a.out == t2.out && a.out == t4.out, "thread counts identical: " + cmd);
  }
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "torus pointing table over GF(2)", torus_table);
  ok &= run_criterion(2, "worked examples: indiscrete, discrete, ordered circle, two holes", examples_suite);
  ok &= run_criterion(3, "counterexample: closure properties without bilinearity", counterexample);
  ok &= run_criterion(4, "oracle equivalence on fixtures up to 8 points, GF(2) and Q", oracle_equivalence);
  ok &= run_criterion(5, "theorem verifications", theorems);
  ok &= run_criterion(6, "algebra property suites", property_suites);
  ok &= run_criterion(7, "deterministic structured output", determinism);
  std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << "\n";
  return ok ? 0 : 1;
}
