#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dihom/dihom.hpp"

namespace {

using namespace dihom;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

struct Globals {
  std::string field = "gf2";
  std::string output = "table";
  bool witnesses = false;
  std::optional<int> max_degree;
  std::size_t oracle_cap = 10;
  std::uint64_t seed = 1;
  unsigned threads = 1;

  DigraphOptions digraph() const { return {threads}; }
  ReportOptions report() const { return {witnesses, max_degree, 15}; }
};

void emit(const Globals& g, const Json& j) {
  if (g.output == "structured")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << render_table(j);
}

int emit_check(const Globals& g, const CheckReport& r) {
  emit(g, check_json(r));
  return r.passed ? kExitOk : kExitVerification;
}

template <typename Fn>
int with_field(const std::string& name, Fn&& fn) {
  if (name == "gf2") return fn(PrimeField(2));
  if (name == "rational") return fn(RationalField());
  if (name.rfind("gf:", 0) == 0) {
    std::uint32_t p = 0;
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(name.substr(3), &used);
      if (used != name.size() - 3 || v > 0xFFFFFFFFUL) throw std::invalid_argument("range");
      p = static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
      throw InputError("field '" + name + "': expected gf:<prime>");
    }
    if (!PrimeField::is_prime(p)) throw InputError("field '" + name + "': " + std::to_string(p) + " is not prime");
    return fn(PrimeField(p));
  }
  throw InputError("unknown field '" + name + "' (expected gf2, gf:<p> or rational)");
}

PairSpace load_pair(const std::string& path) { return to_pair(load_document(path)); }

FinitePreorderedSpace load_space(const std::string& path) { return load_pair(path).space; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

PointMap parse_point_map(const std::string& text, const FinitePreorderedSpace& src, const FinitePreorderedSpace& dst) {
  PointMap f(src.size(), static_cast<std::size_t>(-1));
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    require_input(eq != std::string::npos, "--map entry '" + item + "' is not of the form source=target");
    const auto a = src.index(item.substr(0, eq));
    require_input(f[a] == static_cast<std::size_t>(-1), "--map assigns '" + item.substr(0, eq) + "' twice");
    f[a] = dst.index(item.substr(eq + 1));
  }
  for (std::size_t i = 0; i < f.size(); ++i)
    require_input(f[i] != static_cast<std::size_t>(-1), "--map does not assign point '" + src.id(i) + "'");
  return f;
}

// Constructed spaces are always printed as loadable documents.
void write_document(const SpaceDocument& d) { std::cout << serialize_document(d); }

int cmd_validate(const Globals& g, const std::string& path) {
  const auto doc = load_document(path);
  const auto p = to_pair(doc);
  std::size_t topo = 0, dir = 0;
  for (std::size_t i = 0; i < p.space.size(); ++i) {
    topo += p.space.topo_up(i).count();
    dir += p.space.dir_up(i).count();
  }
  Json j;
  j["name"] = doc.name;
  j["valid"] = true;
  j["points"] = p.space.size();
  j["topology_pairs"] = topo;
  j["direction_mode"] = to_string(doc.mode);
  j["direction_pairs"] = dir;
  j["direction_is_partial_order"] = relation::is_antisymmetric(p.space.dir());
  if (doc.subset) j["subset"] = p.space.ids(p.subset);
  emit(g, j);
  return kExitOk;
}

int run_fixtures(const Globals& g, const std::string& export_dir) {
  const PrimeField gf2(2);
  auto models = all_models();
  if (!export_dir.empty()) {
    std::filesystem::create_directories(export_dir);
    for (const auto& m : models) {
      std::ofstream out(std::filesystem::path(export_dir) / (m.name + ".doc"), std::ios::binary);
      if (!out) throw InputError("cannot write into '" + export_dir + "'");
      out << serialize_document(to_document(m.name, m.space()));
    }
  }
  bool ok = true;
  Json list = Json::array();
  std::mt19937_64 rng(g.seed);
  for (const auto& m : models) {
    Json j;
    j["model"] = m.name;
    j["points"] = m.space().size();
    const auto d = homology_digraph_pair(gf2, m.pair, g.digraph());
    Json facts = Json::object();
    for (const auto& e : m.expected) {
      const bool holds = e.holds(gf2, d);
      ok = ok && holds;
      facts[e.description] = holds ? "pass" : "FAIL";
    }
    j["facts"] = facts;
    with_field(g.field, [&](const auto& field) {
      if (m.space().size() <= std::min<std::size_t>(g.oracle_cap, 8)) {
        const bool same = brute_force_digraph(field, m.pair, g.oracle_cap).defining() ==
                          homology_digraph_pair(field, m.pair, g.digraph()).defining();
        ok = ok && same;
        j["oracle"] = same ? "identical" : "DIFFERENT";
      }
      if (m.space().size() <= 32) {
        PointMap perm(m.space().size());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto r = verify_relabel_invariance(field, m.pair, perm, g.digraph());
        ok = ok && r.passed;
        j["relabel_invariance"] = r.passed ? "pass" : "FAIL";
      }
      return 0;
    });
    list.push_back(j);
  }
  Json out;
  out["field"] = g.field;
  out["seed"] = g.seed;
  out["models"] = list;
  out["result"] = ok ? "pass" : "fail";
  emit(g, out);
  return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology digraphs of finite preordered spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "gf2, gf:<p> or rational")->capture_default_str();
  app.add_option("--output", g.output, "table or structured")
      ->check(CLI::IsMember({"table", "structured"}))
      ->capture_default_str();
  app.add_flag("--witnesses", g.witnesses, "list a generating concept pair for each pointing basis pair");
  app.add_option("--max-degree", g.max_degree, "only report classes up to this degree");
  app.add_option("--oracle-cap", g.oracle_cap, "largest space the brute-force oracle accepts")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads for image computations")
      ->check(CLI::Range(1U, 256U))
      ->capture_default_str();

  std::string doc_a, doc_b, base_a, base_b, excise, map_spec, export_dir;
  std::vector<std::string> docs;

  auto* validate = app.add_subcommand("validate", "check a space document");
  validate->add_option("document", doc_a)->required();
  auto* hom = app.add_subcommand("homology", "homology with representative cycles");
  hom->add_option("document", doc_a)->required();
  auto* dg = app.add_subcommand("digraph", "homology digraph of a space");
  dg->add_option("document", doc_a)->required();
  auto* dgp = app.add_subcommand("digraph-pair", "homology digraph of a pair (document with a subset)");
  dgp->add_option("document", doc_a)->required();
  auto* prod = app.add_subcommand("product", "product space document");
  prod->add_option("left", doc_a)->required();
  prod->add_option("right", doc_b)->required();
  auto* cop = app.add_subcommand("coproduct", "disjoint union document");
  cop->add_option("documents", docs)->required();
  auto* wdg = app.add_subcommand("wedge", "wedge of two based spaces");
  wdg->add_option("left", doc_a)->required();
  wdg->add_option("left-basepoint", base_a)->required();
  wdg->add_option("right", doc_b)->required();
  wdg->add_option("right-basepoint", base_b)->required();
  auto* kun = app.add_subcommand("kunneth-check", "cross product is an isomorphism of digraphs");
  kun->add_option("left", doc_a)->required();
  kun->add_option("right", doc_b)->required();
  auto* rkun = app.add_subcommand("relative-kunneth-check", "relative cross product for pairs with open subsets");
  rkun->add_option("left", doc_a)->required();
  rkun->add_option("right", doc_b)->required();
  auto* exc = app.add_subcommand("excision-check", "excising U from a pair preserves the digraph");
  exc->add_option("document", doc_a)->required();
  exc->add_option("--excise", excise, "comma-separated point ids of U")->required();
  auto* con = app.add_subcommand("connecting-check", "connecting map is a morphism; long exact sequence");
  con->add_option("document", doc_a)->required();
  auto* mc = app.add_subcommand("map-check", "induced map of a monotone continuous map is a morphism");
  mc->add_option("source", doc_a)->required();
  mc->add_option("target", doc_b)->required();
  mc->add_option("--map", map_spec, "source=target,... for every source point")->required();
  auto* orc = app.add_subcommand("oracle-compare", "concept pairs against all subset pairs");
  orc->add_option("document", doc_a)->required();
  auto* fix = app.add_subcommand("fixtures", "evaluate the built-in models and their expected facts");
  fix->add_option("--export", export_dir, "also write every model as a document into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*validate) return cmd_validate(g, doc_a);
    if (*fix) return run_fixtures(g, export_dir);
    if (*prod) {
      const auto a = load_pair(doc_a), b = load_pair(doc_b);
      const auto x = product(a.space, b.space);
      std::optional<PointSet> sub;
      if (a.subset.any() || b.subset.any())
        sub = product_set(a.subset, b.space.full_set()) | product_set(a.space.full_set(), b.subset);
      write_document(to_document(load_document(doc_a).name + "×" + load_document(doc_b).name, x, sub));
      return kExitOk;
    }
    if (*cop) {
      std::vector<FinitePreorderedSpace> xs;
      std::vector<PairSpace> ps;
      std::string name;
      for (const auto& d : docs) {
        ps.push_back(load_pair(d));
        xs.push_back(ps.back().space);
        name += (name.empty() ? "" : "⊔") + load_document(d).name;
      }
      const auto c = coproduct(xs);
      PointSet sub = c.space.empty_set();
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t k = ps[i].subset.find_first(); k != PointSet::npos; k = ps[i].subset.find_next(k))
          sub.set(c.injections[i][k]);
      write_document(to_document(name, c.space, sub.any() ? std::optional<PointSet>(sub) : std::nullopt));
      return kExitOk;
    }
    if (*wdg) {
      const auto w = wedge(load_space(doc_a), base_a, load_space(doc_b), base_b);
      write_document(to_document(load_document(doc_a).name + "∨" + load_document(doc_b).name, w.space));
      return kExitOk;
    }

    return with_field(g.field, [&](const auto& field) -> int {
      if (*hom) {
        emit(g, homology_json(field, compute_homology(field, load_pair(doc_a)), g.report()));
        return kExitOk;
      }
      if (*dg) {
        emit(g, digraph_json(field, homology_digraph(field, load_space(doc_a), g.digraph()), g.report()));
        return kExitOk;
      }
      if (*dgp) {
        const auto doc = load_document(doc_a);
        require_input(doc.subset.has_value(), "digraph-pair: the document has no subset field");
        emit(g, digraph_json(field, homology_digraph_pair(field, to_pair(doc), g.digraph()), g.report()));
        return kExitOk;
      }
      if (*kun) return emit_check(g, verify_kunneth(field, load_space(doc_a), load_space(doc_b), g.digraph()));
      if (*rkun) return emit_check(g, relative_kunneth(field, load_pair(doc_a), load_pair(doc_b), g.digraph()));
      if (*exc) {
        const auto p = load_pair(doc_a);
        const auto ids = split(excise, ',');
        return emit_check(g, verify_excision(field, p, p.space.subset(ids), g.digraph()));
      }
      if (*con) {
        const auto doc = load_document(doc_a);
        require_input(doc.subset.has_value(), "connecting-check: the document has no subset field");
        return emit_check(g, verify_connecting(field, to_pair(doc), g.digraph()));
      }
      if (*mc) {
        const auto a = load_pair(doc_a), b = load_pair(doc_b);
        return emit_check(g, verify_morphism(field, a, b, parse_point_map(map_spec, a.space, b.space), g.digraph()));
      }
      if (*orc) {
        const auto p = load_pair(doc_a);
        const auto brute = brute_force_digraph(field, p, g.oracle_cap);
        const auto fast = homology_digraph_pair(field, p, g.digraph());
        const bool same = brute.defining() == fast.defining();
        Json j;
        j["field"] = field.name();
        j["points"] = p.space.size();
        j["concepts"] = fast.witnesses.size();
        j["defining_dims"] = detail::subspace_dims_json(fast.defining());
        j["oracle_defining_dims"] = detail::subspace_dims_json(brute.defining());
        j["result"] = same ? "identical" : "different";
        emit(g, j);
        return same ? kExitOk : kExitVerification;
      }
      throw InputError("no command given");
    });
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerification;
  }
}
