#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dihom/digraph.hpp"
#include "dihom/document.hpp"

namespace dihom {

struct ReportOptions {
  bool witnesses = false;
  std::optional<int> max_degree;
  /// The table of all nonzero homogeneous classes is included over GF(2) up to this many classes.
  std::size_t class_table_cap = 15;
};

namespace detail {

inline Json dims_json(const std::map<int, std::size_t>& dims) {
  Json j = Json::object();
  for (const auto& [k, d] : dims) j[std::to_string(k)] = d;
  return j;
}

/// Dimension of a graded subspace at every degree where its ambient is nonzero.
template <Field F>
Json subspace_dims_json(const GradedSubspace<F>& s) {
  Json j = Json::object();
  for (int k : s.ambient().degrees()) j[std::to_string(k)] = s.dim(k);
  return j;
}

template <Field F>
std::string vector_string(const F& field, const Vector<F>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += field.to_string(v[i]);
  }
  return out;
}

/// Basis classes, in degree order, limited by max_degree.
inline std::vector<std::pair<int, std::size_t>> basis_classes(const GradedVectorSpace& v, const ReportOptions& opts) {
  std::vector<std::pair<int, std::size_t>> out;
  for (int k : v.degrees()) {
    if (opts.max_degree && k > *opts.max_degree) continue;
    for (std::size_t i = 0; i < v.dim(k); ++i) out.emplace_back(k, i);
  }
  return out;
}

}  // namespace detail

inline Json pair_space_json(const PairSpace& p) {
  Json j;
  j["points"] = p.space.size();
  if (p.subset.any()) j["subset"] = p.space.ids(p.subset);
  return j;
}

template <Field F>
Json homology_json(const F& field, const PairHomology<F>& h, const ReportOptions& opts = {}) {
  Json j;
  j["field"] = field.name();
  j["space"] = pair_space_json(PairSpace{h.space, h.subset});
  j["betti"] = detail::dims_json(h.gvs().dims());
  Json classes = Json::array();
  const auto& k = h.chains.complex();
  for (const auto& [d, i] : detail::basis_classes(h.gvs(), opts)) {
    Json c;
    c["label"] = h.gvs().labels(d)[i];
    c["degree"] = d;
    Json cycle = Json::array();
    const auto& rep = h.basis.reps(d)[i];
    for (std::size_t s = 0; s < rep.size(); ++s) {
      if (field.is_zero(rep[s])) continue;
      cycle.push_back(Json::array({field.to_string(rep[s]), simplex_label(h.space, k.simplex(d, h.chains.global(d, s)))}));
    }
    c["cycle"] = cycle;
    classes.push_back(c);
  }
  j["classes"] = classes;
  return j;
}

template <Field F>
Json digraph_json(const F& field, const HomologyDigraph<F>& d, const ReportOptions& opts = {}) {
  Json j = homology_json(field, d.homology, opts);
  j["concepts"] = d.witnesses.size();
  j["defining_dims"] = detail::subspace_dims_json(d.defining());
  Json defining = Json::object();
  for (int n : d.defining().degrees()) {
    if (opts.max_degree && n > 2 * *opts.max_degree) continue;
    Json gens = Json::array();
    for (const auto& g : d.defining().generators(n)) gens.push_back(detail::vector_string(field, g));
    defining[std::to_string(n)] = gens;
  }
  j["defining"] = defining;

  const auto classes = detail::basis_classes(d.gvs(), opts);
  Json labels = Json::array();
  for (const auto& [k, i] : classes) labels.push_back(d.gvs().labels(k)[i]);
  Json matrix = Json::array();
  Json wit = Json::array();
  for (const auto& [di, i] : classes) {
    std::string row;
    for (const auto& [dj, jj] : classes) {
      const bool p = d.points_to(field, {di, unit_vector(field, d.gvs().dim(di), i)},
                                 {dj, unit_vector(field, d.gvs().dim(dj), jj)});
      row += p ? '1' : '0';
      if (!opts.witnesses || !p) continue;
      Json w;
      w["source"] = d.gvs().labels(di)[i];
      w["target"] = d.gvs().labels(dj)[jj];
      if (auto k = witness_for(field, d, di, i, dj, jj)) {
        w["E"] = d.homology.space.ids(d.witnesses[*k].pair.extent);
        w["F"] = d.homology.space.ids(d.witnesses[*k].pair.intent);
      } else {
        w["E"] = nullptr;
        w["F"] = nullptr;
      }
      wit.push_back(w);
    }
    matrix.push_back(row);
  }
  j["pointing"] = Json{{"classes", labels}, {"rows", matrix}};
  if (opts.witnesses) j["witnesses"] = wit;

  if constexpr (is_prime_field_v<F>) {
    if (field.is_gf2()) {
      // every nonzero homogeneous class, when there are few enough
      std::vector<Homogeneous<F>> all;
      std::vector<std::string> names;
      std::size_t count = 0;
      for (int k : d.gvs().degrees()) {
        if (opts.max_degree && k > *opts.max_degree) continue;
        const std::size_t dim = d.gvs().dim(k);
        count += dim < 20 ? (std::size_t{1} << dim) - 1 : opts.class_table_cap + 1;
      }
      if (count <= opts.class_table_cap) {
        for (int k : d.gvs().degrees()) {
          if (opts.max_degree && k > *opts.max_degree) continue;
          const std::size_t dim = d.gvs().dim(k);
          for (std::size_t mask = 1; mask < (std::size_t{1} << dim); ++mask) {
            Vector<F> v(dim, 0);
            std::string name;
            for (std::size_t b = 0; b < dim; ++b)
              if (mask >> b & 1U) {
                v[b] = 1;
                name += (name.empty() ? "" : "+") + d.gvs().labels(k)[b];
              }
            all.push_back({k, v});
            names.push_back(name);
          }
        }
        Json table = Json::object();
        for (std::size_t a = 0; a < all.size(); ++a) {
          Json targets = Json::array();
          for (std::size_t b = 0; b < all.size(); ++b)
            if (d.points_to(field, all[a], all[b])) targets.push_back(names[b]);
          table[names[a]] = targets;
        }
        j["class_table"] = table;
      }
    }
  }
  return j;
}

inline Json check_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["result"] = r.passed ? "pass" : "fail";
  Json details = Json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  j["details"] = details;
  return j;
}

/// Human-readable rendering of any report tree.
inline std::string render_table(const Json& j, int indent = 0) {
  std::ostringstream out;
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      if (v.empty()) {
        out << pad << k << ": -\n";
        continue;
      }
      out << pad << k << ":\n" << render_table(v, indent + 2);
    } else if (v.is_array()) {
      bool flat = true;
      for (const auto& e : v) flat = flat && !e.is_object() && !e.is_array();
      if (flat) {
        out << pad << k << ":";
        if (v.empty()) out << " -";
        for (const auto& e : v) out << " " << scalar(e);
        out << "\n";
      } else {
        out << pad << k << ":\n";
        for (const auto& e : v) {
          if (e.is_object()) {
            std::string line;
            for (const auto& [ek, ev] : e.items()) {
              if (!line.empty()) line += "  ";
              if (ev.is_array()) {
                std::string parts;
                for (const auto& x : ev) {
                  if (!parts.empty()) parts += " ";
                  if (x.is_array()) {
                    std::string inner;
                    for (const auto& y : x) inner += (inner.empty() ? "" : "·") + scalar(y);
                    parts += inner;
                  } else {
                    parts += scalar(x);
                  }
                }
                line += ek + "=[" + parts + "]";
              } else {
                line += ek + "=" + scalar(ev);
              }
            }
            out << pad << "  " << line << "\n";
          } else {
            std::string parts;
            for (const auto& x : e) parts += (parts.empty() ? "" : " ") + scalar(x);
            out << pad << "  " << parts << "\n";
          }
        }
      }
    } else {
      out << pad << k << ": " << scalar(v) << "\n";
    }
  }
  return out.str();
}

}  // namespace dihom
