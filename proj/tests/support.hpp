#pragma once

#include <random>
#include <string>
#include <vector>

#include "dihom/dihom.hpp"

namespace testing_support {

using namespace dihom;

template <Field F>
typename F::value_type random_scalar(const F& field, std::mt19937_64& rng, int spread = 3) {
  std::uniform_int_distribution<int> d(-spread, spread);
  return field.from_int(d(rng));
}

template <Field F>
Vector<F> random_vector(const F& field, std::mt19937_64& rng, std::size_t n, int spread = 3) {
  Vector<F> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(field, rng, spread));
  return v;
}

template <Field F>
Matrix<F> random_matrix(const F& field, std::mt19937_64& rng, std::size_t rows, std::size_t cols, int spread = 3) {
  std::vector<Vector<F>> cols_;
  for (std::size_t c = 0; c < cols; ++c) cols_.push_back(random_vector(field, rng, rows, spread));
  return Matrix<F>::from_columns(field, rows, cols_);
}

inline Vector<PrimeField> bits(std::initializer_list<int> xs) {
  Vector<PrimeField> v;
  for (int x : xs) v.push_back(static_cast<PrimeField::value_type>(x));
  return v;
}

inline Vector<PrimeField> mask_vector(std::size_t mask, std::size_t n) {
  Vector<PrimeField> v(n, 0);
  for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1U;
  return v;
}

/// Every subspace of GF(2)^n, each listed once.
inline std::vector<Subspace<PrimeField>> all_gf2_subspaces(std::size_t n) {
  const PrimeField f(2);
  std::vector<Subspace<PrimeField>> out{Subspace<PrimeField>(n)};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t m = 1; m < (std::size_t{1} << n); ++m) {
      auto gens = out[k].generators();
      gens.push_back(mask_vector(m, n));
      auto s = Subspace<PrimeField>::span(f, n, gens);
      bool seen = false;
      for (const auto& t : out) seen = seen || t == s;
      if (!seen) out.push_back(std::move(s));
    }
  return out;
}

/// Random preordered space: a random partial order for the topology and a random preorder for
/// the direction.
inline FinitePreorderedSpace random_space(std::mt19937_64& rng, std::size_t n, double topo_p = 0.35,
                                          double dir_p = 0.3) {
  std::bernoulli_distribution tp(topo_p), dp(dir_p);
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back("x" + std::to_string(i));
  std::vector<PointPair> topo, dir;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j && tp(rng)) topo.emplace_back(pts[i], pts[j]);
      if (i != j && dp(rng)) dir.emplace_back(pts[i], pts[j]);
    }
  return FinitePreorderedSpace::validate(pts, topo, dir);
}

/// Random map that is monotone for the topology and for the direction, found by backtracking.
inline std::optional<PointMap> random_monotone_map(std::mt19937_64& rng, const FinitePreorderedSpace& x,
                                                   const FinitePreorderedSpace& y) {
  PointMap f(x.size());
  std::vector<std::size_t> order(y.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == x.size()) return true;
    std::shuffle(order.begin(), order.end(), rng);
    const auto candidates = order;
    for (std::size_t c : candidates) {
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        if (x.topo_leq(k, i) && !y.topo_leq(f[k], c)) ok = false;
        if (x.topo_leq(i, k) && !y.topo_leq(c, f[k])) ok = false;
        if (x.dir_leq(k, i) && !y.dir_leq(f[k], c)) ok = false;
        if (x.dir_leq(i, k) && !y.dir_leq(c, f[k])) ok = false;
      }
      if (!ok) continue;
      f[i] = c;
      if (place(i + 1)) return true;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return f;
}

}  // namespace testing_support
