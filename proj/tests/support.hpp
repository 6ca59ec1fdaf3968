#pragma once

#include "crn/network.hpp"
#include "crn/species_set.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace crn::test {

inline ReactionNetwork load(const std::string& name) { return load_network(std::string(CRN_NETWORKS_DIR) + "/" + name); }

inline SpeciesSet set_of(const ReactionNetwork& net, const std::string& names)
{
  std::vector<std::string> parts;
  std::string cur;
  for (char c : names) {
    if (c == ' ' || c == ',') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return net.species().resolve(parts);
}

inline std::vector<SpeciesSet> sets_of(const ReactionNetwork& net, const std::vector<std::string>& list)
{
  std::vector<SpeciesSet> out;
  for (const auto& s : list) out.push_back(set_of(net, s));
  canonical_sort(out);
  return out;
}

inline RationalVector constant(int n, const Rational& value) { return RationalVector(static_cast<std::size_t>(n), value); }

/// The 5x5 all-ones matrix with the centre entry replaced.
inline RationalVector grid_with_centre(const Rational& centre)
{
  auto c = constant(25, 1);
  c[12] = centre;
  return c;
}

struct RandomNetworkShape {
  int species = 6;
  int complexes = 5;
  int reactions = 6;
  int max_coefficient = 2;
  double zero_complex_chance = 0.1;
};

namespace detail {

inline std::vector<Complex> random_complexes(std::mt19937_64& rng, const RandomNetworkShape& shape)
{
  std::uniform_int_distribution<int> coef(0, shape.max_coefficient);
  std::uniform_int_distribution<int> pick(0, shape.species - 1);
  std::bernoulli_distribution zero(shape.zero_complex_chance);
  std::vector<Complex> out;
  for (int attempt = 0; static_cast<int>(out.size()) < shape.complexes && attempt < 1000; ++attempt) {
    Complex c{std::vector<std::uint64_t>(static_cast<std::size_t>(shape.species), 0)};
    if (!zero(rng)) {
      const int support = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < support; ++k) c.exponents[pick(rng)] = static_cast<std::uint64_t>(std::max(1, coef(rng)));
    }
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

/// Keeps the complexes used by `edges` and builds the network.
inline ReactionNetwork assemble(int species, const std::vector<Complex>& pool, const std::vector<std::pair<int, int>>& edges)
{
  std::map<int, int> remap;
  std::vector<Complex> used;
  std::vector<Reaction> reactions;
  for (auto [a, b] : edges) {
    for (int k : {a, b}) {
      if (!remap.count(k)) {
        remap[k] = static_cast<int>(used.size());
        used.push_back(pool[k]);
      }
    }
    reactions.push_back({remap[a], remap[b], std::nullopt});
  }
  std::vector<std::string> names;
  for (int i = 0; i < species; ++i) names.push_back("x" + std::to_string(i));
  return ReactionNetwork(SpeciesTable(names), used, reactions);
}

}  // namespace detail

/// Random valid network: distinct complexes, no self-loops or duplicate edges.
inline ReactionNetwork random_network(std::mt19937_64& rng, const RandomNetworkShape& shape = {})
{
  const auto pool = detail::random_complexes(rng, shape);
  const int n = static_cast<int>(pool.size());
  std::vector<std::pair<int, int>> edges;
  for (int attempt = 0; static_cast<int>(edges.size()) < shape.reactions && attempt < 1000; ++attempt) {
    const int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    if (a == b || std::find(edges.begin(), edges.end(), std::pair(a, b)) != edges.end()) continue;
    edges.emplace_back(a, b);
  }
  return detail::assemble(shape.species, pool, edges);
}

/// Random strongly connected network: a Hamiltonian cycle through all
/// complexes plus random chords.
inline ReactionNetwork random_strongly_connected(std::mt19937_64& rng, const RandomNetworkShape& shape = {})
{
  auto pool = detail::random_complexes(rng, shape);
  std::shuffle(pool.begin(), pool.end(), rng);
  const int n = static_cast<int>(pool.size());
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < n; ++k) edges.emplace_back(k, (k + 1) % n);
  if (n == 2) edges.resize(2);
  for (int extra = 0; extra < shape.reactions - n; ++extra) {
    const int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    if (a == b || std::find(edges.begin(), edges.end(), std::pair(a, b)) != edges.end()) continue;
    edges.emplace_back(a, b);
  }
  return detail::assemble(shape.species, pool, edges);
}

/// Random weakly reversible network: disjoint groups of complexes, each
/// closed into a directed cycle.
inline ReactionNetwork random_weakly_reversible(std::mt19937_64& rng, const RandomNetworkShape& shape = {})
{
  auto pool = detail::random_complexes(rng, shape);
  std::shuffle(pool.begin(), pool.end(), rng);
  const int n = static_cast<int>(pool.size());
  std::vector<std::pair<int, int>> edges;
  int start = 0;
  while (n - start >= 2) {
    const int len = std::min(n - start, 2 + static_cast<int>(rng() % 3));
    if (n - start - len == 1) break;
    for (int k = 0; k < len; ++k) edges.emplace_back(start + k, start + (k + 1) % len);
    start += len;
  }
  return detail::assemble(shape.species, pool, edges);
}

/// Number of minimal vertex covers of the path on s vertices, by size.
/// Transfer over (previous bit, bit before it): a chosen vertex must have an
/// unchosen neighbour, and no edge may be left uncovered.
inline std::map<int, std::uint64_t> path_cover_histogram(int s)
{
  // key: (x_{i-1}, x_i, size)
  std::map<std::tuple<int, int, int>, std::uint64_t> dp;
  for (int a : {0, 1}) {
    for (int b : {0, 1}) {
      if (!a && !b) continue;   // edge {1,2} uncovered
      if (a && b) continue;     // vertex 1 redundant
      dp[{a, b, a + b}] = 1;
    }
  }
  for (int i = 3; i <= s; ++i) {
    std::map<std::tuple<int, int, int>, std::uint64_t> next;
    for (const auto& [key, count] : dp) {
      const auto [a, b, size] = key;
      for (int c : {0, 1}) {
        if (!b && !c) continue;
        if (a && b && c) continue;  // middle vertex redundant
        next[{b, c, size + c}] += count;
      }
    }
    dp = std::move(next);
  }
  std::map<int, std::uint64_t> out;
  for (const auto& [key, count] : dp) {
    const auto [a, b, size] = key;
    if (a && b) continue;  // last vertex redundant
    out[size] += count;
  }
  return out;
}

inline std::uint64_t total(const std::map<int, std::uint64_t>& histogram)
{
  std::uint64_t t = 0;
  for (const auto& [k, v] : histogram) t += v;
  return t;
}

}  // namespace crn::test
