#pragma once

#include <algorithm>
#include <cstdint>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <type_traits>
#include <vector>

#include "sigrho/graph.hpp"
#include "sigrho/memo_table.hpp"
#include "sigrho/oracle.hpp"
#include "sigrho/sigma_rho.hpp"

namespace sigrho::testing {

/// Adjacency bitmask per vertex, for graphs on at most 8 vertices.
using SmallGraph = std::vector<std::uint8_t>;

inline Graph to_graph(const SmallGraph& sg) {
  Graph g(sg.size());
  for (Vertex u = 0; u < sg.size(); ++u) {
    for (Vertex v = u + 1; v < sg.size(); ++v) {
      if (sg[u] >> v & 1) g.add_edge(u, v);
    }
  }
  return g;
}

namespace detail {

inline std::uint64_t code_under(const SmallGraph& g, const std::vector<int>& perm) {
  // perm[i] = old vertex placed at position i
  std::uint64_t code = 0;
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) code = code << 1 | (g[perm[i]] >> perm[j] & 1);
  }
  return code;
}

inline void permute_classes(const SmallGraph& g, std::vector<std::vector<int>>& classes, std::size_t c,
                            std::vector<int>& perm, std::uint64_t& best) {
  if (c == classes.size()) {
    best = std::min(best, code_under(g, perm));
    return;
  }
  auto& cls = classes[c];
  std::sort(cls.begin(), cls.end());
  do {
    std::size_t offset = perm.size();
    perm.insert(perm.end(), cls.begin(), cls.end());
    permute_classes(g, classes, c + 1, perm, best);
    perm.resize(offset);
  } while (std::next_permutation(cls.begin(), cls.end()));
}

}  // namespace detail

/// Canonical code: minimum upper-triangle code over orderings that list
/// vertices by increasing degree.
inline std::uint64_t canonical_code(const SmallGraph& g) {
  std::map<int, std::vector<int>> by_degree;
  for (std::size_t v = 0; v < g.size(); ++v) by_degree[std::popcount(g[v])].push_back(static_cast<int>(v));
  std::vector<std::vector<int>> classes;
  for (auto& [d, vs] : by_degree) classes.push_back(vs);
  std::vector<int> perm;
  std::uint64_t best = ~std::uint64_t{0};
  detail::permute_classes(g, classes, 0, perm, best);
  return best;
}

/// One representative of every connected graph on n vertices, up to
/// isomorphism. Every connected graph has a vertex whose removal leaves it
/// connected, so extending the (n-1)-vertex list by one vertex reaches all.
inline std::vector<SmallGraph> connected_graphs(std::size_t n) {
  if (n == 0) return {};
  std::vector<SmallGraph> level{SmallGraph(1, 0)};
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::uint64_t, SmallGraph> seen;
    for (const SmallGraph& g : level) {
      for (unsigned mask = 1; mask < (1u << (size - 1)); ++mask) {
        SmallGraph h = g;
        h.push_back(static_cast<std::uint8_t>(mask));
        for (std::size_t v = 0; v + 1 < size; ++v) {
          if (mask >> v & 1) h[v] |= static_cast<std::uint8_t>(1u << (size - 1));
        }
        seen.emplace(canonical_code(h), h);
      }
    }
    level.clear();
    for (auto& [code, g] : seen) level.push_back(g);
  }
  return level;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution edge(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

/// Decomposition from a random elimination order; bushier than min-fill,
/// so it exercises join nodes.
inline TreeDecomposition random_decomposition(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> order(g.n());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  return decomposition_from_order(g, order);
}

/// The presets with p = 2 for the parameterised ones.
inline std::vector<SigmaRhoSpec> all_presets() {
  std::vector<SigmaRhoSpec> out;
  for (const auto& name : SigmaRhoSpec::preset_names()) out.push_back(SigmaRhoSpec::preset(name, 2));
  return out;
}

/// Random tables for one join, in the engine's representation and the
/// oracle's. Optimisation sizes lie in [0, max_size]; about a quarter of the
/// entries are absent.
struct RandomTables {
  std::vector<oracle::Cell> left, right;
};

inline RandomTables random_cells(std::size_t entries, Variant variant, std::int64_t max_size, const BigInt& count_bound,
                                 std::mt19937_64& rng) {
  RandomTables t{std::vector<oracle::Cell>(entries), std::vector<oracle::Cell>(entries)};
  std::uniform_int_distribution<int> quarter(0, 3);
  std::uniform_int_distribution<std::int64_t> size(0, max_size);
  std::uniform_int_distribution<std::uint64_t> count(1, std::numeric_limits<std::uint64_t>::max());
  for (auto* side : {&t.left, &t.right}) {
    for (auto& c : *side) {
      c.present = quarter(rng) != 0;
      if (!c.present) continue;
      if (is_optimisation(variant)) c.size = size(rng);
      if (is_counting(variant)) c.count = BigInt(count(rng)) % count_bound;
    }
  }
  return t;
}

/// Calls fn with the policy object for a variant.
template <class Fn>
decltype(auto) with_policy(Variant variant, const PrimeField& field, Fn&& fn) {
  switch (variant) {
    case Variant::existence: return fn(ExistencePolicy{});
    case Variant::minimise: return fn(OptimisationPolicy{Objective::minimise});
    case Variant::maximise: return fn(OptimisationPolicy{Objective::maximise});
    case Variant::count: return fn(CountPolicy{&field});
    case Variant::count_minimise: return fn(CountOptimisationPolicy{Objective::minimise, &field});
    case Variant::count_maximise: break;
  }
  return fn(CountOptimisationPolicy{Objective::maximise, &field});
}

template <class P>
typename P::Value to_value(const oracle::Cell& c, const P& policy, const PrimeField& field) {
  if constexpr (std::is_same_v<P, ExistencePolicy>) {
    return c.present ? 1 : 0;
  } else if constexpr (std::is_same_v<P, OptimisationPolicy>) {
    return c.present ? static_cast<std::int32_t>(c.size) : kNoSize;
  } else if constexpr (std::is_same_v<P, CountPolicy>) {
    return static_cast<Fp>(c.count % field.modulus());
  } else {
    if (!c.present) return policy.none();
    return SizedCount{static_cast<std::int32_t>(c.size), static_cast<Fp>(c.count % field.modulus())};
  }
}

template <class P>
MemoTable<P> to_table(const std::vector<oracle::Cell>& cells, std::size_t k, const P& policy,
                      const PrimeField& field) {
  MemoTable<P> t;
  for (std::size_t i = 0; i < k; ++i) t.bag.push_back(static_cast<Vertex>(i));
  for (const auto& c : cells) t.values.push_back(to_value(c, policy, field));
  return t;
}

/// Engine table equals the oracle's table, counts compared mod p.
template <class P>
bool matches_oracle(const MemoTable<P>& t, const std::vector<oracle::Cell>& ref, const P& policy,
                    const PrimeField& field) {
  if (t.values.size() != ref.size()) return false;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    if (!(t.values[i] == to_value(ref[i], policy, field))) return false;
  }
  return true;
}

}  // namespace sigrho::testing
