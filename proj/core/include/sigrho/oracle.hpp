#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sigrho/graph.hpp"
#include "sigrho/modring.hpp"
#include "sigrho/sigma_rho.hpp"

// Reference implementations by exhaustive enumeration. They share no table or
// field code with the DP engine and use arbitrary-precision counts.
namespace sigrho::oracle {

inline constexpr std::size_t kMaxBruteForceVertices = 24;

/// solutions_by_size[j] = number of [sigma, rho]-sets of size j.
std::vector<BigInt> solution_profile(const Graph& g, const SigmaRhoSpec& spec);

/// Answer for any variant, read off the solution profile.
Answer brute_force_solve(const Graph& g, const SigmaRhoSpec& spec, Variant variant);

/// One entry of a reference join table.
struct Cell {
  bool present = false;
  std::int64_t size = 0;
  BigInt count = 0;

  friend bool operator==(const Cell& a, const Cell& b) {
    return a.present == b.present && a.size == b.size && a.count == b.count;
  }
};

/// Reference join of two tables over a bag of k vertices: every tuple of
/// per-vertex label triples (a, b, a + b), the sums evaluated straight from
/// the sigma and rho sets.
/// Existence reads `present`; (count_)min/max read `present` and `size`;
/// count reads `count` only.
std::vector<Cell> naive_table_join_oracle(std::size_t k, const SigmaRhoSpec& spec, const std::vector<Cell>& left,
                                          const std::vector<Cell>& right, Variant variant);

}  // namespace sigrho::oracle
