#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "sigrho/graph.hpp"
#include "sigrho/joins.hpp"
#include "sigrho/modring.hpp"
#include "sigrho/sigma_rho.hpp"

namespace sigrho {

struct SolveOptions {
  JoinStrategy join = JoinStrategy::naive;
  /// Size window at fast joins; only affects (count_)minimise.
  bool use_replacement = false;
};

struct SolveReport {
  Answer answer;
  int width = -1;
  std::size_t nice_nodes = 0;
  std::size_t join_nodes = 0;
  std::size_t introduce_nodes = 0;
  std::size_t forget_nodes = 0;
  std::vector<std::uint64_t> primes;
  std::uint64_t field_mults = 0;
  std::uint64_t field_adds = 0;
};

/// Runs the DP over a nice form of td.
SolveReport solve(const Graph& g, const TreeDecomposition& td, const SigmaRhoSpec& spec, Variant variant,
                  const SolveOptions& opts = {});

/// Fields for a DP over n vertices with bags of at most max_bag vertices:
/// `count` primes above 2^61, each carrying every root a fast join may use.
/// Results are cached and shared.
std::shared_ptr<const std::vector<PrimeField>> join_fields(const SigmaRhoSpec& spec, std::size_t n,
                                                           std::size_t max_bag, std::size_t count);

/// Number of primes the counting variants use for n vertices.
std::size_t counting_prime_count(std::size_t n);

/// True when the label structure is that of Dominating Set or Total
/// Dominating Set, the presets with the replacement property.
bool has_replacement_property(const SigmaRhoSpec& spec);

}  // namespace sigrho
