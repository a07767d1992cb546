#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "sigrho/memo_table.hpp"
#include "sigrho/modring.hpp"
#include "sigrho/sigma_rho.hpp"

namespace sigrho {

enum class JoinStrategy { naive, fast_general, fast_dominating };

JoinStrategy parse_join_strategy(std::string_view text);
std::string_view to_string(JoinStrategy j);

/// Pair-enumeration join: every pair of colourings that agree on the side of
/// each vertex, combined label-wise with SigmaRhoSpec::add.
template <class P>
MemoTable<P> naive_join(const MemoTable<P>& left, const MemoTable<P>& right, const SigmaRhoSpec& spec,
                        const P& policy);

struct FastJoinOptions {
  /// Field for all transform work; needs the roots from transform_orders().
  const PrimeField* field = nullptr;
  /// Largest partial-solution size any table may hold (usually n).
  std::int32_t size_bound = 0;
  /// Shift sizes by the table minima and keep only a window of bag-size + 1
  /// sizes. Only honoured for minimisation.
  bool use_replacement = false;
  /// Test hook: overwrite every transform entry the sum filter discards with
  /// junk before it would be read.
  bool poison_unfiltered = false;
};

/// Zeta transform over the flat order, one combined convolution per block
/// partition of the bag, sum filter, Moebius transform.
template <class P>
MemoTable<P> fast_join_general(const MemoTable<P>& left, const MemoTable<P>& right, const SigmaRhoSpec& spec,
                               const P& policy, const FastJoinOptions& opts);

/// sigma = N, rho = N \ {0} label structure only: fixes the sigma vertices and
/// runs a chain covering product on the rest.
template <class P>
MemoTable<P> fast_join_dominating(const MemoTable<P>& left, const MemoTable<P>& right, const SigmaRhoSpec& spec,
                                  const P& policy, const FastJoinOptions& opts);

/// Labels {|>=0|s, |0|r, |>=1|r}.
bool is_dominating_shaped(const SigmaRhoSpec& spec);

/// Root orders a fast join needs for n vertices and bags of at most max_bag.
std::vector<std::uint64_t> transform_orders(const SigmaRhoSpec& spec, std::size_t n, std::size_t max_bag);

/// Number of label pairs (a, b) with a defined sum, i.e. the per-coordinate
/// branching factor of naive_join.
std::size_t compatible_pairs(const SigmaRhoSpec& spec);

/// Field multiplications spent by one counting join of two random tables
/// over a bag of k vertices.
std::uint64_t count_join_mults(const SigmaRhoSpec& spec, std::size_t k, JoinStrategy strategy,
                               const PrimeField& field, std::uint64_t seed);

}  // namespace sigrho
