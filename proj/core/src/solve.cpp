#include "sigrho/solve.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "sigrho/dp.hpp"
#include "sigrho/joins.hpp"

namespace sigrho {

std::size_t counting_prime_count(std::size_t n) { return (n + 59) / 60 + 1; }

bool has_replacement_property(const SigmaRhoSpec& spec) {
  const NatSet not_zero = NatSet::cofinite({0});
  const bool ds = spec.sigma() == NatSet::naturals() && spec.rho() == not_zero;
  const bool tds = spec.sigma() == not_zero && spec.rho() == not_zero;
  return ds || tds;
}

std::shared_ptr<const std::vector<PrimeField>> join_fields(const SigmaRhoSpec& spec, std::size_t n,
                                                           std::size_t max_bag, std::size_t count) {
  static std::mutex mu;
  static std::map<std::tuple<std::vector<std::uint64_t>, std::size_t>, std::shared_ptr<const std::vector<PrimeField>>>
      cache;
  auto orders = transform_orders(spec, n, max_bag);
  std::sort(orders.begin(), orders.end());
  std::lock_guard lock(mu);
  auto key = std::make_tuple(orders, count);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto fields = std::make_shared<const std::vector<PrimeField>>(choose_primes(orders, std::uint64_t{1} << 61, count));
  cache.emplace(key, fields);
  return fields;
}

namespace {

template <class P>
JoinFn<P> make_join(const SigmaRhoSpec& spec, const P& policy, const SolveOptions& opts, const PrimeField& field,
                    std::int32_t size_bound) {
  FastJoinOptions fo;
  fo.field = &field;
  fo.size_bound = size_bound;
  fo.use_replacement = opts.use_replacement;
  switch (opts.join) {
    case JoinStrategy::naive:
      return [&spec, policy](const MemoTable<P>& l, const MemoTable<P>& r) { return naive_join(l, r, spec, policy); };
    case JoinStrategy::fast_general:
      return [&spec, policy, fo](const MemoTable<P>& l, const MemoTable<P>& r) {
        return fast_join_general(l, r, spec, policy, fo);
      };
    case JoinStrategy::fast_dominating:
      return [&spec, policy, fo](const MemoTable<P>& l, const MemoTable<P>& r) {
        return fast_join_dominating(l, r, spec, policy, fo);
      };
  }
  throw std::logic_error("unhandled join strategy");
}

Objective objective_of(Variant v) {
  return v == Variant::maximise || v == Variant::count_maximise ? Objective::maximise : Objective::minimise;
}

}  // namespace

SolveReport solve(const Graph& g, const TreeDecomposition& td, const SigmaRhoSpec& spec, Variant variant,
                  const SolveOptions& opts) {
  if (opts.join == JoinStrategy::fast_dominating && !is_dominating_shaped(spec)) {
    throw std::invalid_argument("fast_dominating join needs a problem with the labels {|>=0|s, |0|r, |>=1|r}");
  }
  const NiceTreeDecomposition nice = make_nice(g, td);
  SolveReport rep;
  rep.width = nice.width();
  rep.nice_nodes = nice.nodes.size();
  rep.join_nodes = nice.count(NiceType::join);
  rep.introduce_nodes = nice.count(NiceType::introduce);
  rep.forget_nodes = nice.count(NiceType::forget);

  const std::size_t n = g.n();
  const std::size_t max_bag = static_cast<std::size_t>(std::max(rep.width, 0) + 1);
  const std::size_t nprimes = is_counting(variant) ? counting_prime_count(n) : 1;
  auto fields = join_fields(spec, n, max_bag, nprimes);
  const auto bound = static_cast<std::int32_t>(n);

  const OpCounts before = op_counts();
  Answer& ans = rep.answer;
  ans.variant = variant;
  switch (variant) {
    case Variant::existence: {
      ExistencePolicy pol;
      ans.feasible = run_dp(nice, spec, pol, make_join(spec, pol, opts, (*fields)[0], bound)) != 0;
      rep.primes.push_back((*fields)[0].modulus());
      break;
    }
    case Variant::minimise:
    case Variant::maximise: {
      OptimisationPolicy pol{objective_of(variant)};
      auto v = run_dp(nice, spec, pol, make_join(spec, pol, opts, (*fields)[0], bound));
      ans.feasible = v != kNoSize;
      if (ans.feasible) ans.size = v;
      rep.primes.push_back((*fields)[0].modulus());
      break;
    }
    case Variant::count: {
      ResidueValue res;
      for (const PrimeField& F : *fields) {
        CountPolicy pol{&F};
        res.residues.push_back(run_dp(nice, spec, pol, make_join(spec, pol, opts, F, bound)));
        rep.primes.push_back(F.modulus());
      }
      ans.count = crt_reconstruct(res, *fields);
      ans.feasible = ans.count != 0;
      break;
    }
    case Variant::count_minimise:
    case Variant::count_maximise: {
      ResidueValue res;
      std::optional<std::int32_t> size;
      for (const PrimeField& F : *fields) {
        CountOptimisationPolicy pol{objective_of(variant), &F};
        SizedCount v = run_dp(nice, spec, pol, make_join(spec, pol, opts, F, bound));
        if (size && *size != v.size) throw std::logic_error("optimum differs between primes");
        size = v.size;
        res.residues.push_back(v.count);
        rep.primes.push_back(F.modulus());
      }
      ans.feasible = *size != kNoSize;
      if (ans.feasible) {
        ans.size = *size;
        ans.count = crt_reconstruct(res, *fields);
      }
      break;
    }
  }
  const OpCounts after = op_counts();
  rep.field_mults = after.muls - before.muls;
  rep.field_adds = after.adds - before.adds;
  return rep;
}

}  // namespace sigrho
