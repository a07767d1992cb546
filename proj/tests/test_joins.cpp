#include <doctest.h>

#include <random>

#include "sigrho/joins.hpp"
#include "support.hpp"

using namespace sigrho;

namespace {

constexpr std::int64_t kMaxSize = 6;

PrimeField join_field(const SigmaRhoSpec& spec, std::size_t k) {
  return choose_prime(transform_orders(spec, 2 * kMaxSize, k), std::uint64_t{1} << 61);
}

/// Joins one random table pair three ways and compares them.
bool random_join_agrees(const SigmaRhoSpec& spec, Variant variant, std::size_t k, JoinStrategy fast,
                        const PrimeField& field, std::mt19937_64& rng, bool poison = false) {
  const std::size_t entries = ipow(spec.num_labels(), k);
  auto cells = testing::random_cells(entries, variant, kMaxSize, BigInt(field.modulus()), rng);
  const auto ref = oracle::naive_table_join_oracle(k, spec, cells.left, cells.right, variant);
  return testing::with_policy(variant, field, [&](const auto& policy) {
    const auto l = testing::to_table(cells.left, k, policy, field);
    const auto r = testing::to_table(cells.right, k, policy, field);
    FastJoinOptions opts;
    opts.field = &field;
    opts.size_bound = 2 * kMaxSize;
    opts.poison_unfiltered = poison;
    const auto naive = naive_join(l, r, spec, policy);
    const auto quick = fast == JoinStrategy::fast_dominating ? fast_join_dominating(l, r, spec, policy, opts)
                                                              : fast_join_general(l, r, spec, policy, opts);
    return testing::matches_oracle(naive, ref, policy, field) && testing::matches_oracle(quick, ref, policy, field);
  });
}

}  // namespace

TEST_CASE("naive join follows the label join tables") {
  const auto ds = SigmaRhoSpec::preset("dominating_set");
  MemoTable<OptimisationPolicy> l{{0}, {1, 2, 3}}, r{{0}, {10, 20, 30}};
  // |>=0|s from s+s; |0|r from 0+0; |>=1|r from 0+1, 1+0, 1+1.
  CHECK(naive_join(l, r, ds, OptimisationPolicy{}).values == std::vector<std::int32_t>{11, 22, 23});

  const auto reg = SigmaRhoSpec::preset("induced_p_regular", 3);
  // Digits 0..3 = |0|s..|3|s, 4 = |>=0|r.
  MemoTable<OptimisationPolicy> a{{0}, {kNoSize, 1, 5, kNoSize, kNoSize}}, b{{0}, {kNoSize, kNoSize, 2, kNoSize, kNoSize}};
  CHECK(naive_join(a, b, reg, OptimisationPolicy{}).values ==
        std::vector<std::int32_t>{kNoSize, kNoSize, kNoSize, 3, kNoSize});
}

TEST_CASE("joins of empty bags multiply scalars") {
  const auto ds = SigmaRhoSpec::preset("dominating_set");
  const PrimeField field = join_field(ds, 1);
  MemoTable<CountPolicy> l{{}, {6}}, r{{}, {7}};
  const CountPolicy pol{&field};
  FastJoinOptions opts;
  opts.field = &field;
  CHECK(naive_join(l, r, ds, pol).values == std::vector<Fp>{42});
  CHECK(fast_join_general(l, r, ds, pol, opts).values == std::vector<Fp>{42});
  CHECK(fast_join_dominating(l, r, ds, pol, opts).values == std::vector<Fp>{42});
}

TEST_CASE("dominating-set fast join on one vertex") {
  const auto ds = SigmaRhoSpec::preset("dominating_set");
  const PrimeField field = join_field(ds, 1);
  const CountPolicy pol{&field};
  FastJoinOptions opts;
  opts.field = &field;
  MemoTable<CountPolicy> t{{0}, {2, 1, 1}};
  CHECK(fast_join_dominating(t, t, ds, pol, opts).values == std::vector<Fp>{4, 1, 3});
}

TEST_CASE("fast joins agree with naive joins and the oracle") {
  std::mt19937_64 rng(21);
  for (const auto& spec : testing::all_presets()) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const PrimeField field = join_field(spec, k);
      for (Variant v : all_variants()) {
        for (int trial = 0; trial < 5; ++trial) {
          CHECK_MESSAGE(random_join_agrees(spec, v, k, JoinStrategy::fast_general, field, rng),
                        spec.name() << ' ' << to_string(v) << " k=" << k);
        }
      }
    }
  }
}

TEST_CASE("dominating-set fast join agrees on wider bags") {
  std::mt19937_64 rng(22);
  const auto ds = SigmaRhoSpec::preset("dominating_set");
  for (std::size_t k = 1; k <= 7; ++k) {
    const PrimeField field = join_field(ds, k);
    for (Variant v : all_variants()) {
      for (int trial = 0; trial < 3; ++trial) {
        CHECK(random_join_agrees(ds, v, k, JoinStrategy::fast_dominating, field, rng));
      }
    }
  }
}

TEST_CASE("entries off the label-sum diagonal are never read") {
  std::mt19937_64 rng(23);
  for (const char* name : {"perfect_code", "induced_p_regular", "total_dominating_set", "nearly_perfect_set"}) {
    const auto spec = SigmaRhoSpec::preset(name, 2);
    for (std::size_t k = 1; k <= 4; ++k) {
      const PrimeField field = join_field(spec, k);
      for (Variant v : {Variant::count, Variant::minimise, Variant::existence}) {
        CHECK(random_join_agrees(spec, v, k, JoinStrategy::fast_general, field, rng, true));
      }
    }
  }
}

TEST_CASE("multiplication counts") {
  const auto ds = SigmaRhoSpec::preset("dominating_set");
  const PrimeField field = join_field(ds, 6);
  CHECK(compatible_pairs(ds) == 5);
  for (std::size_t k = 1; k <= 6; ++k) {
    CHECK(count_join_mults(ds, k, JoinStrategy::naive, field, 1) == ipow(5, k));
  }
  CHECK(count_join_mults(ds, 6, JoinStrategy::fast_general, field, 1) <
        count_join_mults(ds, 6, JoinStrategy::naive, field, 1));
}

TEST_CASE("strategy names") {
  CHECK(parse_join_strategy("naive") == JoinStrategy::naive);
  CHECK(parse_join_strategy("general") == JoinStrategy::fast_general);
  CHECK(parse_join_strategy("fast_dominating") == JoinStrategy::fast_dominating);
  CHECK(to_string(JoinStrategy::fast_general) == "fast_general");
  CHECK_THROWS(parse_join_strategy("quick"));
  CHECK(is_dominating_shaped(SigmaRhoSpec::preset("dominating_set")));
  CHECK_FALSE(is_dominating_shaped(SigmaRhoSpec::preset("total_dominating_set")));
}
