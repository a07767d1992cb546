// Acceptance suite: one PASS/FAIL line per criterion.
//   sigrho_acceptance            run all criteria
//   sigrho_acceptance 2 5        run criteria 2 and 5 only

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "sigrho/dp.hpp"
#include "sigrho/joins.hpp"
#include "sigrho/posets.hpp"
#include "sigrho/solve.hpp"
#include "sigrho/transforms.hpp"
#include "support.hpp"

using namespace sigrho;

namespace {

// Pinned limits.
constexpr double kOracleSeconds = 600;
constexpr double kJoinSeconds = 300;
constexpr double kTransformSeconds = 60;
constexpr double kScalingSeconds = 300;
constexpr double kFastGrowthMax = 3.5;
constexpr double kNaiveGrowthMin = 6.0;
constexpr int kRandomGraphs = 200;
constexpr int kJoinTrials = 200;
constexpr int kTransformCases = 1000;
constexpr int kPrimeCases = 100;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Failures {
  std::size_t count = 0;
  std::ostringstream first;
  void add(const std::string& what) {
    if (count++ < 3) first << (count > 1 ? "; " : "") << what;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x, int prec = 2) {
  std::ostringstream ss;
  ss.setf(std::ios::fixed);
  ss.precision(prec);
  ss << x;
  return ss.str();
}

struct Instance {
  std::string name;
  Graph graph;
  TreeDecomposition td;
};

/// All connected graphs with n <= 7 plus kRandomGraphs random graphs with
/// 8 <= n <= 10 and edge probability 0.3. Decompositions alternate between
/// min-fill and random elimination orders.
const std::vector<Instance>& corpus() {
  static const std::vector<Instance> instances = [] {
    std::vector<Instance> out;
    std::mt19937_64 rng(kSeed);
    std::size_t index = 0;
    auto decompose = [&](const Graph& g) {
      return index++ % 2 == 0 ? min_fill_heuristic(g) : testing::random_decomposition(g, rng);
    };
    for (std::size_t n = 1; n <= 7; ++n) {
      for (const auto& sg : testing::connected_graphs(n)) {
        Graph g = testing::to_graph(sg);
        out.push_back({"connected n=" + std::to_string(n) + " #" + std::to_string(out.size()), g, decompose(g)});
      }
    }
    for (int i = 0; i < kRandomGraphs; ++i) {
      Graph g = testing::random_graph(8 + rng() % 3, 0.3, rng);
      out.push_back({"random #" + std::to_string(i), g, decompose(g)});
    }
    return out;
  }();
  return instances;
}

std::vector<JoinStrategy> strategies_for(const SigmaRhoSpec& spec) {
  std::vector<JoinStrategy> s{JoinStrategy::naive, JoinStrategy::fast_general};
  if (is_dominating_shaped(spec)) s.push_back(JoinStrategy::fast_dominating);
  return s;
}

Outcome criterion_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& graphs = corpus();
  std::size_t per_size[8] = {};
  for (const auto& inst : graphs) {
    if (inst.graph.n() <= 7) ++per_size[inst.graph.n()];
  }
  const std::size_t expected_counts[8] = {0, 1, 1, 2, 6, 21, 112, 853};
  Failures f;
  for (std::size_t n = 1; n <= 7; ++n) {
    if (per_size[n] != expected_counts[n]) {
      f.add(std::to_string(per_size[n]) + " connected graphs on " + std::to_string(n) + " vertices");
    }
  }
  std::size_t checks = 0;
  for (const auto& spec : testing::all_presets()) {
    for (const auto& inst : graphs) {
      for (Variant v : all_variants()) {
        const Answer expected = oracle::brute_force_solve(inst.graph, spec, v);
        for (JoinStrategy j : strategies_for(spec)) {
          const Answer got = solve(inst.graph, inst.td, spec, v, {j, false}).answer;
          ++checks;
          if (!(got == expected)) {
            f.add(spec.name() + "/" + std::string(to_string(v)) + "/" + std::string(to_string(j)) + " on " + inst.name +
                  ": " + got.to_string() + " != " + expected.to_string());
          }
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = f.count == 0 && secs < kOracleSeconds;
  o.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(checks) + " solves, " +
             std::to_string(f.count) + " mismatches, " + fmt(secs, 1) + " s (limit " + fmt(kOracleSeconds, 0) + " s)";
  if (f.count) o.detail += "; " + f.first.str();
  return o;
}

Outcome criterion_joins() {
  const auto t0 = std::chrono::steady_clock::now();
  constexpr std::int64_t max_size = 3;
  std::mt19937_64 rng(kSeed + 2);
  Failures f;
  std::size_t joins = 0;
  for (const auto& spec : testing::all_presets()) {
    for (std::size_t k = 1; k <= 6; ++k) {
      const PrimeField field = choose_prime(transform_orders(spec, 2 * max_size, k), std::uint64_t{1} << 61);
      const std::size_t entries = ipow(spec.num_labels(), k);
      for (Variant v : all_variants()) {
        testing::with_policy(v, field, [&](const auto& policy) {
          FastJoinOptions opts;
          opts.field = &field;
          opts.size_bound = 2 * max_size;
          for (int trial = 0; trial < kJoinTrials; ++trial) {
            auto cells = testing::random_cells(entries, v, max_size, BigInt(field.modulus()), rng);
            const auto ref = oracle::naive_table_join_oracle(k, spec, cells.left, cells.right, v);
            const auto l = testing::to_table(cells.left, k, policy, field);
            const auto r = testing::to_table(cells.right, k, policy, field);
            const bool naive_ok = testing::matches_oracle(naive_join(l, r, spec, policy), ref, policy, field);
            const bool fast_ok =
                testing::matches_oracle(fast_join_general(l, r, spec, policy, opts), ref, policy, field);
            ++joins;
            if (!naive_ok || !fast_ok) {
              f.add(spec.name() + "/" + std::string(to_string(v)) + " k=" + std::to_string(k) +
                    (naive_ok ? " fast_general" : " naive"));
            }
          }
          return 0;
        });
      }
    }
  }
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = f.count == 0 && secs < kJoinSeconds;
  o.detail = std::to_string(joins) + " table pairs, " + std::to_string(f.count) + " mismatches, " + fmt(secs, 1) +
             " s (limit " + fmt(kJoinSeconds, 0) + " s)";
  if (f.count) o.detail += "; " + f.first.str();
  return o;
}

// ---- criterion 3 ----

Tensor random_tensor(const std::vector<Dim>& dims, const PrimeField& F, std::mt19937_64& rng) {
  std::vector<Fp> data(shape_volume(dims));
  for (auto& x : data) x = F.reduce(rng());
  return Tensor(dims, std::move(data), F);
}

/// Direct sum over index pairs. Cyclic dims wrap, linear dims drop
/// overflow; the first order_dims axes combine by the order's join instead.
Tensor direct_product(const Tensor& a, const Tensor& b, const CoordOrder* order, std::size_t order_dims) {
  const PrimeField& F = a.field();
  std::vector<Fp> out(a.size(), 0);
  std::vector<std::size_t> z(a.rank());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto x = a.unflatten(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto y = b.unflatten(j);
      bool ok = true;
      for (std::size_t d = 0; d < a.rank() && ok; ++d) {
        if (d < order_dims) {
          auto m = order->join(x[d], y[d]);
          ok = m.has_value();
          z[d] = ok ? *m : 0;
        } else if (a.dims()[d].kind == DimKind::cyclic) {
          z[d] = (x[d] + y[d]) % a.dims()[d].size;
        } else {
          z[d] = x[d] + y[d];
          ok = z[d] < a.dims()[d].size;
        }
      }
      if (ok) {
        const std::size_t at = a.flat_index(z);
        out[at] = F.add(out[at], F.mul(a[i], b[j]));
      }
    }
  }
  return Tensor(a.dims(), std::move(out), F);
}

std::vector<Dim> random_dims(std::mt19937_64& rng, std::size_t max_rank, std::size_t max_size, bool allow_linear) {
  std::vector<Dim> dims(1 + rng() % max_rank);
  for (auto& d : dims) {
    d.size = 1 + rng() % max_size;
    d.kind = allow_linear && rng() % 2 ? DimKind::linear : DimKind::cyclic;
  }
  return dims;
}

Outcome criterion_transforms() {
  const auto t0 = std::chrono::steady_clock::now();
  // Roots for every cyclic size up to 5, radix-2 lengths up to 64 and the
  // padded linear sizes.
  const PrimeField F = choose_prime(std::vector<std::uint64_t>{3, 4, 5, 64}, std::uint64_t{1} << 61);
  std::mt19937_64 rng(kSeed + 3);
  Failures f;
  std::size_t cases = 0;

  for (int i = 0; i < kTransformCases; ++i, ++cases) {
    const std::vector<std::uint64_t> lengths{1, 2, 3, 4, 5, 8, 16, 32, 64};
    const std::uint64_t r = lengths[rng() % lengths.size()];
    std::vector<Fp> a(r);
    for (auto& x : a) x = F.reduce(rng());
    const Fp w = r == 1 ? 1 : F.root(r);
    if (dft(dft(a, F, w, Direction::forward), F, w, Direction::inverse) != a) f.add("dft round trip r=" + std::to_string(r));
  }
  for (int i = 0; i < kTransformCases; ++i, ++cases) {
    Tensor t = random_tensor(random_dims(rng, 4, 5, false), F, rng);
    if (!(multidim_dft(multidim_dft(t, Direction::forward), Direction::inverse) == t)) f.add("multidim round trip");
  }
  for (int i = 0; i < kTransformCases; ++i, ++cases) {
    auto dims = random_dims(rng, 2, 4, false);
    Tensor a = random_tensor(dims, F, rng), b = random_tensor(dims, F, rng);
    if (!(cyclic_convolution(a, b) == direct_product(a, b, nullptr, 0))) f.add("cyclic convolution");
  }
  for (int i = 0; i < kTransformCases; ++i, ++cases) {
    auto dims = random_dims(rng, 3, 4, true);
    Tensor a = random_tensor(dims, F, rng), b = random_tensor(dims, F, rng);
    if (!(combined_convolution(a, b) == direct_product(a, b, nullptr, 0))) f.add("combined convolution");
  }
  const std::vector<CoordOrder> orders{CoordOrder::chain(2),
                                       CoordOrder::chain(4),
                                       CoordOrder::tds_pairs(),
                                       CoordOrder::sigma_rho_flat(3, true, 2, false),
                                       CoordOrder::sigma_rho_flat(1, true, 3, true),
                                       CoordOrder::sigma_rho_flat(2, false, 2, false)};
  for (int i = 0; i < kTransformCases; ++i, ++cases) {
    const CoordOrder& order = orders[i % orders.size()];
    const std::size_t k = 1 + rng() % 4;
    Tensor t = random_tensor(std::vector<Dim>(k, Dim{order.size(), DimKind::linear}), F, rng);
    const Tensor z = zeta_product_order(t, order, Transform::zeta);
    if (!(zeta_product_order(z, order, Transform::mobius) == t)) f.add("zeta/mobius inversion");
    if (order.kind() == OrderKind::chain && !(zeta_chain(t, Transform::zeta) == z)) f.add("zeta_chain");
  }
  for (int i = 0; i < kTransformCases; ++i, ++cases) {
    const CoordOrder& order = orders[i % orders.size()];
    const std::size_t k = 1 + rng() % 2, l = rng() % 2;
    std::vector<Dim> dims(k, Dim{order.size(), DimKind::linear});
    for (std::size_t j = 0; j < l; ++j) dims.push_back({1 + rng() % 4, DimKind::linear});
    Tensor a = random_tensor(dims, F, rng), b = random_tensor(dims, F, rng);
    if (!(cover_convolution(a, b, order, k) == direct_product(a, b, &order, k))) f.add("cover convolution");
  }
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = f.count == 0 && secs < kTransformSeconds;
  o.detail = std::to_string(cases) + " cases, " + std::to_string(f.count) + " failures, " + fmt(secs, 1) +
             " s (limit " + fmt(kTransformSeconds, 0) + " s)";
  if (f.count) o.detail += "; " + f.first.str();
  return o;
}

// ---- criterion 4 ----

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> distinct_prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t power_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<u128>(r) * b % m);
    b = static_cast<std::uint64_t>(static_cast<u128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

Outcome criterion_primes() {
  std::mt19937_64 rng(kSeed + 4);
  Failures f;
  for (int i = 0; i < kPrimeCases; ++i) {
    std::vector<std::uint64_t> orders(1 + rng() % 3);
    for (auto& r : orders) r = 1 + rng() % 64;
    const std::uint64_t min_value = 1 + rng() % 1000000000;
    const PrimeField field = choose_prime(orders, min_value);
    const std::uint64_t p = field.modulus();
    const std::uint64_t R = std::accumulate(orders.begin(), orders.end(), std::uint64_t{1},
                                            [](std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); });
    const std::string tag = "p=" + std::to_string(p) + " R=" + std::to_string(R) + " M=" + std::to_string(min_value);
    if (!trial_division_prime(p)) f.add(tag + " not prime");
    if (p <= min_value) f.add(tag + " not above M");
    if ((p - 1) % R != 0) f.add(tag + " not 1 mod R");
    for (std::uint64_t q = (min_value / R + 1) * R + 1; q < p; q += R) {
      if (q > min_value && trial_division_prime(q)) {
        f.add(tag + " skipped " + std::to_string(q));
        break;
      }
    }
    for (std::uint64_t r : orders) {
      const std::uint64_t w = field.root(r);
      bool ok = power_mod(w, r, p) == 1;
      for (std::uint64_t q : distinct_prime_divisors(r)) ok = ok && power_mod(w, r / q, p) != 1;
      ok = ok && static_cast<u128>(w) * field.inverse_root(r) % p == 1;
      if (!ok) f.add(tag + " bad root of order " + std::to_string(r));
    }
  }
  Outcome o;
  o.pass = f.count == 0;
  o.detail = std::to_string(kPrimeCases) + " (orders, min_value) pairs, " + std::to_string(f.count) + " failures";
  if (f.count) o.detail += "; " + f.first.str();
  return o;
}

// ---- criterion 5 ----

Outcome criterion_scaling() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto ds = SigmaRhoSpec::preset("dominating_set");
  const PrimeField field = choose_prime(transform_orders(ds, 1, 12), std::uint64_t{1} << 61);
  std::vector<double> fast, naive;
  for (std::size_t k = 8; k <= 12; ++k) {
    fast.push_back(static_cast<double>(count_join_mults(ds, k, JoinStrategy::fast_general, field, kSeed + k)));
    naive.push_back(static_cast<double>(count_join_mults(ds, k, JoinStrategy::naive, field, kSeed + k)));
  }
  bool fast_ok = true, naive_ok = true, ratio_ok = true;
  std::ostringstream fg, ng, rs;
  for (std::size_t i = 0; i + 1 < fast.size(); ++i) {
    const double gf = fast[i + 1] / fast[i], gn = naive[i + 1] / naive[i];
    fast_ok = fast_ok && gf <= kFastGrowthMax;
    naive_ok = naive_ok && gn >= kNaiveGrowthMin;
    ratio_ok = ratio_ok && fast[i + 1] / naive[i + 1] < fast[i] / naive[i];
    fg << (i ? "," : "") << fmt(gf);
    ng << (i ? "," : "") << fmt(gn);
  }
  for (std::size_t i = 0; i < fast.size(); ++i) rs << (i ? "," : "") << fmt(fast[i] / naive[i], 4);
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = fast_ok && naive_ok && ratio_ok && secs < kScalingSeconds;
  o.detail = "fast growth [" + fg.str() + "] " + (fast_ok ? "<= " : "NOT <= ") + fmt(kFastGrowthMax, 1) +
             "; naive growth [" + ng.str() + "] " + (naive_ok ? ">= " : "NOT >= ") + fmt(kNaiveGrowthMin, 1) +
             "; fast/naive [" + rs.str() + "] " + (ratio_ok ? "strictly decreasing" : "NOT strictly decreasing") +
             "; " + fmt(secs, 1) + " s";
  return o;
}

// ---- criterion 6 ----

Graph cycle(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Outcome criterion_named() {
  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  struct Named {
    std::string label;
    Graph g;
    const char* problem;
    Variant variant;
    std::string expected;
  };
  const std::vector<Named> cases{
      {"gamma(C5)", cycle(5), "dominating_set", Variant::minimise, "2"},
      {"#DS(P3)", p3, "dominating_set", Variant::count, "5"},
      {"perfect code on C6", cycle(6), "perfect_code", Variant::existence, "true"},
      {"perfect code on C7", cycle(7), "perfect_code", Variant::existence, "false"},
      {"gamma_t(C4)", cycle(4), "total_dominating_set", Variant::minimise, "2"},
      {"gamma(Petersen)", petersen(), "dominating_set", Variant::minimise, "3"},
  };
  Failures f;
  std::ostringstream got;
  for (const auto& c : cases) {
    const auto spec = SigmaRhoSpec::preset(c.problem);
    const std::string brute = oracle::brute_force_solve(c.g, spec, c.variant).to_string();
    if (brute != c.expected) f.add(c.label + " brute force " + brute);
    for (JoinStrategy j : strategies_for(spec)) {
      const std::string a = solve(c.g, min_fill_heuristic(c.g), spec, c.variant, {j, false}).answer.to_string();
      if (a != c.expected) f.add(c.label + " " + std::string(to_string(j)) + " " + a);
    }
    got << (got.tellp() > 0 ? ", " : "") << c.label << " = " << c.expected;
  }
  Outcome o;
  o.pass = f.count == 0;
  o.detail = got.str();
  if (f.count) o.detail += "; " + f.first.str();
  return o;
}

// ---- criterion 7 ----

std::int32_t size_of(std::int32_t v) { return v; }
std::int32_t size_of(const SizedCount& v) { return v.size; }

/// Runs the DP with a join that evaluates windowed and unwindowed fast joins
/// on the real child tables. Inside the window [lo, lo + k], lo the sum of the
/// input minima, the two must be identical; above it the windowed join keeps
/// nothing. Entries of the second kind are counted in `beyond`.
template <class P>
void windowed_dp(const Instance& inst, const SigmaRhoSpec& spec, const P& policy, const PrimeField& field,
                 JoinStrategy strategy, std::size_t& joins, Failures& f, std::size_t& beyond) {
  const NiceTreeDecomposition nice = make_nice(inst.graph, inst.td);
  FastJoinOptions plain;
  plain.field = &field;
  plain.size_bound = static_cast<std::int32_t>(inst.graph.n());
  FastJoinOptions windowed = plain;
  windowed.use_replacement = true;
  auto fast = [&](const MemoTable<P>& l, const MemoTable<P>& r, const FastJoinOptions& o) {
    return strategy == JoinStrategy::fast_dominating ? fast_join_dominating(l, r, spec, policy, o)
                                                     : fast_join_general(l, r, spec, policy, o);
  };
  auto table_min = [](const MemoTable<P>& t) {
    std::int32_t m = kNoSize;
    for (const auto& v : t.values) {
      if (size_of(v) != kNoSize && (m == kNoSize || size_of(v) < m)) m = size_of(v);
    }
    return m;
  };
  JoinFn<P> join = [&](const MemoTable<P>& l, const MemoTable<P>& r) {
    MemoTable<P> a = fast(l, r, plain);
    MemoTable<P> b = fast(l, r, windowed);
    ++joins;
    const std::int32_t ml = table_min(l), mr = table_min(r);
    const std::int32_t lo = ml == kNoSize || mr == kNoSize ? 0 : ml + mr;
    const std::int32_t hi = lo + static_cast<std::int32_t>(l.bag.size());
    bool ok = true;
    for (std::size_t c = 0; c < a.values.size(); ++c) {
      const std::int32_t sa = size_of(a.values[c]);
      if (sa != kNoSize && sa > hi) {
        ++beyond;
        ok = ok && size_of(b.values[c]) == kNoSize;
      } else {
        ok = ok && a.values[c] == b.values[c];
      }
    }
    if (!ok) {
      f.add(spec.name() + "/" + std::string(to_string(strategy)) + " on " + inst.name + " bag size " +
            std::to_string(l.bag.size()));
    }
    return a;
  };
  run_dp(nice, spec, policy, join);
}

Outcome criterion_replacement() {
  const auto t0 = std::chrono::steady_clock::now();
  Failures f;
  std::size_t joins = 0, solves = 0, beyond = 0, wrong = 0;
  for (const char* name : {"dominating_set", "total_dominating_set"}) {
    const auto spec = SigmaRhoSpec::preset(name);
    for (const auto& inst : corpus()) {
      const std::size_t max_bag = static_cast<std::size_t>(inst.td.width() + 1);
      const auto fields = join_fields(spec, inst.graph.n(), max_bag, 1);
      const PrimeField& field = fields->front();
      for (JoinStrategy j : strategies_for(spec)) {
        if (j == JoinStrategy::naive) continue;
        windowed_dp(inst, spec, OptimisationPolicy{Objective::minimise}, field, j, joins, f, beyond);
        windowed_dp(inst, spec, CountOptimisationPolicy{Objective::minimise, &field}, field, j, joins, f,
                    beyond);
        for (Variant v : {Variant::minimise, Variant::count_minimise}) {
          const Answer a = solve(inst.graph, inst.td, spec, v, {j, true}).answer;
          ++solves;
          if (!(a == oracle::brute_force_solve(inst.graph, spec, v))) {
            ++wrong;
            f.add(std::string(name) + " windowed solve on " + inst.name);
          }
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = f.count == 0;
  o.detail = std::to_string(joins) + " DP join nodes compared (" + std::to_string(beyond) +
             " entries above the window, all dropped), " + std::to_string(solves) +
             " windowed solves vs brute force, " + std::to_string(f.count - wrong) + " join mismatches, " +
             std::to_string(wrong) + " wrong answers, " + fmt(secs, 1) + " s";
  if (f.count) o.detail += "; " + f.first.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"oracle equivalence", criterion_oracle},
      {"join equivalence", criterion_joins},
      {"transform suite", criterion_transforms},
      {"prime machinery", criterion_primes},
      {"scaling", criterion_scaling},
      {"named values", criterion_named},
      {"replacement window", criterion_replacement},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.contains(id)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
