#include "sigrho/joins.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "sigrho/posets.hpp"
#include "sigrho/transforms.hpp"

namespace sigrho {

namespace {

struct Triple {
  std::size_t a, b, c;
};

std::vector<Triple> label_triples(const SigmaRhoSpec& spec) {
  std::vector<Triple> t;
  for (std::size_t a = 0; a < spec.num_labels(); ++a) {
    for (std::size_t b = 0; b < spec.num_labels(); ++b) {
      if (auto c = spec.add(a, b)) t.push_back({a, b, *c});
    }
  }
  return t;
}

template <class P>
struct NaiveRunner {
  const std::vector<Triple>& triples;
  const std::vector<typename P::Value>& l;
  const std::vector<typename P::Value>& r;
  std::vector<typename P::Value>& out;
  const P& policy;
  std::size_t k;
  std::size_t s;

  void run(std::size_t pos, std::size_t il, std::size_t ir, std::size_t io) {
    if (pos == k) {
      out[io] = policy.merge(out[io], policy.combine(l[il], r[ir]));
      return;
    }
    for (const Triple& t : triples) run(pos + 1, il * s + t.a, ir * s + t.b, io * s + t.c);
  }
};

void check_bags(const std::vector<Vertex>& a, const std::vector<Vertex>& b, std::size_t na, std::size_t nb,
                std::size_t s) {
  if (a != b) throw std::invalid_argument("join children have different bags");
  if (na != ipow(s, a.size()) || nb != na) throw std::invalid_argument("table size does not match bag");
}

/// Highest kappa slot holding a nonzero entry in a [colouring][kappa] table.
std::size_t top_kappa(const std::vector<Fp>& t, std::size_t K) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] != 0) top = std::max(top, i % K);
  }
  return top;
}

/// Kappa axis for a join whose occupied sizes end at top_l and top_r. When no
/// sum can reach a power-of-two length below the padded window, a cyclic axis
/// of that length gives the same result without wrap-around.
Dim kappa_axis(std::size_t K, std::size_t top_l, std::size_t top_r) {
  std::size_t len = 1;
  while (len < top_l + top_r + 1) len <<= 1;
  if (len < padded_linear_size(K)) return {len, DimKind::cyclic};
  return {K, DimKind::linear};
}

/// Length of the cyclic sum axis for ns sigma and nr rho label coordinates of
/// moduli ms and mr. A wrap-around in those coordinates shifts the sum by
/// a*ms + b*mr with 0 < a + b, so any power of two dividing none of these keeps
/// the sum filter exact. The padded linear length always qualifies.
std::size_t sum_axis_length(std::size_t ns, std::size_t ms, std::size_t nr, std::size_t mr, std::size_t I) {
  const std::size_t limit = padded_linear_size(I);
  for (std::size_t len = 1; len < limit; len <<= 1) {
    bool ok = true;
    for (std::size_t a = 0; a <= ns && ok; ++a) {
      for (std::size_t b = 0; b <= nr && ok; ++b) {
        if (a + b > 0 && (a * ms + b * mr) % len == 0) ok = false;
      }
    }
    if (ok) return len;
  }
  return limit;
}

// ---------------------------------------------------------------------------
// Field-level joins. Tables are laid out [colouring][kappa] with K sizes per
// colouring; the result is sum over c_l (+) c_r = c, kappa_l + kappa_r = kappa
// of L * R, with kappa >= K dropped.

std::vector<Fp> general_field_join(const SigmaRhoSpec& spec, std::size_t k, std::size_t K, std::vector<Fp> zl,
                                   std::vector<Fp> zr, const PrimeField& F, bool poison) {
  const std::size_t s = spec.num_labels();
  const SideLayout& ls = spec.layout(Side::sigma);
  const SideLayout& lr = spec.layout(Side::rho);
  const CoordOrder order = CoordOrder::sigma_rho_flat(ls.num_labels, ls.has_top, lr.num_labels, lr.has_top);
  const Dim kap_dim = kappa_axis(K, top_kappa(zl, K), top_kappa(zr, K));
  const std::size_t KT = kap_dim.size;  // kappa slots in the convolution
  const std::size_t KC = std::min(K, KT);  // slots copied in and out
  std::vector<std::size_t> shape(k, s);
  shape.push_back(K);
  zeta_product_inplace(zl, shape, k, order, Transform::zeta, F);
  zeta_product_inplace(zr, shape, k, order, Transform::zeta, F);

  // Block b of a vertex: 0 sigma-top, 1 sigma-L, 2 rho-top, 3 rho-L.
  std::vector<int> blocks;
  if (ls.has_top) blocks.push_back(0);
  if (ls.modulus >= 1) blocks.push_back(1);
  if (lr.has_top) blocks.push_back(2);
  if (lr.modulus >= 1) blocks.push_back(3);

  std::vector<std::size_t> weight(k);
  for (std::size_t i = 0; i < k; ++i) weight[i] = ipow(s, k - 1 - i);

  std::vector<Fp> out(zl.size(), 0);
  std::map<std::pair<std::size_t, std::size_t>, ConvolutionPlan> plans;
  std::vector<Fp> f, g, h;
  std::vector<std::size_t> assign(k, 0);

  struct Coord {
    std::size_t weight, modulus;
  };
  std::vector<Coord> cyc;  // L coordinates with modulus > 1, sigma ones first
  std::vector<std::size_t> digit(k);

  const std::size_t combos = ipow(blocks.size(), k);
  for (std::size_t pidx = 0; pidx < combos; ++pidx) {
    // Lexicographic decoding: vertex 0 is the most significant position.
    std::size_t rest = pidx;
    for (std::size_t i = k; i-- > 0;) {
      assign[i] = static_cast<std::size_t>(blocks[rest % blocks.size()]);
      rest /= blocks.size();
    }
    std::size_t base = 0, n_sl = 0, n_rl = 0;
    cyc.clear();
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t b = assign[i];
        if (pass == 0) {
          if (b == 0) base += ls.top_digit * weight[i];
          if (b == 1) base += ls.first_digit * weight[i], ++n_sl;
          if (b == 2) base += lr.top_digit * weight[i];
          if (b == 3) base += lr.first_digit * weight[i], ++n_rl;
        }
        if (pass == 0 && b == 1 && ls.modulus > 1) cyc.push_back({weight[i], ls.modulus});
        if (pass == 1 && b == 3 && lr.modulus > 1) cyc.push_back({weight[i], lr.modulus});
      }
    }
    const std::size_t I = 1 + n_sl * (ls.modulus - 1) + n_rl * (lr.modulus - 1);
    const std::size_t IT = sum_axis_length(ls.modulus > 1 ? n_sl : 0, ls.modulus, lr.modulus > 1 ? n_rl : 0,
                                           lr.modulus, I);

    auto key = std::make_pair(n_sl, n_rl);
    auto it = plans.find(key);
    if (it == plans.end()) {
      std::vector<Dim> dims;
      for (const Coord& c : cyc) dims.push_back({c.modulus, DimKind::cyclic});
      if (KT > 1) dims.push_back(kap_dim);
      if (IT > 1) dims.push_back({IT, DimKind::cyclic});
      it = plans.emplace(key, ConvolutionPlan(std::move(dims), F)).first;
    }
    const ConvolutionPlan& plan = it->second;
    const std::size_t X = plan.volume() / (KT * IT);

    f.assign(plan.volume(), 0);
    g.assign(plan.volume(), 0);
    h.assign(plan.volume(), 0);

    // Walk the cyclic coordinates as an odometer, tracking colouring and sum.
    auto walk = [&](auto&& visit) {
      std::fill(digit.begin(), digit.begin() + static_cast<std::ptrdiff_t>(cyc.size()), 0);
      std::size_t c = base, sum = 0;
      for (std::size_t x = 0; x < X; ++x) {
        visit(x, c, sum);
        for (std::size_t d = cyc.size(); d-- > 0;) {
          if (++digit[d] < cyc[d].modulus) {
            c += cyc[d].weight;
            ++sum;
            break;
          }
          c -= (cyc[d].modulus - 1) * cyc[d].weight;
          sum -= cyc[d].modulus - 1;
          digit[d] = 0;
        }
      }
    };

    walk([&](std::size_t x, std::size_t c, std::size_t sum) {
      for (std::size_t kap = 0; kap < KC; ++kap) {
        f[(x * KT + kap) * IT + sum % IT] = zl[c * K + kap];
        g[(x * KT + kap) * IT + sum % IT] = zr[c * K + kap];
      }
    });
    plan.convolve(f, g, h);
    if (poison) {
      walk([&](std::size_t x, std::size_t, std::size_t sum) {
        for (std::size_t kap = 0; kap < KT; ++kap) {
          for (std::size_t i = 0; i < IT; ++i) {
            if (i != sum % IT) h[(x * KT + kap) * IT + i] = (x * 7919 + kap * 104729 + i * 31 + 1) % F.modulus();
          }
        }
      });
    }
    walk([&](std::size_t x, std::size_t c, std::size_t sum) {
      for (std::size_t kap = 0; kap < KC; ++kap) out[c * K + kap] = h[(x * KT + kap) * IT + sum % IT];
    });
  }

  zeta_product_inplace(out, shape, k, order, Transform::mobius, F);
  return out;
}

std::vector<Fp> dominating_field_join(const SigmaRhoSpec& spec, std::size_t k, std::size_t K,
                                      const std::vector<Fp>& L, const std::vector<Fp>& R, const PrimeField& F) {
  const std::size_t s = 3;
  const std::size_t sig = spec.zero_digit(Side::sigma);
  const std::size_t rho0 = spec.zero_digit(Side::rho);
  std::vector<std::size_t> weight(k);
  for (std::size_t i = 0; i < k; ++i) weight[i] = ipow(s, k - 1 - i);
  std::vector<Fp> out(L.size(), 0);
  std::vector<Fp> f, g, h;
  std::vector<std::size_t> rho_pos;
  const CoordOrder chain = CoordOrder::chain(2);
  const Dim kap_dim = kappa_axis(K, top_kappa(L, K), top_kappa(R, K));
  const std::size_t KT = kap_dim.size;
  const std::size_t KC = std::min(K, KT);
  std::vector<ConvolutionPlan> plans;
  if (KT > 1) plans.emplace_back(std::vector<Dim>{kap_dim}, F);

  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    // Bit i of mask set: vertex i is fixed to the sigma label.
    std::size_t base = 0;
    rho_pos.clear();
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> (k - 1 - i) & 1) {
        base += sig * weight[i];
      } else {
        base += rho0 * weight[i];
        rho_pos.push_back(weight[i]);
      }
    }
    const std::size_t r = rho_pos.size();
    const std::size_t Y = std::size_t{1} << r;
    f.assign(Y * KT, 0);
    g.assign(Y * KT, 0);
    h.assign(Y * KT, 0);
    auto colour = [&](std::size_t y) {
      std::size_t c = base;
      for (std::size_t j = 0; j < r; ++j) {
        if (y >> (r - 1 - j) & 1) c += rho_pos[j];
      }
      return c;
    };
    for (std::size_t y = 0; y < Y; ++y) {
      const std::size_t c = colour(y);
      for (std::size_t kap = 0; kap < KC; ++kap) {
        f[y * KT + kap] = L[c * K + kap];
        g[y * KT + kap] = R[c * K + kap];
      }
    }
    std::vector<std::size_t> shape(r, 2);
    shape.push_back(KT);
    zeta_product_inplace(f, shape, r, chain, Transform::zeta, F);
    zeta_product_inplace(g, shape, r, chain, Transform::zeta, F);
    for (std::size_t y = 0; y < Y; ++y) {
      if (KT > 1) {
        plans[0].convolve(std::span<const Fp>(f).subspan(y * KT, KT), std::span<const Fp>(g).subspan(y * KT, KT),
                          std::span<Fp>(h).subspan(y * KT, KT));
      } else {
        h[y] = F.mul(f[y], g[y]);
      }
    }
    zeta_product_inplace(h, shape, r, chain, Transform::mobius, F);
    for (std::size_t y = 0; y < Y; ++y) {
      const std::size_t c = colour(y);
      for (std::size_t kap = 0; kap < KC; ++kap) out[c * K + kap] = h[y * KT + kap];
    }
  }
  return out;
}

enum class Engine { general, dominating };

std::vector<Fp> field_join(Engine e, const SigmaRhoSpec& spec, std::size_t k, std::size_t K, std::vector<Fp> L,
                           std::vector<Fp> R, const PrimeField& F, const FastJoinOptions& opts) {
  if (e == Engine::dominating) return dominating_field_join(spec, k, K, L, R, F);
  return general_field_join(spec, k, K, std::move(L), std::move(R), F, opts.poison_unfiltered);
}

/// Indicator tables can only produce pair counts up to s^(2k); they must stay
/// below p for a nonzero residue to be the same as a nonzero count.
void check_indicator_bound(const SigmaRhoSpec& spec, std::size_t k, std::size_t K, const PrimeField& F) {
  long double pairs = 1;
  for (std::size_t i = 0; i < 2 * k; ++i) pairs *= static_cast<long double>(spec.num_labels());
  pairs *= static_cast<long double>(K);
  if (pairs >= static_cast<long double>(F.modulus())) {
    throw std::domain_error("bag too wide for an exact indicator join in this field");
  }
}

const PrimeField& require_field(const FastJoinOptions& opts) {
  if (opts.field == nullptr) throw std::invalid_argument("fast join needs a field");
  return *opts.field;
}

/// Size window for optimisation tables: offset (table minimum under the
/// replacement window, else 0) and number of kappa slots.
struct SizeWindow {
  std::int32_t offset = 0;
  std::size_t K = 1;
};

template <class Get>
std::int32_t table_min(std::size_t n, Get get) {
  std::int32_t m = kNoSize;
  for (std::size_t i = 0; i < n; ++i) {
    std::int32_t v = get(i);
    if (v != kNoSize && (m == kNoSize || v < m)) m = v;
  }
  return m;
}

template <class Get>
std::vector<Fp> expand_sizes(std::size_t n, std::size_t K, std::int32_t offset, Get get) {
  // get(i) -> (size, weight); weight 0 leaves the slot empty.
  std::vector<Fp> out(n * K, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto [size, w] = get(i);
    if (size == kNoSize) continue;
    const std::int64_t rel = static_cast<std::int64_t>(size) - offset;
    if (rel < 0) throw std::logic_error("size below window offset");
    if (static_cast<std::size_t>(rel) >= K) continue;
    out[i * K + static_cast<std::size_t>(rel)] = w;
  }
  return out;
}

template <class GetL, class GetR>
std::pair<SizeWindow, SizeWindow> size_windows(std::size_t n, std::size_t k, bool window, const FastJoinOptions& opts,
                                               GetL gl, GetR gr) {
  SizeWindow wl, wr;
  if (window) {
    wl.offset = table_min(n, gl);
    wr.offset = table_min(n, gr);
    wl.K = wr.K = k + 1;
  } else {
    if (opts.size_bound < 0) throw std::invalid_argument("negative size bound");
    wl.K = wr.K = static_cast<std::size_t>(opts.size_bound) + 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (gl(i) > opts.size_bound || gr(i) > opts.size_bound) throw std::invalid_argument("table size exceeds bound");
    }
  }
  return {wl, wr};
}

template <class P>
MemoTable<P> fast_join_impl(const MemoTable<P>& left, const MemoTable<P>& right, const SigmaRhoSpec& spec,
                            const P& policy, const FastJoinOptions& opts, Engine engine);

template <>
MemoTable<ExistencePolicy> fast_join_impl(const MemoTable<ExistencePolicy>& left,
                                          const MemoTable<ExistencePolicy>& right, const SigmaRhoSpec& spec,
                                          const ExistencePolicy&, const FastJoinOptions& opts, Engine engine) {
  const PrimeField& F = require_field(opts);
  const std::size_t k = left.bag.size();
  check_indicator_bound(spec, k, 1, F);
  std::vector<Fp> L(left.values.begin(), left.values.end());
  std::vector<Fp> R(right.values.begin(), right.values.end());
  auto H = field_join(engine, spec, k, 1, std::move(L), std::move(R), F, opts);
  MemoTable<ExistencePolicy> out{left.bag, std::vector<std::uint8_t>(H.size())};
  for (std::size_t i = 0; i < H.size(); ++i) out.values[i] = H[i] != 0;
  return out;
}

/// Best kappa per colouring from an indicator join; kNoSize where empty.
std::vector<std::int32_t> best_sizes(const std::vector<Fp>& H, std::size_t K, Objective obj, std::int32_t offset) {
  std::vector<std::int32_t> out(H.size() / K, kNoSize);
  for (std::size_t c = 0; c < out.size(); ++c) {
    if (obj == Objective::minimise) {
      for (std::size_t kap = 0; kap < K; ++kap) {
        if (H[c * K + kap] != 0) {
          out[c] = static_cast<std::int32_t>(kap) + offset;
          break;
        }
      }
    } else {
      for (std::size_t kap = K; kap-- > 0;) {
        if (H[c * K + kap] != 0) {
          out[c] = static_cast<std::int32_t>(kap) + offset;
          break;
        }
      }
    }
  }
  return out;
}

template <>
MemoTable<OptimisationPolicy> fast_join_impl(const MemoTable<OptimisationPolicy>& left,
                                             const MemoTable<OptimisationPolicy>& right, const SigmaRhoSpec& spec,
                                             const OptimisationPolicy& policy, const FastJoinOptions& opts,
                                             Engine engine) {
  const PrimeField& F = require_field(opts);
  const std::size_t k = left.bag.size();
  const std::size_t n = left.values.size();
  MemoTable<OptimisationPolicy> out{left.bag, std::vector<std::int32_t>(n, kNoSize)};
  auto gl = [&](std::size_t i) { return left.values[i]; };
  auto gr = [&](std::size_t i) { return right.values[i]; };
  if (table_min(n, gl) == kNoSize || table_min(n, gr) == kNoSize) return out;
  const bool window = opts.use_replacement && policy.objective == Objective::minimise;
  auto [wl, wr] = size_windows(n, k, window, opts, gl, gr);
  const std::size_t K = wl.K;
  check_indicator_bound(spec, k, K, F);
  auto L = expand_sizes(n, K, wl.offset, [&](std::size_t i) { return std::pair{left.values[i], Fp{1}}; });
  auto R = expand_sizes(n, K, wr.offset, [&](std::size_t i) { return std::pair{right.values[i], Fp{1}}; });
  auto H = field_join(engine, spec, k, K, std::move(L), std::move(R), F, opts);
  out.values = best_sizes(H, K, policy.objective, wl.offset + wr.offset);
  return out;
}

template <>
MemoTable<CountPolicy> fast_join_impl(const MemoTable<CountPolicy>& left, const MemoTable<CountPolicy>& right,
                                      const SigmaRhoSpec& spec, const CountPolicy& policy,
                                      const FastJoinOptions& opts, Engine engine) {
  const PrimeField& F = *policy.field;
  auto H = field_join(engine, spec, left.bag.size(), 1, left.values, right.values, F, opts);
  return MemoTable<CountPolicy>{left.bag, std::move(H)};
}

template <>
MemoTable<CountOptimisationPolicy> fast_join_impl(const MemoTable<CountOptimisationPolicy>& left,
                                                  const MemoTable<CountOptimisationPolicy>& right,
                                                  const SigmaRhoSpec& spec, const CountOptimisationPolicy& policy,
                                                  const FastJoinOptions& opts, Engine engine) {
  const PrimeField& F = *policy.field;
  const std::size_t k = left.bag.size();
  const std::size_t n = left.values.size();
  MemoTable<CountOptimisationPolicy> out{left.bag, std::vector<SizedCount>(n)};
  auto gl = [&](std::size_t i) { return left.values[i].size; };
  auto gr = [&](std::size_t i) { return right.values[i].size; };
  if (table_min(n, gl) == kNoSize || table_min(n, gr) == kNoSize) return out;
  const bool window = opts.use_replacement && policy.objective == Objective::minimise;
  auto [wl, wr] = size_windows(n, k, window, opts, gl, gr);
  const std::size_t K = wl.K;
  check_indicator_bound(spec, k, K, F);
  auto Li = expand_sizes(n, K, wl.offset, [&](std::size_t i) { return std::pair{left.values[i].size, Fp{1}}; });
  auto Ri = expand_sizes(n, K, wr.offset, [&](std::size_t i) { return std::pair{right.values[i].size, Fp{1}}; });
  auto Lc = expand_sizes(n, K, wl.offset, [&](std::size_t i) { return std::pair{left.values[i].size, left.values[i].count}; });
  auto Rc = expand_sizes(n, K, wr.offset, [&](std::size_t i) { return std::pair{right.values[i].size, right.values[i].count}; });
  auto Hi = field_join(engine, spec, k, K, std::move(Li), std::move(Ri), F, opts);
  auto Hc = field_join(engine, spec, k, K, std::move(Lc), std::move(Rc), F, opts);
  const std::int32_t offset = wl.offset + wr.offset;
  auto best = best_sizes(Hi, K, policy.objective, offset);
  for (std::size_t c = 0; c < n; ++c) {
    if (best[c] == kNoSize) continue;
    out.values[c] = SizedCount{best[c], Hc[c * K + static_cast<std::size_t>(best[c] - offset)]};
  }
  return out;
}

}  // namespace

JoinStrategy parse_join_strategy(std::string_view text) {
  if (text == "naive") return JoinStrategy::naive;
  if (text == "fast_general" || text == "general") return JoinStrategy::fast_general;
  if (text == "fast_dominating" || text == "dominating") return JoinStrategy::fast_dominating;
  throw std::invalid_argument("unknown join strategy '" + std::string(text) + "'");
}

std::string_view to_string(JoinStrategy j) {
  switch (j) {
    case JoinStrategy::naive: return "naive";
    case JoinStrategy::fast_general: return "fast_general";
    case JoinStrategy::fast_dominating: return "fast_dominating";
  }
  return "unknown";
}

std::uint64_t count_join_mults(const SigmaRhoSpec& spec, std::size_t k, JoinStrategy strategy,
                               const PrimeField& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Fp> dist(1, field.modulus() - 1);
  const std::size_t n = ipow(spec.num_labels(), k);
  std::vector<Vertex> bag(k);
  for (std::size_t i = 0; i < k; ++i) bag[i] = static_cast<Vertex>(i);
  MemoTable<CountPolicy> l{bag, std::vector<Fp>(n)}, r{bag, std::vector<Fp>(n)};
  for (Fp& x : l.values) x = dist(rng);
  for (Fp& x : r.values) x = dist(rng);
  CountPolicy pol{&field};
  FastJoinOptions opts;
  opts.field = &field;
  const OpCounts before = op_counts();
  switch (strategy) {
    case JoinStrategy::naive: naive_join(l, r, spec, pol); break;
    case JoinStrategy::fast_general: fast_join_general(l, r, spec, pol, opts); break;
    case JoinStrategy::fast_dominating: fast_join_dominating(l, r, spec, pol, opts); break;
  }
  return op_counts().muls - before.muls;
}

bool is_dominating_shaped(const SigmaRhoSpec& spec) {
  const SideLayout& ls = spec.layout(Side::sigma);
  const SideLayout& lr = spec.layout(Side::rho);
  return ls.num_labels == 1 && ls.has_top && lr.has_top && lr.ell == 1;
}

std::size_t compatible_pairs(const SigmaRhoSpec& spec) { return label_triples(spec).size(); }

std::vector<std::uint64_t> transform_orders(const SigmaRhoSpec& spec, std::size_t n, std::size_t max_bag) {
  std::vector<std::uint64_t> orders;
  const std::size_t ms = spec.layout(Side::sigma).modulus;
  const std::size_t mr = spec.layout(Side::rho).modulus;
  const std::size_t mm = std::max<std::size_t>(std::max(ms, mr), 1);
  const std::size_t iota = 1 + max_bag * (mm - 1);
  for (std::size_t m : {ms, mr, padded_linear_size(n + 1), padded_linear_size(max_bag + 1), padded_linear_size(iota)}) {
    if (m > 1 && std::find(orders.begin(), orders.end(), m) == orders.end()) orders.push_back(m);
  }
  return orders;
}

template <class P>
MemoTable<P> naive_join(const MemoTable<P>& left, const MemoTable<P>& right, const SigmaRhoSpec& spec,
                        const P& policy) {
  const std::size_t s = spec.num_labels();
  check_bags(left.bag, right.bag, left.values.size(), right.values.size(), s);
  const auto triples = label_triples(spec);
  MemoTable<P> out{left.bag, std::vector<typename P::Value>(left.values.size(), policy.none())};
  NaiveRunner<P> run{triples, left.values, right.values, out.values, policy, left.bag.size(), s};
  run.run(0, 0, 0, 0);
  return out;
}

template <class P>
MemoTable<P> fast_join_general(const MemoTable<P>& left, const MemoTable<P>& right, const SigmaRhoSpec& spec,
                               const P& policy, const FastJoinOptions& opts) {
  check_bags(left.bag, right.bag, left.values.size(), right.values.size(), spec.num_labels());
  return fast_join_impl(left, right, spec, policy, opts, Engine::general);
}

template <class P>
MemoTable<P> fast_join_dominating(const MemoTable<P>& left, const MemoTable<P>& right, const SigmaRhoSpec& spec,
                                  const P& policy, const FastJoinOptions& opts) {
  if (!is_dominating_shaped(spec)) throw std::invalid_argument("dominating-set join needs the labels {|>=0|s, |0|r, |>=1|r}");
  check_bags(left.bag, right.bag, left.values.size(), right.values.size(), spec.num_labels());
  return fast_join_impl(left, right, spec, policy, opts, Engine::dominating);
}

#define SIGRHO_INSTANTIATE(P)                                                                                    \
  template MemoTable<P> naive_join(const MemoTable<P>&, const MemoTable<P>&, const SigmaRhoSpec&, const P&);   \
  template MemoTable<P> fast_join_general(const MemoTable<P>&, const MemoTable<P>&, const SigmaRhoSpec&,        \
                                          const P&, const FastJoinOptions&);                                    \
  template MemoTable<P> fast_join_dominating(const MemoTable<P>&, const MemoTable<P>&, const SigmaRhoSpec&,     \
                                             const P&, const FastJoinOptions&);

SIGRHO_INSTANTIATE(ExistencePolicy)
SIGRHO_INSTANTIATE(OptimisationPolicy)
SIGRHO_INSTANTIATE(CountPolicy)
SIGRHO_INSTANTIATE(CountOptimisationPolicy)

#undef SIGRHO_INSTANTIATE

}  // namespace sigrho
