#include "sigrho/oracle.hpp"

#include <bit>
#include <optional>
#include <stdexcept>

namespace sigrho::oracle {

std::vector<BigInt> solution_profile(const Graph& g, const SigmaRhoSpec& spec) {
  const std::size_t n = g.n();
  if (n > kMaxBruteForceVertices) throw std::invalid_argument("brute force is limited to 24 vertices");
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [u, v] : g.edges()) {
    nbr[u] |= std::uint32_t{1} << v;
    nbr[v] |= std::uint32_t{1} << u;
  }
  std::vector<std::uint64_t> by_size(n + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const auto d = static_cast<std::uint32_t>(mask);
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      const auto inside = static_cast<std::uint64_t>(std::popcount(nbr[v] & d));
      ok = (d >> v & 1) ? spec.sigma().contains(inside) : spec.rho().contains(inside);
    }
    if (ok) ++by_size[static_cast<std::size_t>(std::popcount(d))];
  }
  return std::vector<BigInt>(by_size.begin(), by_size.end());
}

Answer brute_force_solve(const Graph& g, const SigmaRhoSpec& spec, Variant variant) {
  const auto profile = solution_profile(g, spec);
  Answer a;
  a.variant = variant;
  std::optional<std::size_t> lo, hi;
  BigInt total = 0;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (profile[j] == 0) continue;
    if (!lo) lo = j;
    hi = j;
    total += profile[j];
  }
  a.feasible = total != 0;
  switch (variant) {
    case Variant::existence: break;
    case Variant::count: a.count = total; break;
    case Variant::minimise:
      if (lo) a.size = static_cast<std::int64_t>(*lo);
      break;
    case Variant::maximise:
      if (hi) a.size = static_cast<std::int64_t>(*hi);
      break;
    case Variant::count_minimise:
      if (lo) a.size = static_cast<std::int64_t>(*lo), a.count = profile[*lo];
      break;
    case Variant::count_maximise:
      if (hi) a.size = static_cast<std::int64_t>(*hi), a.count = profile[*hi];
      break;
  }
  return a;
}

namespace {

/// Sum of two labels of the same side, or nothing.
std::optional<Label> label_sum(const SigmaRhoSpec& spec, const Label& a, const Label& b) {
  if (a.side != b.side) return std::nullopt;
  const NatSet& set = spec.set(a.side);
  const unsigned count = a.count + b.count;
  if (set.is_cofinite()) {
    const unsigned ell = set.listed().empty() ? 0 : set.listed().back() + 1;
    if (a.at_least || b.at_least || count >= ell) return Label{a.side, ell, true};
    return Label{a.side, count, false};
  }
  const unsigned top = set.listed().empty() ? 0 : set.listed().back();
  if (count > top) return std::nullopt;
  return Label{a.side, count, false};
}

}  // namespace

std::vector<Cell> naive_table_join_oracle(std::size_t k, const SigmaRhoSpec& spec, const std::vector<Cell>& left,
                                          const std::vector<Cell>& right, Variant variant) {
  const std::size_t s = spec.num_labels();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= s;
  if (left.size() != total || right.size() != total) throw std::invalid_argument("table size does not match bag");

  // Every (a, b, a + b) digit triple, from the sets themselves.
  struct Triple {
    std::size_t a, b, c;
  };
  std::vector<Triple> triples;
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) {
      auto sum = label_sum(spec, spec.label(a), spec.label(b));
      if (!sum) continue;
      std::size_t c = s;
      for (std::size_t d = 0; d < s; ++d) {
        if (spec.label(d) == *sum) c = d;
      }
      if (c == s) throw std::logic_error("label outside the alphabet");
      triples.push_back({a, b, c});
    }
  }

  std::vector<Cell> out(total);
  const bool minimise = variant == Variant::minimise || variant == Variant::count_minimise;
  // One odometer digit per bag position, each running over the triples.
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    std::size_t cl = 0, cr = 0, co = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const Triple& t = triples[pick[i]];
      cl = cl * s + t.a;
      cr = cr * s + t.b;
      co = co * s + t.c;
    }
    const Cell& x = left[cl];
    const Cell& y = right[cr];
    Cell& o = out[co];
    switch (variant) {
      case Variant::existence:
        if (x.present && y.present) o.present = true;
        break;
      case Variant::count:
        if (x.count != 0 && y.count != 0) o.count += x.count * y.count;
        break;
      case Variant::minimise:
      case Variant::maximise:
      case Variant::count_minimise:
      case Variant::count_maximise: {
        if (!x.present || !y.present) break;
        const std::int64_t size = x.size + y.size;
        const bool better = !o.present || (minimise ? size < o.size : size > o.size);
        if (better) {
          o.present = true;
          o.size = size;
          o.count = x.count * y.count;
        } else if (size == o.size) {
          o.count += x.count * y.count;
        }
        break;
      }
    }
    std::size_t i = k;
    while (i > 0 && ++pick[i - 1] == triples.size()) pick[--i] = 0;
    if (i == 0) break;
  }
  if (variant == Variant::minimise || variant == Variant::maximise) {
    for (Cell& c : out) c.count = 0;
  }
  return out;
}

}  // namespace sigrho::oracle
