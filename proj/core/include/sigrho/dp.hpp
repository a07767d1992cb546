#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sigrho/graph.hpp"
#include "sigrho/memo_table.hpp"
#include "sigrho/sigma_rho.hpp"

namespace sigrho {

template <class P>
MemoTable<P> leaf_table(const P& policy) {
  return MemoTable<P>{{}, {policy.unit()}};
}

/// v enters with no counted neighbours: only |0| and |>=0| labels survive.
template <class P>
MemoTable<P> introduce_table(const MemoTable<P>& child, Vertex v, const SigmaRhoSpec& spec, const P& policy) {
  const std::size_t s = spec.num_labels();
  auto pos_it = std::lower_bound(child.bag.begin(), child.bag.end(), v);
  if (pos_it != child.bag.end() && *pos_it == v) throw std::invalid_argument("introduced vertex already in bag");
  const std::size_t j = static_cast<std::size_t>(pos_it - child.bag.begin());
  MemoTable<P> out;
  out.bag = child.bag;
  out.bag.insert(out.bag.begin() + static_cast<std::ptrdiff_t>(j), v);
  const std::size_t low = ipow(s, child.bag.size() - j);
  out.values.assign(child.values.size() * s, policy.none());
  const std::size_t zs = spec.zero_digit(Side::sigma);
  const std::size_t zr = spec.zero_digit(Side::rho);
  for (std::size_t c = 0; c < child.values.size(); ++c) {
    const std::size_t hi = c / low, lo = c % low;
    out.values[(hi * s + zs) * low + lo] = child.values[c];
    out.values[(hi * s + zr) * low + lo] = child.values[c];
  }
  return out;
}

namespace detail {

/// Shifts coordinate `pos_u` by one counted neighbour, on the slice where
/// coordinate `pos_v` carries a sigma label.
template <class P>
void apply_edge(std::vector<typename P::Value>& values, std::size_t k, std::size_t pos_u, std::size_t pos_v,
                const SigmaRhoSpec& spec, const P& policy) {
  using V = typename P::Value;
  const std::size_t s = spec.num_labels();
  const std::size_t su = ipow(s, k - 1 - pos_u);
  const std::size_t sv = ipow(s, k - 1 - pos_v);
  std::vector<V> line(s);
  for (std::size_t base = 0; base < values.size(); ++base) {
    if ((base / su) % s != 0) continue;
    if (!spec.is_sigma((base / sv) % s)) continue;
    for (std::size_t d = 0; d < s; ++d) line[d] = values[base + d * su];
    for (Side side : {Side::sigma, Side::rho}) {
      const SideLayout& l = spec.layout(side);
      const std::size_t f = l.first_digit;
      if (l.modulus == 0) continue;  // lone |>=0| label: unchanged
      if (l.has_top) {
        values[base + l.top_digit * su] = policy.merge(line[f + l.modulus - 1], line[l.top_digit]);
      }
      for (std::size_t i = l.modulus; i-- > 1;) values[base + (f + i) * su] = line[f + i - 1];
      values[base + f * su] = policy.none();
    }
  }
}

}  // namespace detail

/// Applies the edges gained at this node, then projects v away over its valid
/// final labels. Sigma-labelled v adds one member to the stored size.
template <class P>
MemoTable<P> forget_table(const MemoTable<P>& child, Vertex v, const std::vector<Edge>& edges,
                          const SigmaRhoSpec& spec, const P& policy) {
  const std::size_t s = spec.num_labels();
  const std::size_t k = child.bag.size();
  auto pos_of = [&](Vertex x) {
    auto it = std::lower_bound(child.bag.begin(), child.bag.end(), x);
    if (it == child.bag.end() || *it != x) throw std::invalid_argument("vertex not in bag");
    return static_cast<std::size_t>(it - child.bag.begin());
  };
  const std::size_t pv = pos_of(v);
  std::vector<typename P::Value> vals = child.values;
  for (auto [a, b] : edges) {
    Vertex u = a == v ? b : a;
    if ((a != v && b != v) || u == v) throw std::invalid_argument("forget edge does not touch the forgotten vertex");
    const std::size_t pu = pos_of(u);
    detail::apply_edge(vals, k, pu, pv, spec, policy);
    detail::apply_edge(vals, k, pv, pu, spec, policy);
  }
  MemoTable<P> out;
  out.bag = child.bag;
  out.bag.erase(out.bag.begin() + static_cast<std::ptrdiff_t>(pv));
  const std::size_t low = ipow(s, k - 1 - pv);
  out.values.assign(vals.size() / s, policy.none());
  for (std::size_t c = 0; c < out.values.size(); ++c) {
    const std::size_t hi = c / low, lo = c % low;
    auto acc = policy.none();
    for (std::size_t d = 0; d < s; ++d) {
      if (!spec.valid(d)) continue;
      auto x = vals[(hi * s + d) * low + lo];
      acc = policy.merge(acc, spec.is_sigma(d) ? policy.add_member(x) : x);
    }
    out.values[c] = acc;
  }
  return out;
}

template <class P>
using JoinFn = std::function<MemoTable<P>(const MemoTable<P>&, const MemoTable<P>&)>;

/// Evaluates the nice decomposition bottom-up and returns the root value.
template <class P>
typename P::Value run_dp(const NiceTreeDecomposition& nice, const SigmaRhoSpec& spec, const P& policy,
                         const JoinFn<P>& join) {
  std::vector<std::optional<MemoTable<P>>> tables(nice.nodes.size());
  for (std::size_t i = 0; i < nice.nodes.size(); ++i) {
    const NiceNode& nd = nice.nodes[i];
    auto take = [&](std::size_t c) {
      MemoTable<P> t = std::move(*tables[c]);
      tables[c].reset();
      return t;
    };
    switch (nd.type) {
      case NiceType::leaf: tables[i] = leaf_table(policy); break;
      case NiceType::introduce: tables[i] = introduce_table(take(nd.children[0]), nd.vertex, spec, policy); break;
      case NiceType::forget:
        tables[i] = forget_table(take(nd.children[0]), nd.vertex, nd.forget_edges, spec, policy);
        break;
      case NiceType::join: {
        MemoTable<P> l = take(nd.children[0]);
        MemoTable<P> r = take(nd.children[1]);
        tables[i] = join(l, r);
        break;
      }
    }
  }
  const MemoTable<P>& root = *tables[nice.root()];
  if (!root.bag.empty() || root.values.size() != 1) throw std::logic_error("root table is not a scalar");
  return root.values[0];
}

}  // namespace sigrho
