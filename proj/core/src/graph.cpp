#include "sigrho/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace sigrho {

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= n() || v >= n()) throw std::invalid_argument("vertex id out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) throw std::invalid_argument("duplicate edge");
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
}

Vertex Graph::add_vertex() {
  adj_.emplace_back();
  return static_cast<Vertex>(adj_.size() - 1);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& au = adj_.at(u);
  return std::binary_search(au.begin(), au.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int TreeDecomposition::width() const {
  std::size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return static_cast<int>(w) - 1;
}

std::string_view to_string(TdViolationKind kind) {
  switch (kind) {
    case TdViolationKind::bad_vertex: return "bad-vertex";
    case TdViolationKind::not_a_tree: return "not-a-tree";
    case TdViolationKind::coverage: return "coverage";
    case TdViolationKind::edge_coverage: return "edge-coverage";
    case TdViolationKind::connectivity: return "connectivity";
  }
  return "unknown";
}

std::optional<TdViolation> validate_td(const Graph& g, const TreeDecomposition& td) {
  const std::size_t nodes = td.bags.size();
  const std::size_t n = g.n();
  for (std::size_t i = 0; i < nodes; ++i) {
    std::vector<Vertex> b = td.bags[i];
    std::sort(b.begin(), b.end());
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] >= n) return TdViolation{TdViolationKind::bad_vertex, "bag " + std::to_string(i) + " names vertex " + std::to_string(b[j]) + " outside the graph", {i, b[j]}};
      if (j > 0 && b[j] == b[j - 1]) return TdViolation{TdViolationKind::bad_vertex, "bag " + std::to_string(i) + " repeats vertex " + std::to_string(b[j]), {i, b[j]}};
    }
  }

  if (nodes == 0) return TdViolation{TdViolationKind::not_a_tree, "decomposition has no nodes", {}};
  if (td.edges.size() != nodes - 1) {
    return TdViolation{TdViolationKind::not_a_tree, "expected " + std::to_string(nodes - 1) + " tree edges, found " + std::to_string(td.edges.size()), {}};
  }
  std::vector<std::vector<std::size_t>> tadj(nodes);
  for (auto [a, b] : td.edges) {
    if (a >= nodes || b >= nodes || a == b) return TdViolation{TdViolationKind::not_a_tree, "invalid tree edge", {a, b}};
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  {
    std::vector<bool> seen(nodes, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : tadj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached != nodes) {
      for (std::size_t i = 0; i < nodes; ++i) {
        if (!seen[i]) return TdViolation{TdViolationKind::not_a_tree, "tree is disconnected at node " + std::to_string(i), {i}};
      }
    }
  }

  std::vector<std::vector<std::size_t>> holders(n);
  for (std::size_t i = 0; i < nodes; ++i) {
    for (Vertex v : td.bags[i]) holders[v].push_back(i);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (holders[v].empty()) return TdViolation{TdViolationKind::coverage, "vertex " + std::to_string(v + 1) + " is in no bag", {v}};
  }

  std::vector<std::vector<bool>> in_bag;  // lazily sized per node
  in_bag.assign(nodes, {});
  for (std::size_t i = 0; i < nodes; ++i) {
    in_bag[i].assign(n, false);
    for (Vertex v : td.bags[i]) in_bag[i][v] = true;
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (std::size_t i : holders[u]) {
      if (in_bag[i][v]) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      return TdViolation{TdViolationKind::edge_coverage, "edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "} is in no bag", {u, v}};
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    std::vector<bool> seen(nodes, false);
    std::vector<std::size_t> stack{holders[v][0]};
    seen[holders[v][0]] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : tadj[x]) {
        if (!seen[y] && in_bag[y][v]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached != holders[v].size()) {
      return TdViolation{TdViolationKind::connectivity, "bags containing vertex " + std::to_string(v + 1) + " are not connected", {v}};
    }
  }
  return std::nullopt;
}

namespace {

struct Lines {
  std::vector<std::pair<std::size_t, std::string>> items;  // (line number, content), comments skipped
};

Lines split_lines(std::string_view text) {
  Lines out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string line(text.substr(pos, end - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] != 'c') out.items.emplace_back(line_no, line.substr(first));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::uint64_t parse_uint(const std::string& s, std::size_t line, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" + s + "'");
  }
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw ParseError(line, std::string(what) + " is too large");
  }
}

}  // namespace

Graph parse_graph(std::string_view text) {
  Lines lines = split_lines(text);
  if (lines.items.empty()) throw ParseError(1, "missing header 'p tw <n> <m>'");
  auto [hline, header] = lines.items.front();
  auto h = tokens(header);
  if (h.size() != 4 || h[0] != "p" || h[1] != "tw") throw ParseError(hline, "malformed header, expected 'p tw <n> <m>'");
  const std::uint64_t n = parse_uint(h[2], hline, "vertex count");
  const std::uint64_t m = parse_uint(h[3], hline, "edge count");
  if (n > std::numeric_limits<Vertex>::max()) throw ParseError(hline, "vertex count is too large");
  Graph g(n);
  std::size_t seen = 0;
  for (std::size_t i = 1; i < lines.items.size(); ++i) {
    auto [ln, content] = lines.items[i];
    auto t = tokens(content);
    if (t.size() != 2) throw ParseError(ln, "malformed edge line, expected '<u> <v>'");
    std::uint64_t u = parse_uint(t[0], ln, "vertex id");
    std::uint64_t v = parse_uint(t[1], ln, "vertex id");
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError(ln, "vertex id out of range");
    if (u == v) throw ParseError(ln, "self-loop on vertex " + std::to_string(u));
    if (g.adjacent(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1))) {
      throw ParseError(ln, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    ++seen;
  }
  if (seen != m) {
    std::size_t ln = lines.items.back().first;
    throw ParseError(ln, "edge count mismatch: header says " + std::to_string(m) + ", found " + std::to_string(seen));
  }
  return g;
}

TreeDecomposition parse_td(std::string_view text, const Graph& g) {
  Lines lines = split_lines(text);
  if (lines.items.empty()) throw ParseError(1, "missing header 's td <bags> <width+1> <n>'");
  auto [hline, header] = lines.items.front();
  auto h = tokens(header);
  if (h.size() != 5 || h[0] != "s" || h[1] != "td") {
    throw ParseError(hline, "malformed header, expected 's td <bags> <width+1> <n>'");
  }
  const std::uint64_t nb = parse_uint(h[2], hline, "bag count");
  const std::uint64_t declared = parse_uint(h[3], hline, "bag size");
  const std::uint64_t n = parse_uint(h[4], hline, "vertex count");
  if (n != g.n()) throw ParseError(hline, "decomposition is for " + std::to_string(n) + " vertices, graph has " + std::to_string(g.n()));
  TreeDecomposition td;
  td.bags.resize(nb);
  std::vector<bool> defined(nb, false);
  for (std::size_t i = 1; i < lines.items.size(); ++i) {
    auto [ln, content] = lines.items[i];
    auto t = tokens(content);
    if (!t.empty() && t[0] == "b") {
      if (t.size() < 2) throw ParseError(ln, "malformed bag line, expected 'b <id> <vertices...>'");
      std::uint64_t id = parse_uint(t[1], ln, "bag id");
      if (id < 1 || id > nb) throw ParseError(ln, "bag id out of range");
      if (defined[id - 1]) throw ParseError(ln, "bag " + std::to_string(id) + " defined twice");
      defined[id - 1] = true;
      for (std::size_t j = 2; j < t.size(); ++j) {
        std::uint64_t v = parse_uint(t[j], ln, "vertex id");
        if (v < 1 || v > n) throw ParseError(ln, "vertex id out of range");
        td.bags[id - 1].push_back(static_cast<Vertex>(v - 1));
      }
    } else {
      if (t.size() != 2) throw ParseError(ln, "malformed tree edge line, expected '<bag> <bag>'");
      std::uint64_t a = parse_uint(t[0], ln, "bag id");
      std::uint64_t b = parse_uint(t[1], ln, "bag id");
      if (a < 1 || a > nb || b < 1 || b > nb) throw ParseError(ln, "bag id out of range");
      td.edges.emplace_back(a - 1, b - 1);
    }
  }
  for (std::size_t i = 0; i < nb; ++i) {
    if (!defined[i]) throw ParseError(hline, "bag " + std::to_string(i + 1) + " is never defined");
  }
  if (static_cast<std::int64_t>(declared) != td.width() + 1) {
    throw ParseError(hline, "declared bag size " + std::to_string(declared) + " does not match largest bag " + std::to_string(td.width() + 1));
  }
  if (auto v = validate_td(g, td)) throw InvalidDecomposition(*v);
  return td;
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "p tw " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::string write_td(const TreeDecomposition& td, std::size_t n) {
  std::ostringstream out;
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

int NiceTreeDecomposition::width() const {
  std::size_t w = 0;
  for (const auto& nd : nodes) w = std::max(w, nd.bag.size());
  return static_cast<int>(w) - 1;
}

std::size_t NiceTreeDecomposition::count(NiceType type) const {
  return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [&](const NiceNode& x) { return x.type == type; }));
}

namespace {

class NiceBuilder {
 public:
  explicit NiceBuilder(const Graph& g) : g_(g) {}

  std::size_t leaf() {
    nice_.nodes.push_back(NiceNode{NiceType::leaf, 0, {}, {}, {}});
    return nice_.nodes.size() - 1;
  }

  std::size_t introduce(std::size_t child, Vertex v) {
    NiceNode nd{NiceType::introduce, v, {child}, nice_.nodes[child].bag, {}};
    nd.bag.insert(std::lower_bound(nd.bag.begin(), nd.bag.end(), v), v);
    nice_.nodes.push_back(std::move(nd));
    return nice_.nodes.size() - 1;
  }

  std::size_t forget(std::size_t child, Vertex v) {
    NiceNode nd{NiceType::forget, v, {child}, nice_.nodes[child].bag, {}};
    nd.bag.erase(std::lower_bound(nd.bag.begin(), nd.bag.end(), v));
    for (Vertex u : nd.bag) {
      if (g_.adjacent(u, v)) nd.forget_edges.emplace_back(u, v);
    }
    nice_.nodes.push_back(std::move(nd));
    return nice_.nodes.size() - 1;
  }

  std::size_t join(std::size_t a, std::size_t b) {
    nice_.nodes.push_back(NiceNode{NiceType::join, 0, {a, b}, nice_.nodes[a].bag, {}});
    return nice_.nodes.size() - 1;
  }

  /// Walks from the node at `from` to a node whose bag is `target`.
  std::size_t morph(std::size_t from, const std::vector<Vertex>& target) {
    std::vector<Vertex> cur = nice_.nodes[from].bag;
    std::vector<Vertex> drop, add;
    std::set_difference(cur.begin(), cur.end(), target.begin(), target.end(), std::back_inserter(drop));
    std::set_difference(target.begin(), target.end(), cur.begin(), cur.end(), std::back_inserter(add));
    std::size_t x = from;
    for (Vertex v : drop) x = forget(x, v);
    for (Vertex v : add) x = introduce(x, v);
    return x;
  }

  NiceTreeDecomposition take() { return std::move(nice_); }

 private:
  const Graph& g_;
  NiceTreeDecomposition nice_;
};

}  // namespace

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
  if (auto v = validate_td(g, td)) throw InvalidDecomposition(*v);
  const std::size_t nodes = td.bags.size();
  std::vector<std::vector<std::size_t>> tadj(nodes);
  for (auto [a, b] : td.edges) {
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  for (auto& a : tadj) std::sort(a.begin(), a.end());

  std::vector<std::size_t> order;
  std::vector<std::size_t> parent(nodes, nodes);
  std::vector<bool> seen(nodes, false);
  order.push_back(0);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t y : tadj[order[i]]) {
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = order[i];
        order.push_back(y);
      }
    }
  }

  std::vector<std::vector<Vertex>> bags(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    bags[i] = td.bags[i];
    std::sort(bags[i].begin(), bags[i].end());
  }

  NiceBuilder b(g);
  std::vector<std::size_t> top(nodes);
  for (std::size_t idx = order.size(); idx-- > 0;) {
    const std::size_t t = order[idx];
    std::vector<std::size_t> branches;
    for (std::size_t c : tadj[t]) {
      if (c != parent[t]) branches.push_back(b.morph(top[c], bags[t]));
    }
    if (branches.empty()) branches.push_back(b.morph(b.leaf(), bags[t]));
    std::size_t cur = branches[0];
    for (std::size_t i = 1; i < branches.size(); ++i) cur = b.join(cur, branches[i]);
    top[t] = cur;
  }
  b.morph(top[0], {});
  return b.take();
}

std::optional<std::string> validate_nice(const Graph& g, const NiceTreeDecomposition& nice) {
  if (nice.nodes.empty()) return "no nodes";
  if (!nice.nodes.back().bag.empty()) return "root bag is not empty";
  std::vector<int> parents(nice.nodes.size(), 0);
  std::set<Edge> applied;
  for (std::size_t i = 0; i < nice.nodes.size(); ++i) {
    const NiceNode& nd = nice.nodes[i];
    if (!std::is_sorted(nd.bag.begin(), nd.bag.end())) return "bag of node " + std::to_string(i) + " is not sorted";
    for (std::size_t c : nd.children) {
      if (c >= i) return "node " + std::to_string(i) + " precedes its child";
      ++parents[c];
    }
    auto child_bag = [&](std::size_t j) -> const std::vector<Vertex>& { return nice.nodes[nd.children[j]].bag; };
    switch (nd.type) {
      case NiceType::leaf:
        if (!nd.children.empty() || !nd.bag.empty()) return "leaf " + std::to_string(i) + " is not an empty childless bag";
        break;
      case NiceType::introduce: {
        if (nd.children.size() != 1) return "introduce " + std::to_string(i) + " needs one child";
        const auto& cb = child_bag(0);
        if (std::binary_search(cb.begin(), cb.end(), nd.vertex)) return "introduced vertex already present";
        std::vector<Vertex> expect = cb;
        expect.insert(std::lower_bound(expect.begin(), expect.end(), nd.vertex), nd.vertex);
        if (expect != nd.bag) return "introduce " + std::to_string(i) + " bag mismatch";
        if (!nd.forget_edges.empty()) return "introduce node carries edges";
        break;
      }
      case NiceType::forget: {
        if (nd.children.size() != 1) return "forget " + std::to_string(i) + " needs one child";
        const auto& cb = child_bag(0);
        if (!std::binary_search(cb.begin(), cb.end(), nd.vertex)) return "forgotten vertex absent from child";
        std::vector<Vertex> expect = cb;
        expect.erase(std::lower_bound(expect.begin(), expect.end(), nd.vertex));
        if (expect != nd.bag) return "forget " + std::to_string(i) + " bag mismatch";
        for (auto [u, v] : nd.forget_edges) {
          if (v != nd.vertex || !std::binary_search(nd.bag.begin(), nd.bag.end(), u) || !g.adjacent(u, v)) {
            return "forget " + std::to_string(i) + " lists an invalid edge";
          }
          Edge e = u < v ? Edge{u, v} : Edge{v, u};
          if (!applied.insert(e).second) return "edge applied twice";
        }
        break;
      }
      case NiceType::join:
        if (nd.children.size() != 2) return "join " + std::to_string(i) + " needs two children";
        if (child_bag(0) != nd.bag || child_bag(1) != nd.bag) return "join " + std::to_string(i) + " bag mismatch";
        if (!nd.forget_edges.empty()) return "join node carries edges";
        break;
    }
  }
  for (std::size_t i = 0; i + 1 < nice.nodes.size(); ++i) {
    if (parents[i] != 1) return "node " + std::to_string(i) + " has " + std::to_string(parents[i]) + " parents";
  }
  if (parents.back() != 0) return "root has a parent";
  if (applied.size() != g.m()) return "edges applied " + std::to_string(applied.size()) + " of " + std::to_string(g.m());
  return std::nullopt;
}

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.n();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.emplace_back();
    return td;
  }
  if (order.size() != n) throw std::invalid_argument("elimination order must list every vertex once");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) throw std::invalid_argument("elimination order must list every vertex once");
    pos[order[i]] = i;
  }
  std::vector<std::set<Vertex>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  td.bags.resize(n);
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
    td.bags[i] = nb;
    td.bags[i].push_back(v);
    std::sort(td.bags[i].begin(), td.bags[i].end());
    for (std::size_t a = 0; a < nb.size(); ++a) {
      adj[nb[a]].erase(v);
      for (std::size_t c = a + 1; c < nb.size(); ++c) {
        adj[nb[a]].insert(nb[c]);
        adj[nb[c]].insert(nb[a]);
      }
    }
    adj[v].clear();
    if (nb.empty()) {
      roots.push_back(i);
    } else {
      std::size_t next = n;
      for (Vertex u : nb) next = std::min(next, pos[u]);
      td.edges.emplace_back(i, next);
    }
  }
  for (std::size_t r = 1; r < roots.size(); ++r) td.edges.emplace_back(roots[r - 1], roots[r]);
  return td;
}

TreeDecomposition min_fill_heuristic(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::set<Vertex>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<bool> gone(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    std::size_t best_fill = std::numeric_limits<std::size_t>::max();
    std::size_t best_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      std::size_t fill = 0;
      for (auto a = adj[v].begin(); a != adj[v].end(); ++a) {
        for (auto c = std::next(a); c != adj[v].end(); ++c) {
          if (!adj[*a].contains(*c)) ++fill;
        }
      }
      const std::size_t deg = adj[v].size();
      if (fill < best_fill || (fill == best_fill && deg < best_deg)) {
        best = v;
        best_fill = fill;
        best_deg = deg;
      }
    }
    gone[best] = true;
    order.push_back(best);
    std::vector<Vertex> nb(adj[best].begin(), adj[best].end());
    for (std::size_t a = 0; a < nb.size(); ++a) {
      adj[nb[a]].erase(best);
      for (std::size_t c = a + 1; c < nb.size(); ++c) {
        adj[nb[a]].insert(nb[c]);
        adj[nb[c]].insert(nb[a]);
      }
    }
    adj[best].clear();
  }
  return decomposition_from_order(g, order);
}

}  // namespace sigrho
