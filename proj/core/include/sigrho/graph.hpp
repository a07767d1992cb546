#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sigrho {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Throws std::invalid_argument on self-loops, duplicates or bad ids.
  void add_edge(Vertex u, Vertex v);
  /// Adds a fresh isolated vertex and returns its id.
  Vertex add_vertex();

  std::size_t n() const { return adj_.size(); }
  std::size_t m() const { return m_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;
  /// Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Largest bag size minus one; -1 when there are no non-empty bags.
  int width() const;
};

enum class TdViolationKind { bad_vertex, not_a_tree, coverage, edge_coverage, connectivity };

std::string_view to_string(TdViolationKind kind);

struct TdViolation {
  TdViolationKind kind;
  std::string message;
  /// Vertex ids, an edge's endpoints, or node ids, depending on the kind.
  std::vector<std::size_t> witness;
};

std::optional<TdViolation> validate_td(const Graph& g, const TreeDecomposition& td);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InvalidDecomposition : public std::runtime_error {
 public:
  explicit InvalidDecomposition(TdViolation v)
      : std::runtime_error(std::string(to_string(v.kind)) + " violated: " + v.message), violation_(std::move(v)) {}
  const TdViolation& violation() const { return violation_; }

 private:
  TdViolation violation_;
};

/// PACE `.gr` format, 1-based ids on disk.
Graph parse_graph(std::string_view text);
/// PACE `.td` format; the result is validated against g.
TreeDecomposition parse_td(std::string_view text, const Graph& g);

std::string write_graph(const Graph& g);
std::string write_td(const TreeDecomposition& td, std::size_t n);

enum class NiceType { leaf, introduce, forget, join };

struct NiceNode {
  NiceType type = NiceType::leaf;
  Vertex vertex = 0;                 // introduce / forget only
  std::vector<std::size_t> children;  // 0, 1 or 2 entries
  std::vector<Vertex> bag;            // sorted
  std::vector<Edge> forget_edges;     // (u, vertex) for forget nodes
};

/// Nodes are stored children before parents, so a forward scan is a valid
/// bottom-up evaluation order. The root is the last node and has an empty bag.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;

  std::size_t root() const { return nodes.size() - 1; }
  int width() const;
  std::size_t count(NiceType type) const;
};

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td);

/// Structural check of the nice form plus the exact edge partition.
std::optional<std::string> validate_nice(const Graph& g, const NiceTreeDecomposition& nice);

/// Decomposition induced by eliminating vertices in the given order.
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order);

/// Greedy min-fill elimination; ties broken by degree, then by id.
TreeDecomposition min_fill_heuristic(const Graph& g);

}  // namespace sigrho
