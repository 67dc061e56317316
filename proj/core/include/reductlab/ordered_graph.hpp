#pragma once

#include <optional>
#include <span>
#include <vector>

#include "reductlab/ktype.hpp"

namespace reductlab {

/// Finite ordered graph: vertices 0..n-1, the integer order as <, and a
/// symmetric irreflexive edge relation.  The order is never stored.
struct OrderedGraph {
  int n = 0;
  std::vector<std::uint8_t> bits;  // n*n adjacency, symmetric, zero diagonal

  OrderedGraph() = default;
  explicit OrderedGraph(int vertex_count)
      : n(vertex_count), bits(static_cast<std::size_t>(vertex_count) * vertex_count, 0) {}

  bool edge(int u, int v) const { return bits[static_cast<std::size_t>(u) * n + v] != 0; }
  void set_edge(int u, int v, bool e) {
    bits[static_cast<std::size_t>(u) * n + v] = e ? 1 : 0;
    bits[static_cast<std::size_t>(v) * n + u] = e ? 1 : 0;
  }

  friend bool operator==(const OrderedGraph&, const OrderedGraph&) = default;
};

// Deterministic universal-ish host: i ~ j for i < j iff bit i of j is set.
OrderedGraph build_bit_graph(int n);

// Type of a tuple of distinct vertices (1 <= |t| <= 5).  Throws on repeated
// entries, out-of-range vertices, or bad arity.
KType type_of_tuple(const OrderedGraph& g, std::span<const int> t);

// Lexicographically least increasing embedding of pattern into host that
// preserves edges and non-edges, or nullopt if none exists.
std::optional<std::vector<int>> embed_pattern(const OrderedGraph& pattern,
                                              const OrderedGraph& host);

// The k-vertex pattern realizing a type: vertex v holds the entry of rank v.
OrderedGraph graph_of_type(const KType& t);

// A concrete tuple of that type inside graph_of_type(t): entry i = ranks[i].
std::vector<int> tuple_of_type(const KType& t);

}  // namespace reductlab
