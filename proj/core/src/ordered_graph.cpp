#include "reductlab/ordered_graph.hpp"

#include <stdexcept>

namespace reductlab {

OrderedGraph build_bit_graph(int n) {
  if (n < 1) throw std::invalid_argument("build_bit_graph: n must be >= 1");
  OrderedGraph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (i < 31 && ((static_cast<unsigned>(j) >> i) & 1u)) g.set_edge(i, j, true);
  return g;
}

KType type_of_tuple(const OrderedGraph& g, std::span<const int> t) {
  int k = static_cast<int>(t.size());
  require_arity(k);
  for (int i = 0; i < k; ++i) {
    if (t[i] < 0 || t[i] >= g.n)
      throw std::out_of_range("type_of_tuple: vertex " + std::to_string(t[i]) +
                              " out of range for host of size " + std::to_string(g.n));
    for (int j = i + 1; j < k; ++j)
      if (t[i] == t[j])
        throw std::invalid_argument("type_of_tuple: duplicate entry " + std::to_string(t[i]));
  }
  KType ty;
  ty.k = k;
  for (int i = 0; i < k; ++i) {
    std::uint8_t r = 0;
    for (int j = 0; j < k; ++j)
      if (t[j] < t[i]) ++r;
    ty.ranks[i] = r;
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.edge(t[i], t[j]))
        ty.adj = static_cast<std::uint16_t>(ty.adj | (1u << pair_index(k, i, j)));
  return ty;
}

namespace {

bool extend_embedding(const OrderedGraph& pattern, const OrderedGraph& host,
                      std::vector<int>& map, int next) {
  if (next == pattern.n) return true;
  int start = next == 0 ? 0 : map[next - 1] + 1;
  for (int v = start; v < host.n; ++v) {
    bool ok = true;
    for (int p = 0; p < next; ++p) {
      if (host.edge(map[p], v) != pattern.edge(p, next)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[next] = v;
    if (extend_embedding(pattern, host, map, next + 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> embed_pattern(const OrderedGraph& pattern,
                                              const OrderedGraph& host) {
  if (pattern.n > host.n) return std::nullopt;
  std::vector<int> map(static_cast<std::size_t>(pattern.n), -1);
  if (pattern.n == 0) return map;
  if (!extend_embedding(pattern, host, map, 0)) return std::nullopt;
  return map;
}

OrderedGraph graph_of_type(const KType& t) {
  OrderedGraph g(t.k);
  for (int i = 0; i < t.k; ++i)
    for (int j = i + 1; j < t.k; ++j)
      if (t.edge(i, j)) g.set_edge(t.ranks[i], t.ranks[j], true);
  return g;
}

std::vector<int> tuple_of_type(const KType& t) {
  std::vector<int> tup(static_cast<std::size_t>(t.k));
  for (int i = 0; i < t.k; ++i) tup[i] = t.ranks[i];
  return tup;
}

}  // namespace reductlab
