#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reductlab/ktype.hpp"
#include "reductlab/ordered_graph.hpp"

namespace reductlab {

/// The eleven join-irreducible generator families.
///   a: reverse the order, keep the graph
///   b: turn the order around a cut, keep the graph
///   c: complement the graph, keep the order
///   d: switch the graph across a vertex subset, keep the order
///   e: complement the graph and reverse the order
///   f: switch the graph across a cut and turn the order around it
///   g: complement the graph below a cut, keep the order
///   h: complement the graph above a cut, keep the order
///   i: same-graph equivalence   (graph automorphisms)
///   j: same-order equivalence   (order automorphisms)
///   k: same-tournament equivalence
enum class Gen : std::uint8_t { a, b, c, d, e, f, g, h, i, j, k };

inline constexpr int kGenCount = 11;

char gen_char(Gen g);
std::optional<Gen> gen_from_char(char c);

/// Subset of the eleven generator labels; denotes the closed group generated
/// by the listed families together with the base automorphism group.  The
/// empty set is the base group itself.
struct GenSet {
  std::uint16_t bits = 0;

  constexpr GenSet() = default;
  constexpr explicit GenSet(std::uint16_t b) : bits(b) {}
  GenSet(std::initializer_list<Gen> gens) {
    for (Gen g : gens) bits = static_cast<std::uint16_t>(bits | (1u << static_cast<int>(g)));
  }

  bool contains(Gen g) const { return (bits >> static_cast<int>(g)) & 1u; }
  bool empty() const { return bits == 0; }
  int size() const { return __builtin_popcount(bits); }
  GenSet with(Gen g) const { return GenSet(static_cast<std::uint16_t>(bits | (1u << static_cast<int>(g)))); }
  GenSet without(Gen g) const { return GenSet(static_cast<std::uint16_t>(bits & ~(1u << static_cast<int>(g)))); }
  bool subset_of(GenSet o) const { return (bits & ~o.bits) == 0; }
  GenSet union_with(GenSet o) const { return GenSet(static_cast<std::uint16_t>(bits | o.bits)); }
  GenSet intersect(GenSet o) const { return GenSet(static_cast<std::uint16_t>(bits & o.bits)); }

  // Concatenated labels in a..k order; "" for the empty set.
  std::string to_string() const;
  // Parses e.g. "dgh"; throws std::invalid_argument on unknown labels.
  static GenSet parse(const std::string& labels);

  friend bool operator==(GenSet, GenSet) = default;
  friend bool operator<(GenSet l, GenSet r) { return l.bits < r.bits; }
};

inline constexpr GenSet kAllGens{static_cast<std::uint16_t>((1u << kGenCount) - 1u)};

/// One parameterized move of a generator family on the k-type space.
/// Deterministic for a..h; a symmetric grouping relation for i, j, k.
struct TypeMove {
  Gen label = Gen::a;
  int arity = 1;
  int cut = -1;             // b, f, g, h: gap position 0..k among the ranks
  std::uint8_t subset = 0;  // d: position bitmask
  bool grouping = false;    // i, j, k

  KType apply_deterministic(const KType& t) const;
};

// Complete enumeration of parameterizations: a/c/e one move, b/f/g/h cuts
// 0..k, d all 2^k subsets, i/j/k one grouping move.
std::vector<TypeMove> generator_moves(Gen label, int k);

// Deterministic moves yield a singleton; grouping moves yield the full
// equivalence class of t, sorted by code.  Throws on arity mismatch.
std::vector<KType> apply_move(const TypeMove& m, const KType& t);

// Invariant key of the i/j/k groupings: same key <=> related.
std::uint32_t grouping_key(Gen label, const KType& t);

// Debug dump: {"label":..,"arity":..,"param":..,"map":[[from,to],..]}.
std::string move_table_json(const TypeMove& m);

/// Graph-level realization of the deterministic families a..h.
/// cut is a vertex index 0..n (b, f, g, h); switch_set lists vertices (d).
struct TransformParam {
  int cut = -1;
  std::vector<int> switch_set;
};

OrderedGraph concrete_transform(Gen label, const TransformParam& p, const OrderedGraph& g);

// Where vertex v of the input ends up in the transformed graph.
int transform_vertex(Gen label, const TransformParam& p, int n, int v);

}  // namespace reductlab
