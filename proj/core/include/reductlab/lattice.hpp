#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "reductlab/orbits.hpp"

namespace reductlab {

// l lies below m in the generator containment order, i.e. the closure of
// {m} already contains l.
bool ji_below(SignatureStore& store, Gen l, Gen m);

// Smallest closed label set containing s: the fixed point of adding every
// label whose moves stay within the join's orbit blocks.
GenSet join_closure(SignatureStore& store, GenSet s);

/// One closed group of the lattice, represented by its closed label set
/// (an ideal of the generator containment order).
struct LatticeNode {
  GenSet ideal;
  std::string label;  // concatenated maximal members; "" for the bottom
  Signature sig{};
};

// All distinct closed groups, deduplicated over the 2^11 label subsets.
// Sorted by (ideal size, label).  Throws std::runtime_error with a
// "classification violation" message if the counts are not 44 total with
// 42 proper non-trivial nodes.
std::vector<LatticeNode> enumerate_lattice(SignatureStore& store);

// Label of the closed set: maximal members in a..k order.
std::string node_label(SignatureStore& store, GenSet ideal);

// Covering pairs (u, v): node u covered by node v, as indices into nodes.
std::vector<std::pair<int, int>> hasse_edges(const std::vector<LatticeNode>& nodes);

// True iff relabelling every ideal by `image` and re-closing is an order
// automorphism of the lattice.
bool check_lattice_automorphism(SignatureStore& store, const std::array<Gen, kGenCount>& image);

// Deterministic stand-in for the dihedrally closed 4-ary relation used in
// the table's final column: the lexicographically least nonempty proper
// union of arity-4 orbit blocks of the join of a,b,d,e,f,g,h that is
// closed under the 8 dihedral argument permutations and preserved by none
// of i, j, k.  Throws on search failure.
Relation derive_sd_surrogate(SignatureStore& store);

struct PreservationTable {
  std::vector<std::string> columns;             // 15 relation names
  std::vector<std::string> row_labels;          // 42 rows, canonical order
  std::vector<std::array<bool, 15>> cells;
};

PreservationTable build_preservation_table(SignatureStore& store, const Relation& sd);

// Fixed publication order of the 42 proper non-trivial rows.
const std::array<std::string, 42>& canonical_row_order();

}  // namespace reductlab
