#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "reductlab/lattice.hpp"
#include "reductlab/orbits.hpp"
#include "reductlab/ordered_graph.hpp"

namespace reductlab {

/// Behavior entry of a canonical function on a slot or slot pair.
enum class Behavior : std::uint8_t { Keep, Flip, EradicateEdges, EradicateNonEdges };

char behavior_char(Behavior b);  // 'k', 'f', 'e', 'n'

/// Finitely many orbit slots with level data and per-slot / per-pair
/// behavior entries; the order is always preserved.  Slots are kept in
/// ascending level order.  Same-level slot pairs carry two entries, one
/// for ascending pairs (the lower point in the first slot) and one for
/// descending pairs; cross-level pairs carry a single entry (asc).
struct Constellation {
  struct Slot {
    int level = 0;
    Behavior on = Behavior::Keep;
  };
  struct PairEntry {
    Behavior asc = Behavior::Keep;
    Behavior desc = Behavior::Keep;
  };

  std::vector<Slot> slots;
  std::vector<PairEntry> pairs;  // indexed by pair_index(slot_count, s, t), s < t

  int slot_count() const { return static_cast<int>(slots.size()); }
  bool same_level(int s, int t) const { return slots[s].level == slots[t].level; }
  const PairEntry& entry(int s, int t) const {
    return pairs[static_cast<std::size_t>(pair_index(slot_count(), std::min(s, t), std::max(s, t)))];
  }
  PairEntry& entry(int s, int t) {
    return pairs[static_cast<std::size_t>(pair_index(slot_count(), std::min(s, t), std::max(s, t)))];
  }

  // Behavior governing a concrete pair of points p < q sitting in the
  // given slots.
  Behavior pair_behavior(int slot_p, int slot_q) const;

  void validate() const;      // throws std::invalid_argument on bad shape
  std::string describe() const;

  friend bool operator==(const Constellation&, const Constellation&) = default;
};

enum class LevelShape { Same, Mixed };  // Mixed: every slot on its own level

// Complete duplicate-free enumeration; slot identities are fixed by
// construction order.  Exhaustive mode requires k <= 3.
std::vector<Constellation> enumerate_constellations(int k, LevelShape shape,
                                                    const std::vector<Behavior>& vocab);

// Applies the behavior entries to a base graph.  slot_of_point assigns
// each vertex of base (in increasing order) to a slot; levels along the
// assignment must be nondecreasing.  Returns (before, after).
std::pair<OrderedGraph, OrderedGraph> instantiate(const Constellation& c,
                                                  const std::vector<int>& slot_of_point,
                                                  const OrderedGraph& base);

// True iff over every instantiation with at most max_arity points (all
// slot assignments, all base adjacencies) the before- and after-types lie
// in the same orbit block of the group.
bool check_compatible(const Constellation& c, GenSet gs, int max_arity, SignatureStore& store);

/// A transformation of ordered graphs on the point set {0..m-1}, given
/// extensionally as an image table over all 2^C(m,2) adjacency masks.
struct TargetTransform {
  std::string name;
  int m = 1;
  std::vector<std::uint8_t> image;

  static TargetTransform identity(int m);
  static TargetTransform pair_flip(int m, int i, int j);
  static TargetTransform subset_switch(int m, std::uint8_t subset);
  static TargetTransform prefix_flip(int m, int len);
  static TargetTransform suffix_flip(int m, int len);
  static TargetTransform complement(int m);

  friend bool operator==(const TargetTransform&, const TargetTransform&) = default;
};

struct Witness {
  bool found = false;
  int depth = 0;
  std::vector<std::vector<int>> script;  // one slot assignment per application
};

// Breadth-first search over composite graph transformations on m points:
// each move assigns the points to slots (levels nondecreasing) and applies
// the behavior.  Succeeds when the composite equals the target transform.
Witness witness_generates(const Constellation& c, const TargetTransform& target, int set_size,
                          int max_depth, std::size_t node_budget = 1u << 20);

// Targets whose generation certifies the claimed group on m points:
// the empty set => identity, d => subset switches, g => prefix flips,
// h => suffix flips, c => complement, j => single pair flips.
std::vector<TargetTransform> claim_targets(GenSet claimed, int m);

struct ClassifyResult {
  std::vector<GenSet> compatible;          // order-preserving sublattice nodes
  std::vector<GenSet> minimal_compatible;  // antichain of minima
  GenSet forced_lower_bound;               // join of witnessed generators
};

// Compatibility is computed exactly against the order-preserving
// sublattice; forcing is approximated from witness search.
ClassifyResult classify_constellation(const Constellation& c, SignatureStore& store,
                                      int max_arity = 4, int witness_depth = 6);

// The order-preserving sublattice: closed subsets of {c,d,g,h,j}.
std::vector<GenSet> op_nodes(SignatureStore& store);

enum class ClaimSource { Prose, FigureOnly };

struct CaseRecord {
  std::string id;
  Constellation constellation;
  GenSet claimed;  // empty set: the base group
  ClaimSource source = ClaimSource::Prose;
  std::string note;
};

// The C2/C3/C4 case catalog.
const std::vector<CaseRecord>& case_catalog();
const CaseRecord& case_by_id(const std::string& id);

}  // namespace reductlab
