#include "reductlab/constellations.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace reductlab {

char behavior_char(Behavior b) {
  switch (b) {
    case Behavior::Keep: return 'k';
    case Behavior::Flip: return 'f';
    case Behavior::EradicateEdges: return 'e';
    case Behavior::EradicateNonEdges: return 'n';
  }
  return '?';
}

namespace {

bool apply_behavior(Behavior b, bool edge) {
  switch (b) {
    case Behavior::Keep: return edge;
    case Behavior::Flip: return !edge;
    case Behavior::EradicateEdges: return false;
    case Behavior::EradicateNonEdges: return true;
  }
  return edge;
}

}  // namespace

Behavior Constellation::pair_behavior(int slot_p, int slot_q) const {
  if (slot_p == slot_q) return slots[static_cast<std::size_t>(slot_p)].on;
  const PairEntry& e = entry(slot_p, slot_q);
  if (!same_level(slot_p, slot_q)) return e.asc;
  // Ascending entry of the pair (lo, hi) governs pairs whose lower point
  // sits in slot lo.
  return slot_p == std::min(slot_p, slot_q) ? e.asc : e.desc;
}

void Constellation::validate() const {
  if (slots.empty()) throw std::invalid_argument("constellation: no slots");
  if (pairs.size() != static_cast<std::size_t>(pair_count(slot_count())))
    throw std::invalid_argument("constellation: wrong pair entry count");
  for (std::size_t s = 1; s < slots.size(); ++s)
    if (slots[s].level < slots[s - 1].level)
      throw std::invalid_argument("constellation: slots must be in ascending level order");
}

std::string Constellation::describe() const {
  std::string out;
  for (int s = 0; s < slot_count(); ++s) {
    if (s) out += ' ';
    out += "slot";
    out += std::to_string(s);
    out += "(level=";
    out += std::to_string(slots[s].level);
    out += ",on=";
    out += behavior_char(slots[s].on);
    out += ')';
  }
  for (int s = 0; s < slot_count(); ++s)
    for (int t = s + 1; t < slot_count(); ++t) {
      const PairEntry& e = entry(s, t);
      out += " [";
      out += std::to_string(s);
      out += ',';
      out += std::to_string(t);
      out += same_level(s, t)
                 ? std::string("]=asc:") + behavior_char(e.asc) + ",desc:" + behavior_char(e.desc)
                 : std::string("]=") + behavior_char(e.asc);
    }
  return out;
}

std::vector<Constellation> enumerate_constellations(int k, LevelShape shape,
                                                    const std::vector<Behavior>& vocab) {
  if (k < 1) throw std::invalid_argument("enumerate_constellations: k must be >= 1");
  if (k > 3) throw std::invalid_argument("enumerate_constellations: size limit, exhaustive mode needs k <= 3");
  if (vocab.empty()) throw std::invalid_argument("enumerate_constellations: empty vocabulary");

  Constellation base;
  for (int s = 0; s < k; ++s)
    base.slots.push_back({shape == LevelShape::Same ? 0 : s, Behavior::Keep});
  base.pairs.resize(static_cast<std::size_t>(pair_count(k)));

  // Entry slots: one per slot, plus two per same-level pair and one per
  // cross-level pair.
  struct Cell {
    bool on_slot;
    int a, b;
    bool asc;
  };
  std::vector<Cell> cells;
  for (int s = 0; s < k; ++s) cells.push_back({true, s, 0, true});
  for (int s = 0; s < k; ++s)
    for (int t = s + 1; t < k; ++t) {
      cells.push_back({false, s, t, true});
      if (base.same_level(s, t)) cells.push_back({false, s, t, false});
    }

  std::vector<Constellation> out;
  std::vector<std::size_t> pick(cells.size(), 0);
  for (;;) {
    Constellation c = base;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      Behavior b = vocab[pick[i]];
      if (cells[i].on_slot) {
        c.slots[static_cast<std::size_t>(cells[i].a)].on = b;
      } else {
        Constellation::PairEntry& e = c.entry(cells[i].a, cells[i].b);
        if (cells[i].asc) e.asc = b;
        else e.desc = b;
        if (!c.same_level(cells[i].a, cells[i].b)) e.desc = e.asc;
      }
    }
    out.push_back(std::move(c));
    std::size_t i = 0;
    for (; i < cells.size(); ++i) {
      if (++pick[i] < vocab.size()) break;
      pick[i] = 0;
    }
    if (i == cells.size()) break;
  }
  return out;
}

std::pair<OrderedGraph, OrderedGraph> instantiate(const Constellation& c,
                                                  const std::vector<int>& slot_of_point,
                                                  const OrderedGraph& base) {
  c.validate();
  int m = static_cast<int>(slot_of_point.size());
  if (base.n != m) throw std::invalid_argument("instantiate: base graph size mismatch");
  for (int p = 0; p < m; ++p) {
    if (slot_of_point[p] < 0 || slot_of_point[p] >= c.slot_count())
      throw std::invalid_argument("instantiate: slot index out of range");
    if (p > 0 && c.slots[static_cast<std::size_t>(slot_of_point[p])].level <
                     c.slots[static_cast<std::size_t>(slot_of_point[p - 1])].level)
      throw std::invalid_argument("instantiate: interleave inconsistent with slot levels");
  }
  OrderedGraph after(m);
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q)
      after.set_edge(p, q,
                     apply_behavior(c.pair_behavior(slot_of_point[p], slot_of_point[q]),
                                    base.edge(p, q)));
  return {base, after};
}

namespace {

// All level-nondecreasing slot assignments of m ordered points.
std::vector<std::vector<int>> slot_assignments(const Constellation& c, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(m));
  int k = c.slot_count();
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == m) {
      out.push_back(cur);
      return;
    }
    for (int s = 0; s < k; ++s) {
      if (pos > 0 && c.slots[static_cast<std::size_t>(s)].level <
                         c.slots[static_cast<std::size_t>(cur[pos - 1])].level)
        continue;
      cur[static_cast<std::size_t>(pos)] = s;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// After-mask table: transforms an adjacency bitmask of the m points.
std::vector<std::uint8_t> move_table(const Constellation& c, const std::vector<int>& assignment) {
  int m = static_cast<int>(assignment.size());
  int bits = pair_count(m);
  std::vector<std::uint8_t> table(static_cast<std::size_t>(1) << bits);
  for (std::uint32_t g = 0; g < table.size(); ++g) {
    std::uint32_t img = 0;
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q) {
        bool e = (g >> pair_index(m, p, q)) & 1u;
        if (apply_behavior(c.pair_behavior(assignment[p], assignment[q]), e))
          img |= 1u << pair_index(m, p, q);
      }
    table[g] = static_cast<std::uint8_t>(img);
  }
  return table;
}

}  // namespace

bool check_compatible(const Constellation& c, GenSet gs, int max_arity, SignatureStore& store) {
  c.validate();
  if (max_arity < 1 || max_arity > kMaxArity)
    throw std::invalid_argument("check_compatible: max_arity out of range");
  for (int m = 2; m <= max_arity; ++m) {
    const OrbitPartition& part = store.partition(gs, m);
    for (const std::vector<int>& assignment : slot_assignments(c, m)) {
      std::vector<std::uint8_t> table = move_table(c, assignment);
      // Increasing tuples have the identity rank pattern, whose permutation
      // index is 0, so the type code of mask g is just g.
      for (std::uint32_t g = 0; g < table.size(); ++g)
        if (!part.same_block(g, table[g])) return false;
    }
  }
  return true;
}

TargetTransform TargetTransform::identity(int m) {
  TargetTransform t{"identity", m, {}};
  t.image.resize(static_cast<std::size_t>(1) << pair_count(m));
  for (std::uint32_t g = 0; g < t.image.size(); ++g) t.image[g] = static_cast<std::uint8_t>(g);
  return t;
}

namespace {
TargetTransform xor_target(std::string name, int m, std::uint32_t mask) {
  TargetTransform t{std::move(name), m, {}};
  t.image.resize(static_cast<std::size_t>(1) << pair_count(m));
  for (std::uint32_t g = 0; g < t.image.size(); ++g)
    t.image[g] = static_cast<std::uint8_t>(g ^ mask);
  return t;
}
}  // namespace

TargetTransform TargetTransform::pair_flip(int m, int i, int j) {
  return xor_target("flip(" + std::to_string(i) + "," + std::to_string(j) + ")", m,
                    1u << pair_index(m, std::min(i, j), std::max(i, j)));
}

TargetTransform TargetTransform::subset_switch(int m, std::uint8_t subset) {
  std::uint32_t mask = 0;
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q)
      if (((subset >> p) & 1u) != ((subset >> q) & 1u)) mask |= 1u << pair_index(m, p, q);
  return xor_target("switch(" + std::to_string(subset) + ")", m, mask);
}

TargetTransform TargetTransform::prefix_flip(int m, int len) {
  std::uint32_t mask = 0;
  for (int p = 0; p < len; ++p)
    for (int q = p + 1; q < len; ++q) mask |= 1u << pair_index(m, p, q);
  return xor_target("prefix_flip(" + std::to_string(len) + ")", m, mask);
}

TargetTransform TargetTransform::suffix_flip(int m, int len) {
  std::uint32_t mask = 0;
  for (int p = m - len; p < m; ++p)
    for (int q = p + 1; q < m; ++q) mask |= 1u << pair_index(m, p, q);
  return xor_target("suffix_flip(" + std::to_string(len) + ")", m, mask);
}

TargetTransform TargetTransform::complement(int m) {
  return xor_target("complement", m, (1u << pair_count(m)) - 1u);
}

Witness witness_generates(const Constellation& c, const TargetTransform& target, int set_size,
                          int max_depth, std::size_t node_budget) {
  c.validate();
  if (set_size != target.m) throw std::invalid_argument("witness_generates: set size mismatch");

  std::vector<std::vector<int>> assignments = slot_assignments(c, set_size);
  std::vector<std::vector<std::uint8_t>> moves;
  moves.reserve(assignments.size());
  for (const auto& a : assignments) moves.push_back(move_table(c, a));

  std::vector<std::uint8_t> start = TargetTransform::identity(set_size).image;

  struct Node {
    std::vector<std::uint8_t> state;
    int parent;
    int move;
    int depth;
  };
  std::vector<Node> nodes;
  nodes.push_back({start, -1, -1, 0});

  auto key = [](const std::vector<std::uint8_t>& v) {
    return std::string(reinterpret_cast<const char*>(v.data()), v.size());
  };
  std::unordered_map<std::string, int> seen;
  seen.emplace(key(start), 0);

  auto make_witness = [&](int idx) {
    Witness w;
    w.found = true;
    w.depth = nodes[static_cast<std::size_t>(idx)].depth;
    std::vector<int> chain;
    for (int i = idx; nodes[static_cast<std::size_t>(i)].parent >= 0;
         i = nodes[static_cast<std::size_t>(i)].parent)
      chain.push_back(nodes[static_cast<std::size_t>(i)].move);
    std::reverse(chain.begin(), chain.end());
    for (int mv : chain) w.script.push_back(assignments[static_cast<std::size_t>(mv)]);
    return w;
  };

  if (start == target.image) return make_witness(0);

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= max_depth) continue;
    for (std::size_t mv = 0; mv < moves.size(); ++mv) {
      std::vector<std::uint8_t> next(nodes[head].state.size());
      for (std::size_t g = 0; g < next.size(); ++g) next[g] = moves[mv][nodes[head].state[g]];
      std::string k = key(next);
      if (seen.count(k)) continue;
      int idx = static_cast<int>(nodes.size());
      nodes.push_back({std::move(next), static_cast<int>(head), static_cast<int>(mv),
                       nodes[head].depth + 1});
      seen.emplace(std::move(k), idx);
      if (nodes.back().state == target.image) return make_witness(idx);
      if (nodes.size() > node_budget) return {};
    }
  }
  return {};
}

std::vector<TargetTransform> claim_targets(GenSet claimed, int m) {
  std::vector<TargetTransform> targets;
  if (claimed.empty()) {
    targets.push_back(TargetTransform::identity(m));
    return targets;
  }
  if (claimed.contains(Gen::j)) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) targets.push_back(TargetTransform::pair_flip(m, i, j));
    return targets;
  }
  if (claimed.contains(Gen::d)) {
    // proper subsets containing point 0; a set and its complement switch
    // the same pairs, so this covers every nontrivial split once
    std::uint32_t full = (1u << m) - 1u;
    for (std::uint32_t s = 1; s < full; s += 2)
      targets.push_back(TargetTransform::subset_switch(m, static_cast<std::uint8_t>(s)));
  }
  if (claimed.contains(Gen::g))
    for (int len = 2; len <= m; ++len) targets.push_back(TargetTransform::prefix_flip(m, len));
  if (claimed.contains(Gen::h))
    for (int len = 2; len <= m; ++len) targets.push_back(TargetTransform::suffix_flip(m, len));
  if (claimed.contains(Gen::c)) targets.push_back(TargetTransform::complement(m));
  if (targets.empty()) throw std::invalid_argument("claim_targets: unsupported claim set");
  return targets;
}

std::vector<GenSet> op_nodes(SignatureStore& store) {
  GenSet op = GenSet::parse("cdghj");
  std::vector<GenSet> nodes;
  for (std::uint32_t m = 0; m < (1u << kGenCount); ++m) {
    GenSet s{static_cast<std::uint16_t>(m)};
    if (!s.subset_of(op)) continue;
    if (join_closure(store, s) == s) nodes.push_back(s);
  }
  std::sort(nodes.begin(), nodes.end(), [](GenSet a, GenSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits < b.bits;
  });
  return nodes;
}

ClassifyResult classify_constellation(const Constellation& c, SignatureStore& store, int max_arity,
                                      int witness_depth) {
  ClassifyResult res;
  for (GenSet node : op_nodes(store))
    if (check_compatible(c, node, max_arity, store)) res.compatible.push_back(node);
  for (GenSet node : res.compatible) {
    bool minimal = true;
    for (GenSet other : res.compatible)
      if (other != node && other.subset_of(node)) {
        minimal = false;
        break;
      }
    if (minimal) res.minimal_compatible.push_back(node);
  }
  GenSet forced;
  for (Gen gen : {Gen::c, Gen::d, Gen::g, Gen::h}) {
    bool all = true;
    for (const TargetTransform& t : claim_targets(GenSet{gen}, 3))
      if (!witness_generates(c, t, 3, witness_depth).found) {
        all = false;
        break;
      }
    if (all) forced = forced.with(gen);
  }
  {
    bool all = true;
    for (const TargetTransform& t : claim_targets(GenSet{Gen::j}, 3))
      if (!witness_generates(c, t, 3, witness_depth).found) {
        all = false;
        break;
      }
    if (all) forced = forced.with(Gen::j);
  }
  res.forced_lower_bound = join_closure(store, forced);
  return res;
}

namespace {

constexpr Behavior K = Behavior::Keep;
constexpr Behavior F = Behavior::Flip;

Constellation same2(Behavior on0, Behavior on1, Behavior asc, Behavior desc) {
  Constellation c;
  c.slots = {{0, on0}, {0, on1}};
  c.pairs = {{asc, desc}};
  return c;
}

Constellation diff2(Behavior on_low, Behavior on_high, Behavior between) {
  Constellation c;
  c.slots = {{0, on_low}, {1, on_high}};
  c.pairs = {{between, between}};
  return c;
}

// Three slots on one level: X = slot0, Y = slot1, Z = slot2; identity on
// and between X and Y.
Constellation c3_same(Behavior on_z, Behavior xz_asc, Behavior xz_desc, Behavior yz_asc,
                      Behavior yz_desc) {
  Constellation c;
  c.slots = {{0, K}, {0, K}, {0, on_z}};
  c.pairs.resize(3);
  c.entry(0, 1) = {K, K};
  c.entry(0, 2) = {xz_asc, xz_desc};
  c.entry(1, 2) = {yz_asc, yz_desc};
  return c;
}

// Three slots on three levels: Z = slot0 (bottom), Y = slot1, X = slot2
// (top); identity on and between X and Y.
Constellation c3_diff(Behavior on_z, Behavior xz, Behavior yz) {
  Constellation c;
  c.slots = {{0, on_z}, {1, K}, {2, K}};
  c.pairs.resize(3);
  c.entry(0, 1) = {yz, yz};
  c.entry(0, 2) = {xz, xz};
  c.entry(1, 2) = {K, K};
  return c;
}

// Four slots, one level: X,Y,Z = slots 0..2 with identity on and between
// them, W = slot3 flipped; both lines from each of X,Y,Z to W carry the
// given pattern.
Constellation c4_same(Behavior w_asc, Behavior w_desc) {
  Constellation c;
  c.slots = {{0, K}, {0, K}, {0, K}, {0, F}};
  c.pairs.resize(6);
  c.entry(0, 1) = {K, K};
  c.entry(0, 2) = {K, K};
  c.entry(1, 2) = {K, K};
  c.entry(0, 3) = {w_asc, w_desc};
  c.entry(1, 3) = {w_asc, w_desc};
  c.entry(2, 3) = {w_asc, w_desc};
  return c;
}

// W on its own level below the same-level X,Y,Z.
Constellation c4_low(Behavior w_cross) {
  Constellation c;
  c.slots = {{0, F}, {1, K}, {1, K}, {1, K}};
  c.pairs.resize(6);
  c.entry(0, 1) = {w_cross, w_cross};
  c.entry(0, 2) = {w_cross, w_cross};
  c.entry(0, 3) = {w_cross, w_cross};
  c.entry(1, 2) = {K, K};
  c.entry(1, 3) = {K, K};
  c.entry(2, 3) = {K, K};
  return c;
}

// Levels X > Y > Z with the flipped slot Z at the bottom and W beside
// X (top) or beside Y (middle).
Constellation c4_chain_top(Behavior z_cross) {
  Constellation c;  // slots: Z(0,l0,F), Y(1,l1), X(2,l2), W(3,l2)
  c.slots = {{0, F}, {1, K}, {2, K}, {2, K}};
  c.pairs.resize(6);
  c.entry(0, 1) = {z_cross, z_cross};
  c.entry(0, 2) = {z_cross, z_cross};
  c.entry(0, 3) = {z_cross, z_cross};
  c.entry(1, 2) = {K, K};
  c.entry(1, 3) = {K, K};
  c.entry(2, 3) = {K, K};
  return c;
}

Constellation c4_chain_mid(Behavior z_cross) {
  Constellation c;  // slots: Z(0,l0,F), Y(1,l1), W(2,l1), X(3,l2)
  c.slots = {{0, F}, {1, K}, {1, K}, {2, K}};
  c.pairs.resize(6);
  c.entry(0, 1) = {z_cross, z_cross};
  c.entry(0, 2) = {z_cross, z_cross};
  c.entry(0, 3) = {z_cross, z_cross};
  c.entry(1, 2) = {K, K};
  c.entry(1, 3) = {K, K};
  c.entry(2, 3) = {K, K};
  return c;
}

// Two levels, two slots each: Z(0), W(1) below; X(2), Y(3) above; W is the
// flipped slot.  zw gives the two lines between Z and W; w_cross the entry
// between W and each of X, Y.
Constellation c4_two_levels(Behavior zw_asc, Behavior zw_desc, Behavior w_cross) {
  Constellation c;
  c.slots = {{0, K}, {0, F}, {1, K}, {1, K}};
  c.pairs.resize(6);
  c.entry(0, 1) = {zw_asc, zw_desc};
  c.entry(0, 2) = {K, K};
  c.entry(0, 3) = {K, K};
  c.entry(1, 2) = {w_cross, w_cross};
  c.entry(1, 3) = {w_cross, w_cross};
  c.entry(2, 3) = {K, K};
  return c;
}

// Four distinct levels, W at the bottom flipped.
Constellation c4_chain4(Behavior w_cross) {
  Constellation c;  // slots: W(0,l0,F), Z(1,l1), Y(2,l2), X(3,l3)
  c.slots = {{0, F}, {1, K}, {2, K}, {3, K}};
  c.pairs.resize(6);
  c.entry(0, 1) = {w_cross, w_cross};
  c.entry(0, 2) = {w_cross, w_cross};
  c.entry(0, 3) = {w_cross, w_cross};
  c.entry(1, 2) = {K, K};
  c.entry(1, 3) = {K, K};
  c.entry(2, 3) = {K, K};
  return c;
}

std::vector<CaseRecord> build_catalog() {
  std::vector<CaseRecord> cat;
  auto add = [&cat](std::string id, Constellation c, const char* claim, ClaimSource src,
                    std::string note) {
    c.validate();
    cat.push_back({std::move(id), std::move(c), GenSet::parse(claim), src, std::move(note)});
  };
  const auto P = ClaimSource::Prose;
  const auto FIG = ClaimSource::FigureOnly;

  // Two slots on one level; identity on the first slot.
  add("C2:a1", same2(K, K, K, K), "", P, "identity behavior");
  add("C2:a2", same2(K, K, F, F), "d", P, "one application switches across any point split");
  add("C2:a3", same2(K, K, F, K), "j", FIG, "combined applications flip a single pair");
  add("C2:a4", same2(K, F, K, K), "j", FIG, "combined applications flip a single pair");
  add("C2:a5", same2(K, F, F, F), "j", FIG, "combined applications flip a single pair");
  add("C2:a6", same2(K, F, K, F), "h", P, "sending an upward-closed part to the flipped slot flips a suffix");
  add("C2:a7", same2(K, F, F, K), "g", P, "sending a downward-closed part to the flipped slot flips a prefix");

  // Two slots on different levels (lower slot first).
  add("C2:b1", diff2(K, K, K), "", P, "identity behavior");
  add("C2:b2", diff2(K, K, F), "d", P, "two applications switch about a single point");
  add("C2:b3", diff2(F, K, K), "g", P, "a downward-closed part in the lower slot flips a prefix");
  add("C2:b4", diff2(F, K, F), "h", P, "complementation reduces to the suffix-flip case");
  add("C2:b5", diff2(K, F, K), "h", P, "an upward-closed part in the upper slot flips a suffix");
  add("C2:b6", diff2(K, F, F), "g", P, "complementation reduces to the prefix-flip case");

  // Three slots on one level.
  add("C3:a1", c3_same(K, K, K, K, K), "", P, "identity behavior");
  add("C3:a2", c3_same(K, K, K, F, F), "j", P, "one application flips a single pair");
  add("C3:a3", c3_same(K, F, F, F, F), "d", P, "restriction to the first and third slots switches");
  add("C3:a4", c3_same(F, K, F, K, F), "h", P, "restriction to the first and third slots flips a suffix");
  add("C3:a5", c3_same(F, K, F, F, K), "j", P, "combined applications flip a single pair");
  add("C3:a6", c3_same(F, F, K, F, K), "g", P, "restriction to the first and third slots flips a prefix");

  // Three slots on three levels (bottom slot carries the action).
  add("C3:b1", c3_diff(K, K, K), "", P, "identity behavior");
  add("C3:b2", c3_diff(K, F, K), "j", P, "combined applications flip a single pair");
  add("C3:b3", c3_diff(K, K, F), "j", P, "switching about the bottom slot reduces to the single-pair case");
  add("C3:b4", c3_diff(K, F, F), "d", P, "restriction to the two lower slots switches");
  add("C3:b5", c3_diff(F, K, K), "g", P, "restriction to the two lower slots flips a prefix");
  add("C3:b6", c3_diff(F, F, K), "j", FIG, "combined applications flip a single pair");
  add("C3:b7", c3_diff(F, K, F), "j", FIG, "self-composition reduces to the single-pair case");
  add("C3:b8", c3_diff(F, F, F), "h", P, "restriction to the two lower slots flips a suffix");

  // Four slots on one level, flip on the last.
  add("C4:a1", c4_same(F, K), "g", P, "restriction to the flip slot and a keep slot flips a prefix");
  add("C4:a2", c4_same(K, F), "h", P, "restriction to the flip slot and a keep slot flips a suffix");

  // Flip slot on its own level below three same-level slots.
  add("C4:b1", c4_low(K), "g", P, "restriction to the flip slot and a keep slot flips a prefix");
  add("C4:b2", c4_low(F), "h", P, "restriction to the flip slot and a keep slot flips a suffix");

  // Chain of three levels, flipped bottom, companion beside the top.
  add("C4:c1", c4_chain_top(K), "g", P, "restriction to the flip slot and the companion flips a prefix");
  add("C4:c2", c4_chain_top(F), "h", P, "restriction to the flip slot and the companion flips a suffix");

  // Chain of three levels, companion beside the middle.
  add("C4:d1", c4_chain_mid(K), "g", P, "restriction to the flip slot and the companion flips a prefix");
  add("C4:d2", c4_chain_mid(F), "h", P, "restriction to the flip slot and the companion flips a suffix");

  // Two slots per level.
  add("C4:e1", c4_two_levels(K, F, K), "j", FIG, "violates the dihedral relation; full");
  add("C4:e2", c4_two_levels(F, K, K), "g", P, "restriction to the two lower slots flips a prefix");
  add("C4:e3", c4_two_levels(K, F, F), "h", P, "restriction to the two lower slots flips a suffix");
  add("C4:e4", c4_two_levels(F, K, F), "j", FIG, "violates the dihedral relation; full");

  // Four distinct levels, flipped bottom.
  add("C4:f1", c4_chain4(K), "g", P, "restriction to the bottom and top slots flips a prefix");
  add("C4:f2", c4_chain4(F), "h", P, "restriction to the bottom and top slots flips a suffix");

  return cat;
}

}  // namespace

const std::vector<CaseRecord>& case_catalog() {
  static const std::vector<CaseRecord> cat = build_catalog();
  return cat;
}

const CaseRecord& case_by_id(const std::string& id) {
  for (const CaseRecord& r : case_catalog())
    if (r.id == id) return r;
  throw std::invalid_argument("unknown case id '" + id + "'");
}

}  // namespace reductlab
