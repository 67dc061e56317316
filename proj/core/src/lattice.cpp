#include "reductlab/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace reductlab {

bool ji_below(SignatureStore& store, Gen l, Gen m) {
  return join_closure(store, GenSet{}.with(m)).contains(l);
}

GenSet join_closure(SignatureStore& store, GenSet s) {
  Signature sig = store.signature(s);
  GenSet closed = s;
  for (int g = 0; g < kGenCount; ++g) {
    Gen label = static_cast<Gen>(g);
    if (!closed.contains(label) && store.signature(s.with(label)) == sig)
      closed = closed.with(label);
  }
  return closed;
}

std::string node_label(SignatureStore& store, GenSet ideal) {
  std::string label;
  for (int g = 0; g < kGenCount; ++g) {
    Gen cand = static_cast<Gen>(g);
    if (!ideal.contains(cand)) continue;
    bool maximal = true;
    for (int m = 0; m < kGenCount; ++m) {
      Gen other = static_cast<Gen>(m);
      if (m != g && ideal.contains(other) && ji_below(store, cand, other)) {
        maximal = false;
        break;
      }
    }
    if (maximal) label += gen_char(cand);
  }
  return label;
}

std::vector<LatticeNode> enumerate_lattice(SignatureStore& store) {
  store.precompute_all();
  std::map<Signature, GenSet> distinct;  // signature -> closed set
  for (std::uint32_t m = 0; m < (1u << kGenCount); ++m) {
    GenSet s{static_cast<std::uint16_t>(m)};
    Signature sig = store.signature(s);
    auto [it, inserted] = distinct.emplace(sig, s);
    if (!inserted) it->second = it->second.union_with(s);
  }
  std::vector<LatticeNode> nodes;
  nodes.reserve(distinct.size());
  for (auto& [sig, members] : distinct) {
    LatticeNode n;
    n.ideal = members;
    n.sig = sig;
    n.label = node_label(store, members);
    nodes.push_back(std::move(n));
  }
  std::sort(nodes.begin(), nodes.end(), [](const LatticeNode& a, const LatticeNode& b) {
    if (a.ideal.size() != b.ideal.size()) return a.ideal.size() < b.ideal.size();
    return a.label < b.label;
  });

  if (nodes.size() != 44)
    throw std::runtime_error("classification violation: expected 44 closed groups, found " +
                             std::to_string(nodes.size()));
  int proper = 0;
  for (const LatticeNode& n : nodes)
    if (!n.ideal.empty() && n.ideal != kAllGens) ++proper;
  if (proper != 42)
    throw std::runtime_error("classification violation: expected 42 proper non-trivial groups, found " +
                             std::to_string(proper));
  return nodes;
}

std::vector<std::pair<int, int>> hasse_edges(const std::vector<LatticeNode>& nodes) {
  int n = static_cast<int>(nodes.size());
  auto below = [&](int u, int v) {
    return u != v && nodes[u].ideal.subset_of(nodes[v].ideal);
  };
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (!below(u, v)) continue;
      bool covering = true;
      for (int w = 0; w < n && covering; ++w)
        if (below(u, w) && below(w, v)) covering = false;
      if (covering) edges.emplace_back(u, v);
    }
  }
  return edges;
}

bool check_lattice_automorphism(SignatureStore& store, const std::array<Gen, kGenCount>& image) {
  std::vector<LatticeNode> nodes = enumerate_lattice(store);
  std::map<std::uint16_t, int> index;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) index[nodes[i].ideal.bits] = i;

  std::vector<int> mapped(nodes.size());
  std::set<int> image_set;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    GenSet relabeled;
    for (int g = 0; g < kGenCount; ++g)
      if (nodes[i].ideal.contains(static_cast<Gen>(g)))
        relabeled = relabeled.with(image[static_cast<std::size_t>(g)]);
    GenSet closed = join_closure(store, relabeled);
    auto it = index.find(closed.bits);
    if (it == index.end()) return false;
    mapped[i] = it->second;
    image_set.insert(it->second);
  }
  if (image_set.size() != nodes.size()) return false;  // not a bijection
  for (std::size_t u = 0; u < nodes.size(); ++u)
    for (std::size_t v = 0; v < nodes.size(); ++v) {
      bool before = nodes[u].ideal.subset_of(nodes[v].ideal);
      bool after = nodes[static_cast<std::size_t>(mapped[u])].ideal.subset_of(
          nodes[static_cast<std::size_t>(mapped[v])].ideal);
      if (before != after) return false;
    }
  return true;
}

Relation derive_sd_surrogate(SignatureStore& store) {
  GenSet host_group = join_closure(store, GenSet::parse("abdefgh"));
  const OrbitPartition& part = store.partition(host_group, 4);

  static const int d4[8][4] = {
      {0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2},
      {3, 2, 1, 0}, {0, 3, 2, 1}, {1, 0, 3, 2}, {2, 1, 0, 3},
  };

  // The dihedral action permutes blocks; group the blocks into its orbits.
  std::uint32_t nblocks = part.classes;
  std::vector<std::uint32_t> orbit_of(nblocks);
  for (std::uint32_t b = 0; b < nblocks; ++b) orbit_of[b] = b;
  auto root = [&](std::uint32_t b) {
    while (orbit_of[b] != b) b = orbit_of[b] = orbit_of[orbit_of[b]];
    return b;
  };
  for (std::uint32_t c = 0; c < type_count(4); ++c) {
    KType t = KType::decode(4, c);
    for (const auto& sigma : d4) {
      std::uint32_t img = permute_args(t, sigma).code();
      std::uint32_t a = root(part.block_of[c]), b = root(part.block_of[img]);
      if (a != b) orbit_of[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::uint32_t> orbit_id(nblocks);
  std::vector<std::uint32_t> orbit_index;  // distinct roots, ascending
  for (std::uint32_t b = 0; b < nblocks; ++b) {
    std::uint32_t r = root(b);
    if (r == b) {
      orbit_id[b] = static_cast<std::uint32_t>(orbit_index.size());
      orbit_index.push_back(b);
    }
  }
  for (std::uint32_t b = 0; b < nblocks; ++b) orbit_id[b] = orbit_id[root(b)];
  std::size_t m = orbit_index.size();
  if (m > 24) throw std::runtime_error("surrogate search failure: dihedral block orbit count too large");

  std::vector<std::vector<std::uint32_t>> orbit_members(m);
  for (std::uint32_t c = 0; c < type_count(4); ++c)
    orbit_members[orbit_id[part.block_of[c]]].push_back(c);

  const OrbitPartition* against[3] = {&store.partition(GenSet{Gen::i}, 4),
                                      &store.partition(GenSet{Gen::j}, 4),
                                      &store.partition(GenSet{Gen::k}, 4)};

  std::vector<std::uint32_t> best;
  for (std::uint64_t pick = 1; pick + 1 < (1ull << m); ++pick) {
    std::vector<std::uint32_t> members;
    for (std::size_t o = 0; o < m; ++o)
      if ((pick >> o) & 1ull)
        members.insert(members.end(), orbit_members[o].begin(), orbit_members[o].end());
    std::sort(members.begin(), members.end());
    Relation cand{"SD", 4, members};
    bool rejected = false;
    for (const OrbitPartition* p : against)
      if (preserves(*p, cand)) {
        rejected = true;
        break;
      }
    if (rejected) continue;
    if (best.empty() || std::lexicographical_compare(cand.members.begin(), cand.members.end(),
                                                     best.begin(), best.end()))
      best = std::move(cand.members);
  }
  if (best.empty()) throw std::runtime_error("surrogate search failure: no candidate found");
  return Relation{"SD", 4, std::move(best)};
}

const std::array<std::string, 42>& canonical_row_order() {
  static const std::array<std::string, 42> order = {
      "a",    "b",    "c",     "d",     "e",     "f",     "g",       "h",   "i",
      "j",    "k",    "ab",    "ad",    "af",    "bc",    "be",      "cd",  "cf",
      "de",   "ef",   "ace",   "bdf",   "abce",  "acde",  "acef",    "abdf",
      "bcdf", "bdef", "abcdef", "dgh",  "adegh", "bdfgh", "abdefgh", "cei", "dfi",
      "cdefi", "aej", "bfj",   "abefj", "ack",   "bdk",   "abcdk",
  };
  return order;
}

PreservationTable build_preservation_table(SignatureStore& store, const Relation& sd) {
  std::vector<LatticeNode> nodes = enumerate_lattice(store);
  std::map<std::string, GenSet> by_label;
  for (const LatticeNode& n : nodes)
    if (!n.ideal.empty() && n.ideal != kAllGens) by_label[n.label] = n.ideal;

  std::vector<Relation> rels;
  for (const std::string& name : table_columns())
    rels.push_back(name == "SD" ? sd : named_relation(name));

  PreservationTable table;
  table.columns = table_columns();
  for (const std::string& label : canonical_row_order()) {
    auto it = by_label.find(label);
    if (it == by_label.end())
      throw std::runtime_error("classification violation: no computed group has label '" + label +
                               "'");
    std::array<bool, 15> row{};
    for (std::size_t c = 0; c < rels.size(); ++c)
      row[c] = preserves(store.partition(it->second, rels[c].arity), rels[c]);
    table.row_labels.push_back(label);
    table.cells.push_back(row);
  }
  return table;
}

}  // namespace reductlab
