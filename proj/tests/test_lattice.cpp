#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "reductlab/lattice.hpp"
#include "reductlab/verify.hpp"

using namespace reductlab;

namespace {
SignatureStore& store() {
  static SignatureStore s;
  return s;
}
std::vector<LatticeNode>& nodes() {
  static std::vector<LatticeNode> n = enumerate_lattice(store());
  return n;
}
ExpectedTable& expected() {
  static ExpectedTable t =
      load_expected_table(std::string(REDUCTLAB_FIXTURE_DIR) + "/preservation_table.tsv");
  return t;
}
}  // namespace

TEST_CASE("containment order of the generators") {
  CHECK(ji_below(store(), Gen::c, Gen::g));
  CHECK(ji_below(store(), Gen::c, Gen::h));
  CHECK(ji_below(store(), Gen::c, Gen::j));
  CHECK(ji_below(store(), Gen::g, Gen::j));
  CHECK(ji_below(store(), Gen::a, Gen::i));
  CHECK(ji_below(store(), Gen::b, Gen::i));
  CHECK(ji_below(store(), Gen::e, Gen::k));
  CHECK(ji_below(store(), Gen::f, Gen::k));
  CHECK(!ji_below(store(), Gen::a, Gen::j));
  CHECK(!ji_below(store(), Gen::d, Gen::i));
  CHECK(!ji_below(store(), Gen::g, Gen::k));
}

TEST_CASE("join closures") {
  CHECK(join_closure(store(), GenSet::parse("gh")) == GenSet::parse("cdgh"));
  CHECK(join_closure(store(), GenSet::parse("a")) == GenSet::parse("a"));
  CHECK(join_closure(store(), GenSet::parse("i")) == GenSet::parse("abi"));
  CHECK(join_closure(store(), GenSet{}) == GenSet{});
  CHECK(join_closure(store(), GenSet::parse("bd")) == GenSet::parse("bdf"));
  CHECK(join_closure(store(), GenSet::parse("ae")) == GenSet::parse("ace"));
  CHECK(join_closure(store(), GenSet::parse("cdg")).contains(Gen::h));
  CHECK(join_closure(store(), GenSet::parse("j")) == GenSet::parse("cdghj"));
  CHECK(join_closure(store(), GenSet::parse("k")) == GenSet::parse("efk"));
}

TEST_CASE("lattice has 44 nodes, 42 proper non-trivial") {
  CHECK(nodes().size() == 44);
  int proper = 0;
  for (const LatticeNode& n : nodes())
    if (!n.ideal.empty() && n.ideal != kAllGens) ++proper;
  CHECK(proper == 42);
}

TEST_CASE("labels are the maximal members and match the expected rows") {
  CHECK(node_label(store(), GenSet::parse("cdgh")) == "dgh");
  CHECK(node_label(store(), GenSet::parse("abcei")) == "cei");
  CHECK(node_label(store(), GenSet::parse("abdfi")) == "dfi");
  CHECK(node_label(store(), kAllGens) == "ijk");

  std::multiset<std::string> got, want;
  for (const LatticeNode& n : nodes())
    if (!n.ideal.empty() && n.ideal != kAllGens) got.insert(n.label);
  for (const std::string& l : expected().row_labels) want.insert(l);
  CHECK(got == want);
}

TEST_CASE("every node is closed and signatures are pairwise distinct") {
  std::set<Signature> sigs;
  for (const LatticeNode& n : nodes()) {
    CHECK(join_closure(store(), n.ideal) == n.ideal);
    sigs.insert(n.sig);
  }
  CHECK(sigs.size() == nodes().size());
}

TEST_CASE("the five ideals through each large generator") {
  auto family = [&](Gen g) {
    std::set<std::string> labels;
    for (const LatticeNode& n : nodes())
      if (n.ideal.contains(g)) labels.insert(n.label);
    return labels;
  };
  CHECK(family(Gen::j) == std::set<std::string>{"j", "aej", "bfj", "abefj", "ijk"});
  CHECK(family(Gen::i) == std::set<std::string>{"i", "cei", "dfi", "cdefi", "ijk"});
  CHECK(family(Gen::k) == std::set<std::string>{"k", "ack", "bdk", "abcdk", "ijk"});
}

TEST_CASE("atom pattern law") {
  GenSet first = GenSet::parse("ace"), second = GenSet::parse("bdf");
  for (const LatticeNode& n : nodes()) {
    int c1 = n.ideal.intersect(first).size();
    int c2 = n.ideal.intersect(second).size();
    CHECK((c1 == 0 || c1 == 1 || c1 == 3));
    CHECK((c2 == 0 || c2 == 1 || c2 == 3));
  }
}

TEST_CASE("hasse diagram") {
  auto edges = hasse_edges(nodes());
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(nodes().size()); ++i) {
    index[nodes()[static_cast<std::size_t>(i)].label.empty()
              ? "bottom"
              : nodes()[static_cast<std::size_t>(i)].label] = i;
  }
  std::set<std::string> bottom_covers;
  for (auto [u, v] : edges)
    if (u == index["bottom"]) bottom_covers.insert(nodes()[static_cast<std::size_t>(v)].label);
  CHECK(bottom_covers == std::set<std::string>{"a", "b", "c", "d", "e", "f"});

  auto has_edge = [&](const std::string& a, const std::string& b) {
    for (auto [u, v] : edges)
      if (u == index[a] && v == index[b]) return true;
    return false;
  };
  CHECK(has_edge("g", "dgh"));
  CHECK(!has_edge("a", "b"));
  CHECK(!has_edge("b", "a"));

  // transitively reduced: no covering edge is shadowed by a two-step path
  std::set<std::pair<int, int>> eset(edges.begin(), edges.end());
  for (auto [u, v] : edges)
    for (auto [u2, w] : edges)
      if (u2 == u) CHECK(eset.count({w, v}) == 0);
}

TEST_CASE("containment equals signature refinement at every arity") {
  for (const LatticeNode& a : nodes())
    for (const LatticeNode& b : nodes()) {
      bool contained = a.ideal.subset_of(b.ideal);
      bool refined = true;
      for (int k = 1; k <= kMaxArity && refined; ++k)
        refined = refines(store().interned(a.sig[k - 1]), store().interned(b.sig[k - 1]));
      CHECK(contained == refined);
    }
}

TEST_CASE("meets and joins stay inside the 44 nodes") {
  std::set<std::uint16_t> members;
  for (const LatticeNode& n : nodes()) members.insert(n.ideal.bits);
  for (const LatticeNode& a : nodes())
    for (const LatticeNode& b : nodes()) {
      CHECK(members.count(join_closure(store(), a.ideal.union_with(b.ideal)).bits) == 1);
      CHECK(members.count(a.ideal.intersect(b.ideal).bits) == 1);
    }
}

TEST_CASE("lattice automorphisms") {
  std::array<Gen, kGenCount> identity{};
  for (int g = 0; g < kGenCount; ++g) identity[static_cast<std::size_t>(g)] = static_cast<Gen>(g);
  CHECK(check_lattice_automorphism(store(), identity));

  auto with_swaps = [&identity](std::initializer_list<std::pair<Gen, Gen>> swaps) {
    std::array<Gen, kGenCount> p = identity;
    for (auto [x, y] : swaps) {
      p[static_cast<std::size_t>(x)] = y;
      p[static_cast<std::size_t>(y)] = x;
    }
    return p;
  };
  CHECK(check_lattice_automorphism(store(), with_swaps({{Gen::g, Gen::h}})));
  CHECK(check_lattice_automorphism(
      store(), with_swaps({{Gen::i, Gen::k}, {Gen::a, Gen::e}, {Gen::b, Gen::f}})));
  CHECK(!check_lattice_automorphism(store(), with_swaps({{Gen::a, Gen::b}})));
}

TEST_CASE("surrogate relation") {
  Relation sd = derive_sd_surrogate(store());
  CHECK(sd.arity == 4);
  CHECK(!sd.members.empty());
  CHECK(sd.members.size() < type_count(4));

  // dihedrally closed
  CHECK(dihedral_closure(sd).members == sd.members);
  // preserved by no large generator
  for (Gen g : {Gen::i, Gen::j, Gen::k})
    CHECK(!preserves(store().partition(GenSet{g}, 4), sd));
  // preserved by everything below the join of a,b,d,e,f,g,h
  for (const LatticeNode& n : nodes())
    if (n.ideal.subset_of(GenSet::parse("abcdefgh")))
      CHECK(preserves(store().partition(n.ideal, 4), sd));
  // deterministic
  CHECK(derive_sd_surrogate(store()).members == sd.members);
}

TEST_CASE("preservation table matches the expected fixture") {
  Relation sd = derive_sd_surrogate(store());
  PreservationTable table = build_preservation_table(store(), sd);
  REQUIRE(table.row_labels.size() == 42);
  CHECK(table.row_labels ==
        std::vector<std::string>(canonical_row_order().begin(), canonical_row_order().end()));
  CHECK(table.row_labels == expected().row_labels);
  int mismatched = 0;
  for (std::size_t r = 0; r < 42; ++r)
    for (int c = 0; c < 15; ++c)
      if (table.cells[r][c] != expected().cells[r][c]) ++mismatched;
  CHECK(mismatched == 0);

  // no two rows share the full 15-column profile
  std::set<std::array<bool, 15>> profiles(table.cells.begin(), table.cells.end());
  CHECK(profiles.size() == 42);
}

TEST_CASE("orbit partitions refine the bold-relation membership profiles") {
  Relation sd = derive_sd_surrogate(store());
  std::map<std::string, GenSet> by_label;
  for (const LatticeNode& n : nodes()) by_label[n.label] = n.ideal;

  for (std::size_t r = 0; r < expected().row_labels.size(); ++r) {
    GenSet ideal = by_label.at(expected().row_labels[r]);
    for (int arity = 2; arity <= 5; ++arity) {
      // membership-profile partition for the row's bold relations of this arity
      std::vector<Relation> owned;
      for (int c = 0; c < 15; ++c) {
        if (!expected().bold[r][c]) continue;
        owned.push_back(table_columns()[static_cast<std::size_t>(c)] == "SD"
                            ? sd
                            : named_relation(table_columns()[static_cast<std::size_t>(c)]));
        if (owned.back().arity != arity) owned.pop_back();
      }
      if (owned.empty()) continue;
      OrbitPartition profile;
      profile.arity = arity;
      profile.block_of.resize(type_count(arity));
      std::map<std::uint32_t, std::uint32_t> ids;
      for (std::uint32_t code = 0; code < type_count(arity); ++code) {
        std::uint32_t key = 0;
        for (std::size_t i = 0; i < owned.size(); ++i)
          if (owned[i].contains(code)) key |= 1u << i;
        auto [it, inserted] = ids.emplace(key, static_cast<std::uint32_t>(ids.size()));
        profile.block_of[code] = it->second;
      }
      profile.classes = static_cast<std::uint32_t>(ids.size());
      CHECK(refines(store().partition(ideal, arity), profile));
    }
  }
}
