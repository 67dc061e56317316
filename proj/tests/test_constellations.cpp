#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "reductlab/constellations.hpp"

using namespace reductlab;

namespace {
SignatureStore& store() {
  static SignatureStore s;
  return s;
}
const std::vector<Behavior> kf = {Behavior::Keep, Behavior::Flip};
}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(enumerate_constellations(1, LevelShape::Same, kf).size() == 2);
  CHECK(enumerate_constellations(2, LevelShape::Same, kf).size() == 16);
  CHECK(enumerate_constellations(2, LevelShape::Mixed, kf).size() == 8);
  CHECK(enumerate_constellations(3, LevelShape::Same, kf).size() == 512);
  CHECK(enumerate_constellations(3, LevelShape::Mixed, kf).size() == 64);
  std::vector<Behavior> all = {Behavior::Keep, Behavior::Flip, Behavior::EradicateEdges,
                               Behavior::EradicateNonEdges};
  CHECK(enumerate_constellations(1, LevelShape::Same, all).size() == 4);
  CHECK_THROWS_AS(enumerate_constellations(4, LevelShape::Same, kf), std::invalid_argument);

  std::set<std::string> distinct;
  for (const Constellation& c : enumerate_constellations(2, LevelShape::Same, kf))
    distinct.insert(c.describe());
  CHECK(distinct.size() == 16);
}

TEST_CASE("instantiate applies the entries") {
  const CaseRecord& keep = case_by_id("C2:a1");
  OrderedGraph base(3);
  base.set_edge(0, 2, true);
  auto [before, after] = instantiate(keep.constellation, {0, 1, 1}, base);
  CHECK(before == base);
  CHECK(after == base);

  const CaseRecord& a2 = case_by_id("C2:a2");
  OrderedGraph pair(2);
  pair.set_edge(0, 1, true);
  auto [b2, f2] = instantiate(a2.constellation, {0, 1}, pair);
  CHECK(b2.edge(0, 1));
  CHECK(!f2.edge(0, 1));  // the single cross pair is flipped
  OrderedGraph nopair(2);
  CHECK(instantiate(a2.constellation, {0, 1}, nopair).second.edge(0, 1));

  Constellation erad;
  erad.slots = {{0, Behavior::EradicateEdges}};
  erad.pairs = {};
  OrderedGraph tri(3);
  tri.set_edge(0, 1, true);
  tri.set_edge(1, 2, true);
  OrderedGraph wiped = instantiate(erad, {0, 0, 0}, tri).second;
  for (int u = 0; u < 3; ++u)
    for (int v = u + 1; v < 3; ++v) CHECK(!wiped.edge(u, v));
}

TEST_CASE("instantiate validates the interleave") {
  const CaseRecord& b3 = case_by_id("C2:b3");  // two levels
  OrderedGraph base(2);
  CHECK_THROWS_AS(instantiate(b3.constellation, {1, 0}, base), std::invalid_argument);
  CHECK_THROWS_AS(instantiate(b3.constellation, {0, 7}, base), std::invalid_argument);
  CHECK_THROWS_AS(instantiate(b3.constellation, {0}, base), std::invalid_argument);
}

TEST_CASE("all-keep instantiations compose to themselves") {
  const CaseRecord& keep = case_by_id("C3:a1");
  OrderedGraph base(4);
  base.set_edge(0, 3, true);
  base.set_edge(1, 2, true);
  std::vector<int> w = {0, 1, 2, 2};
  OrderedGraph once = instantiate(keep.constellation, w, base).second;
  OrderedGraph twice = instantiate(keep.constellation, w, once).second;
  CHECK(once == twice);
}

TEST_CASE("compatibility facts") {
  const CaseRecord& a1 = case_by_id("C2:a1");
  CHECK(check_compatible(a1.constellation, GenSet{}, 4, store()));

  const CaseRecord& a2 = case_by_id("C2:a2");
  CHECK(!check_compatible(a2.constellation, GenSet{}, 4, store()));
  CHECK(check_compatible(a2.constellation, GenSet{Gen::d}, 4, store()));
  CHECK(check_compatible(a2.constellation, GenSet{Gen::j}, 4, store()));

  // monotone in the group
  for (const char* id : {"C2:a2", "C2:a6", "C2:b3", "C3:b4"}) {
    const CaseRecord& rec = case_by_id(id);
    for (GenSet lo : op_nodes(store()))
      for (GenSet hi : op_nodes(store()))
        if (lo.subset_of(hi) && check_compatible(rec.constellation, lo, 3, store()))
          CHECK(check_compatible(rec.constellation, hi, 3, store()));
  }
}

TEST_CASE("eradicating entries force the order group at the compatibility level") {
  Constellation erad;
  erad.slots = {{0, Behavior::EradicateEdges}};
  CHECK(check_compatible(erad, GenSet::parse("cdghj"), 4, store()));
  CHECK(!check_compatible(erad, GenSet{}, 4, store()));

  Constellation erad2;
  erad2.slots = {{0, Behavior::Keep}, {1, Behavior::Keep}};
  erad2.pairs = {{Behavior::EradicateNonEdges, Behavior::EradicateNonEdges}};
  CHECK(check_compatible(erad2, GenSet::parse("cdghj"), 4, store()));
  CHECK(!check_compatible(erad2, GenSet{}, 4, store()));
}

TEST_CASE("the order-preserving sublattice has eight nodes") {
  std::vector<GenSet> ops = op_nodes(store());
  REQUIRE(ops.size() == 8);
  CHECK(ops.front() == GenSet{});
  CHECK(ops.back() == GenSet::parse("cdghj"));
}

TEST_CASE("classification of catalog cases") {
  auto minimal = [&](const std::string& id) {
    ClassifyResult r = classify_constellation(case_by_id(id).constellation, store());
    REQUIRE(r.minimal_compatible.size() == 1);
    return r.minimal_compatible[0];
  };
  CHECK(minimal("C2:a3") == GenSet::parse("cdghj"));  // full: only the order group fits
  CHECK(minimal("C2:b3") == GenSet::parse("cg"));
  CHECK(minimal("C2:b5") == GenSet::parse("ch"));
  CHECK(minimal("C2:a2") == GenSet::parse("d"));
  CHECK(minimal("C2:a1") == GenSet{});

  ClassifyResult r = classify_constellation(case_by_id("C2:b3").constellation, store());
  CHECK(r.forced_lower_bound.contains(Gen::g));
  CHECK(!r.forced_lower_bound.contains(Gen::j));
}

TEST_CASE("witness search") {
  const CaseRecord& a2 = case_by_id("C2:a2");
  for (const TargetTransform& t : claim_targets(GenSet{Gen::d}, 3)) {
    Witness w = witness_generates(a2.constellation, t, 3, 6);
    REQUIRE(w.found);
    CHECK(w.depth == 1);
  }

  const CaseRecord& a3 = case_by_id("C2:a3");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Witness w = witness_generates(a3.constellation, TargetTransform::pair_flip(3, i, j), 3, 6);
      REQUIRE(w.found);
      CHECK(w.depth <= 4);
    }

  const CaseRecord& keep = case_by_id("C2:a1");
  CHECK(!witness_generates(keep.constellation, TargetTransform::complement(3), 3, 6).found);
  Witness trivial = witness_generates(keep.constellation, TargetTransform::identity(3), 3, 6);
  CHECK(trivial.found);
  CHECK(trivial.depth == 0);
}

TEST_CASE("the four-embedding recipe flips exactly one pair") {
  // script: everything in the keep slot; one endpoint moved across; the
  // other endpoint moved across; both moved across
  const CaseRecord& a3 = case_by_id("C2:a3");
  std::vector<std::vector<int>> script = {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {1, 0, 1}};
  for (std::uint32_t bits = 0; bits < 8; ++bits) {
    OrderedGraph g(3);
    if (bits & 1) g.set_edge(0, 1, true);
    if (bits & 2) g.set_edge(0, 2, true);
    if (bits & 4) g.set_edge(1, 2, true);
    OrderedGraph cur = g;
    for (const auto& w : script) cur = instantiate(a3.constellation, w, cur).second;
    CHECK(cur.edge(0, 2) == !g.edge(0, 2));
    CHECK(cur.edge(0, 1) == g.edge(0, 1));
    CHECK(cur.edge(1, 2) == g.edge(1, 2));
  }
}

TEST_CASE("catalog shape and claims") {
  const std::vector<CaseRecord>& cat = case_catalog();
  CHECK(cat.size() == 41);
  std::set<std::string> ids;
  for (const CaseRecord& r : cat) {
    ids.insert(r.id);
    CHECK_NOTHROW(r.constellation.validate());
  }
  CHECK(ids.size() == cat.size());

  CHECK(case_by_id("C2:a2").claimed == GenSet{Gen::d});
  CHECK(case_by_id("C4:a1").claimed == GenSet{Gen::g});
  CHECK(case_by_id("C3:b2").claimed == GenSet{Gen::j});
  CHECK(case_by_id("C2:b5").claimed == GenSet{Gen::h});
  CHECK_THROWS_AS(case_by_id("C9:z9"), std::invalid_argument);

  int figure_only = 0;
  for (const CaseRecord& r : cat)
    if (r.source == ClaimSource::FigureOnly) ++figure_only;
  CHECK(figure_only == 7);
}

TEST_CASE("claimed groups are compatible at small arity") {
  for (const CaseRecord& rec : case_catalog())
    CHECK_MESSAGE(check_compatible(rec.constellation, rec.claimed, 3, store()), rec.id);
}
