#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>

#include "reductlab/ordered_graph.hpp"
#include "reductlab/relations.hpp"

using namespace reductlab;

namespace {

// Concrete first-order evaluation on host vertices, independent of the
// type-space constructors.
bool conc_T(const OrderedGraph& g, int x, int y) { return x != y && ((x < y) == g.edge(x, y)); }
bool conc_betw(int x, int y, int z) { return (x < y && y < z) || (z < y && y < x); }
bool conc_cycl(int x, int y, int z) {
  return (x < y && y < z) || (y < z && z < x) || (z < x && x < y);
}

bool concrete_eval(const std::string& name, const OrderedGraph& g, const std::vector<int>& t) {
  if (name == "E") return g.edge(t[0], t[1]);
  if (name == "<") return t[0] < t[1];
  if (name == "N") return !g.edge(t[0], t[1]);
  if (name == "T") return conc_T(g, t[0], t[1]);
  if (name == "Betw") return conc_betw(t[0], t[1], t[2]);
  if (name == "Cycl") return conc_cycl(t[0], t[1], t[2]);
  if (name == "Sep")
    return (conc_cycl(t[0], t[1], t[2]) && conc_cycl(t[0], t[3], t[1])) ||
           (conc_cycl(t[0], t[2], t[1]) && conc_cycl(t[0], t[1], t[3]));
  if (name == "R3" || name == "R4" || name == "R5") {
    int edges = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j)
        if (g.edge(t[i], t[j])) ++edges;
    return edges % 2 == 1;
  }
  if (name == "BetwT")
    return (conc_T(g, t[0], t[1]) && conc_T(g, t[1], t[2]) && conc_T(g, t[2], t[0])) ||
           (conc_T(g, t[2], t[1]) && conc_T(g, t[1], t[0]) && conc_T(g, t[0], t[2]));
  if (name == "CyclT")
    return (conc_T(g, t[0], t[1]) && conc_T(g, t[1], t[2]) && conc_T(g, t[2], t[0])) ||
           (conc_T(g, t[0], t[2]) && conc_T(g, t[2], t[1]) && conc_T(g, t[0], t[1])) ||
           (conc_T(g, t[1], t[0]) && conc_T(g, t[0], t[2]) && conc_T(g, t[1], t[2])) ||
           (conc_T(g, t[2], t[1]) && conc_T(g, t[1], t[0]) && conc_T(g, t[2], t[0]));
  if (name == "SepT") {
    int count = 0;
    for (int p = 0; p < 2; ++p)
      for (int q = 2; q < 4; ++q)
        if (conc_T(g, t[p], t[q])) ++count;
    return count % 2 == 0;
  }
  if (name == "R3l") return t[0] < t[1] && t[1] < t[2] && g.edge(t[0], t[2]) == g.edge(t[1], t[2]);
  if (name == "R3u") return t[0] < t[1] && t[1] < t[2] && g.edge(t[0], t[2]) == g.edge(t[0], t[1]);
  throw std::logic_error("no concrete evaluator for " + name);
}

}  // namespace

TEST_CASE("every named relation agrees with its concrete evaluation on all types") {
  std::vector<std::string> names = {"E",  "<",     "N",     "T",    "Betw", "Cycl", "Sep", "R3",
                                    "R4", "R5",    "BetwT", "CyclT", "SepT", "R3l",  "R3u"};
  for (const std::string& name : names) {
    Relation r = named_relation(name);
    for (const KType& t : enumerate_ktypes(r.arity)) {
      OrderedGraph g = graph_of_type(t);
      std::vector<int> tup = tuple_of_type(t);
      CHECK_MESSAGE(r.contains(t) == concrete_eval(name, g, tup),
                    name, " disagrees at ", t.to_string());
    }
  }
}

TEST_CASE("between relation holds exactly on monotone rank patterns") {
  Relation betw = named_relation("Betw");
  int members = 0;
  for (const KType& t : enumerate_ktypes(3)) {
    bool mono = (t.rank(0) == 0 && t.rank(1) == 1 && t.rank(2) == 2) ||
                (t.rank(0) == 2 && t.rank(1) == 1 && t.rank(2) == 0);
    CHECK(betw.contains(t) == mono);
    if (mono) ++members;
  }
  CHECK(members == 16);
  CHECK(betw.members.size() == 16);
}

TEST_CASE("tournament relation on pairs") {
  Relation t = named_relation("T");
  std::vector<std::uint32_t> want;
  for (const KType& ty : enumerate_ktypes(2)) {
    bool in = (ty.rank(0) == 0) == ty.edge(0, 1);
    if (in) want.push_back(ty.code());
  }
  CHECK(t.members == want);
  CHECK(t.members.size() == 2);
}

TEST_CASE("odd-edge relations") {
  Relation r3 = named_relation("R3");
  CHECK(r3.members.size() == 24);  // 6 orders x 4 odd graphs
  for (const KType& t : enumerate_ktypes(3))
    CHECK(r3.contains(t) == (__builtin_popcount(t.adj) % 2 == 1));
}

TEST_CASE("lower sporadic relation examples") {
  Relation r3l = named_relation("R3l");
  KType inc;  // increasing triple
  inc.k = 3;
  inc.ranks = {0, 1, 2, 0, 0};

  KType both = inc;
  both.adj = static_cast<std::uint16_t>((1u << pair_index(3, 0, 2)) | (1u << pair_index(3, 1, 2)));
  CHECK(r3l.contains(both));
  KType with_inner = both;
  with_inner.adj = static_cast<std::uint16_t>(both.adj | (1u << pair_index(3, 0, 1)));
  CHECK(r3l.contains(with_inner));  // inner pair is free
  KType lone = inc;
  lone.adj = static_cast<std::uint16_t>(1u << pair_index(3, 0, 2));
  CHECK(!r3l.contains(lone));
  KType decreasing = both;
  decreasing.ranks = {2, 1, 0, 0, 0};
  CHECK(!r3l.contains(decreasing));  // only increasing tuples belong
}

TEST_CASE("edge and non-edge families partition the 2-types") {
  Relation e = named_relation("E"), n = named_relation("N");
  for (const KType& t : enumerate_ktypes(2)) CHECK(e.contains(t) != n.contains(t));
}

namespace {
bool closed_under(const Relation& r, const std::vector<int>& sigma) {
  for (std::uint32_t c : r.members)
    if (!r.contains(permute_args(KType::decode(r.arity, c), sigma.data()))) return false;
  return true;
}
}  // namespace

TEST_CASE("defining symmetries hold") {
  CHECK(closed_under(named_relation("Betw"), {2, 1, 0}));
  CHECK(closed_under(named_relation("Cycl"), {1, 2, 0}));
  // fully symmetric parity relations
  for (const std::string& name : {"R3", "R4", "R5"}) {
    Relation r = named_relation(name);
    std::vector<int> sigma(static_cast<std::size_t>(r.arity));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      CHECK(closed_under(r, sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  CHECK(closed_under(named_relation("SepT"), {1, 0, 2, 3}));
  CHECK(closed_under(named_relation("SepT"), {0, 1, 3, 2}));
  CHECK(closed_under(named_relation("Sep"), {1, 0, 2, 3}));
}

TEST_CASE("dihedral closure") {
  Relation r4 = named_relation("R4");
  Relation closed = dihedral_closure(r4);
  CHECK(closed.members == r4.members);  // already symmetric

  for (std::uint32_t seed : {0u, 77u, 901u}) {
    Relation single{"one", 4, {seed}};
    Relation orbit = dihedral_closure(single);
    CHECK(orbit.members.size() <= 8);
    CHECK(8 % orbit.members.size() == 0);
    CHECK(orbit.contains(seed));
    Relation twice = dihedral_closure(orbit);
    CHECK(twice.members == orbit.members);
  }

  Relation bad{"bad", 3, {0}};
  CHECK_THROWS_AS(dihedral_closure(bad), std::invalid_argument);
}

TEST_CASE("SD requires a base relation") {
  CHECK_THROWS_AS(named_relation("SD"), std::invalid_argument);
  Relation base{"S4", 4, {0, 1, 2}};
  Relation sd = named_relation("SD", &base);
  CHECK(sd.name == "SD");
  CHECK(sd.arity == 4);
  for (std::uint32_t c : base.members) CHECK(sd.contains(c));
}

TEST_CASE("unknown relation name") {
  CHECK_THROWS_AS(named_relation("Foo"), std::invalid_argument);
}

TEST_CASE("relation JSON round-trip") {
  Relation r = named_relation("R3l");
  Relation back = relation_from_json(relation_to_json(r));
  CHECK(back == r);
  CHECK(relation_to_json(r).find("\"members\"") != std::string::npos);
}

TEST_CASE("table columns") {
  CHECK(table_columns().size() == 15);
  CHECK(table_columns().front() == "E");
  CHECK(table_columns().back() == "SD");
}
