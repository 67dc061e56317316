#include "reductlab/relations.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <json.hpp>

namespace reductlab {

bool Relation::contains(std::uint32_t code) const {
  return std::binary_search(members.begin(), members.end(), code);
}

Relation make_relation(std::string name, int arity, std::vector<std::uint32_t> members) {
  require_arity(arity);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.back() >= type_count(arity))
    throw std::out_of_range("relation member out of range for arity " + std::to_string(arity));
  return Relation{std::move(name), arity, std::move(members)};
}

bool t_arrow(const KType& t, int i, int j) {
  return (t.rank(i) < t.rank(j)) == t.edge(i, j);
}

namespace {

bool betw_ranks(int a, int b, int c) { return (a < b && b < c) || (c < b && b < a); }
bool cycl_ranks(int a, int b, int c) {
  return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
}

Relation build(const std::string& name, int arity, const std::function<bool(const KType&)>& pred) {
  std::vector<std::uint32_t> members;
  for (std::uint32_t c = 0; c < type_count(arity); ++c) {
    KType t = KType::decode(arity, c);
    if (pred(t)) members.push_back(c);
  }
  return Relation{name, arity, std::move(members)};
}

}  // namespace

Relation named_relation(const std::string& name, const Relation* s4) {
  if (name == "E") return build(name, 2, [](const KType& t) { return t.edge(0, 1); });
  if (name == "<") return build(name, 2, [](const KType& t) { return t.rank(0) < t.rank(1); });
  if (name == "N") return build(name, 2, [](const KType& t) { return !t.edge(0, 1); });
  if (name == "T") return build(name, 2, [](const KType& t) { return t_arrow(t, 0, 1); });
  if (name == "Betw")
    return build(name, 3, [](const KType& t) { return betw_ranks(t.rank(0), t.rank(1), t.rank(2)); });
  if (name == "Cycl")
    return build(name, 3, [](const KType& t) { return cycl_ranks(t.rank(0), t.rank(1), t.rank(2)); });
  if (name == "Sep")
    return build(name, 4, [](const KType& t) {
      int x = t.rank(0), y = t.rank(1), u = t.rank(2), v = t.rank(3);
      return (cycl_ranks(x, y, u) && cycl_ranks(x, v, y)) ||
             (cycl_ranks(x, u, y) && cycl_ranks(x, y, v));
    });
  if (name == "R3" || name == "R4" || name == "R5") {
    int arity = name[1] - '0';
    return build(name, arity, [](const KType& t) {
      return __builtin_popcount(t.adj) % 2 == 1;
    });
  }
  if (name == "BetwT")
    return build(name, 3, [](const KType& t) {
      return (t_arrow(t, 0, 1) && t_arrow(t, 1, 2) && t_arrow(t, 2, 0)) ||
             (t_arrow(t, 2, 1) && t_arrow(t, 1, 0) && t_arrow(t, 0, 2));
    });
  if (name == "CyclT")
    return build(name, 3, [](const KType& t) {
      return (t_arrow(t, 0, 1) && t_arrow(t, 1, 2) && t_arrow(t, 2, 0)) ||
             (t_arrow(t, 0, 2) && t_arrow(t, 2, 1) && t_arrow(t, 0, 1)) ||
             (t_arrow(t, 1, 0) && t_arrow(t, 0, 2) && t_arrow(t, 1, 2)) ||
             (t_arrow(t, 2, 1) && t_arrow(t, 1, 0) && t_arrow(t, 2, 0));
    });
  if (name == "SepT")
    return build(name, 4, [](const KType& t) {
      int count = 0;
      for (int p = 0; p < 2; ++p)
        for (int q = 2; q < 4; ++q)
          if (t_arrow(t, p, q)) ++count;
      return count % 2 == 0;
    });
  if (name == "R3l")
    return build(name, 3, [](const KType& t) {
      return t.rank(0) == 0 && t.rank(1) == 1 && t.rank(2) == 2 &&
             t.edge(0, 2) == t.edge(1, 2);
    });
  if (name == "R3u")
    return build(name, 3, [](const KType& t) {
      return t.rank(0) == 0 && t.rank(1) == 1 && t.rank(2) == 2 &&
             t.edge(0, 2) == t.edge(0, 1);
    });
  if (name == "SD") {
    if (s4 == nullptr)
      throw std::invalid_argument("named_relation: SD requires a 4-ary base relation");
    Relation r = dihedral_closure(*s4);
    r.name = "SD";
    return r;
  }
  throw std::invalid_argument("named_relation: unknown relation name '" + name + "'");
}

Relation dihedral_closure(const Relation& r) {
  if (r.arity != 4)
    throw std::invalid_argument("dihedral_closure: relation must have arity 4");
  // D4 on positions 0..3, generated by the 4-cycle and the reversal.
  static const int d4[8][4] = {
      {0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2},
      {3, 2, 1, 0}, {0, 3, 2, 1}, {1, 0, 3, 2}, {2, 1, 0, 3},
  };
  std::vector<std::uint32_t> members;
  for (std::uint32_t c = 0; c < type_count(4); ++c) {
    KType t = KType::decode(4, c);
    for (const auto& sigma : d4) {
      if (r.contains(permute_args(t, sigma))) {
        members.push_back(c);
        break;
      }
    }
  }
  return Relation{r.name + "^D", 4, std::move(members)};
}

const std::vector<std::string>& table_columns() {
  static const std::vector<std::string> cols = {
      "E",  "R3",    "R4",    "R5",   "<",   "Betw", "Cycl", "Sep",
      "T",  "BetwT", "CyclT", "SepT", "R3l", "R3u",  "SD",
  };
  return cols;
}

std::string relation_to_json(const Relation& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["arity"] = r.arity;
  j["members"] = r.members;
  return j.dump();
}

Relation relation_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  return make_relation(j.at("name").get<std::string>(), j.at("arity").get<int>(),
                       j.at("members").get<std::vector<std::uint32_t>>());
}

}  // namespace reductlab
