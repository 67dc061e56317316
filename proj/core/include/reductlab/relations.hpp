#pragma once

#include <string>
#include <vector>

#include "reductlab/ktype.hpp"

namespace reductlab {

/// A relation of fixed arity stored extensionally as the exact set of types
/// satisfying it.  Nothing is assumed about symmetry or invariance; such
/// claims are checked by tests, never baked in.
struct Relation {
  std::string name;
  int arity = 1;
  std::vector<std::uint32_t> members;  // sorted ascending type codes

  bool contains(std::uint32_t code) const;
  bool contains(const KType& t) const { return contains(t.code()); }

  friend bool operator==(const Relation&, const Relation&) = default;
};

Relation make_relation(std::string name, int arity, std::vector<std::uint32_t> members);

// Names: E, <, N, T, Betw, Cycl, Sep, R3, R4, R5, BetwT, CyclT, SepT,
// R3l, R3u, SD.  SD is the dihedral closure of a 4-ary base relation and
// requires the s4 argument; requesting it without one throws.
Relation named_relation(const std::string& name, const Relation* s4 = nullptr);

// Union of the 8 dihedrally rearranged copies of a 4-ary relation.
Relation dihedral_closure(const Relation& r);

// Tournament arrow between positions i, j of a type: true iff the entry
// below the other one is adjacent to it, i.e. T(i, j) holds.
bool t_arrow(const KType& t, int i, int j);

// The 15 preservation-table column names, in table order.
const std::vector<std::string>& table_columns();

// {"name": str, "arity": int, "members": [codes ascending]}
std::string relation_to_json(const Relation& r);
Relation relation_from_json(const std::string& text);

}  // namespace reductlab
