#include "reductlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace reductlab {

void Config::validate() const {
  if (max_arity < 1 || max_arity > kMaxArity)
    throw std::invalid_argument("config: max_arity must be in 1..5");
  if (witness_depth < 1 || witness_depth > 8)
    throw std::invalid_argument("config: witness_depth must be in 1..8");
  if (oracle_host_size < 1) throw std::invalid_argument("config: oracle_host_size must be >= 1");
  if (parallelism < 0) throw std::invalid_argument("config: parallelism must be >= 0");
}

ExpectedTable load_expected_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open expected table fixture: " + path);
  ExpectedTable t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t pos = 0;
    for (;;) {
      std::size_t tab = line.find('\t', pos);
      fields.push_back(line.substr(pos, tab == std::string::npos ? tab : tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (fields.size() != 16)
      throw std::runtime_error("expected table fixture: bad row '" + line + "'");
    std::array<bool, 15> cells{}, bold{};
    for (int c = 0; c < 15; ++c) {
      const std::string& f = fields[static_cast<std::size_t>(c) + 1];
      if (f.empty()) continue;
      if (f == "x") cells[c] = true;
      else if (f == "X") cells[c] = bold[c] = true;
      else throw std::runtime_error("expected table fixture: bad cell '" + f + "'");
    }
    t.row_labels.push_back(fields[0]);
    t.cells.push_back(cells);
    t.bold.push_back(bold);
  }
  if (t.row_labels.size() != 42)
    throw std::runtime_error("expected table fixture: want 42 rows, got " +
                             std::to_string(t.row_labels.size()));
  return t;
}

bool VerifyReport::pass(bool strict) const {
  for (const CheckResult& c : checks)
    if (!c.pass && (strict || !c.finding_only)) return false;
  return true;
}

std::string VerifyReport::summary(bool strict) const {
  std::ostringstream out;
  for (const CheckResult& c : checks) {
    const char* tag = c.pass ? "PASS" : (c.finding_only && !strict ? "FINDING" : "FAIL");
    out << "[" << tag << "] " << c.id << " " << c.name;
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2fs)", c.seconds);
    out << buf;
    if (!c.pass && !c.details.empty()) out << "\n    " << c.details;
    out << "\n";
  }
  return out.str();
}

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// 4-subtype of a 5-type with one position dropped.
std::uint32_t subtype_code(const KType& t, int drop) {
  KType s;
  s.k = t.k - 1;
  int out = 0;
  for (int i = 0; i < t.k; ++i) {
    if (i == drop) continue;
    std::uint8_t r = t.ranks[i];
    if (r > t.ranks[drop]) --r;
    s.ranks[out++] = r;
  }
  out = 0;
  std::array<int, kMaxArity> keep{};
  for (int i = 0; i < t.k; ++i)
    if (i != drop) keep[out++] = i;
  for (int i = 0; i < s.k; ++i)
    for (int j = i + 1; j < s.k; ++j)
      if (t.edge(keep[i], keep[j]))
        s.adj = static_cast<std::uint16_t>(s.adj | (1u << pair_index(s.k, i, j)));
  return s.code();
}

std::string join_labels(const std::set<std::string>& labels) {
  std::string out;
  for (const std::string& l : labels) {
    if (!out.empty()) out += ',';
    out += l;
  }
  return out;
}

}  // namespace

VerifyReport run_verification(SignatureStore& store, const Config& cfg) {
  cfg.validate();
  VerifyReport report;
  auto add = [&report](std::string id, std::string name, bool pass, std::string details,
                       double seconds, bool finding_only = false) {
    report.checks.push_back(
        {std::move(id), std::move(name), pass, finding_only, std::move(details), seconds});
  };

  ExpectedTable expected = load_expected_table(cfg.fixture_path);

  // C1/C2: preservation table against the expected fixture.
  Relation sd{"SD", 4, {}};
  PreservationTable table;
  {
    Timer timer;
    std::string details;
    bool ok = true;
    bool sd_ok = true;
    std::string sd_details;
    double t1 = 0;
    try {
      sd = derive_sd_surrogate(store);
      table = build_preservation_table(store, sd);
      int mismatches = 0;
      if (table.row_labels != expected.row_labels) {
        ok = false;
        details = "row label sequence differs from fixture";
      } else {
        for (std::size_t r = 0; r < table.cells.size(); ++r) {
          for (int c = 0; c < 14; ++c) {  // all columns except the last (SD)
            if (table.cells[r][c] != expected.cells[r][c]) {
              ok = false;
              if (++mismatches <= 5)
                details += (details.empty() ? "" : "; ") + table.row_labels[r] + "/" +
                           table.columns[static_cast<std::size_t>(c)];
            }
          }
          if (table.cells[r][14] != expected.cells[r][14]) {
            sd_ok = false;
            if (sd_details.size() < 120)
              sd_details += (sd_details.empty() ? "surrogate column differs at " : ", ") +
                            table.row_labels[r];
          }
        }
        if (mismatches > 5) details += "; ... " + std::to_string(mismatches) + " cells differ";
      }
    } catch (const std::exception& e) {
      ok = false;
      sd_ok = false;
      details = e.what();
      sd_details = "table build failed";
    }
    t1 = timer.seconds();
    add("C1", "preservation table reproduction (42x14, surrogate column excluded)", ok, details,
        t1);
    add("C2", "surrogate column matches the expected final column (finding unless strict)", sd_ok,
        sd_details, 0.0, true);
  }

  // C3: lattice counts and labels.
  std::vector<LatticeNode> nodes;
  {
    Timer timer;
    bool ok = true;
    std::string details;
    try {
      nodes = enumerate_lattice(store);
      std::multiset<std::string> got, want;
      for (const LatticeNode& n : nodes)
        if (!n.ideal.empty() && n.ideal != kAllGens) got.insert(n.label);
      want.insert(expected.row_labels.begin(), expected.row_labels.end());
      if (got != want) {
        ok = false;
        details = "computed label multiset differs from the 42 expected row labels";
      }
      std::set<Signature> sigs;
      for (const LatticeNode& n : nodes) sigs.insert(n.sig);
      if (sigs.size() != nodes.size()) {
        ok = false;
        details += std::string(details.empty() ? "" : "; ") + "signatures not pairwise distinct";
      }
    } catch (const std::exception& e) {
      ok = false;
      details = e.what();
    }
    add("C3", "lattice enumeration: 44 groups, 42 proper non-trivial, labels match", ok, details,
        timer.seconds());
  }

  // C4: ideal family counts and the atom-pattern law.
  {
    Timer timer;
    bool ok = !nodes.empty();
    std::string details = nodes.empty() ? "lattice unavailable" : "";
    if (ok) {
      auto family = [&](Gen g) {
        std::set<std::string> labels;
        for (const LatticeNode& n : nodes)
          if (n.ideal.contains(g)) labels.insert(n.label.empty() ? "(bottom)" : n.label);
        return labels;
      };
      std::set<std::string> i_family = family(Gen::i), j_family = family(Gen::j),
                            k_family = family(Gen::k);
      if (i_family.size() != 5 || j_family.size() != 5 || k_family.size() != 5) {
        ok = false;
        details += "i/j/k family sizes " + std::to_string(i_family.size()) + "/" +
                   std::to_string(j_family.size()) + "/" + std::to_string(k_family.size());
      }
      std::set<std::string> gh_without_j, gh_with_j;
      for (const LatticeNode& n : nodes) {
        if (n.ideal.empty() || n.ideal == kAllGens) continue;
        if (!n.ideal.contains(Gen::g) && !n.ideal.contains(Gen::h)) continue;
        (n.ideal.contains(Gen::j) ? gh_with_j : gh_without_j).insert(n.label);
      }
      std::set<std::string> want_without = {"g", "h", "dgh", "adegh", "bdfgh", "abdefgh"};
      std::set<std::string> want_with = {"j", "aej", "bfj", "abefj"};
      if (gh_without_j != want_without || gh_with_j != want_with) {
        ok = false;
        details += std::string(details.empty() ? "" : "; ") + "g/h family mismatch: got {" +
                   join_labels(gh_without_j) + "} plus j-overlap {" + join_labels(gh_with_j) + "}";
      }
      GenSet first = GenSet::parse("cae"), second = GenSet::parse("dbf");
      for (const LatticeNode& n : nodes) {
        int c1 = n.ideal.intersect(first).size();
        int c2 = n.ideal.intersect(second).size();
        if ((c1 != 0 && c1 != 1 && c1 != 3) || (c2 != 0 && c2 != 1 && c2 != 3)) {
          ok = false;
          details += std::string(details.empty() ? "" : "; ") + "atom pattern violated at " +
                     (n.label.empty() ? "(bottom)" : n.label);
        }
      }
    }
    add("C4", "ideal family counts (i/j/k = 5 each, g/h family) and atom-pattern law", ok, details,
        timer.seconds());
  }

  // C5: lattice symmetry.
  {
    Timer timer;
    std::array<Gen, kGenCount> identity{};
    for (int g = 0; g < kGenCount; ++g) identity[static_cast<std::size_t>(g)] = static_cast<Gen>(g);
    auto swapped = [&identity](std::initializer_list<std::pair<Gen, Gen>> swaps) {
      std::array<Gen, kGenCount> p = identity;
      for (auto [x, y] : swaps) {
        p[static_cast<std::size_t>(x)] = y;
        p[static_cast<std::size_t>(y)] = x;
      }
      return p;
    };
    bool ok = true;
    std::string details;
    try {
      if (!check_lattice_automorphism(store, identity)) {
        ok = false;
        details += "identity rejected; ";
      }
      if (!check_lattice_automorphism(store, swapped({{Gen::g, Gen::h}}))) {
        ok = false;
        details += "(g h) rejected; ";
      }
      if (!check_lattice_automorphism(
              store, swapped({{Gen::i, Gen::k}, {Gen::a, Gen::e}, {Gen::b, Gen::f}}))) {
        ok = false;
        details += "(ik)(ae)(bf) rejected; ";
      }
      if (check_lattice_automorphism(store, swapped({{Gen::a, Gen::b}}))) {
        ok = false;
        details += "(a b) wrongly accepted; ";
      }
    } catch (const std::exception& e) {
      ok = false;
      details = e.what();
    }
    add("C5", "lattice symmetry: identity, (g h), (ik)(ae)(bf) pass; (a b) fails", ok, details,
        timer.seconds());
  }

  // C6: atoms cover the bottom.
  {
    Timer timer;
    bool ok = !nodes.empty();
    std::string details = nodes.empty() ? "lattice unavailable" : "";
    if (ok) {
      int bottom = -1;
      for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].ideal.empty()) bottom = static_cast<int>(i);
      std::set<std::string> covers;
      for (auto [u, v] : hasse_edges(nodes))
        if (u == bottom) covers.insert(nodes[static_cast<std::size_t>(v)].label);
      std::set<std::string> want = {"a", "b", "c", "d", "e", "f"};
      if (bottom < 0 || covers != want) {
        ok = false;
        details = "bottom covers {" + join_labels(covers) + "}";
      }
    }
    add("C6", "bottom is covered by exactly the six atoms a..f", ok, details, timer.seconds());
  }

  // C7: composition identity at graph level plus the signature identity.
  {
    Timer timer;
    bool ok = true;
    std::string details;
    for (int n = 1; n <= 12 && ok; ++n) {
      OrderedGraph host = build_bit_graph(n);
      for (int cut = 0; cut <= n && ok; ++cut) {
        TransformParam p;
        p.cut = cut;
        OrderedGraph lhs =
            concrete_transform(Gen::c, {}, concrete_transform(Gen::g, p, concrete_transform(Gen::h, p, host)));
        TransformParam sw;
        for (int v = 0; v < cut; ++v) sw.switch_set.push_back(v);
        OrderedGraph rhs = concrete_transform(Gen::d, sw, host);
        if (!(lhs == rhs)) {
          ok = false;
          details = "composite differs from the cut switch at n=" + std::to_string(n) +
                    " cut=" + std::to_string(cut);
        }
      }
    }
    if (ok && !store.same_signature(GenSet::parse("gh"), GenSet::parse("cdgh"))) {
      ok = false;
      details = "signature(gh) != signature(cdgh)";
    }
    add("C7", "complement-below-above composite equals the cut switch; signature(gh)=signature(cdgh)",
        ok, details, timer.seconds());
  }

  // C8: oracle equivalence for the deterministic singletons.
  {
    Timer timer;
    bool ok = true;
    std::string details;
    try {
      for (int l = 0; l < 8 && ok; ++l) {
        GenSet gs{static_cast<Gen>(l)};
        for (int k = 1; k <= 3 && ok; ++k) {
          OrbitPartition oracle = oracle_orbits(gs, k, cfg.oracle_host_size, 4);
          if (!(oracle == store.partition(gs, k))) {
            ok = false;
            details = std::string("oracle disagrees with the engine for label ") +
                      gen_char(static_cast<Gen>(l)) + " at arity " + std::to_string(k);
          }
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      details = e.what();
    }
    add("C8", "oracle orbit partitions equal engine partitions (singletons a..h, arity <= 3)", ok,
        details, timer.seconds());
  }

  // C9: constellation case catalog.
  {
    Timer timer;
    bool ok = true;
    std::string details;
    std::string findings;
    for (const CaseRecord& rec : case_catalog()) {
      std::string problem;
      if (!check_compatible(rec.constellation, rec.claimed, 4, store))
        problem = "incompatible with claimed group";
      int worst_depth = 0;
      for (int m = 3; m <= 4 && problem.empty(); ++m) {
        for (const TargetTransform& t : claim_targets(rec.claimed, m)) {
          Witness w = witness_generates(rec.constellation, t, m, cfg.witness_depth);
          if (!w.found) {
            problem = "witness exhausted for " + t.name + " on " + std::to_string(m) + " points";
            break;
          }
          worst_depth = std::max(worst_depth, w.depth);
        }
      }
      if (problem.empty() && rec.id == "C2:a2" && worst_depth != 1)
        problem = "expected depth-1 witnesses, got depth " + std::to_string(worst_depth);
      if (problem.empty() && rec.id == "C2:a3" && worst_depth > 4)
        problem = "expected witnesses within depth 4, got " + std::to_string(worst_depth);
      if (!problem.empty()) {
        if (rec.source == ClaimSource::Prose) {
          ok = false;
          details += (details.empty() ? "" : "; ") + rec.id + ": " + problem;
        } else {
          findings += (findings.empty() ? "" : "; ") + rec.id + " (figure-only): " + problem;
        }
      }
    }
    if (!findings.empty())
      details += (details.empty() ? "reconstructed-geometry findings: " : "; findings: ") + findings;
    add("C9", "case catalog: compatibility and generation witnesses for every record", ok, details,
        timer.seconds());
  }

  // C10: 4-ary determination of 5-type orbits for the order-preserving groups.
  {
    Timer timer;
    bool ok = true;
    std::string details;
    std::vector<std::array<std::uint32_t, 5>> drop(type_count(5));
    for (std::uint32_t c = 0; c < type_count(5); ++c) {
      KType t = KType::decode(5, c);
      for (int i = 0; i < 5; ++i) drop[c][static_cast<std::size_t>(i)] = subtype_code(t, i);
    }
    GenSet op = GenSet::parse("cdghj");
    for (std::uint32_t m = 0; m < (1u << kGenCount) && ok; ++m) {
      GenSet gs{static_cast<std::uint16_t>(m)};
      if (!gs.subset_of(op)) continue;
      const OrbitPartition& p5 = store.partition(gs, 5);
      const OrbitPartition& p4 = store.partition(gs, 4);
      std::map<std::array<std::uint32_t, 5>, std::uint32_t> block_of_profile;
      std::vector<std::array<std::uint32_t, 5>> profile_of_block(
          p5.classes, {UINT32_MAX, UINT32_MAX, UINT32_MAX, UINT32_MAX, UINT32_MAX});
      for (std::uint32_t c = 0; c < type_count(5) && ok; ++c) {
        std::array<std::uint32_t, 5> profile;
        for (int i = 0; i < 5; ++i)
          profile[static_cast<std::size_t>(i)] = p4.block_of[drop[c][static_cast<std::size_t>(i)]];
        std::uint32_t b = p5.block_of[c];
        auto [it, inserted] = block_of_profile.emplace(profile, b);
        if (!inserted && it->second != b) {
          ok = false;
          details = "profile shared across distinct 5-orbits for labels '" + gs.to_string() + "'";
        }
        if (profile_of_block[b][0] == UINT32_MAX) profile_of_block[b] = profile;
        else if (profile_of_block[b] != profile) {
          ok = false;
          details = "5-orbit carries two 4-subtype profiles for labels '" + gs.to_string() + "'";
        }
      }
    }
    add("C10", "5-type orbits determined by 4-subtype orbit data within the order lattice", ok,
        details, timer.seconds());
  }

  return report;
}

}  // namespace reductlab
