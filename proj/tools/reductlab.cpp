// Command-line surface for the reduct verification engine: preservation
// table, lattice listing, orbit dumps, constellation case checks, the
// surrogate search, and the aggregated verification battery.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "reductlab/constellations.hpp"
#include "reductlab/lattice.hpp"
#include "reductlab/verify.hpp"

namespace {

using namespace reductlab;
using nlohmann::json;

std::string default_fixture_path() {
  if (const char* env = std::getenv("REDUCTLAB_FIXTURES"))
    return std::string(env) + "/preservation_table.tsv";
  return "fixtures/preservation_table.tsv";
}

struct CacheGuard {
  SignatureStore& store;
  std::string dir;
  bool loaded = false;

  explicit CacheGuard(SignatureStore& s) : store(s) {
    if (const char* env = std::getenv("REDUCTLAB_CACHE")) {
      dir = env;
      loaded = store.load_cache(dir);
    }
  }
  void save() {
    if (!dir.empty() && !loaded) store.save_cache(dir);
  }
};

std::string table_tsv(const PreservationTable& t) {
  std::ostringstream out;
  for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
    out << t.row_labels[r];
    for (int c = 0; c < 15; ++c) out << '\t' << (t.cells[r][c] ? "x" : "");
    out << '\n';
  }
  return out.str();
}

json table_json(const PreservationTable& t) {
  json rows = json::array();
  for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
    json row;
    row["label"] = t.row_labels[r];
    json cells = json::array();
    for (int c = 0; c < 15; ++c) cells.push_back(t.cells[r][c]);
    row["cells"] = cells;
    rows.push_back(row);
  }
  return json{{"columns", t.columns}, {"rows", rows}};
}

int cmd_table(SignatureStore& store, const Config& cfg, const std::string& format,
              const std::string& diff_path) {
  Relation sd = derive_sd_surrogate(store);
  PreservationTable table = build_preservation_table(store, sd);
  if (format == "json") std::cout << table_json(table).dump(2) << "\n";
  else std::cout << table_tsv(table);

  if (!diff_path.empty()) {
    ExpectedTable expected = load_expected_table(diff_path);
    if (expected.row_labels != table.row_labels) {
      std::cerr << "table mismatch: row labels differ from " << diff_path << "\n";
      return 1;
    }
    int bad = 0;
    bool sd_bad = false;
    for (std::size_t r = 0; r < table.cells.size(); ++r)
      for (int c = 0; c < 15; ++c)
        if (table.cells[r][c] != expected.cells[r][c]) {
          if (c == 14) sd_bad = true;
          else ++bad;
          std::cerr << "table mismatch at row " << table.row_labels[r] << " column "
                    << table.columns[static_cast<std::size_t>(c)] << "\n";
        }
    if (bad > 0) return 1;
    if (sd_bad) {
      std::cerr << "surrogate column differs (finding" << (cfg.strict ? ", strict mode" : "")
                << ")\n";
      if (cfg.strict) return 1;
    }
  }
  return 0;
}

int cmd_lattice(SignatureStore& store, const std::string& format, const std::string& dot_path) {
  std::vector<LatticeNode> nodes = enumerate_lattice(store);
  std::vector<std::pair<int, int>> edges = hasse_edges(nodes);
  auto display = [&](int i) {
    const std::string& l = nodes[static_cast<std::size_t>(i)].label;
    return l.empty() ? std::string("bottom") : l;
  };

  if (format == "json") {
    json jnodes = json::array();
    for (std::size_t i = 0; i < nodes.size(); ++i)
      jnodes.push_back({{"label", display(static_cast<int>(i))},
                        {"ideal", nodes[i].ideal.to_string()}});
    json jedges = json::array();
    for (auto [u, v] : edges) jedges.push_back({display(u), display(v)});
    std::cout << json{{"nodes", jnodes}, {"edges", jedges}}.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      std::cout << display(static_cast<int>(i)) << "\tideal=" << nodes[i].ideal.to_string()
                << "\tcovers=";
      bool first = true;
      for (auto [u, v] : edges)
        if (u == static_cast<int>(i)) {
          if (!first) std::cout << ',';
          std::cout << display(v);
          first = false;
        }
      std::cout << "\n";
    }
  }

  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) {
      std::cerr << "cannot write " << dot_path << "\n";
      return 1;
    }
    out << "digraph L {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
      out << "  \"" << display(static_cast<int>(i)) << "\";\n";
    for (auto [u, v] : edges) out << "  \"" << display(u) << "\" -> \"" << display(v) << "\";\n";
    out << "}\n";
  }
  return 0;
}

int cmd_orbits(SignatureStore& store, const std::string& labels, int arity,
               const std::string& format) {
  GenSet gs = GenSet::parse(labels);
  int from = arity == 0 ? 1 : arity;
  int to = arity == 0 ? kMaxArity : arity;
  json jout = json::array();
  for (int k = from; k <= to; ++k) {
    const OrbitPartition& p = store.partition(gs, k);
    for (const auto& block : p.blocks()) {
      if (format == "json") {
        jout.push_back({{"arity", k}, {"size", block.size()}, {"codes", block}});
      } else {
        std::cout << "k=" << k << " size=" << block.size() << ":";
        for (std::size_t i = 0; i < block.size(); ++i)
          std::cout << (i ? "," : " ") << block[i];
        std::cout << "\n";
      }
    }
  }
  if (format == "json") std::cout << jout.dump(2) << "\n";
  return 0;
}

json case_report(SignatureStore& store, const CaseRecord& rec, const Config& cfg) {
  json j;
  j["case"] = rec.id;
  j["geometry"] = rec.constellation.describe();
  j["claimed"] = rec.claimed.to_string();
  j["source"] = rec.source == ClaimSource::Prose ? "prose" : "figure-only";
  json compat = json::array();
  for (GenSet node : op_nodes(store))
    compat.push_back({{"node", node.to_string()},
                      {"compatible", check_compatible(rec.constellation, node, 4, store)}});
  j["compatibility"] = compat;
  json witnesses = json::array();
  for (int m = 3; m <= 4; ++m) {
    for (const TargetTransform& t : claim_targets(rec.claimed, m)) {
      Witness w = witness_generates(rec.constellation, t, m, cfg.witness_depth);
      json jw = {{"target", t.name}, {"points", m}, {"found", w.found}};
      if (w.found) {
        jw["depth"] = w.depth;
        jw["script"] = w.script;
      }
      witnesses.push_back(jw);
    }
  }
  j["witnesses"] = witnesses;
  return j;
}

void print_case_report(const json& j) {
  std::cout << "case " << j["case"].get<std::string>() << " ("
            << j["source"].get<std::string>() << ")\n";
  std::cout << "  geometry: " << j["geometry"].get<std::string>() << "\n";
  std::string claimed = j["claimed"].get<std::string>();
  std::cout << "  claimed group: " << (claimed.empty() ? "(base)" : claimed) << "\n";
  std::cout << "  compatibility:";
  for (const auto& c : j["compatibility"]) {
    std::string node = c["node"].get<std::string>();
    std::cout << ' ' << (node.empty() ? "(base)" : node) << '='
              << (c["compatible"].get<bool>() ? "yes" : "no");
  }
  std::cout << "\n";
  for (const auto& w : j["witnesses"]) {
    std::cout << "  witness " << w["target"].get<std::string>() << " on "
              << w["points"].get<int>() << " points: ";
    if (!w["found"].get<bool>()) {
      std::cout << "exhausted\n";
      continue;
    }
    std::cout << "depth " << w["depth"].get<int>() << ", script";
    for (const auto& step : w["script"]) {
      std::cout << " [";
      for (std::size_t i = 0; i < step.size(); ++i)
        std::cout << (i ? "," : "") << step[i].get<int>();
      std::cout << "]";
    }
    std::cout << "\n";
  }
}

int cmd_check(SignatureStore& store, const Config& cfg, const std::string& case_id, bool all,
              bool as_json) {
  std::vector<const CaseRecord*> records;
  if (all) {
    for (const CaseRecord& r : case_catalog()) records.push_back(&r);
  } else {
    records.push_back(&case_by_id(case_id));
  }
  json out = json::array();
  for (const CaseRecord* r : records) {
    json j = case_report(store, *r, cfg);
    if (as_json) out.push_back(j);
    else print_case_report(j);
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_find_sd(SignatureStore& store, bool as_json) {
  Relation sd = derive_sd_surrogate(store);
  if (as_json) {
    std::cout << relation_to_json(sd) << "\n";
    return 0;
  }
  std::cout << "surrogate relation: arity 4, " << sd.members.size() << " member types\n";
  std::cout << relation_to_json(sd) << "\n";
  for (Gen g : {Gen::i, Gen::j, Gen::k})
    std::cout << "preserved by " << gen_char(g) << ": "
              << (preserves(store.partition(GenSet{g}, 4), sd) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_verify_all(SignatureStore& store, const Config& cfg, bool as_json) {
  VerifyReport report = run_verification(store, cfg);
  if (as_json) {
    json checks = json::array();
    for (const CheckResult& c : report.checks)
      checks.push_back({{"id", c.id},
                        {"name", c.name},
                        {"pass", c.pass},
                        {"finding_only", c.finding_only},
                        {"details", c.details},
                        {"seconds", c.seconds}});
    std::cout << json{{"checks", checks}, {"pass", report.pass(cfg.strict)}}.dump(2) << "\n";
  } else {
    std::cout << report.summary(cfg.strict);
    std::cout << (report.pass(cfg.strict) ? "all checks passed\n" : "verification FAILED\n");
  }
  return report.pass(cfg.strict) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reductlab: mechanized classification checks for the reducts of the random ordered graph"};
  app.require_subcommand(1);

  Config cfg;
  cfg.fixture_path = default_fixture_path();
  app.add_option("--max-arity", cfg.max_arity, "largest tuple arity (1..5)");
  app.add_option("--host-size", cfg.oracle_host_size, "oracle host vertex count");
  app.add_option("--witness-depth", cfg.witness_depth, "witness search depth (1..8)");
  app.add_option("--parallelism", cfg.parallelism, "worker threads (0 = hardware)");
  std::string fault;
  app.add_option("--inject-fault", fault, "self-test hook: corrupt an internal table (move-table)");

  auto* t = app.add_subcommand("table", "print the 42x15 preservation table");
  std::string t_format = "tsv", t_diff;
  t->add_option("--format", t_format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  t->add_option("--diff-expected", t_diff, "compare against an expected-table fixture");
  t->add_flag("--strict", cfg.strict, "surrogate column mismatches become fatal");

  auto* l = app.add_subcommand("lattice", "list the 44 closed groups and covering edges");
  std::string l_format = "text", l_dot;
  l->add_option("--format", l_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  l->add_option("--dot", l_dot, "write the Hasse diagram as a DOT digraph");

  auto* o = app.add_subcommand("orbits", "print orbit blocks of a generated group");
  std::string o_labels;
  int o_arity = 0;
  std::string o_format = "text";
  o->add_option("--labels", o_labels, "generator labels, e.g. dgh (empty = base group)");
  o->add_option("--arity", o_arity, "arity 1..5 (0 = all)")->check(CLI::Range(0, 5));
  o->add_option("--format", o_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* ck = app.add_subcommand("check", "check a constellation case from the catalog");
  std::string ck_case;
  bool ck_all = false, ck_json = false;
  ck->add_option("--case", ck_case, "case id, e.g. C2:a2");
  ck->add_flag("--all", ck_all, "check every case");
  ck->add_flag("--json", ck_json, "JSON output");

  auto* fs = app.add_subcommand("find-sd", "derive the dihedral surrogate relation");
  bool fs_json = false;
  fs->add_flag("--json", fs_json, "JSON output");

  auto* va = app.add_subcommand("verify-all", "run the full verification battery");
  bool va_json = false;
  va->add_flag("--json", va_json, "JSON output");
  va->add_flag("--strict", cfg.strict, "surrogate findings become fatal");
  va->add_option("--expected", cfg.fixture_path, "expected preservation table fixture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.validate();
    if (!fault.empty()) {
      if (fault != "move-table") {
        std::cerr << "unknown fault '" << fault << "'\n";
        return 2;
      }
      testing_hooks::inject_move_table_fault(true);
    }

    SignatureStore store;
    CacheGuard cache(store);
    int rc = 0;
    if (t->parsed()) rc = cmd_table(store, cfg, t_format, t_diff);
    else if (l->parsed()) rc = cmd_lattice(store, l_format, l_dot);
    else if (o->parsed()) rc = cmd_orbits(store, o_labels, o_arity, o_format);
    else if (ck->parsed()) {
      if (!ck_all && ck_case.empty()) {
        std::cerr << "check: pass --case ID or --all\n";
        return 2;
      }
      rc = cmd_check(store, cfg, ck_case, ck_all, ck_json);
    } else if (fs->parsed()) rc = cmd_find_sd(store, fs_json);
    else if (va->parsed()) rc = cmd_verify_all(store, cfg, va_json);
    if (rc == 0 && fault.empty() && (t->parsed() || l->parsed() || va->parsed() || fs->parsed()))
      cache.save();
    return rc;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
