#pragma once

#include <array>
#include <string>
#include <vector>

#include "reductlab/constellations.hpp"
#include "reductlab/lattice.hpp"

namespace reductlab {

struct Config {
  int max_arity = 5;        // 1..5
  int oracle_host_size = 16;
  int witness_depth = 6;    // 1..8
  int parallelism = 0;      // 0 = hardware concurrency
  bool strict = false;      // surrogate column mismatch becomes fatal
  std::string fixture_path; // expected preservation table (TSV)

  void validate() const;    // throws std::invalid_argument
};

/// Expected preservation table loaded from the fixtures directory.
/// Cell markers: 'x' preserved, 'X' preserved and defining (bold), '' not
/// preserved.  Lines starting with '#' are comments.
struct ExpectedTable {
  std::vector<std::string> row_labels;
  std::vector<std::array<bool, 15>> cells;
  std::vector<std::array<bool, 15>> bold;
};

ExpectedTable load_expected_table(const std::string& path);

struct CheckResult {
  std::string id;
  std::string name;
  bool pass = false;
  bool finding_only = false;  // informative unless strict mode
  std::string details;
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool pass(bool strict) const;
  std::string summary(bool strict) const;  // one line per check
};

// Runs the full verification battery against the expected table.
VerifyReport run_verification(SignatureStore& store, const Config& cfg);

}  // namespace reductlab
