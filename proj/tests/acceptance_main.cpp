// Acceptance suite: runs every verification criterion at its stated
// tolerance and prints one pass/fail line per criterion.

#include <cstring>
#include <iostream>

#include "reductlab/verify.hpp"

int main(int argc, char** argv) {
  using namespace reductlab;
  Config cfg;
  cfg.fixture_path = std::string(REDUCTLAB_FIXTURE_DIR) + "/preservation_table.tsv";
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--strict") == 0) cfg.strict = true;
    else {
      std::cerr << "usage: acceptance [--strict]\n";
      return 2;
    }
  }

  try {
    SignatureStore store;
    VerifyReport report = run_verification(store, cfg);
    std::cout << report.summary(cfg.strict);
    bool ok = report.pass(cfg.strict);
    std::cout << (ok ? "acceptance: all criteria satisfied\n"
                     : "acceptance: criteria FAILED\n");
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "acceptance: fatal: " << e.what() << "\n";
    return 1;
  }
}
