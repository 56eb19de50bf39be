#pragma once

#include <string>
#include <vector>

#include "seqvote/oracle.hpp"

namespace seqvote {

struct CrosscheckOptions {
  int max_candidates = 3;
  int max_voters = 3;
  long long max_weight = 2;
  std::vector<std::string> rules = {"plurality"};  // rule tokens, commas in CLI
  unsigned long long seed = 1;
  long long samples = 1000;  // per sampled family (weighted veto)
  // Self-test of the harness: deliberately corrupt one solver verdict; the
  // run must then report that instance as a counterexample.
  bool mutant = false;
};

struct CrosscheckResult {
  bool ok = true;
  long long checked = 0;
  std::string summary;         // "OK <n>" or "MISMATCH ..." headline
  std::string counterexample;  // full instance file when !ok
};

// Sweep fast solvers against the game-tree oracle over small instances,
// deterministically for a fixed seed. A mismatch is reported as a complete
// instance file, not an error.
CrosscheckResult run_crosscheck(const CrosscheckOptions& options);

}  // namespace seqvote
