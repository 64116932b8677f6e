#pragma once

/*
  Self-check matrix over a named budget of small instances: tree output
  against brute-force enumeration, ambient selection against the symmetry
  filter, rigging transport and cocharge scaling, single-factor virtual
  crystals, and the graded-sum comparison X(q^{-1}) = M(q).

  Runs are sequential and allocation-order free, so two runs over the same
  budget emit byte-identical reports.
*/

#include <string>

namespace kr {

struct VerifyReport {
  long cases = 0;
  long failures = 0;
  std::string json;  // full report, pretty-printed, trailing newline
};

// The only recognized budget is "default"; anything else throws
// std::invalid_argument.
VerifyReport run_verify(const std::string& budget);

}  // namespace kr
