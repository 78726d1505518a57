#pragma once

#include <string>
#include <vector>

#include "tableaux.hpp"
#include "weingarten.hpp"

namespace haarint::verify {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

// Exact invariant checks at the given degree.  The fast suite covers the
// combinatorial layer and the unit algebra; the full suite adds unit
// products, path independence, branching into degree d+1, norm kernels,
// and a sampled comparison against the Gram-inverse oracle.
std::vector<CheckResult> run_suite(int d, bool full,
                                   int degree_cap = tableaux::kDefaultDegreeCap,
                                   int oracle_cap = weingarten::kDefaultOracleCap);

}  // namespace haarint::verify
