#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace relgit::cli {

/// The conic bundle: G_m acting on (x, y) with weights (1, -1) and on the
/// fibre coordinates (u : v) with weights (1, -1).
std::string_view conic_bundle_problem_text();

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Golden checks on the conic bundle and the degenerating conic.
std::vector<SelftestCheck> run_selftest();

}  // namespace relgit::cli
