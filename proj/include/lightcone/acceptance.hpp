#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lightcone/parallel.hpp"

namespace lightcone {

struct CriterionResult {
  std::string id;    // "1", "2a", ...
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string detail;  // error text when the check threw
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  Execution execution = Execution::parallel;
  /// Criterion numbers to run; empty runs all ten.
  std::vector<int> only;
};

/// Runs the acceptance checks; `report` is called as each result is ready.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options = {},
    const std::function<void(const CriterionResult&)>& report = {});

/// "[PASS] 2a  unitarity ...  measured=... threshold=..."
std::string format_result(const CriterionResult& result);

}  // namespace lightcone
