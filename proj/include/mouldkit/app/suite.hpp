#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mouldkit/app/report.hpp"
#include "mouldkit/linalg.hpp"

namespace mouldkit::app {

struct SuiteContext {
  // algebra ("dmr" | "krv"), weight -> basis
  std::function<SubspaceBasis(const std::string&, int)> basis;
  unsigned threads = 1;
  std::uint64_t seed = 0x5eed2024;
};

SuiteContext default_context();

// One family of exact checks; `run` honours a weight cap.
struct SuiteCheck {
  std::string name;
  int min_weight;  // skipped when the cap is below this
  std::function<Check(const SuiteContext&, int max_weight)> run;
};

// Full ranges are reached with max_weight = 8.
const std::vector<SuiteCheck>& suite_checks();
inline constexpr int kSuiteFullWeight = 8;

// Exploratory senary results for r > 3 on dmr images.
std::vector<Check> exploratory_senary(const SuiteContext& ctx, int max_weight);

Report run_suite(int max_weight, const SuiteContext& ctx);

}  // namespace mouldkit::app
