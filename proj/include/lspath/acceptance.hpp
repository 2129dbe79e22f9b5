#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lspath/weight.hpp"

namespace lspath {

/// Sweep bounds for the acceptance suite. The defaults are the published
/// desk-scale bounds.
struct AcceptanceConfig {
  std::int64_t oracle_bound = 2;        // A1 A2 B2 G2
  std::int64_t oracle_bound_rank3 = 1;  // A3 B3 C3
  std::int64_t chain_max_m = 6;
  std::int64_t so_sp_bound = 2;         // raised once if nothing strict turns up
  std::int64_t sp_spin_bound = 2;
  std::int64_t g2_bound = 2;
  std::vector<Weight> f4_weights = {Weight{0, 0, 0, 0}, Weight{0, 0, 1, 0}, Weight{0, 0, 0, 1}};
  std::int64_t transport_bound = 2;
  std::int64_t frobenius_bound = 2;
  int saturation_bound = 1;
  std::size_t arity = 3;
  unsigned workers = 0;
  std::vector<int> criteria;  // empty: all

  /// Every sweep bound set to `bound`; bound 0 leaves only zero weights.
  static AcceptanceConfig with_bound(std::int64_t bound);
};

/// Criterion id from "1".."10" or its short name. Throws InputError.
int parse_criterion(std::string_view name);
std::string criterion_name(int id);
constexpr int kCriterionCount = 10;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceReport {
  std::vector<CriterionResult> results;
  bool ok() const;
};

/// Runs the selected criteria. If `progress` is set, each result line is
/// written there as soon as it is known.
AcceptanceReport run_acceptance_suite(const AcceptanceConfig& config,
                                      std::ostream* progress = nullptr);

std::string format_result(const CriterionResult& r);

}  // namespace lspath
