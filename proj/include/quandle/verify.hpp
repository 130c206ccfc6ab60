#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quandle/classify.hpp"
#include "quandle/core.hpp"
#include "quandle/group_table.hpp"

namespace quandle {

struct VerifyOptions {
  Caps caps;
  // Checks that walk Con(Q) only run up to this order.
  std::size_t congruence_order_limit = 16;
  // Join-closure enumeration is compared with the partition scan up to here.
  std::size_t congruence_scan_limit = 6;
  // Pairs Q1 × Q2 are tried while |Q1|·|Q2| stays within this bound.
  std::size_t product_order_limit = 36;
  // Conjugation-quandle checks cover groups up to this order.
  std::size_t group_order_limit = 32;
  // Engel subset bridge is tested for n = 1 .. engel_limit.
  std::size_t engel_limit = 4;
};

struct CheckFailure {
  std::string message;
  // The quandle the failure was observed on, if there is a single one.
  std::optional<Quandle> witness;
};

struct CheckResult {
  std::string name;
  std::string statement;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<CheckFailure> failures;
  std::vector<std::string> notes;

  bool passed() const noexcept { return failures.empty(); }
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  // One per corpus quandle that could be classified, sorted by label.
  std::vector<ClassificationReport> reports;

  bool passed() const noexcept;
};

// Runs every corpus-wide check. Violations are recorded in the report, never
// thrown; members that exceed a cap are counted as skipped.
SuiteReport verify_suite(std::span<Quandle const> quandles,
                         std::span<GroupTable const> groups,
                         VerifyOptions const& options = {});

}  // namespace quandle
