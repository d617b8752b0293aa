#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "permideal/groebner.hpp"
#include "permideal/ring.hpp"
#include "permideal/term_order.hpp"

namespace permideal {

enum class CheckStatus { Pass, Fail, Skipped, Timeout };

std::string to_string(CheckStatus status);

/// Outcome of one machine check. `expected` and `actual` are canonical
/// "key=value" lines and the check passes exactly when they are equal.
struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Skipped;
  std::string expected;
  std::string actual;
  /// Skip reason, basis differences, or the error that stopped the check.
  std::string detail;
  std::chrono::milliseconds elapsed{0};
};

struct SuiteOptions {
  Shape shape{3, 3};
  FieldSpec field;
  TermOrder order = TermOrder::diag_lex();
  /// Applied to every Groebner basis computation separately.
  GbOptions gb{Budget::millis(60'000)};
  /// Run intersection-based checks beyond 3×3.
  bool allow_large = false;
  /// Check ids to run; empty runs all of them.
  std::vector<std::string> checks;
};

struct Report {
  Shape shape;
  FieldSpec field;
  TermOrder order;
  std::string tool_version;
  std::vector<CheckResult> checks;  // sorted by id

  bool any_failed() const;
  bool any_timeout() const;
};

/// All check ids, sorted.
const std::vector<std::string>& check_ids();

CheckResult check_certificates(const SuiteOptions& options);
CheckResult check_char2_contrast(const SuiteOptions& options);
CheckResult check_primary_decomposition(const SuiteOptions& options);
CheckResult check_gap_module(const SuiteOptions& options);
CheckResult check_gb_equality(const SuiteOptions& options);
CheckResult check_integral_closure(const SuiteOptions& options);
CheckResult check_niermann(const SuiteOptions& options);
CheckResult check_parameters(const SuiteOptions& options);
CheckResult check_minimal_primes(const SuiteOptions& options);
CheckResult check_radical_basis(const SuiteOptions& options);
CheckResult check_radical_intersection(const SuiteOptions& options);

/// Runs one check by id, turning budget exhaustion into a timeout status and
/// other algebra errors into a failure. Throws RangeError for an unknown id.
CheckResult run_check(const std::string& id, const SuiteOptions& options);

/// Runs the selected checks in id order.
Report run_suite(const SuiteOptions& options);

/// Plain-text table of a report, one line per check.
std::string render_text(const Report& report);

const char* tool_version();

}  // namespace permideal
