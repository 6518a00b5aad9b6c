#pragma once

// Check suites comparing label-side predictions with the oracle tables.

#include <optional>
#include <string>
#include <vector>

#include "slnchar/json_io.hpp"
#include "slnchar/oracle/matching.hpp"

namespace slnchar::oracle {

enum class Suite { kCounts, kDegrees, kGgc, kAuto, kAll };

/// "counts", "degrees", "ggc", "auto", "all"; throws InvalidArgument otherwise.
Suite parse_suite(const std::string& name);
std::string suite_name(Suite s);

struct Check {
  std::string suite;
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyReport {
  GroupParams params;
  Suite suite = Suite::kAll;
  std::vector<Check> checks;

  // Filled by the auto suite.
  std::int64_t central_unit = 0;                  // GL calibration, a unit mod q - eps
  std::vector<std::int64_t> consistent_units;     // units mod d reconciling every series
  std::int64_t calibrated_unit = 0;               // smallest of those, 0 if none
  std::size_t gl_ambiguity_classes = 0;           // colour classes of size > 1
  std::size_t sl_ambiguous_rows = 0;              // SL rows with more than one candidate

  bool passed() const;
  /// Checks whose name starts with the prefix, in one suite.
  std::vector<const Check*> select(const std::string& suite, const std::string& prefix) const;
};

VerifyReport run_verify(const OracleContext& ctx, Suite suite);

json_io::Json to_json(const VerifyReport& r);
/// One line per check plus a summary line.
std::string to_text(const VerifyReport& r);

}  // namespace slnchar::oracle
