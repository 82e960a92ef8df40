#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcalc/jackson.hpp"

namespace qcalc {

enum class CheckMode { Exact, Numeric };
std::string to_string(CheckMode m);

struct CheckParams {
  /// Unset: symbolic q for exact entries; set: exact entries are rebuilt at this numeric q.
  std::optional<double> q;
  int trunc = 12;
  double gamma = 1.0;
  /// Tolerance for exact entries rebuilt at numeric q.
  double tol = 1e-9;
  JacksonConfig cfg;
  /// q used by numeric entries when q is unset.
  double default_q = 0.5;
  /// Worker threads for check_all; 0 picks the hardware concurrency.
  int jobs = 1;
  double numeric_q() const { return q.value_or(default_q); }
};

struct Report {
  std::string id;
  bool pass = false;
  CheckMode mode = CheckMode::Exact;
  /// Truncation degree for exact entries, 0 for numeric ones.
  int truncation = 0;
  /// Numeric q used, unset when symbolic.
  std::optional<double> q;
  /// Largest residual seen; 0 for symbolic checks that cancelled.
  double max_residual = 0;
  /// Nonzero coefficients left after subtracting the sides, summed over subchecks.
  long residual_terms = 0;
  int subchecks = 0;
  double elapsed_ms = 0;
  std::string statement;
  /// Failure or error description.
  std::string detail;
};

struct IdentityEntry {
  std::string id;
  CheckMode mode = CheckMode::Exact;
  std::string statement;
  std::function<Report(const CheckParams&)> run;
};

/// All registered entries, ordered by id.
const std::vector<IdentityEntry>& registry();
std::vector<std::string> identity_ids();
const IdentityEntry& find_identity(const std::string& id);

/// Runs one entry; UnknownIdentity for unregistered ids. Library errors inside the check become a failing report.
Report check(const std::string& id, const CheckParams& params = {});
/// Runs the listed entries in id order; an empty list gives no reports.
std::vector<Report> check_selected(const std::vector<std::string>& ids, const CheckParams& params = {});
/// Runs the whole registry, optionally restricted to one mode, in id order.
std::vector<Report> check_all(const CheckParams& params = {}, std::optional<CheckMode> only = std::nullopt);

}  // namespace qcalc
