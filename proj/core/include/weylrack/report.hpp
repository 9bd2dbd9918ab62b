// Report type shared by every CLI command, plus the verification driver that
// replays the published constructions and the n = 4..5 classification sweep.
//
// Items are emitted in a fixed citation order regardless of --parallel;
// wall-clock fields are informational and excluded from determinism claims.

#pragma once

#include <string>
#include <vector>

#include "weylrack/classes.hpp"
#include "weylrack/constructions.hpp"

namespace weylrack {

struct ReportItem {
  std::string id;
  std::string citation;  // statement of record or the literal tag "plumbing"
  std::string status;    // "pass" | "fail" | "skip"
  std::string details;
  double wall_ms = 0.0;
};

struct Report {
  std::string kinds;  // subset of "BD" actually covered
  int n_min = 0;
  int n_max = 0;
  std::vector<ReportItem> items;

  int count(const std::string& status) const;
  bool all_pass() const { return count("fail") == 0; }
};

// Serialized with stable key order; schema field first.
std::string report_json(const Report& report);

struct VerifyOptions {
  int n_min = 4;
  int n_max = 5;
  bool kind_b = true;
  bool kind_d = true;
  int parallel = 1;
  int cap = kDefaultEnumCap;
  std::size_t search_bound = kDefaultSearchBound;
};

// Runs, in order: the core arithmetic invariant suite, the closed-form and
// fixed-point sweeps, every printed R/S family through check_type_d, and the
// full classification sweep (n = 5 over all classes with nontrivial
// permutation part, n = 4 over the two published W_4 types).
Report run_paper_verification(const VerifyOptions& options);

}  // namespace weylrack
