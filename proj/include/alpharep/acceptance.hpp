#pragma once

#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace alpharep {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool stretch = false;
  bool skipped = false;
  bool pass = false;
  bool bound_exceeded = false;
  double seconds = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

struct AcceptanceOptions {
  std::string data_dir;       // empty: default_data_dir()
  bool include_stretch = false;
  std::set<int> only;         // empty: every criterion
  unsigned jobs = 0;          // 0: one thread per criterion
  bool verbose = false;       // print notes under each line
  bool timing = false;        // append wall-clock seconds
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;

  // Every non-stretch criterion that ran passed.
  bool ok() const;
};

int criterion_count();
std::string criterion_title(int id);

// "PASS   1  title (0.12 s)", "FAIL ...", "SKIP ..."; failures follow on
// indented lines, notes too when verbose.
std::string format_result(const CriterionResult &r, bool verbose, bool timing);

// Criteria run concurrently; lines are printed in criterion order.
AcceptanceReport run_acceptance(const AcceptanceOptions &opts, std::ostream *out = nullptr);

} // namespace alpharep
