#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robinbox/parallel.hpp"

namespace robinbox::verify {

enum class Suite { lemmas, interval, box, shapes, oracle, all };

std::string_view to_string(Suite suite);
std::optional<Suite> parse_suite(std::string_view text);

// One invariant evaluated over its grid. margin is the worst slack observed
// (positive means the invariant holds with room to spare); the check passes
// iff margin > -tolerance.
struct Check {
  std::string name;
  double margin;
  double tolerance;
  bool passed() const { return margin > -tolerance; }
};

struct Config {
  // Oracle agreement: |closed form - oracle| <= max(tol_rel |lambda|, tol_abs).
  double tol_abs = 1e-8;
  double tol_rel = 1e-6;
  int oracle_grid = 0;  // 0 selects the per-cell default
  int scan_grid = 256;
  Exec exec = Exec::parallel;
};

std::vector<Check> run_suite(Suite suite, const Config& config = {});

// "PASS|FAIL name margin tolerance"
std::string report_line(const Check& check, int precision);

}  // namespace robinbox::verify
