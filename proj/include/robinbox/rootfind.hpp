#pragma once

#include <functional>
#include <limits>

namespace robinbox::rootfind {

using ScalarFn = std::function<double(double)>;

struct RootConfig {
  double abs_tol = 1e-13;
  double rel_tol = 4.0 * std::numeric_limits<double>::epsilon();
  int max_iter = 200;

  // Tolerance at the limit of double precision: the absolute floor is
  // negligible and convergence is governed by rel_tol alone. Used for the
  // special-function inverses, whose roots span many orders of magnitude.
  static RootConfig tight() {
    return RootConfig{std::numeric_limits<double>::min(),
                      4.0 * std::numeric_limits<double>::epsilon(), 400};
  }
};

// A bracket [lo, hi] with f_lo and f_hi of opposite sign. An endpoint at
// which f vanishes exactly is accepted and returned as the root.
struct RootBracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;

  static RootBracket make(const ScalarFn& f, double lo, double hi) {
    return RootBracket{lo, hi, f(lo), f(hi)};
  }
};

enum class Direction { up, down };

struct ExpandConfig {
  double initial_step = 1.0;
  int max_expansions = 200;
};

// Brent-style hybrid: inverse quadratic / secant steps, falling back to
// bisection whenever the interpolant leaves the bracket, converges too
// slowly, or a function value is infinite. The iterate never leaves
// [lo, hi]. Throws NoSignChange for an invalid bracket (including NaN end
// values), MaxIterExceeded, or NumericalFailure if f returns NaN inside.
double solve_bracketed(const ScalarFn& f, const RootBracket& bracket,
                       const RootConfig& cfg = {});

// Walks from seed in the given direction with geometrically growing steps
// until f changes sign; the returned bracket spans the last two probes.
RootBracket expand_bracket(const ScalarFn& f, double seed, Direction direction,
                           double growth = 2.0, const ExpandConfig& cfg = {});

}  // namespace robinbox::rootfind
