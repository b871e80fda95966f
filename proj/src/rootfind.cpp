#include "robinbox/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "robinbox/errors.hpp"

namespace robinbox::rootfind {

namespace {

bool opposite_signs(double a, double b) {
  return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0);
}

std::string fmt_bracket(double lo, double hi) {
  return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

}  // namespace

double solve_bracketed(const ScalarFn& f, const RootBracket& bracket,
                       const RootConfig& cfg) {
  if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol >= 0.0) || cfg.max_iter < 1) {
    throw DomainError("solve_bracketed: invalid RootConfig");
  }
  if (!(bracket.lo < bracket.hi)) {
    throw NoSignChange("solve_bracketed: empty bracket " +
                       fmt_bracket(bracket.lo, bracket.hi));
  }
  if (std::isnan(bracket.f_lo) || std::isnan(bracket.f_hi)) {
    throw NoSignChange("solve_bracketed: NaN at bracket end " +
                       fmt_bracket(bracket.lo, bracket.hi));
  }
  if (bracket.f_lo == 0.0) return bracket.lo;
  if (bracket.f_hi == 0.0) return bracket.hi;
  if (!opposite_signs(bracket.f_lo, bracket.f_hi)) {
    throw NoSignChange("solve_bracketed: no sign change on " +
                       fmt_bracket(bracket.lo, bracket.hi));
  }

  // b is the current best estimate, c the contrapoint (root lies between b
  // and c), a the previous b.
  double a = bracket.lo, fa = bracket.f_lo;
  double b = bracket.hi, fb = bracket.f_hi;
  double c = a, fc = fa;
  double d = b - a, e = d;

  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    if (opposite_signs(fb, fc) == false) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }

    const double tol = 0.5 * (cfg.abs_tol + cfg.rel_tol * std::abs(b));
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return b;

    const bool finite = std::isfinite(fa) && std::isfinite(fb) && std::isfinite(fc);
    if (finite && std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      } else {
        p = -p;
      }
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }

    a = b;
    fa = fb;
    if (std::abs(d) > tol) {
      b += d;
    } else {
      b += (m > 0.0 ? tol : -tol);
    }
    fb = f(b);
    if (std::isnan(fb)) {
      throw NumericalFailure("solve_bracketed: f returned NaN at x=" +
                             std::to_string(b));
    }
  }
  throw MaxIterExceeded("solve_bracketed: tolerance not reached in " +
                        std::to_string(cfg.max_iter) + " iterations on " +
                        fmt_bracket(bracket.lo, bracket.hi));
}

RootBracket expand_bracket(const ScalarFn& f, double seed, Direction direction,
                           double growth, const ExpandConfig& cfg) {
  if (!(growth > 1.0) || !(cfg.initial_step > 0.0)) {
    throw DomainError("expand_bracket: growth must exceed 1 and step be positive");
  }
  double prev = seed;
  double f_prev = f(seed);
  if (!std::isfinite(f_prev)) {
    throw DomainError("expand_bracket: f not finite at seed");
  }
  const double sign = direction == Direction::up ? 1.0 : -1.0;
  double step = cfg.initial_step;
  for (int i = 0; i < cfg.max_expansions; ++i) {
    const double next = prev + sign * step;
    const double f_next = f(next);
    if (f_next == 0.0 || f_prev == 0.0 || opposite_signs(f_prev, f_next)) {
      if (direction == Direction::up) return RootBracket{prev, next, f_prev, f_next};
      return RootBracket{next, prev, f_next, f_prev};
    }
    if (std::isnan(f_next)) break;
    prev = next;
    f_prev = f_next;
    step *= growth;
  }
  throw BracketNotFound("expand_bracket: no sign change after " +
                        std::to_string(cfg.max_expansions) + " expansions from seed " +
                        std::to_string(seed));
}

}  // namespace robinbox::rootfind
