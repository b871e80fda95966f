#include "robinbox/basisfn.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <numbers>
#include <string>

#include "robinbox/errors.hpp"
#include "robinbox/rootfind.hpp"

namespace robinbox::basisfn {

namespace {

using rootfind::RootBracket;
using rootfind::RootConfig;

constexpr double kInf = std::numeric_limits<double>::infinity();

// pi/2 and pi split into a double plus the rounding remainder, so that
// (kHalfPiHi - x) + kHalfPiLo is the distance to the pole without
// cancellation.
constexpr double kHalfPiHi = 1.57079632679489655800e+00;
constexpr double kHalfPiLo = 6.12323399573676603587e-17;
constexpr double kPiHi = 3.14159265358979311600e+00;
constexpr double kPiLo = 1.22464679914735320717e-16;

[[noreturn]] void domain_fail(const char* what, double v) {
  throw DomainError(std::string(what) + ": argument " + std::to_string(v) +
                    " outside the principal domain");
}

// Unchecked evaluations, valid on the closed-open principal domains.
double g1_raw(double x) {
  if (x <= 0.25 * std::numbers::pi) return x * std::tan(x);
  return x / std::tan((kHalfPiHi - x) + kHalfPiLo);
}

double g2_raw(double x) {
  if (x == 0.0) return -1.0;
  if (x <= 0.25 * std::numbers::pi) return -x / std::tan(x);
  if (x <= 0.75 * std::numbers::pi) return -x * std::tan((kHalfPiHi - x) + kHalfPiLo);
  return x / std::tan((kPiHi - x) + kPiLo);
}

double h1_raw(double x) { return x * std::tanh(x); }

double h2_raw(double x) {
  if (x == 0.0) return 1.0;
  return x / std::tanh(x);
}

double solve(const rootfind::ScalarFn& f, double lo, double hi) {
  return rootfind::solve_bracketed(f, RootBracket::make(f, lo, hi),
                                   RootConfig::tight());
}

double g1_inverse(double y) {
  if (y == 0.0) return 0.0;
  const double hi = std::min(std::sqrt(y), kHalfPiHi);
  auto f = [y](double x) { return g1_raw(x) - y; };
  if (f(hi) <= 0.0) return hi;
  return solve(f, 0.0, hi);
}

double g2_inverse(double y) {
  if (y == -1.0) return 0.0;
  if (y == 0.0) return 0.5 * std::numbers::pi;
  auto f = [y](double x) { return g2_raw(x) - y; };
  if (y < 0.0) {
    if (f(kHalfPiHi) <= 0.0) return kHalfPiHi;
    return solve(f, 0.0, kHalfPiHi);
  }
  if (f(kPiHi) <= 0.0) return kPiHi;
  return solve(f, kHalfPiHi, kPiHi);
}

double h1_inverse(double y) {
  if (y == 0.0) return 0.0;
  // x tanh x lies below both x and x^2, and above x - 1/2, so the root
  // lies in [lo, lo + 1].
  const double lo = std::max(y, std::sqrt(y));
  auto f = [y](double x) { return h1_raw(x) - y; };
  if (f(lo) >= 0.0) return lo;
  return solve(f, lo, lo + 1.0);
}

double h2_inverse(double y) {
  if (y == 1.0) return 0.0;
  // x <= x coth x <= min(x + 1, 1 + x^2/3).
  const double lo = std::max(y - 1.0, std::sqrt(3.0 * (y - 1.0)));
  auto f = [y](double x) { return h2_raw(x) - y; };
  // Within a few ulps of y = 1 rounding can lift h2(lo) above y.
  const double bottom = std::min(lo, y);
  if (f(bottom) >= 0.0) return bottom;
  return solve(f, bottom, y);
}

// Taylor coefficients in x^2. The closed form of f1 loses about eps/x^2 to
// cancellation, so its series is carried far enough to cover x < 0.5; f2
// only needs the series to avoid 0/0.
constexpr double kF1SeriesCut = 0.5;
constexpr double kF2SeriesCut = 1e-2;

constexpr double kF1Coeffs[] = {
    1.0 / 3.0,
    -2.0 / 45.0,
    2.0 / 315.0,
    -4.0 / 4725.0,
    2.0 / 18711.0,
    -2764.0 / 212837625.0,
    4.0 / 2606175.0,
    -28936.0 / 162820783125.0,
    87734.0 / 4331032831125.0,
    -698444.0 / 306265893058125.0,
    310732.0 / 1222532449149375.0,
};

double f1_series(double x) {
  const double z = x * x;
  double acc = 0.0;
  for (int i = static_cast<int>(std::size(kF1Coeffs)) - 1; i >= 0; --i) acc = acc * z + kF1Coeffs[i];
  return acc;
}

double f2_series(double x) {
  const double z = x * x;
  return 1.0 + z * (-2.0 / 3.0 + z * (2.0 / 5.0 + z * (-68.0 / 315.0 + z * (62.0 / 567.0))));
}

double f1_raw(double x) {
  if (x < kF1SeriesCut) return f1_series(x);
  const double s = std::sinh(x);
  return (1.0 / std::tanh(x) - x / (s * s)) / (2.0 * x);
}

double f2_raw(double x) {
  if (x < kF2SeriesCut) return f2_series(x);
  const double c = std::cosh(x);
  return (std::tanh(x) + x / (c * c)) / (2.0 * x);
}

}  // namespace

std::string_view name(BasisFunctionId id) {
  switch (id) {
    case BasisFunctionId::G1fun: return "g1";
    case BasisFunctionId::G2fun: return "g2";
    case BasisFunctionId::H1fun: return "h1";
    case BasisFunctionId::H2fun: return "h2";
  }
  return "?";
}

Domain principal_domain(BasisFunctionId id) {
  switch (id) {
    case BasisFunctionId::G1fun: return {0.0, 0.5 * std::numbers::pi};
    case BasisFunctionId::G2fun: return {0.0, std::numbers::pi};
    case BasisFunctionId::H1fun:
    case BasisFunctionId::H2fun: return {0.0, kInf};
  }
  return {0.0, 0.0};
}

Domain principal_range(BasisFunctionId id) {
  switch (id) {
    case BasisFunctionId::G1fun: return {0.0, kInf};
    case BasisFunctionId::G2fun: return {-1.0, kInf};
    case BasisFunctionId::H1fun: return {0.0, kInf};
    case BasisFunctionId::H2fun: return {1.0, kInf};
  }
  return {0.0, 0.0};
}

double eval(BasisFunctionId id, double x) {
  const Domain d = principal_domain(id);
  if (!(x >= d.lo) || !(x < d.hi) || !std::isfinite(x)) domain_fail("eval", x);
  switch (id) {
    case BasisFunctionId::G1fun: return g1_raw(x);
    case BasisFunctionId::G2fun: return g2_raw(x);
    case BasisFunctionId::H1fun: return h1_raw(x);
    case BasisFunctionId::H2fun: return h2_raw(x);
  }
  return 0.0;
}

double eval_inverse(BasisFunctionId id, double y) {
  const Domain r = principal_range(id);
  if (!(y >= r.lo) || !std::isfinite(y)) domain_fail("eval_inverse", y);
  switch (id) {
    case BasisFunctionId::G1fun: return g1_inverse(y);
    case BasisFunctionId::G2fun: return g2_inverse(y);
    case BasisFunctionId::H1fun: return h1_inverse(y);
    case BasisFunctionId::H2fun: return h2_inverse(y);
  }
  return 0.0;
}

double scaled_inverse(BasisFunctionId id, double y) {
  if (y == 0.0) domain_fail("scaled_inverse", y);
  return eval_inverse(id, y) / y;
}

double f_aux(AuxId which, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) domain_fail("f_aux", x);
  return which == AuxId::f1 ? f1_raw(x) : f2_raw(x);
}

double f_aux_inverse(AuxId which, double w) {
  const double top = which == AuxId::f1 ? 1.0 / 3.0 : 1.0;
  if (!(w > 0.0) || !(w < top)) domain_fail("f_aux_inverse", w);
  auto f = [which, w](double x) {
    if (x == 0.0) return (which == AuxId::f1 ? 1.0 / 3.0 : 1.0) - w;
    return (which == AuxId::f1 ? f1_raw(x) : f2_raw(x)) - w;
  };
  // f1(x) < coth(x)/(2x) and f2(x) < 0.73/x, so both lie below w at x = 1/w.
  return solve(f, 0.0, 1.0 / w);
}

double threshold_y(ThresholdId which, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) domain_fail("threshold_y", c);
  if (which == ThresholdId::y1) {
    if (c <= 3.0) return 0.0;
    return h1_raw(f_aux_inverse(AuxId::f1, 1.0 / c)) / c;
  }
  if (c <= 1.0) return 1.0 / c;
  return h2_raw(f_aux_inverse(AuxId::f2, 1.0 / c)) / c;
}

double alpha_plus_residual(double alpha) {
  const double a = g1_inverse(alpha / 8.0);
  const double b = g2_inverse(alpha / 8.0);
  return a * a + b * b - alpha / 4.0;
}

double alpha_minus_residual(double alpha) {
  const double y = std::abs(alpha) / 8.0;
  if (y < 1.0) domain_fail("alpha_minus_residual", alpha);
  const double a = h1_inverse(y);
  const double b = h2_inverse(y);
  return a * a + b * b - std::abs(alpha) / 4.0;
}

double alpha_plus() {
  return rootfind::solve_bracketed(alpha_plus_residual,
                                   RootBracket::make(alpha_plus_residual, 8.0, 100.0));
}

double alpha_minus() {
  return rootfind::solve_bracketed(
      alpha_minus_residual, RootBracket::make(alpha_minus_residual, -100.0, -8.0));
}

double tanh_cot_root() {
  auto f = [](double x) { return std::tanh(x) * std::tan(x) - 1.0; };
  return solve(f, 0.0, 0.25 * std::numbers::pi + 0.5);
}

}  // namespace robinbox::basisfn
