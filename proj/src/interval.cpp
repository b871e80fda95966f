#include "robinbox/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "robinbox/basisfn.hpp"
#include "robinbox/errors.hpp"
#include "robinbox/rootfind.hpp"

namespace robinbox {

namespace {

using basisfn::BasisFunctionId;
using Entry = SpectrumEntry<ModeDescriptor>;

constexpr double kMinHalfLength = 1e-12;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_alpha(double alpha) {
  if (!std::isfinite(alpha)) {
    throw DomainError("Robin parameter must be finite, got " + std::to_string(alpha));
  }
}

Entry make_entry(Parity parity, int branch, double x, double t, bool negative) {
  ModeDescriptor m;
  m.parity = parity;
  m.branch = branch;
  m.rho = x / t;
  if (x == 0.0) {
    m.sign_class = SignClass::zero;
    return {0.0, m};
  }
  m.sign_class = negative ? SignClass::negative : SignClass::positive;
  const double v = m.rho * m.rho;
  return {negative ? -v : v, m};
}

// Root of (c + u) tan u = y on (-pi/2, pi/2) with c = j*pi/2, j >= 2. The
// left side increases from -inf to +inf, so the bracket [-pi/2 + d, pi/2 - d]
// contains the root once d is small enough.
double higher_branch_root(int j, double y) {
  const double c = 0.5 * std::numbers::pi * j;
  if (y == 0.0) return c;
  auto f = [c, y](double u) { return (c + u) * std::tan(u) - y; };
  double inset = 1e-9 * std::numbers::pi;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const double lo = -0.5 * std::numbers::pi + inset;
    const double hi = 0.5 * std::numbers::pi - inset;
    const auto bracket = rootfind::RootBracket::make(f, lo, hi);
    if (bracket.f_lo < 0.0 && bracket.f_hi > 0.0) {
      rootfind::RootConfig cfg;
      cfg.abs_tol = 4.0 * kEps * c;
      cfg.rel_tol = 4.0 * kEps;
      return c + rootfind::solve_bracketed(f, bracket, cfg);
    }
    inset *= 1e-1;
  }
  throw NoSignChange("spectrum_interval: branch " + std::to_string(j) +
                     " root not bracketed for alpha*t = " + std::to_string(y));
}

}  // namespace

IntervalGeometry::IntervalGeometry(double half_length) : t_(half_length) {
  if (!std::isfinite(half_length) || !(half_length > 0.0)) {
    throw GeometryError("interval half-length must be positive and finite, got " +
                        std::to_string(half_length));
  }
  if (half_length < kMinHalfLength) {
    throw GeometryError("interval half-length " + std::to_string(half_length) +
                        " is numerically degenerate (below 1e-12)");
  }
}

Entry first_mode_interval(const IntervalGeometry& geom, double alpha) {
  check_alpha(alpha);
  const double t = geom.half_length();
  const double y = alpha * t;
  if (y > 0.0) {
    return make_entry(Parity::even, 0, basisfn::eval_inverse(BasisFunctionId::G1fun, y),
                      t, false);
  }
  if (y == 0.0) return make_entry(Parity::even, 0, 0.0, t, false);
  return make_entry(Parity::even, 0, basisfn::eval_inverse(BasisFunctionId::H1fun, -y),
                    t, true);
}

Entry second_mode_interval(const IntervalGeometry& geom, double alpha) {
  check_alpha(alpha);
  const double t = geom.half_length();
  const double y = alpha * t;
  if (y > -1.0) {
    return make_entry(Parity::odd, 0, basisfn::eval_inverse(BasisFunctionId::G2fun, y),
                      t, false);
  }
  if (y == -1.0) return make_entry(Parity::odd, 0, 0.0, t, false);
  return make_entry(Parity::odd, 0, basisfn::eval_inverse(BasisFunctionId::H2fun, -y),
                    t, true);
}

Entry branch_mode_interval(const IntervalGeometry& geom, double alpha, int j) {
  if (j < 0) throw DomainError("branch_mode_interval: negative mode index");
  if (j == 0) return first_mode_interval(geom, alpha);
  if (j == 1) return second_mode_interval(geom, alpha);
  check_alpha(alpha);
  const double t = geom.half_length();
  const Parity parity = j % 2 == 0 ? Parity::even : Parity::odd;
  return make_entry(parity, j / 2, higher_branch_root(j, alpha * t), t, false);
}

double lambda1_interval(const IntervalGeometry& geom, double alpha) {
  return first_mode_interval(geom, alpha).value;
}

double lambda2_interval(const IntervalGeometry& geom, double alpha) {
  return second_mode_interval(geom, alpha).value;
}

IntervalSpectrum spectrum_interval(const IntervalGeometry& geom, double alpha, int k) {
  if (k < 1) throw DomainError("spectrum_interval: k must be at least 1");
  const int per_parity = (k + 1) / 2 + 2;
  IntervalSpectrum spec;
  spec.entries.reserve(2 * per_parity);
  for (int m = 0; m < per_parity; ++m) {
    spec.entries.push_back(branch_mode_interval(geom, alpha, 2 * m));
    spec.entries.push_back(branch_mode_interval(geom, alpha, 2 * m + 1));
  }
  std::stable_sort(spec.entries.begin(), spec.entries.end(),
                   [](const Entry& a, const Entry& b) { return a.value < b.value; });
  spec.entries.resize(k);
  return spec;
}

double gap_interval(const IntervalGeometry& geom, double alpha) {
  check_alpha(alpha);
  const double t = geom.half_length();
  const double y = -alpha * t;
  if (!(y > 1.0)) return lambda2_interval(geom, alpha) - lambda1_interval(geom, alpha);
  // With a tanh a = y = b coth b:
  //   a - b = y (coth a - tanh b) = y (2/(e^{2a} - 1) + 2/(e^{2b} + 1)).
  const double a = basisfn::eval_inverse(BasisFunctionId::H1fun, y);
  const double b = basisfn::eval_inverse(BasisFunctionId::H2fun, y);
  const double diff = y * (2.0 / std::expm1(2.0 * a) + 2.0 / (std::exp(2.0 * b) + 1.0));
  return (a + b) * diff / (t * t);
}

}  // namespace robinbox
