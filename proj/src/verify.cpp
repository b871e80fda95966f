#include "robinbox/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "robinbox/basisfn.hpp"
#include "robinbox/box.hpp"
#include "robinbox/format.hpp"
#include "robinbox/interval.hpp"
#include "robinbox/oracle.hpp"
#include "robinbox/shapes.hpp"

namespace robinbox::verify {

namespace {

using basisfn::AuxId;
using basisfn::BasisFunctionId;
using basisfn::ThresholdId;
using Fn = std::function<double(double)>;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

class Collector {
 public:
  void add(std::string name, double margin, double tolerance = 0.0) {
    checks_.push_back({std::move(name), margin, tolerance});
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = (lo * (n - 1 - i) + hi * i) / (n - 1);
  return out;
}

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> out = linspace(std::log(lo), std::log(hi), n);
  for (double& v : out) v = std::exp(v);
  return out;
}

std::vector<double> shifted(std::vector<double> v, double offset, double factor = 1.0) {
  for (double& x : v) x = offset + factor * x;
  return v;
}

double inverse(BasisFunctionId id, double y) { return basisfn::eval_inverse(id, y); }
double inverse_sq(BasisFunctionId id, double y) {
  const double x = inverse(id, y);
  return x * x;
}
double scaled(BasisFunctionId id, double y) { return basisfn::scaled_inverse(id, y); }

// Smallest normalized step (f(x_i) - f(x_{i+1})) / (|f(x_i)| + |f(x_{i+1})|)
// along an ascending grid; positive iff f strictly decreases.
double decrease_margin(const Fn& f, const std::vector<double>& xs) {
  double worst = kInf;
  double prev = f(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double cur = f(xs[i]);
    const double scale = std::abs(prev) + std::abs(cur);
    worst = std::min(worst, scale > 0.0 ? (prev - cur) / scale : prev - cur);
    prev = cur;
  }
  return worst;
}

double increase_margin(const Fn& f, const std::vector<double>& xs) {
  return decrease_margin([&f](double x) { return -f(x); }, xs);
}

// Smallest sign * (second difference) / (h^2 (|f| + 1e-300)) over the grid,
// with h = step_factor * scale(x).
double curvature_margin(const Fn& f, const std::vector<double>& xs, const Fn& step,
                        double sign) {
  double worst = kInf;
  for (double x : xs) {
    const double h = step(x);
    const double mid = f(x);
    const double d2 = f(x + h) - 2.0 * mid + f(x - h);
    worst = std::min(worst, sign * d2 / (h * h * (std::abs(mid) + 1e-300)));
  }
  return worst;
}

double slope(const Fn& f, double x, double h) { return (f(x + h) - f(x - h)) / (2.0 * h); }

Fn relative_step(double factor) {
  return [factor](double x) { return factor * std::abs(x); };
}

Fn constant_step(double h) {
  return [h](double) { return h; };
}

// ---------------------------------------------------------------- lemmas

void roundtrip_checks(Collector& c) {
  auto worst = [](BasisFunctionId id, const std::vector<double>& ys) {
    double w = 0.0;
    for (double y : ys) {
      const double back = basisfn::eval(id, inverse(id, y));
      w = std::max(w, std::abs(back - y) / std::abs(y));
    }
    return w;
  };
  const auto pos = logspace(1e-6, 1e5, 512);
  auto g2_grid = shifted(logspace(1e-6, 0.999, 256), -1.0);
  const auto g2_pos = logspace(1e-3, 1e5, 256);
  g2_grid.insert(g2_grid.end(), g2_pos.begin(), g2_pos.end());
  c.add("lemma.roundtrip.g1", 1e-10 - worst(BasisFunctionId::G1fun, pos));
  c.add("lemma.roundtrip.g2", 1e-10 - worst(BasisFunctionId::G2fun, g2_grid));
  c.add("lemma.roundtrip.h1", 1e-10 - worst(BasisFunctionId::H1fun, pos));
  c.add("lemma.roundtrip.h2",
        1e-10 - worst(BasisFunctionId::H2fun, shifted(logspace(1e-6, 1e5, 512), 1.0)));
}

void monotonicity_checks(Collector& c) {
  auto G = [](BasisFunctionId id) { return Fn([id](double y) { return scaled(id, y); }); };
  c.add("lemma.monotone.G1_decreasing",
        decrease_margin(G(BasisFunctionId::G1fun), logspace(1e-4, 1e4, 512)));
  c.add("lemma.monotone.G2_decreasing_neg",
        decrease_margin(G(BasisFunctionId::G2fun), shifted(logspace(1e-4, 0.999, 512), -1.0)));
  c.add("lemma.monotone.G2_decreasing_pos",
        decrease_margin(G(BasisFunctionId::G2fun), logspace(1e-4, 1e4, 512)));
  c.add("lemma.monotone.H1_decreasing",
        decrease_margin(G(BasisFunctionId::H1fun), logspace(1e-4, 12.0, 512)));
  c.add("lemma.monotone.H2_increasing",
        increase_margin(G(BasisFunctionId::H2fun), shifted(logspace(1e-4, 11.0, 512), 1.0)));
}

void inverse_square_checks(Collector& c) {
  auto sq = [](BasisFunctionId id) { return Fn([id](double y) { return inverse_sq(id, y); }); };
  const auto pos = logspace(1e-4, 1e4, 512);
  c.add("lemma.inverse_sq.g1_concave",
        curvature_margin(sq(BasisFunctionId::G1fun), pos, relative_step(1e-4), -1.0));
  const auto g2_low = logspace(1e-3, 0.99, 256);
  const double m_low = curvature_margin(
      sq(BasisFunctionId::G2fun), shifted(g2_low, -1.0),
      [](double y) { return 1e-4 * (y + 1.0); }, -1.0);
  const double m_high = curvature_margin(sq(BasisFunctionId::G2fun), logspace(1e-3, 1e4, 256),
                                         relative_step(1e-4), -1.0);
  c.add("lemma.inverse_sq.g2_concave", std::min(m_low, m_high));
  c.add("lemma.inverse_sq.h1_convex",
        curvature_margin(sq(BasisFunctionId::H1fun), pos, relative_step(1e-4), 1.0));
  c.add("lemma.inverse_sq.h2_convex",
        curvature_margin(sq(BasisFunctionId::H2fun), shifted(logspace(1e-3, 1e4, 512), 1.0),
                         [](double y) { return 1e-4 * (y - 1.0); }, 1.0));
}

void bound_checks(Collector& c) {
  double g1_margin = kInf;
  double h1_margin = kInf;
  for (double y : logspace(1e-4, 1e4, 512)) {
    const double g = inverse_sq(BasisFunctionId::G1fun, y);
    const double h = inverse_sq(BasisFunctionId::H1fun, y);
    const double lower = y - y * y;
    const double upper = y + y * y;
    g1_margin = std::min(g1_margin, (g - lower) / (std::abs(g) + std::abs(lower)));
    h1_margin = std::min(h1_margin, (upper - h) / (std::abs(h) + std::abs(upper)));
  }
  c.add("lemma.bounds.g1_inverse_sq_lower", g1_margin);
  c.add("lemma.bounds.h1_inverse_sq_upper", h1_margin);
}

void derivative_checks(Collector& c) {
  double g_prime = kInf;
  double sq_diff = kInf;
  for (double y : logspace(1e-3, 1e3, 512)) {
    const double h = 1e-4 * y;
    const double d1 = slope([](double v) { return scaled(BasisFunctionId::G1fun, v); }, y, h);
    const double d2 = slope([](double v) { return scaled(BasisFunctionId::G2fun, v); }, y, h);
    g_prime = std::min(g_prime, (d1 - d2) / (std::abs(d1) + std::abs(d2)));
    const double s1 = slope([](double v) { return inverse_sq(BasisFunctionId::G1fun, v); }, y, h);
    const double s2 = slope([](double v) { return inverse_sq(BasisFunctionId::G2fun, v); }, y, h);
    sq_diff = std::min(sq_diff, (s2 - s1) / (std::abs(s1) + std::abs(s2)));
  }
  c.add("lemma.derivative.G1_prime_exceeds_G2_prime", g_prime);
  c.add("lemma.derivative.g2_sq_minus_g1_sq_increasing", sq_diff);

  double neg = kInf;
  for (double s : logspace(1e-3, 0.999, 256)) {
    const double y = -1.0 + s;
    const double h = 1e-4 * std::min(s, 1.0 - s);
    auto f = [](double v) {
      return inverse_sq(BasisFunctionId::G2fun, v) + inverse_sq(BasisFunctionId::H1fun, -v);
    };
    const double d = slope(f, y, h);
    neg = std::min(neg, d / (std::abs(f(y)) + 1e-300));
  }
  c.add("lemma.derivative.g2_sq_plus_h1_sq_increasing", neg);

  // h1^{-1}(y)^2 - h2^{-1}(y)^2 is the gap of (-1, 1) at alpha = -y, which is
  // evaluated without cancellation.
  double hyp = kInf;
  for (double y : shifted(logspace(1e-3, 29.0, 256), 1.0)) {
    auto f = [](double v) { return gap_interval(IntervalGeometry{1.0}, -v); };
    hyp = std::min(hyp, -slope(f, y, 1e-4 * (y - 1.0)) / f(y));
  }
  c.add("lemma.derivative.h1_sq_minus_h2_sq_decreasing", hyp);

  double order = kInf;
  for (double y : shifted(logspace(1e-3, 14.0, 256), 1.0)) {
    const double a = inverse(BasisFunctionId::H1fun, y);
    const double b = inverse(BasisFunctionId::H2fun, y);
    order = std::min(order, (a - b) / a);
  }
  c.add("lemma.derivative.h2_inverse_below_h1_inverse", order);
}

void log_convexity_checks(Collector& c) {
  auto along = [](BasisFunctionId id) {
    return Fn([id](double z) { return scaled(id, std::exp(z)); });
  };
  c.add("lemma.log_convex.G1",
        curvature_margin(along(BasisFunctionId::G1fun), linspace(-6.0, 6.0, 241),
                         constant_step(1e-3), 1.0));
  c.add("lemma.log_convex.H1",
        curvature_margin(along(BasisFunctionId::H1fun), linspace(-6.0, 2.0, 161),
                         constant_step(1e-2), 1.0));
}

// y (1 - y) F(c y)^2 for one of the scaled inverses F.
Fn weighted(BasisFunctionId id, double c) {
  return [id, c](double y) {
    const double v = scaled(id, c * y);
    return y * (1.0 - y) * v * v;
  };
}

void shape_lemma_checks(Collector& c) {
  const double cs[] = {0.5, 1.0, 2.0, 3.0, 4.0, 6.0, 10.0, 25.0};
  double g1 = kInf, g2 = kInf, g2neg = kInf;
  double h1_up = kInf, h1_down = kInf, h1_concave = kInf;
  double h2_concave = kInf, h2_up = kInf, h2_down = kInf;
  for (double cc : cs) {
    const auto ys = logspace(1e-2, 10.0, 128);
    g1 = std::min(g1, curvature_margin(weighted(BasisFunctionId::G1fun, cc), ys,
                                       relative_step(1e-3), 1.0));
    g2 = std::min(g2, curvature_margin(weighted(BasisFunctionId::G2fun, cc), ys,
                                       relative_step(1e-3), 1.0));
    const double top = std::min(1.0, 1.0 / cc);
    g2neg = std::min(g2neg, decrease_margin(weighted(BasisFunctionId::G2fun, -cc),
                                            linspace(1e-3 * top, 0.999 * top, 256)));

    const double y1 = basisfn::threshold_y(ThresholdId::y1, cc);
    const Fn h1 = weighted(BasisFunctionId::H1fun, cc);
    if (y1 > 0.0) h1_up = std::min(h1_up, increase_margin(h1, linspace(0.01 * y1, 0.99 * y1, 128)));
    const auto above = shifted(linspace(0.01, 0.99, 256), y1, 1.0 - y1);
    h1_down = std::min(h1_down, decrease_margin(h1, above));
    h1_concave = std::min(h1_concave, curvature_margin(h1, above, constant_step(1e-4), -1.0));

    const double y2 = basisfn::threshold_y(ThresholdId::y2, cc);
    const Fn h2 = weighted(BasisFunctionId::H2fun, cc);
    h2_concave = std::min(
        h2_concave, curvature_margin(h2, shifted(logspace(1e-2, 10.0, 256), 1.0 / cc, 1.0 / cc),
                                     [cc](double y) { return 1e-4 * (y - 1.0 / cc); }, -1.0));
    if (y2 > 1.0 / cc) {
      h2_up = std::min(h2_up, increase_margin(h2, shifted(linspace(0.01, 0.99, 128), 1.0 / cc,
                                                          y2 - 1.0 / cc)));
    }
    h2_down = std::min(h2_down, decrease_margin(h2, shifted(linspace(0.01, 5.0, 256), y2)));
  }
  c.add("lemma.shape.G1_weighted_convex", g1);
  c.add("lemma.shape.G2_weighted_convex", g2);
  c.add("lemma.shape.G2_negative_weighted_decreasing", g2neg);
  c.add("lemma.shape.H1_weighted_increasing_below_y1", h1_up);
  c.add("lemma.shape.H1_weighted_decreasing_above_y1", h1_down);
  c.add("lemma.shape.H1_weighted_concave_above_y1", h1_concave);
  c.add("lemma.shape.H2_weighted_concave", h2_concave);
  c.add("lemma.shape.H2_weighted_increasing_below_y2", h2_up);
  c.add("lemma.shape.H2_weighted_decreasing_above_y2", h2_down);
}

void aux_checks(Collector& c) {
  auto f1 = [](double x) { return basisfn::f_aux(AuxId::f1, x); };
  auto f2 = [](double x) { return basisfn::f_aux(AuxId::f2, x); };
  const auto xs = logspace(1e-3, 50.0, 512);
  c.add("lemma.aux.f1_decreasing", decrease_margin(f1, xs));
  c.add("lemma.aux.f2_decreasing", decrease_margin(f2, xs));
  // Beyond x ~ 15 the two differ by less than one ulp.
  double order = kInf;
  for (double x : logspace(1e-3, 15.0, 512)) order = std::min(order, (f2(x) - f1(x)) / (f1(x) + f2(x)));
  c.add("lemma.aux.f1_below_f2", order);
  c.add("lemma.aux.f1_limit_at_zero", 1e-12 - std::abs(f1(1e-8) - 1.0 / 3.0));
  c.add("lemma.aux.f2_limit_at_zero", 1e-12 - std::abs(f2(1e-8) - 1.0));

  double b1 = kInf, b2 = kInf, sum = kInf;
  for (double w : logspace(0.05, 0.333, 128)) {
    const double a = basisfn::eval(BasisFunctionId::H1fun, basisfn::f_aux_inverse(AuxId::f1, w));
    const double b = basisfn::eval(BasisFunctionId::H2fun, basisfn::f_aux_inverse(AuxId::f2, w));
    b1 = std::min(b1, 1.0 - 2.0 * w * a);
    sum = std::min(sum, 1.0 - w * (a + b));
  }
  for (double w : logspace(1e-3, 0.999, 256)) {
    const double b = basisfn::eval(BasisFunctionId::H2fun, basisfn::f_aux_inverse(AuxId::f2, w));
    b2 = std::min(b2, 1.0 - w * b);
  }
  c.add("lemma.aux.h1_f1_inverse_bound", b1);
  c.add("lemma.aux.h2_f2_inverse_bound", b2);
  c.add("lemma.aux.sum_bound", sum);

  double y1_range = kInf;
  for (double cc : {3.01, 4.0, 6.0, 10.0, 15.0}) {
    const double y1 = basisfn::threshold_y(ThresholdId::y1, cc);
    y1_range = std::min({y1_range, y1, 0.5 - y1});
  }
  c.add("lemma.threshold.y1_in_open_half", y1_range);
  double pair = kInf;
  for (double cc : {1.01, 1.5, 2.0, 3.0, 4.0, 6.0, 10.0, 15.0}) {
    pair = std::min(pair, 1.0 - basisfn::threshold_y(ThresholdId::y1, cc) -
                              basisfn::threshold_y(ThresholdId::y2, cc));
  }
  c.add("lemma.threshold.y1_plus_y2_below_one", pair);
}

int sign_changes(const Fn& f, const std::vector<double>& xs) {
  int count = 0;
  double prev = f(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double cur = f(xs[i]);
    if ((prev < 0.0) != (cur < 0.0)) ++count;
    prev = cur;
  }
  return count;
}

void constant_checks(Collector& c) {
  const double ap = basisfn::alpha_plus();
  const double am = basisfn::alpha_minus();
  c.add("lemma.constants.alpha_plus_value", 5e-4 - std::abs(ap - 33.2054));
  c.add("lemma.constants.alpha_minus_value", 5e-4 - std::abs(am + 9.3885));
  c.add("lemma.constants.alpha_plus_residual",
        1e-10 - std::abs(basisfn::alpha_plus_residual(ap)));
  c.add("lemma.constants.alpha_minus_residual",
        1e-10 - std::abs(basisfn::alpha_minus_residual(am)));
  c.add("lemma.constants.alpha_minus_below_minus_8", -8.0 - am);
  const int plus_changes = sign_changes(basisfn::alpha_plus_residual, linspace(1.0, 100.0, 991));
  const int minus_changes =
      sign_changes(basisfn::alpha_minus_residual, linspace(-100.0, -8.0, 921));
  c.add("lemma.constants.alpha_plus_unique", 0.5 - std::abs(plus_changes - 1));
  c.add("lemma.constants.alpha_minus_unique", 0.5 - std::abs(minus_changes - 1));
}

// -------------------------------------------------------------- interval

void interval_checks(Collector& c) {
  const double ts[] = {0.5, 1.0, 2.0};
  double mono1 = kInf, mono2 = kInf, conc1 = kInf, conc2 = kInf;
  for (double t : ts) {
    const IntervalGeometry g{t};
    const auto alphas = linspace(-20.0, 20.0, 401);
    mono1 = std::min(mono1, increase_margin([&](double a) { return lambda1_interval(g, a); }, alphas));
    mono2 = std::min(mono2, increase_margin([&](double a) { return lambda2_interval(g, a); }, alphas));
    const auto span = linspace(-10.0, 10.0, 401);
    const double h = span[1] - span[0];
    for (std::size_t i = 1; i + 1 < span.size(); ++i) {
      auto d2 = [&](auto lam) {
        return lam(g, span[i + 1]) - 2.0 * lam(g, span[i]) + lam(g, span[i - 1]);
      };
      conc1 = std::min(conc1, -d2(lambda1_interval) / (h * h));
      conc2 = std::min(conc2, -d2(lambda2_interval) / (h * h));
    }
  }
  c.add("interval.alpha_monotone.lambda1", mono1);
  c.add("interval.alpha_monotone.lambda2", mono2);
  c.add("interval.concave.lambda1", conc1, 1e-10);
  c.add("interval.concave.lambda2", conc2, 1e-10);

  double pos_dec = kInf, neg_l1 = kInf, neg_l2 = kInf, neg_gap = kInf;
  for (double a : {0.5, 3.0}) {
    const auto t_grid = logspace(0.1, 5.0, 256);
    for (auto fn : {lambda1_interval, lambda2_interval, gap_interval}) {
      pos_dec = std::min(pos_dec, decrease_margin([&](double t) { return fn(IntervalGeometry{t}, a); },
                                                  t_grid));
    }
  }
  for (double a : {-0.5, -3.0}) {
    const auto t_grid = logspace(0.1, std::min(5.0, 6.0 / std::abs(a)), 256);
    neg_l1 = std::min(neg_l1, increase_margin(
                                  [&](double t) { return lambda1_interval(IntervalGeometry{t}, a); },
                                  t_grid));
    neg_l2 = std::min(neg_l2, decrease_margin(
                                  [&](double t) { return lambda2_interval(IntervalGeometry{t}, a); },
                                  t_grid));
    neg_gap = std::min(neg_gap, decrease_margin(
                                    [&](double t) { return gap_interval(IntervalGeometry{t}, a); },
                                    t_grid));
  }
  c.add("interval.t_monotone.positive_alpha_all_decrease", pos_dec);
  c.add("interval.t_monotone.negative_alpha_lambda1_increases", neg_l1);
  c.add("interval.t_monotone.negative_alpha_lambda2_decreases", neg_l2);
  c.add("interval.t_monotone.negative_alpha_gap_decreases", neg_gap);

  // |lambda + alpha^2| <= 8 alpha^2 e^{2 alpha t} for alpha < 0, t large.
  double limit = kInf;
  for (double a : {-1.0, -2.0}) {
    for (double t : {2.0, 4.0, 6.0}) {
      const IntervalGeometry g{t};
      const double scale = a * a * std::exp(2.0 * a * t);
      limit = std::min({limit, 8.0 - std::abs(lambda1_interval(g, a) + a * a) / scale,
                        8.0 - std::abs(lambda2_interval(g, a) + a * a) / scale});
    }
  }
  c.add("interval.negative_alpha_limit", limit);

  double join1 = kInf, join2 = kInf;
  for (double t : ts) {
    const IntervalGeometry g{t};
    const double d = 1e-7;
    const double right = (lambda1_interval(g, d) - lambda1_interval(g, 0.0)) / d;
    const double left = (lambda1_interval(g, 0.0) - lambda1_interval(g, -d)) / d;
    join1 = std::min(join1, 1e-5 - std::max(std::abs(right * t - 1.0), std::abs(left * t - 1.0)));
    const double a0 = -1.0 / t;
    const double right2 = (lambda2_interval(g, a0 + d) - lambda2_interval(g, a0)) / d;
    const double left2 = (lambda2_interval(g, a0) - lambda2_interval(g, a0 - d)) / d;
    join2 = std::min(join2, 1e-5 - std::max(std::abs(right2 * t / 3.0 - 1.0),
                                            std::abs(left2 * t / 3.0 - 1.0)));
  }
  c.add("interval.join.lambda1_slope_at_zero", join1);
  c.add("interval.join.lambda2_slope_at_minus_inverse_t", join2);

  double small_t = kInf;
  for (double a : {-5.0, -1.0, 1.0, 5.0}) {
    const double t = 1e-6;
    small_t = std::min(small_t, 1e-4 - std::abs(lambda1_interval(IntervalGeometry{t}, a) * t / a - 1.0));
  }
  c.add("interval.small_t_blowup", small_t);

  double neumann = kInf;
  const auto spec = spectrum_interval(IntervalGeometry{1.0}, 0.0, 6);
  for (int j = 0; j < 6; ++j) {
    const double expect = std::pow(j * kPi / 2.0, 2);
    neumann = std::min(neumann, 1e-12 * std::max(1.0, expect) - std::abs(spec[j] - expect));
  }
  c.add("interval.neumann_spectrum", neumann);

  const IntervalGeometry unit{1.0};
  const double quarter = kPi * kPi / 4.0;
  c.add("interval.dirichlet_limit.lambda1",
        1e-4 - std::abs(lambda1_interval(unit, 1e6) / quarter - 1.0));
  c.add("interval.dirichlet_limit.gap",
        1e-4 - std::abs(gap_interval(unit, 1e6) / (3.0 * quarter) - 1.0));

  double alternation = kInf;
  double sorted = kInf;
  double nonpositive = kInf;
  for (double t : {0.5, 1.0, 3.0}) {
    for (double a : linspace(-10.0, 30.0, 161)) {
      const auto s = spectrum_interval(IntervalGeometry{t}, a, 6);
      int count = 0;
      for (int j = 0; j < 6; ++j) {
        const bool even = s.entries[j].mode.parity == Parity::even;
        alternation = std::min(alternation, even == (j % 2 == 0) ? 1.0 : -1.0);
        if (j + 1 < 6) {
          sorted = std::min(sorted, (s[j + 1] - s[j]) / std::max(1.0, std::abs(s[j])));
        }
        if (s[j] <= 0.0) ++count;
      }
      nonpositive = std::min(nonpositive, 2.5 - count);
    }
  }
  c.add("interval.even_odd_alternation", alternation);
  // For alpha t << -1 the lowest pair agrees to all digits, so ties are allowed.
  c.add("interval.spectrum_sorted", sorted, 1e-300);
  c.add("interval.fewer_than_three_nonpositive", nonpositive);
}

// ------------------------------------------------------------------- box

std::vector<BoxGeometry> random_boxes(int count, unsigned seed, int min_dim, int max_dim) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(min_dim, max_dim);
  std::uniform_real_distribution<double> logw(std::log(0.2), std::log(3.0));
  std::vector<BoxGeometry> out;
  for (int i = 0; i < count; ++i) {
    std::vector<double> w(dim(rng));
    for (double& x : w) x = std::exp(logw(rng));
    out.emplace_back(std::move(w));
  }
  return out;
}

double rel_diff(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

void box_checks(Collector& c) {
  const auto boxes = random_boxes(40, 20240611u, 1, 3);
  const double alphas[] = {-3.0, -0.4, 0.7, 4.0};
  double perm = 0.0, scale = 0.0, sep = 0.0, corollary = 0.0;
  for (const auto& b : boxes) {
    std::vector<double> rev(b.half_widths().rbegin(), b.half_widths().rend());
    const BoxGeometry r(rev);
    for (double a : alphas) {
      perm = std::max({perm, rel_diff(lambda1_box(b, a), lambda1_box(r, a)),
                       rel_diff(lambda2_box(b, a), lambda2_box(r, a)),
                       rel_diff(gap_box(b, a), gap_box(r, a))});
      for (double k : {0.5, 2.0, 10.0}) {
        const BoxGeometry s = b.scaled(k);
        scale = std::max({scale, rel_diff(lambda1_box(s, a / k), lambda1_box(b, a) / (k * k)),
                          rel_diff(lambda2_box(s, a / k), lambda2_box(b, a) / (k * k))});
      }
      const auto spec = spectrum_box(b, a, 2);
      sep = std::max({sep, rel_diff(spec[0], lambda1_box(b, a)),
                      rel_diff(spec[1], lambda2_box(b, a))});
      const double l1 = lambda1_box(b, a);
      const double l2 = lambda2_box(b, a);
      corollary = std::max(corollary, std::abs(gap_box(b, a) - (l2 - l1)) /
                                          std::max(std::abs(l1), std::abs(l2)));
    }
  }
  c.add("box.permutation_invariance", 1e-12 - perm);
  c.add("box.scaling_law", 1e-12 - scale);
  c.add("box.separation_consistency", 1e-12 - sep);
  c.add("box.gap_equals_longest_edge_gap", 1e-12 - corollary);

  double n1 = 0.0;
  for (double a : alphas) {
    const BoxGeometry b({1.3});
    const IntervalGeometry g{1.3};
    n1 = std::max({n1, std::abs(lambda1_box(b, a) - lambda1_interval(g, a)),
                   std::abs(lambda2_box(b, a) - lambda2_interval(g, a))});
  }
  c.add("box.one_dimension_reduces_to_interval", -n1, 1e-300);

  const std::vector<std::vector<double>> shapes = {{1.0, 1.0}, {3.0, 1.0}, {2.0, 1.0, 1.0}};
  double gap_inc = kInf, conc1 = kInf, conc2 = kInf, gap_top = kInf, gap_bottom = kInf;
  for (const auto& w : shapes) {
    const BoxGeometry b(w);
    const auto grid = linspace(-50.0, 50.0, 200);
    const double h = grid[1] - grid[0];
    double prev = gap_box(b, grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double cur = gap_box(b, grid[i]);
      gap_inc = std::min(gap_inc, (cur - prev) / (cur + prev));
      prev = cur;
    }
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
      conc1 = std::min(conc1, -(lambda1_box(b, grid[i + 1]) - 2.0 * lambda1_box(b, grid[i]) +
                                lambda1_box(b, grid[i - 1])));
      conc2 = std::min(conc2, -(lambda2_box(b, grid[i + 1]) - 2.0 * lambda2_box(b, grid[i]) +
                                lambda2_box(b, grid[i - 1])));
    }
    (void)h;
    const double wm = b.longest_half_width();
    gap_top = std::min(gap_top,
                       1e-4 - rel_diff(gap_box(b, 1e6), 3.0 * kPi * kPi / (4.0 * wm * wm)));
    gap_bottom = std::min(gap_bottom, 1e-30 - gap_box(b, -50.0));
  }
  c.add("box.gap_strictly_increasing_in_alpha", gap_inc);
  c.add("box.concave.lambda1", conc1, 1e-10);
  c.add("box.concave.lambda2", conc2, 1e-10);
  c.add("box.gap_dirichlet_limit", gap_top);
  c.add("box.gap_vanishes_as_alpha_decreases", gap_bottom);

  double ratio_mono = kInf;
  for (const auto& w : shapes) {
    const BoxGeometry b(w);
    const double sigma = steklov_sigma1(b);
    auto f = [&](double a) { return a * lambda2_box(b, a) / lambda1_box(b, a); };
    const auto left = linspace(-0.99 * sigma, -1e-3, 100);
    const auto right = linspace(1e-3, 20.0, 100);
    ratio_mono = std::min({ratio_mono, increase_margin(f, left), increase_margin(f, right),
                           (f(1e-3) - f(-1e-3)) / (std::abs(f(1e-3)) + std::abs(f(-1e-3)))});
  }
  c.add("box.alpha_times_ratio_increasing", ratio_mono);

  const double alpha0 = square_lambda2_zero_alpha();
  const double sigma_sq = steklov_sigma1(BoxGeometry({1.0, 1.0}));
  c.add("box.steklov_square_value", 5e-5 - std::abs(sigma_sq - 0.68825));
  c.add("box.steklov_square_matches_alpha0", 1e-10 - std::abs(sigma_sq + alpha0));
  double sig_scale = 0.0;
  for (double k : {0.5, 2.0, 10.0}) {
    sig_scale = std::max(sig_scale, rel_diff(steklov_sigma1(BoxGeometry({k, k})), sigma_sq / k));
  }
  c.add("box.steklov_scaling", 1e-10 - sig_scale);

  double bound = kInf;
  for (const auto& b : random_boxes(100, 77u, 2, 3)) {
    for (double a : {-10.0, -1.0, 1.0, 10.0}) {
      bound = std::min(bound, (a - scaled_quantity(b, a, ScaledKind::linear_bound_lhs)) / std::abs(a));
    }
  }
  c.add("box.linear_bound", bound);
  double deficit_mono = kInf;
  double deficit_last = kInf;
  for (int n : {2, 3}) {
    for (double a : {-10.0, -1.0, 1.0, 10.0}) {
      double prev = kInf;
      for (int m = 1; m <= 12; ++m) {
        std::vector<double> w(n, 1.0);
        w.back() = std::ldexp(1.0, -m);
        const double def = a - scaled_quantity(BoxGeometry(w), a, ScaledKind::linear_bound_lhs);
        deficit_mono = std::min(deficit_mono, std::isinf(prev) ? 1.0 : (prev - def) / std::abs(a));
        prev = def;
      }
      deficit_last = std::min(deficit_last, 0.05 - prev / std::abs(a));
    }
  }
  c.add("box.linear_bound_deficit_decreasing", deficit_mono);
  c.add("box.linear_bound_deficit_small_when_degenerate", deficit_last);
}

// ---------------------------------------------------------------- shapes

struct ScanCase {
  std::string name;
  shapes::RectangleFamily family;
  double alpha;
  shapes::Objective objective;
  bool expect_symmetric;
};

std::vector<ScanCase> scan_cases() {
  using shapes::FamilyKind;
  using shapes::Objective;
  const double ap = basisfn::alpha_plus();
  const double am = basisfn::alpha_minus();
  std::vector<ScanCase> out;
  auto add = [&](FamilyKind kind, int dim, double a, Objective o, bool sym) {
    const shapes::RectangleFamily fam{kind, dim, 1.0};
    out.push_back({std::string(shapes::to_string(o)) + "." + std::string(shapes::to_string(kind)) +
                       ".n" + std::to_string(dim) + ".alpha=" + format_number(a, 6),
                   fam, a, o, sym});
  };
  for (int n : {2, 3}) {
    for (double a : {-5.0, -1.0, 1.0, 5.0}) add(FamilyKind::fixed_volume, n, a, Objective::lambda1, true);
    for (double a : {-2.0, -0.5, 0.0}) add(FamilyKind::fixed_volume, n, a, Objective::lambda2, true);
    for (FamilyKind k : {FamilyKind::fixed_volume, FamilyKind::fixed_diameter, FamilyKind::fixed_surface}) {
      for (double a : {-3.0, 0.0, 3.0}) add(k, n, a, Objective::gap, true);
    }
    for (double a : {-2.0, -0.5, 0.5, 3.0}) add(FamilyKind::fixed_volume, n, a, Objective::ratio, true);
    add(FamilyKind::fixed_volume, n, 0.0, Objective::steklov, true);
  }
  for (double a : {-5.0, -1.0, 1.0, 5.0}) add(FamilyKind::fixed_perimeter, 2, a, Objective::perim_lambda1, true);
  for (double a : {am + 0.5, -5.0, 0.0, 5.0, 20.0, ap - 0.5}) {
    add(FamilyKind::fixed_perimeter, 2, a, Objective::perim_lambda2, true);
  }
  for (double a : {am - 0.5, -15.0, ap + 0.5, 40.0}) {
    add(FamilyKind::fixed_perimeter, 2, a, Objective::perim_lambda2, false);
  }
  for (double a : {1.0, 10.0, 50.0}) add(FamilyKind::fixed_perimeter, 2, a, Objective::perim_ratio, true);
  add(FamilyKind::fixed_perimeter, 2, 0.0, Objective::perim_steklov, true);
  return out;
}

void shape_checks(Collector& c, const Config& cfg) {
  for (const auto& sc : scan_cases()) {
    shapes::ScanOptions opts;
    opts.exec = cfg.exec;
    const auto r = shapes::scan_family(sc.family, sc.alpha, sc.objective, cfg.scan_grid, opts);
    if (sc.expect_symmetric) {
      const double off = std::abs(r.argopt - r.symmetric_param);
      c.add("shapes.symmetric_optimum." + sc.name, r.at_boundary ? -kInf : r.grid_step - off);
    } else {
      double margin = r.at_boundary ? 1.0 : -1.0;
      if (!std::isnan(r.degenerate_limit)) {
        // Every grid value stays below the degenerate limit.
        for (double v : r.objective_values) {
          margin = std::min(margin, (r.degenerate_limit - v) / std::abs(r.degenerate_limit));
        }
      }
      c.add("shapes.degenerate_optimum." + sc.name, margin);
    }
  }

  double seg = kInf;
  for (const auto& b : random_boxes(60, 4242u, 2, 3)) {
    for (double a : {-3.0, -1.0, 0.0, 1.0, 5.0}) {
      const auto g = shapes::gap_vs_segment(b, a);
      seg = std::min(seg, (g.box_gap - g.segment_gap) / g.box_gap);
    }
  }
  c.add("shapes.gap_exceeds_segment_of_same_diameter", seg);

  std::mt19937_64 rng(99u);
  std::uniform_real_distribution<double> logw(std::log(0.1), std::log(2.0));
  double hear = 0.0;
  for (int i = 0; i < 40; ++i) {
    const double a = std::exp(logw(rng));
    const double b = std::exp(logw(rng));
    const BoxGeometry rect({std::max(a, b), std::min(a, b)});
    for (double alpha : {-2.0, -0.3, 0.3, 2.0, 7.0}) {
      const auto got = shapes::hear_rectangle(lambda1_box(rect, alpha), lambda2_box(rect, alpha), alpha);
      hear = std::max({hear, rel_diff(got.half_widths()[0], rect.half_widths()[0]),
                       rel_diff(got.half_widths()[1], rect.half_widths()[1])});
    }
  }
  c.add("shapes.hearing_roundtrip", 1e-9 - hear);
}

// ---------------------------------------------------------------- oracle

struct OracleCell {
  double t;
  double alpha;
};

std::vector<OracleCell> oracle_matrix() {
  std::vector<OracleCell> cells;
  for (double t : {0.5, 1.0, 2.0, 5.0}) {
    for (double a : {-5.0, -2.0, -1.0 / t, -0.3, 0.0, 0.3, 1.0, 5.0}) cells.push_back({t, a});
  }
  return cells;
}

void oracle_checks(Collector& c, const Config& cfg) {
  const auto cells = oracle_matrix();
  constexpr int k = 6;
  struct CellResult {
    double agreement = kInf;
    double refinement = kInf;
    double order = kInf;
  };
  const auto results = map_indexed(cfg.exec, cells.size(), [&](std::size_t i) {
    const IntervalGeometry g{cells[i].t};
    const auto exact = spectrum_interval(g, cells[i].alpha, k).values();
    const auto orc = oracle::oracle_eigs(g, cells[i].alpha, k, cfg.oracle_grid);
    CellResult r;
    for (int j = 0; j < k; ++j) {
      const double allowed = std::max(cfg.tol_rel * std::abs(exact[j]), cfg.tol_abs);
      r.agreement = std::min(r.agreement, allowed - std::abs(orc.values[j] - exact[j]));
      const double e0 = std::abs(orc.levels[0][j] - exact[j]);
      const double e1 = std::abs(orc.levels[1][j] - exact[j]);
      const double e2 = std::abs(orc.levels[2][j] - exact[j]);
      if (e2 > 1e-8) {
        r.refinement = std::min({r.refinement, (e0 - e1) / e0, (e1 - e2) / e1});
        const double p = std::log2(e0 / e1);
        r.order = std::min(r.order, 0.1 - std::abs(p - 2.0));
      }
    }
    return r;
  });
  double agreement = kInf, refinement = kInf, order = kInf;
  for (const auto& r : results) {
    agreement = std::min(agreement, r.agreement);
    refinement = std::min(refinement, r.refinement);
    order = std::min(order, r.order);
  }
  c.add("oracle.agreement_" + std::to_string(cells.size()) + "_cells", agreement);
  c.add("oracle.error_decreases_under_refinement", refinement);
  c.add("oracle.observed_order_near_two", order);

  // The Sturm count resolves eigenvalues to a few ulps of the matrix norm 4/h^2.
  const auto neu_op = oracle::discretize(IntervalGeometry{1.0}, 0.0, 401);
  const auto neumann = oracle::eigenvalues_sturm(neu_op, 1);
  const double resolution =
      64.0 * std::numeric_limits<double>::epsilon() * 4.0 / (neu_op.h * neu_op.h);
  c.add("oracle.neumann_ground_state_zero", resolution - std::abs(neumann[0]));

  const int n = 401;
  const auto op = oracle::discretize(IntervalGeometry{1.0}, 1e8, n);
  const auto penalty = oracle::eigenvalues_sturm(op, 3);
  double dirichlet = 0.0;
  for (int j = 1; j <= 3; ++j) {
    // Interior Dirichlet problem on n - 2 nodes of the same grid.
    const double s = std::sin(j * kPi / (2.0 * (n - 1)));
    const double expect = 4.0 / (op.h * op.h) * s * s;
    dirichlet = std::max(dirichlet, rel_diff(penalty[j - 1], expect));
  }
  c.add("oracle.penalty_limit_matches_discrete_dirichlet", 1e-4 - dirichlet);

  double symmetric = 0.0;
  for (double a : {-2.0, 0.0, 3.0}) {
    const auto d = oracle::discretize(IntervalGeometry{1.5}, a, 64);
    for (int i = 0; i < d.n; ++i) {
      symmetric = std::max(symmetric, std::abs(d.diag[i] - d.diag[d.n - 1 - i]));
    }
    for (int i = 0; i + 1 < d.n; ++i) {
      symmetric = std::max(symmetric, std::abs(d.offdiag[i] - d.offdiag[d.n - 2 - i]));
      if (d.offdiag[i] == 0.0) symmetric = kInf;
    }
  }
  c.add("oracle.operator_mirror_symmetric_irreducible", -symmetric, 1e-300);
}

}  // namespace

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::lemmas: return "lemmas";
    case Suite::interval: return "interval";
    case Suite::box: return "box";
    case Suite::shapes: return "shapes";
    case Suite::oracle: return "oracle";
    case Suite::all: return "all";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view text) {
  for (Suite s : {Suite::lemmas, Suite::interval, Suite::box, Suite::shapes, Suite::oracle,
                  Suite::all}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

std::vector<Check> run_suite(Suite suite, const Config& config) {
  Collector c;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::lemmas) {
    roundtrip_checks(c);
    monotonicity_checks(c);
    inverse_square_checks(c);
    bound_checks(c);
    derivative_checks(c);
    log_convexity_checks(c);
    shape_lemma_checks(c);
    aux_checks(c);
    constant_checks(c);
  }
  if (all || suite == Suite::interval) interval_checks(c);
  if (all || suite == Suite::box) box_checks(c);
  if (all || suite == Suite::shapes) shape_checks(c, config);
  if (all || suite == Suite::oracle) oracle_checks(c, config);
  return c.take();
}

std::string report_line(const Check& check, int precision) {
  return std::string(check.passed() ? "PASS " : "FAIL ") + check.name + " " +
         format_number(check.margin, precision) + " " + format_number(check.tolerance, precision);
}

}  // namespace robinbox::verify
