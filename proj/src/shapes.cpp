#include "robinbox/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "robinbox/errors.hpp"
#include "robinbox/rootfind.hpp"

namespace robinbox::shapes {

namespace {

constexpr double kPMin = 1e-4;
constexpr double kMaxAspect = 1e4;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kHearTol = 1e-8;
const rootfind::RootConfig kHearSolve{1e-15, 4.0 * std::numeric_limits<double>::epsilon(), 400};
constexpr double kSquareTie = 1e-9;

void require_rectangle(const BoxGeometry& geom, std::string_view what) {
  if (geom.dim() != 2) {
    throw DimensionError(std::string(what) + " needs a rectangle, box has dimension " +
                         std::to_string(geom.dim()));
  }
}

// Minimizes f on [a, b] by golden-section search.
double golden_section_min(const std::function<double(double)>& f, double a, double b) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < 200; ++iter) {
    if (b - a <= 1e-13 * (1.0 + std::abs(a) + std::abs(b))) break;
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? c : d;
}

}  // namespace

double RectangleFamily::param_lo() const {
  if (kind == FamilyKind::fixed_perimeter) return kPMin;
  return -std::log(kMaxAspect) * (dim - 1) / dim;
}

double RectangleFamily::param_hi() const {
  if (kind == FamilyKind::fixed_perimeter) return 1.0 - kPMin;
  return std::log(kMaxAspect) * (dim - 1) / dim;
}

double RectangleFamily::symmetric_param() const {
  return kind == FamilyKind::fixed_perimeter ? 0.5 : 0.0;
}

BoxGeometry RectangleFamily::at(double param) const {
  if (!(normalization > 0.0) || !std::isfinite(normalization)) {
    throw GeometryError("family normalization must be positive and finite");
  }
  if (kind == FamilyKind::fixed_perimeter) {
    if (dim != 2) throw DimensionError("the fixed-perimeter family consists of rectangles");
    if (!(param > 0.0 && param < 1.0)) {
      throw DomainError("perimeter family parameter must lie in (0, 1)");
    }
    return BoxGeometry({param * normalization / 4.0, (1.0 - param) * normalization / 4.0});
  }
  if (dim < 2) throw DimensionError("box families need dimension at least 2");
  std::vector<double> w(static_cast<std::size_t>(dim), std::exp(-param / (dim - 1)));
  w[0] = std::exp(param);
  const BoxGeometry base(w);
  double factor = 1.0;
  switch (kind) {
    case FamilyKind::fixed_volume:
      factor = std::pow(normalization / base.volume(), 1.0 / dim);
      break;
    case FamilyKind::fixed_diameter:
      factor = normalization / base.diameter();
      break;
    case FamilyKind::fixed_surface:
      factor = std::pow(normalization / base.surface(), 1.0 / (dim - 1));
      break;
    case FamilyKind::fixed_perimeter:
      break;
  }
  return base.scaled(factor);
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::fixed_volume: return "volume";
    case FamilyKind::fixed_perimeter: return "perim";
    case FamilyKind::fixed_diameter: return "diameter";
    case FamilyKind::fixed_surface: return "surface";
  }
  return "?";
}

std::string_view to_string(Objective objective) {
  switch (objective) {
    case Objective::lambda1: return "lambda1";
    case Objective::lambda2: return "lambda2";
    case Objective::gap: return "gap";
    case Objective::ratio: return "ratio";
    case Objective::steklov: return "steklov";
    case Objective::perim_lambda1: return "perim_lambda1";
    case Objective::perim_lambda2: return "perim_lambda2";
    case Objective::perim_ratio: return "perim_ratio";
    case Objective::perim_steklov: return "perim_steklov";
  }
  return "?";
}

std::string_view to_string(OptKind kind) { return kind == OptKind::min ? "min" : "max"; }

std::optional<FamilyKind> parse_family(std::string_view text) {
  for (auto k : {FamilyKind::fixed_volume, FamilyKind::fixed_perimeter,
                 FamilyKind::fixed_diameter, FamilyKind::fixed_surface}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

std::optional<Objective> parse_objective(std::string_view text) {
  for (auto o : {Objective::lambda1, Objective::lambda2, Objective::gap, Objective::ratio,
                 Objective::steklov, Objective::perim_lambda1, Objective::perim_lambda2,
                 Objective::perim_ratio, Objective::perim_steklov}) {
    if (text == to_string(o)) return o;
  }
  return std::nullopt;
}

OptKind natural_opt_kind(Objective objective, double alpha) {
  switch (objective) {
    case Objective::lambda1: return alpha > 0.0 ? OptKind::min : OptKind::max;
    case Objective::perim_lambda1: return OptKind::min;
    default: return OptKind::max;
  }
}

double objective_value(const BoxGeometry& geom, double alpha, Objective objective) {
  switch (objective) {
    case Objective::lambda1: return lambda1_box(geom, alpha);
    case Objective::lambda2: return lambda2_box(geom, alpha);
    case Objective::gap: return gap_box(geom, alpha);
    case Objective::ratio: return ratio_box(geom, alpha);
    case Objective::steklov: return steklov_sigma1(geom);
    case Objective::perim_lambda1:
      return scaled_quantity(geom, alpha, ScaledKind::perim_lambda1);
    case Objective::perim_lambda2:
      return scaled_quantity(geom, alpha, ScaledKind::perim_lambda2);
    case Objective::perim_ratio:
      require_rectangle(geom, "perim_ratio");
      return ratio_box(geom, alpha / geom.perimeter());
    case Objective::perim_steklov:
      require_rectangle(geom, "perim_steklov");
      return steklov_sigma1(geom) * geom.perimeter();
  }
  throw DomainError("objective_value: unknown objective");
}

ScanResult scan_family(const RectangleFamily& family, double alpha, Objective objective,
                       int grid_size, const ScanOptions& options) {
  if (grid_size < 16) {
    throw DomainError("scan_family: grid_size must be at least 16, got " +
                      std::to_string(grid_size));
  }
  ScanResult out;
  out.opt_kind = options.opt_kind.value_or(natural_opt_kind(objective, alpha));
  out.symmetric_param = family.symmetric_param();
  const bool limit_known =
      objective == Objective::perim_lambda1 || objective == Objective::perim_lambda2;
  out.degenerate_limit = limit_known ? alpha : kNaN;

  const double lo = family.param_lo();
  const double hi = family.param_hi();
  const int last = grid_size - 1;
  out.grid_step = (hi - lo) / last;
  out.parameter_grid.resize(grid_size);
  for (int i = 0; i <= last; ++i) {
    out.parameter_grid[i] = (lo * (last - i) + hi * i) / last;
  }
  auto value_at = [&](double p) { return objective_value(family.at(p), alpha, objective); };
  out.objective_values =
      map_indexed(options.exec, out.parameter_grid.size(),
                  [&](std::size_t i) { return value_at(out.parameter_grid[i]); });

  const double sign = out.opt_kind == OptKind::min ? 1.0 : -1.0;
  int best = 0;
  for (int i = 1; i <= last; ++i) {
    if (sign * out.objective_values[i] < sign * out.objective_values[best]) best = i;
  }
  out.at_boundary = best == 0 || best == last;
  out.argopt = out.parameter_grid[best];
  out.opt_value = out.objective_values[best];

  const double a = out.parameter_grid[std::max(best - 1, 0)];
  const double b = out.parameter_grid[std::min(best + 1, last)];
  const double refined = golden_section_min([&](double p) { return sign * value_at(p); }, a, b);
  const double refined_value = value_at(refined);
  if (sign * refined_value < sign * out.opt_value) {
    out.argopt = refined;
    out.opt_value = refined_value;
  }
  return out;
}

GapComparison gap_vs_segment(const BoxGeometry& geom, double alpha) {
  if (geom.dim() < 2) throw DimensionError("gap_vs_segment needs dimension at least 2");
  return {gap_box(geom, alpha), gap_interval(IntervalGeometry{geom.diameter() / 2.0}, alpha)};
}

double hearing_residual(const BoxGeometry& rect, double lambda1, double lambda2,
                        double alpha) {
  const double scale = std::max(std::abs(lambda1), std::abs(lambda2));
  const double d1 = std::abs(lambda1_box(rect, alpha) - lambda1);
  const double d2 = std::abs(lambda2_box(rect, alpha) - lambda2);
  return std::max(d1, d2) / scale;
}

BoxGeometry hear_rectangle(double lambda1, double lambda2, double alpha) {
  if (alpha == 0.0) {
    throw AlphaZero("a rectangle is not determined by its first two Neumann eigenvalues");
  }
  if (!std::isfinite(alpha) || !std::isfinite(lambda1) || !std::isfinite(lambda2)) {
    throw DomainError("hear_rectangle: inputs must be finite");
  }
  const double gap = lambda2 - lambda1;
  if (!(gap > 0.0)) {
    throw Inconsistent("lambda2 must exceed lambda1", gap);
  }

  // The interval gap strictly decreases in t, from infinity to 0, so the
  // longer half-width solves gap_interval(t) = gap. Work in log t.
  auto gap_eq = [&](double u) {
    return std::log(gap_interval(IntervalGeometry{std::exp(u)}, alpha)) - std::log(gap);
  };
  double t = 0.0;
  try {
    const double seed = -std::log(std::abs(alpha));
    const auto dir = gap_eq(seed) > 0.0 ? rootfind::Direction::up : rootfind::Direction::down;
    const auto bracket = rootfind::expand_bracket(gap_eq, seed, dir, 1.5, {0.5, 80});
    t = std::exp(rootfind::solve_bracketed(gap_eq, bracket, kHearSolve));
  } catch (const NumericalFailure& e) {
    throw Inconsistent(std::string("no interval matches the spectral gap: ") + e.what(),
                       std::numeric_limits<double>::infinity());
  } catch (const GeometryError& e) {
    throw Inconsistent(std::string("no interval matches the spectral gap: ") + e.what(),
                       std::numeric_limits<double>::infinity());
  }

  // lambda1 of the shorter edge, which must not be longer than t.
  const double target = lambda1 - lambda1_interval(IntervalGeometry{t}, alpha);
  const double at_t = lambda1_interval(IntervalGeometry{t}, alpha) - target;
  // lambda1(s) decreases in s for alpha > 0 and increases for alpha < 0, so
  // s <= t needs lambda1(s) on the far side of lambda1(t) from the limit.
  const double excess = alpha > 0.0 ? -at_t : at_t;
  const double slack = kHearTol * std::max({std::abs(lambda1), std::abs(lambda2), 1e-300});
  double s = t;
  if (excess < -slack) {
    throw Inconsistent("eigenvalues require a second edge longer than the first",
                       -excess / std::max(std::abs(lambda1), std::abs(lambda2)));
  }
  if (at_t != 0.0 && excess > 0.0) {
    auto edge_eq = [&](double v) {
      return lambda1_interval(IntervalGeometry{std::exp(v)}, alpha) - target;
    };
    try {
      const auto dir = rootfind::Direction::down;
      const auto bracket = rootfind::expand_bracket(edge_eq, std::log(t), dir, 1.5, {0.5, 80});
      s = std::exp(rootfind::solve_bracketed(edge_eq, bracket, kHearSolve));
    } catch (const NumericalFailure& e) {
      throw Inconsistent(std::string("no interval matches the first eigenvalue: ") + e.what(),
                         std::numeric_limits<double>::infinity());
    } catch (const GeometryError& e) {
      throw Inconsistent(std::string("no interval matches the first eigenvalue: ") + e.what(),
                         std::numeric_limits<double>::infinity());
    }
  }
  if (s > t) {
    if (s - t > kSquareTie * t) {
      throw Inconsistent("recovered second edge exceeds the first", (s - t) / t);
    }
    s = t;
  }
  if (t - s <= kSquareTie * t) s = t;

  BoxGeometry rect({t, s});
  const double residual = hearing_residual(rect, lambda1, lambda2, alpha);
  if (!(residual <= kHearTol)) {
    throw Inconsistent("recovered rectangle does not reproduce the eigenvalues", residual);
  }
  return rect;
}

}  // namespace robinbox::shapes
