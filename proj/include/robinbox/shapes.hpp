#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "robinbox/box.hpp"
#include "robinbox/parallel.hpp"

namespace robinbox::shapes {

enum class FamilyKind { fixed_volume, fixed_perimeter, fixed_diameter, fixed_surface };

// A one-parameter family of boxes with one size quantity held fixed.
//
// fixed_perimeter (rectangles only): parameter p, side lengths proportional
// to (p, 1 - p), p in [1e-4, 1 - 1e-4]; the square is p = 1/2.
//
// The other kinds use the log-aspect z: half-widths proportional to
// (e^z, e^{-z/(n-1)}, ..., e^{-z/(n-1)}), rescaled so that the volume,
// diameter or surface equals the normalization. The cube is z = 0 and |z|
// is capped where the aspect ratio reaches 1e4.
struct RectangleFamily {
  FamilyKind kind = FamilyKind::fixed_volume;
  int dim = 2;
  double normalization = 1.0;

  double param_lo() const;
  double param_hi() const;
  // Parameter of the square or cube.
  double symmetric_param() const;
  BoxGeometry at(double param) const;
};

enum class Objective {
  lambda1,
  lambda2,
  gap,
  ratio,
  steklov,
  perim_lambda1,
  perim_lambda2,
  perim_ratio,
  perim_steklov,
};

enum class OptKind { min, max };

std::string_view to_string(FamilyKind kind);
std::string_view to_string(Objective objective);
std::string_view to_string(OptKind kind);
std::optional<FamilyKind> parse_family(std::string_view text);
std::optional<Objective> parse_objective(std::string_view text);

// The direction in which the shape theorems extremize the objective: lambda1
// is minimized for alpha > 0 and maximized for alpha < 0, the perimeter-scaled
// first eigenvalue is minimized, and everything else is maximized.
OptKind natural_opt_kind(Objective objective, double alpha);

// Objective value for a single box. The perim_* objectives are the
// scale-invariant combinations lambda(alpha/L) A, lambda2(alpha/L) /
// |lambda1(alpha/L)| and sigma1 L, and need n = 2.
double objective_value(const BoxGeometry& geom, double alpha, Objective objective);

struct ScanResult {
  std::vector<double> parameter_grid;
  std::vector<double> objective_values;
  double argopt = 0.0;
  double opt_value = 0.0;
  OptKind opt_kind = OptKind::min;
  double symmetric_param = 0.0;
  double grid_step = 0.0;
  // The discrete optimum sat on an end of the grid (a degenerate box).
  bool at_boundary = false;
  // Value the objective approaches as the box degenerates, when known
  // (alpha for the perimeter-scaled eigenvalues); NaN otherwise.
  double degenerate_limit = 0.0;
};

struct ScanOptions {
  std::optional<OptKind> opt_kind;  // defaults to natural_opt_kind
  Exec exec = Exec::parallel;
};

// Uniform grid of grid_size >= 16 parameters over the family, followed by a
// golden-section refinement between the neighbours of the discrete optimum.
ScanResult scan_family(const RectangleFamily& family, double alpha, Objective objective,
                       int grid_size, const ScanOptions& options = {});

struct GapComparison {
  double box_gap;
  double segment_gap;  // gap of the interval with the same diameter
};

// Requires n >= 2.
GapComparison gap_vs_segment(const BoxGeometry& geom, double alpha);

// Recovers the rectangle with half-widths t >= s from its first two
// eigenvalues. Throws AlphaZero for alpha = 0 and Inconsistent when no
// rectangle matches to 1e-8 relative residual.
BoxGeometry hear_rectangle(double lambda1, double lambda2, double alpha);

// max(|lambda1(R) - lambda1|, |lambda2(R) - lambda2|) / max(|lambda1|, |lambda2|).
double hearing_residual(const BoxGeometry& rect, double lambda1, double lambda2,
                        double alpha);

}  // namespace robinbox::shapes
