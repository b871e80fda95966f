#pragma once

#include <cstddef>
#include <vector>

#include "robinbox/interval.hpp"

namespace robinbox {

// The box (-w_1, w_1) x ... x (-w_n, w_n), n >= 1.
class BoxGeometry {
 public:
  // Throws GeometryError for an empty list or any half-width rejected by
  // IntervalGeometry.
  explicit BoxGeometry(std::vector<double> half_widths);

  const std::vector<double>& half_widths() const { return w_; }
  std::size_t dim() const { return w_.size(); }

  double volume() const;
  // Total (n-1)-dimensional boundary measure; 2 for n = 1.
  double surface() const;
  // Throws DimensionError unless n = 2.
  double perimeter() const;
  double diameter() const;
  // Index of the largest half-width, smallest index on ties.
  std::size_t longest_axis() const;
  double longest_half_width() const { return w_[longest_axis()]; }
  double shortest_half_width() const;

  BoxGeometry scaled(double factor) const;

 private:
  std::vector<double> w_;
};

struct BoxMode {
  std::vector<ModeDescriptor> axis_modes;
};

using BoxSpectrum = Spectrum<BoxMode>;

double lambda1_box(const BoxGeometry& geom, double alpha);
double lambda2_box(const BoxGeometry& geom, double alpha);

// First k eigenvalues of the box as sums of per-axis eigenvalues. Exact ties
// keep the order in which the multi-indices were generated (lexicographic).
BoxSpectrum spectrum_box(const BoxGeometry& geom, double alpha, int k);

// Equals gap_interval on the longest edge.
double gap_box(const BoxGeometry& geom, double alpha);

// lambda2 / |lambda1|. Throws AlphaZero at alpha = 0.
double ratio_box(const BoxGeometry& geom, double alpha);

// The first nonzero Steklov eigenvalue: the sigma > 0 with
// lambda2_box(geom, -sigma) = 0.
double steklov_sigma1(const BoxGeometry& geom);

enum class ScaledKind { perim_lambda1, perim_lambda2, vol_lambda1, vol_lambda2, linear_bound_lhs };

// Scale-invariant combinations:
//   perim_lambda{1,2}: lambda(alpha / L) * A            (rectangles only)
//   vol_lambda{1,2}:   lambda(alpha / V^{1/n}) * V^{2/n}
//   linear_bound_lhs:  lambda1(alpha V^{1-2/n} / S) * V^{2/n}
double scaled_quantity(const BoxGeometry& geom, double alpha, ScaledKind which);

// Robin parameter at which lambda2 of the square of side 2 vanishes,
// -x cot x with x the root of tanh x = cot x (about -0.68825).
double square_lambda2_zero_alpha();

}  // namespace robinbox
