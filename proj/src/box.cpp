#include "robinbox/box.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "robinbox/basisfn.hpp"
#include "robinbox/errors.hpp"
#include "robinbox/rootfind.hpp"

namespace robinbox {

BoxGeometry::BoxGeometry(std::vector<double> half_widths) : w_(std::move(half_widths)) {
  if (w_.empty()) throw GeometryError("box needs at least one half-width");
  for (double w : w_) (void)IntervalGeometry{w};
}

double BoxGeometry::volume() const {
  double v = 1.0;
  for (double w : w_) v *= 2.0 * w;
  return v;
}

double BoxGeometry::surface() const {
  const double v = volume();
  double s = 0.0;
  for (double w : w_) s += v / w;
  return s;
}

double BoxGeometry::perimeter() const {
  if (w_.size() != 2) {
    throw DimensionError("perimeter is defined for rectangles only, box has dimension " +
                         std::to_string(w_.size()));
  }
  return 4.0 * (w_[0] + w_[1]);
}

double BoxGeometry::diameter() const {
  double s = 0.0;
  for (double w : w_) s += w * w;
  return 2.0 * std::sqrt(s);
}

std::size_t BoxGeometry::longest_axis() const {
  return static_cast<std::size_t>(std::max_element(w_.begin(), w_.end()) - w_.begin());
}

double BoxGeometry::shortest_half_width() const {
  return *std::min_element(w_.begin(), w_.end());
}

BoxGeometry BoxGeometry::scaled(double factor) const {
  std::vector<double> w = w_;
  for (double& x : w) x *= factor;
  return BoxGeometry(std::move(w));
}

double lambda1_box(const BoxGeometry& geom, double alpha) {
  double sum = 0.0;
  for (double w : geom.half_widths()) sum += lambda1_interval(IntervalGeometry{w}, alpha);
  return sum;
}

double lambda2_box(const BoxGeometry& geom, double alpha) {
  const std::size_t longest = geom.longest_axis();
  double sum = 0.0;
  for (std::size_t j = 0; j < geom.dim(); ++j) {
    const IntervalGeometry axis{geom.half_widths()[j]};
    sum += j == longest ? lambda2_interval(axis, alpha) : lambda1_interval(axis, alpha);
  }
  return sum;
}

BoxSpectrum spectrum_box(const BoxGeometry& geom, double alpha, int k) {
  if (k < 1) throw DomainError("spectrum_box: k must be at least 1");
  using Entry = SpectrumEntry<BoxMode>;
  BoxSpectrum acc;
  acc.entries.push_back(Entry{0.0, BoxMode{}});
  for (double w : geom.half_widths()) {
    const IntervalSpectrum axis = spectrum_interval(IntervalGeometry{w}, alpha, k);
    std::vector<Entry> next;
    next.reserve(acc.size() * axis.size());
    for (const auto& partial : acc.entries) {
      for (const auto& one : axis.entries) {
        Entry e{partial.value + one.value, partial.mode};
        e.mode.axis_modes.push_back(one.mode);
        next.push_back(std::move(e));
      }
    }
    std::stable_sort(next.begin(), next.end(),
                     [](const Entry& a, const Entry& b) { return a.value < b.value; });
    if (next.size() > static_cast<std::size_t>(k)) next.resize(k);
    acc.entries = std::move(next);
  }
  return acc;
}

double gap_box(const BoxGeometry& geom, double alpha) {
  return gap_interval(IntervalGeometry{geom.longest_half_width()}, alpha);
}

double ratio_box(const BoxGeometry& geom, double alpha) {
  if (alpha == 0.0) throw AlphaZero("spectral ratio is undefined at alpha = 0");
  return lambda2_box(geom, alpha) / std::abs(lambda1_box(geom, alpha));
}

double steklov_sigma1(const BoxGeometry& geom) {
  auto f = [&geom](double alpha) { return lambda2_box(geom, alpha); };
  auto bracket = rootfind::RootBracket::make(f, -4.0 / geom.shortest_half_width(), -1e-8);
  if (!(bracket.f_lo < 0.0)) {
    bracket = rootfind::expand_bracket(f, bracket.lo, rootfind::Direction::down, 2.0,
                                       {-bracket.lo, 200});
  }
  return -rootfind::solve_bracketed(f, bracket);
}

double scaled_quantity(const BoxGeometry& geom, double alpha, ScaledKind which) {
  const double n = static_cast<double>(geom.dim());
  const double v = geom.volume();
  switch (which) {
    case ScaledKind::perim_lambda1:
      return lambda1_box(geom, alpha / geom.perimeter()) * v;
    case ScaledKind::perim_lambda2:
      return lambda2_box(geom, alpha / geom.perimeter()) * v;
    case ScaledKind::vol_lambda1:
      return lambda1_box(geom, alpha / std::pow(v, 1.0 / n)) * std::pow(v, 2.0 / n);
    case ScaledKind::vol_lambda2:
      return lambda2_box(geom, alpha / std::pow(v, 1.0 / n)) * std::pow(v, 2.0 / n);
    case ScaledKind::linear_bound_lhs:
      return lambda1_box(geom, alpha * std::pow(v, 1.0 - 2.0 / n) / geom.surface()) *
             std::pow(v, 2.0 / n);
  }
  throw DomainError("scaled_quantity: unknown kind");
}

double square_lambda2_zero_alpha() {
  const double x = basisfn::tanh_cot_root();
  return -x / std::tan(x);
}

}  // namespace robinbox
