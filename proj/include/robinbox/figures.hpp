#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "robinbox/parallel.hpp"

namespace robinbox::figures {

// Column schemas (first column is the sweep variable):
//   first_two_square_rect  alpha, lambda1_square, lambda1_rect7, lambda2_square, lambda2_rect7
//   ratio_square_rect      alpha, ratio_square, ratio_rect7
//   perim_first_two        alpha, same four columns as first_two_square_rect at alpha/L
//   perim_closeup          as perim_first_two over a window around 0
//   perim_ratio            alpha, ratio_square, ratio_rect7 at alpha/L
//   basis_gh               x, g1, g2, h1, h2
//   basis_GH               y, G1, G2, H1, H2
//   interval_first_six     alpha, lambda1 ... lambda6 of (-1, 1)
//   interval_vs_t_neg      t, lambda1, lambda2, asymptote   (alpha = -1)
//   interval_vs_t_pos      t, lambda1, lambda2              (alpha = 1)
// "square" is the unit square and "rect7" the rectangle of area 1 and aspect
// ratio 7. Values outside a function's domain are written as nan.
enum class FigureId {
  first_two_square_rect,
  ratio_square_rect,
  perim_first_two,
  perim_closeup,
  perim_ratio,
  basis_gh,
  basis_GH,
  interval_first_six,
  interval_vs_t_neg,
  interval_vs_t_pos,
};

const std::vector<FigureId>& all_figures();
std::string_view to_string(FigureId id);
std::optional<FigureId> parse_figure(std::string_view text);
std::vector<std::string> columns(FigureId id);

// Uniform sweep lo, ..., hi with `points` samples; sample i is computed as
// (lo (points-1-i) + hi i) / (points-1), so 0 is hit exactly whenever it is
// a grid point.
struct SweepRange {
  double lo;
  double hi;
  int points;
};

SweepRange default_range(FigureId id);
std::vector<double> sweep(const SweepRange& range);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

Table figure_table(FigureId id, const SweepRange& range, Exec exec = Exec::parallel);

// Comma-separated, '.' decimal point, '\n' line endings, header first.
void write_csv(std::ostream& out, const Table& table, int precision);

}  // namespace robinbox::figures
