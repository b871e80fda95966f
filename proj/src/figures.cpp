#include "robinbox/figures.hpp"

#include <cmath>
#include <limits>

#include "robinbox/basisfn.hpp"
#include "robinbox/box.hpp"
#include "robinbox/errors.hpp"
#include "robinbox/format.hpp"
#include "robinbox/interval.hpp"

namespace robinbox::figures {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

BoxGeometry unit_square() { return BoxGeometry({0.5, 0.5}); }

BoxGeometry rect7() {
  const double r = std::sqrt(7.0);
  return BoxGeometry({r / 2.0, 1.0 / (2.0 * r)});
}

double ratio_or_nan(const BoxGeometry& geom, double alpha) {
  if (alpha == 0.0) return kNaN;
  return ratio_box(geom, alpha);
}

// The basis function value, or NaN outside its principal domain.
double basis_or_nan(basisfn::BasisFunctionId id, double x) {
  const auto d = basisfn::principal_domain(id);
  if (!(x >= d.lo && x < d.hi)) return kNaN;
  return basisfn::eval(id, x);
}

double scaled_inverse_or_nan(basisfn::BasisFunctionId id, double y) {
  const auto r = basisfn::principal_range(id);
  if (y == 0.0 || !(y > r.lo)) return kNaN;
  return basisfn::scaled_inverse(id, y);
}

std::vector<double> row(FigureId id, double v) {
  using basisfn::BasisFunctionId;
  switch (id) {
    case FigureId::first_two_square_rect: {
      const auto sq = unit_square();
      const auto r7 = rect7();
      return {v, lambda1_box(sq, v), lambda1_box(r7, v), lambda2_box(sq, v),
              lambda2_box(r7, v)};
    }
    case FigureId::ratio_square_rect:
      return {v, ratio_or_nan(unit_square(), v), ratio_or_nan(rect7(), v)};
    case FigureId::perim_first_two:
    case FigureId::perim_closeup: {
      const auto sq = unit_square();
      const auto r7 = rect7();
      const double a_sq = v / sq.perimeter();
      const double a_r7 = v / r7.perimeter();
      return {v, lambda1_box(sq, a_sq), lambda1_box(r7, a_r7), lambda2_box(sq, a_sq),
              lambda2_box(r7, a_r7)};
    }
    case FigureId::perim_ratio: {
      const auto sq = unit_square();
      const auto r7 = rect7();
      return {v, ratio_or_nan(sq, v / sq.perimeter()), ratio_or_nan(r7, v / r7.perimeter())};
    }
    case FigureId::basis_gh:
      return {v, basis_or_nan(BasisFunctionId::G1fun, v),
              basis_or_nan(BasisFunctionId::G2fun, v), basis_or_nan(BasisFunctionId::H1fun, v),
              basis_or_nan(BasisFunctionId::H2fun, v)};
    case FigureId::basis_GH:
      return {v, scaled_inverse_or_nan(BasisFunctionId::G1fun, v),
              scaled_inverse_or_nan(BasisFunctionId::G2fun, v),
              scaled_inverse_or_nan(BasisFunctionId::H1fun, v),
              scaled_inverse_or_nan(BasisFunctionId::H2fun, v)};
    case FigureId::interval_first_six: {
      std::vector<double> out{v};
      for (double e : spectrum_interval(IntervalGeometry{1.0}, v, 6).values()) out.push_back(e);
      return out;
    }
    case FigureId::interval_vs_t_neg: {
      const IntervalGeometry g{v};
      return {v, lambda1_interval(g, -1.0), lambda2_interval(g, -1.0), -1.0};
    }
    case FigureId::interval_vs_t_pos: {
      const IntervalGeometry g{v};
      return {v, lambda1_interval(g, 1.0), lambda2_interval(g, 1.0)};
    }
  }
  throw DomainError("unknown figure");
}

}  // namespace

const std::vector<FigureId>& all_figures() {
  static const std::vector<FigureId> ids = {
      FigureId::first_two_square_rect, FigureId::ratio_square_rect, FigureId::perim_first_two,
      FigureId::perim_closeup,         FigureId::perim_ratio,       FigureId::basis_gh,
      FigureId::basis_GH,              FigureId::interval_first_six,
      FigureId::interval_vs_t_neg,     FigureId::interval_vs_t_pos,
  };
  return ids;
}

std::string_view to_string(FigureId id) {
  switch (id) {
    case FigureId::first_two_square_rect: return "first_two_square_rect";
    case FigureId::ratio_square_rect: return "ratio_square_rect";
    case FigureId::perim_first_two: return "perim_first_two";
    case FigureId::perim_closeup: return "perim_closeup";
    case FigureId::perim_ratio: return "perim_ratio";
    case FigureId::basis_gh: return "basis_gh";
    case FigureId::basis_GH: return "basis_GH";
    case FigureId::interval_first_six: return "interval_first_six";
    case FigureId::interval_vs_t_neg: return "interval_vs_t_neg";
    case FigureId::interval_vs_t_pos: return "interval_vs_t_pos";
  }
  return "?";
}

std::optional<FigureId> parse_figure(std::string_view text) {
  for (FigureId id : all_figures()) {
    if (text == to_string(id)) return id;
  }
  return std::nullopt;
}

std::vector<std::string> columns(FigureId id) {
  switch (id) {
    case FigureId::first_two_square_rect:
    case FigureId::perim_first_two:
    case FigureId::perim_closeup:
      return {"alpha", "lambda1_square", "lambda1_rect7", "lambda2_square", "lambda2_rect7"};
    case FigureId::ratio_square_rect:
    case FigureId::perim_ratio:
      return {"alpha", "ratio_square", "ratio_rect7"};
    case FigureId::basis_gh: return {"x", "g1", "g2", "h1", "h2"};
    case FigureId::basis_GH: return {"y", "G1", "G2", "H1", "H2"};
    case FigureId::interval_first_six:
      return {"alpha", "lambda1", "lambda2", "lambda3", "lambda4", "lambda5", "lambda6"};
    case FigureId::interval_vs_t_neg: return {"t", "lambda1", "lambda2", "asymptote"};
    case FigureId::interval_vs_t_pos: return {"t", "lambda1", "lambda2"};
  }
  return {};
}

SweepRange default_range(FigureId id) {
  switch (id) {
    case FigureId::first_two_square_rect:
    case FigureId::ratio_square_rect:
    case FigureId::interval_first_six:
      return {-10.0, 30.0, 401};
    case FigureId::perim_first_two:
    case FigureId::perim_ratio:
      return {-40.0, 60.0, 401};
    case FigureId::perim_closeup: return {-10.0, 10.0, 401};
    case FigureId::basis_gh: return {0.0, 3.0, 401};
    case FigureId::basis_GH: return {-1.0, 10.0, 441};
    case FigureId::interval_vs_t_neg:
    case FigureId::interval_vs_t_pos:
      return {0.2, 5.0, 401};
  }
  return {0.0, 1.0, 2};
}

std::vector<double> sweep(const SweepRange& range) {
  if (range.points < 2) throw DomainError("a sweep needs at least 2 points");
  if (!(range.lo < range.hi)) throw DomainError("sweep range must satisfy lo < hi");
  const int last = range.points - 1;
  std::vector<double> out(range.points);
  for (int i = 0; i <= last; ++i) out[i] = (range.lo * (last - i) + range.hi * i) / last;
  return out;
}

Table figure_table(FigureId id, const SweepRange& range, Exec exec) {
  const std::vector<double> xs = sweep(range);
  Table table;
  table.columns = columns(id);
  table.rows = map_indexed(exec, xs.size(), [&](std::size_t i) { return row(id, xs[i]); });
  return table;
}

void write_csv(std::ostream& out, const Table& table, int precision) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& r : table.rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) out << ',';
      out << format_number(r[c], precision);
    }
    out << '\n';
  }
}

}  // namespace robinbox::figures
