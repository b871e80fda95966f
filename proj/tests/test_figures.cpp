#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "robinbox/errors.hpp"
#include "robinbox/figures.hpp"

using namespace robinbox;
using namespace robinbox::figures;

namespace {

std::size_t row_at(const Table& t, double x) {
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.rows[i][0] == x) return i;
  }
  FAIL("sweep does not contain ", x);
  return 0;
}

}  // namespace

TEST_CASE("every figure parses, has a schema and renders") {
  for (FigureId id : all_figures()) {
    CHECK(parse_figure(to_string(id)) == id);
    const auto t = figure_table(id, {default_range(id).lo, default_range(id).hi, 11});
    CHECK(t.columns == columns(id));
    CHECK(t.rows.size() == 11);
    for (const auto& r : t.rows) CHECK(r.size() == t.columns.size());
  }
  CHECK_FALSE(parse_figure("fig1").has_value());
}

TEST_CASE("default sweeps hit zero exactly") {
  for (FigureId id : {FigureId::first_two_square_rect, FigureId::interval_first_six,
                      FigureId::perim_first_two, FigureId::perim_closeup, FigureId::basis_GH}) {
    const auto xs = sweep(default_range(id));
    CHECK(std::count(xs.begin(), xs.end(), 0.0) == 1);
  }
  CHECK_THROWS_AS(sweep({0.0, 1.0, 1}), DomainError);
  CHECK_THROWS_AS(sweep({1.0, 0.0, 5}), DomainError);
}

TEST_CASE("first eigenvalues vanish at alpha = 0") {
  const auto t = figure_table(FigureId::first_two_square_rect, default_range(FigureId::first_two_square_rect));
  const auto& r = t.rows[row_at(t, 0.0)];
  CHECK(r[1] == 0.0);
  CHECK(r[2] == 0.0);
  // The unit square has half-width 1/2.
  CHECK(r[3] == doctest::Approx(std::numbers::pi * std::numbers::pi));
}

TEST_CASE("interval row at alpha = 0 is the Neumann spectrum") {
  const auto t = figure_table(FigureId::interval_first_six, default_range(FigureId::interval_first_six));
  const auto& r = t.rows[row_at(t, 0.0)];
  for (int j = 0; j < 6; ++j) CHECK(std::abs(r[j + 1] - std::pow(j * std::numbers::pi / 2.0, 2)) <= 1e-10);
}

TEST_CASE("ratio columns are nan at alpha = 0") {
  const auto t = figure_table(FigureId::ratio_square_rect, default_range(FigureId::ratio_square_rect));
  const auto& r = t.rows[row_at(t, 0.0)];
  CHECK(std::isnan(r[1]));
  CHECK(std::isnan(r[2]));
}

TEST_CASE("csv layout") {
  Table t{{"a", "b"}, {{1.0, 0.5}, {std::nan(""), -2.0}}};
  std::ostringstream out;
  write_csv(out, t, 6);
  CHECK(out.str() == "a,b\n1,0.5\nnan,-2\n");
}
