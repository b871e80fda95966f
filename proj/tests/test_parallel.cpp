#include <doctest.h>

#include <cstring>
#include <stdexcept>

#include "robinbox/figures.hpp"
#include "robinbox/oracle.hpp"
#include "robinbox/parallel.hpp"
#include "robinbox/shapes.hpp"

using namespace robinbox;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same_bits(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("map_indexed keeps order and rethrows") {
  const auto v = map_indexed(Exec::parallel, 1000, [](std::size_t i) { return 2 * i; });
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == 2 * i);
  auto boom = [](std::size_t i) -> int {
    if (i == 37) throw std::runtime_error("boom");
    return 0;
  };
  CHECK_THROWS_AS(map_indexed(Exec::parallel, 100, boom), std::runtime_error);
  CHECK_THROWS_AS(map_indexed(Exec::serial, 100, boom), std::runtime_error);
  CHECK(max_threads() >= 1);
}

TEST_CASE("parallel figure tables are bitwise identical to serial") {
  for (auto id : figures::all_figures()) {
    const auto range = figures::default_range(id);
    const auto s = figures::figure_table(id, range, Exec::serial);
    const auto p = figures::figure_table(id, range, Exec::parallel);
    REQUIRE(s.rows.size() == p.rows.size());
    for (std::size_t i = 0; i < s.rows.size(); ++i) CHECK(same_bits(s.rows[i], p.rows[i]));
  }
}

TEST_CASE("parallel oracle and scans are bitwise identical to serial") {
  const IntervalGeometry g{1.5};
  const auto s = oracle::oracle_eigs(g, -2.0, 6, 0, Exec::serial);
  const auto p = oracle::oracle_eigs(g, -2.0, 6, 0, Exec::parallel);
  CHECK(same_bits(s.values, p.values));

  const shapes::RectangleFamily fam{shapes::FamilyKind::fixed_volume, 3, 1.0};
  shapes::ScanOptions so, po;
  so.exec = Exec::serial;
  po.exec = Exec::parallel;
  const auto a = shapes::scan_family(fam, -1.0, shapes::Objective::gap, 128, so);
  const auto b = shapes::scan_family(fam, -1.0, shapes::Objective::gap, 128, po);
  CHECK(same_bits(a.objective_values, b.objective_values));
  CHECK(same_bits(a.argopt, b.argopt));
}
