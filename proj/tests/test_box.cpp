#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "robinbox/box.hpp"
#include "robinbox/errors.hpp"

using namespace robinbox;

namespace {

constexpr double kPi = std::numbers::pi;

// Brute-force box spectrum: every sum over a grid of per-axis indices.
std::vector<double> brute_force(const BoxGeometry& b, double alpha, int k) {
  std::vector<std::vector<double>> axes;
  for (double w : b.half_widths()) axes.push_back(spectrum_interval(IntervalGeometry{w}, alpha, k).values());
  std::vector<double> sums{0.0};
  for (const auto& ax : axes) {
    std::vector<double> next;
    for (double s : sums) {
      for (double v : ax) next.push_back(s + v);
    }
    sums = std::move(next);
  }
  std::sort(sums.begin(), sums.end());
  sums.resize(k);
  return sums;
}

}  // namespace

TEST_CASE("geometry") {
  const BoxGeometry b({2.0, 0.5, 1.0});
  CHECK(b.dim() == 3);
  CHECK(b.volume() == doctest::Approx(8.0));
  CHECK(b.surface() == doctest::Approx(2.0 * (4.0 * 1.0 + 4.0 * 2.0 + 1.0 * 2.0)));
  CHECK(b.diameter() == doctest::Approx(2.0 * std::sqrt(4.0 + 0.25 + 1.0)));
  CHECK(b.longest_axis() == 0);
  CHECK(b.shortest_half_width() == 0.5);
  CHECK_THROWS_AS(b.perimeter(), DimensionError);
  CHECK(BoxGeometry({1.0, 2.0}).perimeter() == doctest::Approx(12.0));
  CHECK(BoxGeometry({1.0, 1.0}).longest_axis() == 0);
  CHECK(BoxGeometry({1.0}).surface() == 2.0);
  CHECK_THROWS_AS(BoxGeometry({}), GeometryError);
  CHECK_THROWS_AS(BoxGeometry({1.0, -1.0}), GeometryError);
  CHECK(b.scaled(2.0).half_widths()[1] == 1.0);
}

TEST_CASE("first eigenvalues of the square") {
  const BoxGeometry sq({1.0, 1.0});
  const auto s = spectrum_box(sq, 0.0, 2);
  CHECK(s[0] == 0.0);
  CHECK(s[1] == doctest::Approx(kPi * kPi / 4.0).epsilon(1e-14));
  CHECK(std::abs(lambda2_box(sq, -0.68825)) <= 1e-4);
}

TEST_CASE("box spectrum matches brute-force enumeration") {
  const std::vector<std::vector<double>> shapes = {{1.0, 1.0}, {2.0, 0.7}, {1.0, 1.3, 0.4}};
  for (const auto& w : shapes) {
    const BoxGeometry b(w);
    for (double alpha : {-3.0, -0.5, 0.0, 0.8, 10.0}) {
      const auto got = spectrum_box(b, alpha, 9);
      const auto ref = brute_force(b, alpha, 9);
      for (int j = 0; j < 9; ++j) CHECK(got[j] == doctest::Approx(ref[j]).epsilon(1e-14).scale(1.0));
      CHECK(got[0] == doctest::Approx(lambda1_box(b, alpha)).epsilon(1e-14));
      CHECK(got[1] == doctest::Approx(lambda2_box(b, alpha)).epsilon(1e-14));
    }
  }
}

TEST_CASE("mode tags list one mode per axis") {
  const auto s = spectrum_box(BoxGeometry({2.0, 1.0}), 1.0, 3);
  for (const auto& e : s.entries) CHECK(e.mode.axis_modes.size() == 2);
  CHECK(s.entries[1].mode.axis_modes[0].parity == Parity::odd);
  CHECK(s.entries[1].mode.axis_modes[1].parity == Parity::even);
}

TEST_CASE("gap equals the gap of the longest edge") {
  CHECK(gap_box(BoxGeometry({2.0, 1.0}), 3.0) == gap_interval(IntervalGeometry{2.0}, 3.0));
  CHECK(gap_box(BoxGeometry({1.0, 2.0, 0.5}), -4.0) == gap_interval(IntervalGeometry{2.0}, -4.0));
}

TEST_CASE("ratio") {
  const BoxGeometry b({1.0, 0.5});
  CHECK_THROWS_AS(ratio_box(b, 0.0), AlphaZero);
  CHECK(ratio_box(b, -2.0) == doctest::Approx(lambda2_box(b, -2.0) / std::abs(lambda1_box(b, -2.0))));
}

TEST_CASE("Steklov eigenvalue") {
  const double sigma = steklov_sigma1(BoxGeometry({1.0, 1.0}));
  CHECK(std::abs(sigma - 0.68825) <= 5e-5);
  CHECK(sigma == doctest::Approx(-square_lambda2_zero_alpha()).epsilon(1e-12));
  CHECK(std::abs(lambda2_box(BoxGeometry({1.0, 1.0}), -sigma)) <= 1e-12);
  // n = 1: lambda2 of (-t, t) vanishes at alpha = -1/t.
  CHECK(steklov_sigma1(BoxGeometry({2.0})) == doctest::Approx(0.5).epsilon(1e-12));
  const double rect = steklov_sigma1(BoxGeometry({3.0, 0.2}));
  CHECK(std::abs(lambda2_box(BoxGeometry({3.0, 0.2}), -rect)) <= 1e-10);
}

TEST_CASE("scaled quantities follow their definitions") {
  const BoxGeometry r({1.5, 0.5});
  const double alpha = 2.0;
  const double L = r.perimeter();
  const double A = r.volume();
  CHECK(scaled_quantity(r, alpha, ScaledKind::perim_lambda1) ==
        doctest::Approx(lambda1_box(r, alpha / L) * A));
  CHECK(scaled_quantity(r, alpha, ScaledKind::perim_lambda2) ==
        doctest::Approx(lambda2_box(r, alpha / L) * A));
  const BoxGeometry b({1.5, 0.5, 0.8});
  const double V = b.volume();
  const double S = b.surface();
  CHECK(scaled_quantity(b, alpha, ScaledKind::vol_lambda1) ==
        doctest::Approx(lambda1_box(b, alpha / std::cbrt(V)) * std::pow(V, 2.0 / 3.0)));
  CHECK(scaled_quantity(b, alpha, ScaledKind::linear_bound_lhs) ==
        doctest::Approx(lambda1_box(b, alpha * std::pow(V, 1.0 / 3.0) / S) * std::pow(V, 2.0 / 3.0)));
  for (double k : {0.1, 3.0}) {
    CHECK(scaled_quantity(b.scaled(k), alpha, ScaledKind::vol_lambda2) ==
          doctest::Approx(scaled_quantity(b, alpha, ScaledKind::vol_lambda2)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(scaled_quantity(b, alpha, ScaledKind::perim_lambda1), DimensionError);
}
