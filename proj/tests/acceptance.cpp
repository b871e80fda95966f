// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "robinbox/basisfn.hpp"
#include "robinbox/box.hpp"
#include "robinbox/errors.hpp"
#include "robinbox/format.hpp"
#include "robinbox/interval.hpp"
#include "robinbox/oracle.hpp"
#include "robinbox/shapes.hpp"
#include "robinbox/verify.hpp"

using namespace robinbox;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 8) failures.push_back(what);
    }
  }
};

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

std::string fmt(double v) { return format_number(v, 6); }

// ------------------------------------------------------------- criteria

Outcome constants() {
  Outcome o;
  const double ap = basisfn::alpha_plus();
  const double am = basisfn::alpha_minus();
  const double rp = basisfn::alpha_plus_residual(ap);
  const double rm = basisfn::alpha_minus_residual(am);
  o.require(std::abs(ap - 33.2054) <= 5e-4, "alpha_plus = " + fmt(ap));
  o.require(std::abs(am + 9.3885) <= 5e-4, "alpha_minus = " + fmt(am));
  o.require(std::abs(rp) <= 1e-10, "alpha_plus residual " + fmt(rp));
  o.require(std::abs(rm) <= 1e-10, "alpha_minus residual " + fmt(rm));
  o.detail = "alpha_plus=" + format_number(ap, 10) + " alpha_minus=" + format_number(am, 10) +
             " residuals " + fmt(rp) + ", " + fmt(rm);
  return o;
}

Outcome square_steklov() {
  Outcome o;
  const double sigma = steklov_sigma1(BoxGeometry({1.0, 1.0}));
  const double x = basisfn::tanh_cot_root();
  o.require(std::abs(sigma - 0.68825) <= 5e-5, "sigma1 = " + fmt(sigma));
  o.require(std::abs(x - 0.93755) <= 5e-5, "x = " + fmt(x));
  o.detail = "sigma1=" + format_number(sigma, 10) + " x=" + format_number(x, 10);
  return o;
}

Outcome oracle_matrix() {
  Outcome o;
  int cells = 0;
  double worst = 0.0;
  for (double t : {0.5, 1.0, 2.0, 5.0}) {
    for (double alpha : {-5.0, -2.0, -1.0 / t, -0.3, 0.0, 0.3, 1.0, 5.0}) {
      const IntervalGeometry g{t};
      const auto exact = spectrum_interval(g, alpha, 6).values();
      const auto fd = oracle::oracle_eigs(g, alpha, 6, 0, Exec::parallel);
      for (int j = 0; j < 6; ++j) {
        const double err = std::abs(fd.values[j] - exact[j]);
        const double tol = std::max(1e-6 * std::abs(exact[j]), 1e-8);
        worst = std::max(worst, err / tol);
        o.require(err <= tol, "t=" + fmt(t) + " alpha=" + fmt(alpha) + " j=" + std::to_string(j) +
                                  " err=" + fmt(err));
      }
      ++cells;
    }
  }
  o.require(cells >= 30, "only " + std::to_string(cells) + " cells");
  o.detail = std::to_string(cells) + " cells, worst error/tolerance " + fmt(worst);
  return o;
}

Outcome limits() {
  Outcome o;
  const IntervalGeometry unit{1.0};
  const double q = kPi * kPi / 4.0;
  const double e1 = rel_err(lambda1_interval(unit, 1e6), q);
  const double e2 = rel_err(gap_interval(unit, 1e6), 3.0 * q);
  const double e3 = rel_err(lambda1_interval(unit, -30.0), -900.0);
  o.require(e1 <= 1e-4, "Dirichlet lambda1 rel err " + fmt(e1));
  o.require(e2 <= 1e-4, "Dirichlet gap rel err " + fmt(e2));
  o.require(e3 <= 1e-8, "lambda1 at alpha=-30 rel err " + fmt(e3));
  o.detail = "rel errors " + fmt(e1) + ", " + fmt(e2) + ", " + fmt(e3);
  return o;
}

Outcome lemma_suite() {
  Outcome o;
  const auto checks = verify::run_suite(verify::Suite::lemmas);
  int failed = 0;
  for (const auto& c : checks) {
    if (!c.passed()) ++failed;
    o.require(c.passed(), verify::report_line(c, 6));
  }
  o.detail = std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) +
             " lemma checks";
  return o;
}

Outcome theorem_scans() {
  using shapes::FamilyKind;
  using shapes::Objective;
  Outcome o;
  constexpr int grid = 256;
  int scans = 0;
  auto symmetric = [&](FamilyKind kind, int n, double alpha, Objective obj) {
    const shapes::RectangleFamily fam{kind, n, 1.0};
    const auto r = shapes::scan_family(fam, alpha, obj, grid);
    ++scans;
    o.require(!r.at_boundary && std::abs(r.argopt - r.symmetric_param) <= r.grid_step,
              std::string(shapes::to_string(obj)) + "/" + std::string(shapes::to_string(kind)) +
                  " n=" + std::to_string(n) + " alpha=" + fmt(alpha) + " argopt=" + fmt(r.argopt));
  };
  auto degenerate = [&](double alpha) {
    const shapes::RectangleFamily fam{FamilyKind::fixed_perimeter, 2, 1.0};
    const auto r = shapes::scan_family(fam, alpha, Objective::perim_lambda2, grid);
    ++scans;
    const double square = shapes::objective_value(fam.at(fam.symmetric_param()), alpha, Objective::perim_lambda2);
    o.require(r.at_boundary && r.opt_value > square,
              "perim_lambda2 alpha=" + fmt(alpha) + " not degenerate, argopt=" + fmt(r.argopt));
  };

  for (int n : {2, 3}) {
    for (double a : {-5.0, -1.0, 1.0, 5.0}) symmetric(FamilyKind::fixed_volume, n, a, Objective::lambda1);
    for (double a : {-3.0, -1.0, -0.5, 0.0}) symmetric(FamilyKind::fixed_volume, n, a, Objective::lambda2);
    for (FamilyKind k : {FamilyKind::fixed_volume, FamilyKind::fixed_diameter, FamilyKind::fixed_surface}) {
      for (double a : {-3.0, -1.0, 0.0, 1.0, 3.0}) symmetric(k, n, a, Objective::gap);
    }
    for (double a : {-2.0, -0.5, 0.5, 3.0}) symmetric(FamilyKind::fixed_volume, n, a, Objective::ratio);
  }
  for (double a : {-5.0, -1.0, 1.0, 5.0}) symmetric(FamilyKind::fixed_perimeter, 2, a, Objective::perim_lambda1);
  const double lo = basisfn::alpha_minus() + 0.5;
  const double hi = basisfn::alpha_plus() - 0.5;
  for (int i = 0; i < 9; ++i) {
    symmetric(FamilyKind::fixed_perimeter, 2, lo + (hi - lo) * i / 8.0, Objective::perim_lambda2);
  }
  for (double a : {basisfn::alpha_minus() - 0.5, basisfn::alpha_minus() - 5.0,
                   basisfn::alpha_plus() + 0.5, basisfn::alpha_plus() + 20.0}) {
    degenerate(a);
  }
  for (double a : {0.5, 1.0, 5.0, 20.0, 50.0}) symmetric(FamilyKind::fixed_perimeter, 2, a, Objective::perim_ratio);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> logw(std::log(0.2), std::log(3.0));
  std::uniform_int_distribution<int> dim(2, 3);
  int comparisons = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<double> w(dim(rng));
    for (double& x : w) x = std::exp(logw(rng));
    const BoxGeometry b(w);
    for (double a : {-3.0, -0.5, 0.0, 1.0, 8.0}) {
      const auto g = shapes::gap_vs_segment(b, a);
      ++comparisons;
      o.require(g.box_gap > g.segment_gap, "segment gap not below box gap at alpha=" + fmt(a));
    }
  }
  o.detail = std::to_string(scans) + " scans at grid " + std::to_string(grid) + ", " +
             std::to_string(comparisons) + " segment comparisons";
  return o;
}

Outcome gap_monotone_concave() {
  Outcome o;
  double worst_step = INFINITY;
  double worst_d2 = -INFINITY;
  for (const auto& w : std::vector<std::vector<double>>{{1.0, 1.0}, {3.0, 1.0}, {2.0, 1.0, 1.0}}) {
    const BoxGeometry b(w);
    std::vector<double> alpha(200);
    for (int i = 0; i < 200; ++i) alpha[i] = (-50.0 * (199 - i) + 50.0 * i) / 199.0;
    std::vector<double> gap(200), l1(200), l2(200);
    for (int i = 0; i < 200; ++i) {
      gap[i] = gap_box(b, alpha[i]);
      l1[i] = lambda1_box(b, alpha[i]);
      l2[i] = lambda2_box(b, alpha[i]);
    }
    for (int i = 1; i < 200; ++i) {
      worst_step = std::min(worst_step, gap[i] - gap[i - 1]);
      o.require(gap[i] > gap[i - 1], "gap not increasing at alpha=" + fmt(alpha[i]));
    }
    for (int i = 1; i + 1 < 200; ++i) {
      const double d1 = l1[i + 1] - 2.0 * l1[i] + l1[i - 1];
      const double d2 = l2[i + 1] - 2.0 * l2[i] + l2[i - 1];
      worst_d2 = std::max({worst_d2, d1, d2});
      o.require(d1 <= 1e-10 && d2 <= 1e-10, "second difference above 1e-10 at alpha=" + fmt(alpha[i]));
    }
  }
  o.detail = "smallest gap step " + fmt(worst_step) + ", largest second difference " + fmt(worst_d2);
  return o;
}

Outcome hearing() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> logw(std::log(0.1), std::log(2.0));
  double worst = 0.0;
  int count = 0;
  for (int i = 0; i < 200; ++i) {
    const double a = std::exp(logw(rng));
    const double b = std::exp(logw(rng));
    const BoxGeometry r({std::max(a, b), std::min(a, b)});
    for (double alpha : {-0.3, 0.3, -2.0, 2.0, 7.0}) {
      ++count;
      try {
        const auto got = shapes::hear_rectangle(lambda1_box(r, alpha), lambda2_box(r, alpha), alpha);
        const double e = std::max(rel_err(got.half_widths()[0], r.half_widths()[0]),
                                  rel_err(got.half_widths()[1], r.half_widths()[1]));
        worst = std::max(worst, e);
        o.require(e <= 1e-9, "sides off by " + fmt(e) + " at alpha=" + fmt(alpha));
      } catch (const Error& e) {
        o.require(false, std::string("threw: ") + e.what());
      }
    }
  }
  bool rejected = false;
  try {
    shapes::hear_rectangle(0.0, kPi * kPi / 4.0, 0.0);
  } catch (const AlphaZero&) {
    rejected = true;
  }
  o.require(rejected, "alpha = 0 accepted");
  o.detail = std::to_string(count) + " roundtrips, worst relative side error " + fmt(worst);
  return o;
}

Outcome linear_bound() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> logw(std::log(0.05), std::log(5.0));
  auto lhs = [](const BoxGeometry& b, double alpha) {
    const double n = static_cast<double>(b.dim());
    const double V = b.volume();
    return lambda1_box(b, alpha * std::pow(V, 1.0 - 2.0 / n) / b.surface()) * std::pow(V, 2.0 / n);
  };
  for (int n : {2, 3}) {
    for (int i = 0; i < 100; ++i) {
      std::vector<double> w(n);
      for (double& x : w) x = std::exp(logw(rng));
      const BoxGeometry b(w);
      for (double alpha : {-10.0, -1.0, 1.0, 10.0}) {
        o.require(lhs(b, alpha) < alpha, "bound fails for alpha=" + fmt(alpha));
      }
    }
  }
  double last = 0.0;
  for (int n : {2, 3}) {
    for (double alpha : {-10.0, -1.0, 1.0, 10.0}) {
      double prev = INFINITY;
      for (int m = 1; m <= 12; ++m) {
        std::vector<double> w(n, 1.0);
        w.back() = std::ldexp(1.0, -m);
        const double deficit = alpha - lhs(BoxGeometry(w), alpha);
        o.require(deficit > 0.0 && deficit < prev,
                  "deficit not decreasing at n=" + std::to_string(n) + " alpha=" + fmt(alpha) +
                      " m=" + std::to_string(m));
        prev = deficit;
      }
      const double r = prev / std::abs(alpha);
      last = std::max(last, r);
      o.require(r < 1e-2, "deficit at m=12 still " + fmt(r) + " of |alpha|");
    }
  }
  o.detail = "200 boxes x 4 alphas; largest relative deficit at m=12 is " + fmt(last);
  return o;
}

// ------------------------------------------------- figures through the CLI

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::istringstream h(line);
  for (std::string c; std::getline(h, c, ',');) csv.header.push_back(c);
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream r(line);
    for (std::string c; std::getline(r, c, ',');) row.push_back(std::strtod(c.c_str(), nullptr));
    csv.rows.push_back(std::move(row));
  }
  return csv;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(ROBINBOX_CLI_PATH) + " " + args;
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

Outcome figure_reproduction() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "robinbox_acceptance";
  std::filesystem::create_directories(dir);
  auto emit = [&](const std::string& id) {
    const auto path = dir / (id + ".csv");
    const int status = run_cli("--precision 17 figure " + id + " --out " + path.string());
    o.require(status == 0, "figure " + id + " exited " + std::to_string(status));
    const std::string text = slurp(path);
    const auto again = dir / (id + ".again.csv");
    run_cli("--precision 17 figure " + id + " --out " + again.string());
    o.require(text == slurp(again), "figure " + id + " is not byte-identical across runs");
    return parse_csv(text);
  };

  const Csv six = emit("interval_first_six");
  bool saw_zero = false;
  for (const auto& r : six.rows) {
    for (int j = 1; j < 6; ++j) {
      o.require(r[j] < r[j + 1], "interval_first_six not ascending at alpha=" + fmt(r[0]));
    }
    if (r[0] == 0.0) {
      saw_zero = true;
      for (int j = 0; j < 6; ++j) {
        o.require(std::abs(r[j + 1] - std::pow(j * kPi / 2.0, 2)) <= 1e-10,
                  "Neumann value j=" + std::to_string(j));
      }
    }
  }
  o.require(saw_zero, "interval_first_six has no alpha = 0 row");

  const Csv first = emit("first_two_square_rect");
  for (const auto& r : first.rows) {
    const double a = r[0];
    if (a == 0.0) o.require(r[1] == 0.0 && r[2] == 0.0, "lambda1 not zero at alpha=0");
    if (a > 0.0) o.require(r[1] < r[2], "square lambda1 not below rect7 at alpha=" + fmt(a));
    if (a < 0.0) o.require(r[1] > r[2], "square lambda1 not above rect7 at alpha=" + fmt(a));
    if (a <= 0.0) o.require(r[3] > r[4], "square lambda2 not above rect7 at alpha=" + fmt(a));
  }

  const Csv ratio = emit("ratio_square_rect");
  for (const auto& r : ratio.rows) {
    if (r[0] == 0.0) {
      o.require(std::isnan(r[1]) && std::isnan(r[2]), "ratio defined at alpha=0");
    } else {
      o.require(r[1] > r[2], "square ratio not above rect7 at alpha=" + fmt(r[0]));
    }
  }

  const Csv perim = emit("perim_first_two");
  for (const auto& r : perim.rows) {
    if (r[0] >= basisfn::alpha_minus() && r[0] <= basisfn::alpha_plus() && r[0] != 0.0) {
      o.require(r[3] > r[4], "perimeter-scaled lambda2: square not above rect7 at alpha=" + fmt(r[0]));
    }
    if (r[0] != 0.0) {
      o.require(r[1] < r[0] && r[2] < r[0],
                "perimeter-scaled lambda1 not below alpha at alpha=" + fmt(r[0]));
    }
  }

  const Csv pratio = emit("perim_ratio");
  for (const auto& r : pratio.rows) {
    if (r[0] > 0.0) o.require(r[1] >= r[2], "perim_ratio square below rect7 at alpha=" + fmt(r[0]));
  }

  const Csv neg = emit("interval_vs_t_neg");
  for (std::size_t i = 1; i < neg.rows.size(); ++i) {
    o.require(neg.rows[i][1] > neg.rows[i - 1][1], "lambda1(t) at alpha=-1 not increasing");
    o.require(neg.rows[i][2] < neg.rows[i - 1][2], "lambda2(t) at alpha=-1 not decreasing");
    o.require(neg.rows[i][1] < -1.0 && neg.rows[i][2] > -1.0, "curves on the wrong side of -1");
  }
  const auto& tail = neg.rows.back();
  o.require(std::abs(tail[1] + 1.0) < 1e-3 && std::abs(tail[2] + 1.0) < 1e-3,
            "alpha=-1 curves do not approach -1");

  const Csv pos = emit("interval_vs_t_pos");
  for (std::size_t i = 1; i < pos.rows.size(); ++i) {
    o.require(pos.rows[i][1] < pos.rows[i - 1][1] && pos.rows[i][2] < pos.rows[i - 1][2],
              "alpha=1 curves not decreasing in t");
  }

  const Csv gh = emit("basis_gh");
  for (std::size_t i = 1; i < gh.rows.size(); ++i) {
    const auto& r = gh.rows[i];
    const auto& p = gh.rows[i - 1];
    if (!std::isnan(r[1]) && !std::isnan(p[1])) o.require(r[1] > p[1], "g1 not increasing");
    o.require(r[3] > p[3] && r[4] > p[4], "h1 or h2 not increasing");
  }
  const Csv GH = emit("basis_GH");
  o.require(GH.header.size() == 5, "basis_GH schema");

  const Csv close = emit("perim_closeup");
  o.require(close.rows.size() == 401, "perim_closeup row count");

  std::filesystem::remove_all(dir);
  o.detail = "10 figure CSVs from the CLI checked against their qualitative claims";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double budget_s;
  };
  const Criterion criteria[] = {
      {1, "critical constants", constants, 1.0},
      {2, "square Steklov eigenvalue", square_steklov, 1.0},
      {3, "oracle validation matrix", oracle_matrix, 60.0},
      {4, "Dirichlet and negative-alpha limits", limits, INFINITY},
      {5, "lemma suite", lemma_suite, INFINITY},
      {6, "shape optimality scans", theorem_scans, 300.0},
      {7, "gap monotonicity and concavity", gap_monotone_concave, INFINITY},
      {8, "hearing roundtrip", hearing, INFINITY},
      {9, "linear bound", linear_bound, INFINITY},
      {10, "figure reproduction", figure_reproduction, INFINITY},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) {
      o.pass = false;
      o.failures.push_back("runtime " + fmt(secs) + " s exceeds " + fmt(c.budget_s) + " s");
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
              << o.detail << ") [" << format_number(secs, 3) << " s]\n";
    for (const auto& f : o.failures) std::cout << "    " << f << '\n';
  }
  std::cout << (10 - failed) << "/10 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
