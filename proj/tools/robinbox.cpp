#include <cerrno>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>

#include "robinbox/basisfn.hpp"
#include "robinbox/box.hpp"
#include "robinbox/errors.hpp"
#include "robinbox/figures.hpp"
#include "robinbox/format.hpp"
#include "robinbox/interval.hpp"
#include "robinbox/shapes.hpp"
#include "robinbox/verify.hpp"

namespace {

using namespace robinbox;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumerical = 3, kIo = 4, kInconsistent = 5 };

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

double parse_double(const std::string& text, const std::string& what) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || errno == ERANGE) {
    throw UsageError(what + ": not a number: '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& text, const std::string& what) {
  errno = 0;
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0' || errno == ERANGE || v < INT_MIN || v > INT_MAX) {
    throw UsageError(what + ": not an integer: '" + text + "'");
  }
  return static_cast<int>(v);
}

// Flag if given, else the ROBINBOX_* variable, else the built-in default.
template <class T>
T resolve(const CLI::Option* flag, const T& flag_value, const char* env_name, T fallback) {
  if (flag != nullptr && flag->count() > 0) return flag_value;
  if (const auto v = env(env_name)) {
    if constexpr (std::is_same_v<T, int>) {
      return parse_int(*v, env_name);
    } else {
      return parse_double(*v, env_name);
    }
  }
  return fallback;
}

struct Globals {
  int precision_flag = kDefaultPrecision;
  CLI::Option* precision_opt = nullptr;
  bool serial = false;

  int precision() const {
    const int p = resolve(precision_opt, precision_flag, "ROBINBOX_PRECISION", kDefaultPrecision);
    if (p < 1 || p > 17) throw UsageError("precision must lie in [1, 17]");
    return p;
  }
  Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

std::string mode_tag(const ModeDescriptor& m) {
  std::string tag = m.parity == Parity::even ? "e" : "o";
  tag += std::to_string(m.branch);
  switch (m.sign_class) {
    case SignClass::negative: tag += '-'; break;
    case SignClass::zero: tag += 'z'; break;
    case SignClass::positive: tag += '+'; break;
  }
  return tag;
}

std::string mode_tag(const BoxMode& m) {
  std::string tag;
  for (std::size_t i = 0; i < m.axis_modes.size(); ++i) {
    if (i) tag += 'x';
    tag += mode_tag(m.axis_modes[i]);
  }
  return tag;
}

void print_kv(const std::string& key, const std::string& value) {
  std::cout << key << ' ' << value << '\n';
}

// ------------------------------------------------------------- commands

struct EigArgs {
  std::vector<double> box;
  double alpha = 0.0;
  int k = 1;
  bool csv = false;
};

int cmd_eig(const EigArgs& a, const Globals& g) {
  if (a.k < 1) throw UsageError("--k must be at least 1");
  const int p = g.precision();
  const BoxGeometry geom(a.box);
  const auto spec = spectrum_box(geom, a.alpha, a.k);
  if (a.csv) std::cout << "index,lambda,mode\n";
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const std::string v = format_number(spec[i], p);
    const std::string tag = mode_tag(spec.entries[i].mode);
    if (a.csv) {
      std::cout << i + 1 << ',' << v << ',' << tag << '\n';
    } else {
      std::cout << i + 1 << ' ' << v << ' ' << tag << '\n';
    }
  }
  return kOk;
}

int cmd_constants(const Globals&) {
  constexpr int digits = 10;
  print_kv("alpha_plus", format_number(basisfn::alpha_plus(), digits));
  print_kv("alpha_minus", format_number(basisfn::alpha_minus(), digits));
  print_kv("alpha_zero_square", format_number(square_lambda2_zero_alpha(), digits));
  print_kv("tanh_cot_root", format_number(basisfn::tanh_cot_root(), digits));
  return kOk;
}

struct FigureArgs {
  std::string id;
  std::string out;
  int points = 0;
  std::optional<double> lo;
  std::optional<double> hi;
};

int cmd_figure(const FigureArgs& a, const Globals& g) {
  const auto id = figures::parse_figure(a.id);
  if (!id) throw UsageError("unknown figure '" + a.id + "'");
  const int p = g.precision();
  auto range = figures::default_range(*id);
  if (a.points) range.points = a.points;
  if (a.lo) range.lo = *a.lo;
  if (a.hi) range.hi = *a.hi;
  const auto table = figures::figure_table(*id, range, g.exec());
  if (a.out.empty() || a.out == "-") {
    figures::write_csv(std::cout, table, p);
    return kOk;
  }
  std::ostringstream buf;
  figures::write_csv(buf, table, p);
  std::ofstream file(a.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + a.out + "' for writing");
  file << buf.str();
  file.close();
  if (!file) throw IoError("failed writing '" + a.out + "'");
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  double tol_abs = 0.0;
  double tol_rel = 0.0;
  int oracle_grid = 0;
  int scan_grid = 256;
  CLI::Option* tol_abs_opt = nullptr;
  CLI::Option* tol_rel_opt = nullptr;
  CLI::Option* oracle_grid_opt = nullptr;
};

int cmd_verify(const VerifyArgs& a, const Globals& g) {
  const auto suite = verify::parse_suite(a.suite);
  if (!suite) throw UsageError("unknown suite '" + a.suite + "'");
  const int p = g.precision();
  verify::Config cfg;
  cfg.tol_abs = resolve(a.tol_abs_opt, a.tol_abs, "ROBINBOX_TOL_ABS", cfg.tol_abs);
  cfg.tol_rel = resolve(a.tol_rel_opt, a.tol_rel, "ROBINBOX_TOL_REL", cfg.tol_rel);
  cfg.oracle_grid = resolve(a.oracle_grid_opt, a.oracle_grid, "ROBINBOX_ORACLE_GRID", 0);
  cfg.scan_grid = a.scan_grid;
  cfg.exec = g.exec();
  if (!(cfg.tol_abs >= 0.0) || !(cfg.tol_rel >= 0.0)) throw UsageError("tolerances must be >= 0");
  if (cfg.oracle_grid != 0 && cfg.oracle_grid < 8) throw UsageError("oracle grid must be >= 8");
  if (cfg.scan_grid < 16) throw UsageError("--scan-grid must be at least 16");

  int failed = 0;
  const auto checks = verify::run_suite(*suite, cfg);
  for (const auto& c : checks) {
    std::cout << verify::report_line(c, p) << '\n';
    if (!c.passed()) ++failed;
  }
  std::cerr << checks.size() - failed << '/' << checks.size() << " checks passed\n";
  return failed ? kVerifyFailed : kOk;
}

struct HearArgs {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double alpha = 0.0;
};

int cmd_hear(const HearArgs& a, const Globals& g) {
  const int p = g.precision();
  if (a.alpha == 0.0) {
    throw AlphaZero(
        "the rectangle is not determined by two Neumann eigenvalues: every rectangle whose "
        "longer side has the same length shares lambda1 = 0 and lambda2");
  }
  try {
    const BoxGeometry r = shapes::hear_rectangle(a.lambda1, a.lambda2, a.alpha);
    print_kv("side_long", format_number(2.0 * r.half_widths()[0], p));
    print_kv("side_short", format_number(2.0 * r.half_widths()[1], p));
    print_kv("residual",
             format_number(shapes::hearing_residual(r, a.lambda1, a.lambda2, a.alpha), p));
    return kOk;
  } catch (const Inconsistent& e) {
    std::cout << "inconsistent residual " << format_number(e.residual(), p) << '\n';
    std::cerr << "robinbox: " << e.what() << '\n';
    return kInconsistent;
  }
}

struct ScanArgs {
  std::string family = "volume";
  std::string objective = "lambda1";
  double alpha = 0.0;
  int dim = 2;
  int grid = 256;
  double normalization = 1.0;
  std::string opt;
  bool csv = false;
};

// On the perimeter family the eigenvalue objectives are taken in their
// length-scaled form, which is what the perimeter theorems compare.
shapes::Objective perimeter_form(shapes::Objective o) {
  using shapes::Objective;
  switch (o) {
    case Objective::lambda1: return Objective::perim_lambda1;
    case Objective::lambda2: return Objective::perim_lambda2;
    case Objective::ratio: return Objective::perim_ratio;
    case Objective::steklov: return Objective::perim_steklov;
    default: return o;
  }
}

int cmd_scan(const ScanArgs& a, const Globals& g) {
  const auto kind = shapes::parse_family(a.family);
  if (!kind) throw UsageError("unknown family '" + a.family + "'");
  auto objective = shapes::parse_objective(a.objective);
  if (!objective) throw UsageError("unknown objective '" + a.objective + "'");
  if (*kind == shapes::FamilyKind::fixed_perimeter) objective = perimeter_form(*objective);
  const int p = g.precision();
  shapes::ScanOptions opts;
  opts.exec = g.exec();
  if (a.opt == "min") {
    opts.opt_kind = shapes::OptKind::min;
  } else if (a.opt == "max") {
    opts.opt_kind = shapes::OptKind::max;
  } else if (!a.opt.empty()) {
    throw UsageError("--opt must be min or max");
  }
  const shapes::RectangleFamily family{*kind, a.dim, a.normalization};
  const auto r = shapes::scan_family(family, a.alpha, *objective, a.grid, opts);
  if (a.csv) {
    std::cout << "param,value\n";
    for (std::size_t i = 0; i < r.parameter_grid.size(); ++i) {
      std::cout << format_number(r.parameter_grid[i], p) << ','
                << format_number(r.objective_values[i], p) << '\n';
    }
    return kOk;
  }
  print_kv("family", std::string(shapes::to_string(*kind)));
  print_kv("objective", std::string(shapes::to_string(*objective)));
  print_kv("alpha", format_number(a.alpha, p));
  print_kv("opt_kind", std::string(shapes::to_string(r.opt_kind)));
  print_kv("argopt", format_number(r.argopt, p));
  print_kv("opt_value", format_number(r.opt_value, p));
  print_kv("symmetric_param", format_number(r.symmetric_param, p));
  print_kv("grid_step", format_number(r.grid_step, p));
  print_kv("at_boundary", r.at_boundary ? "true" : "false");
  std::string widths;
  const BoxGeometry best = family.at(r.argopt);
  for (double w : best.half_widths()) {
    if (!widths.empty()) widths += ',';
    widths += format_number(w, p);
  }
  print_kv("half_widths", widths);
  return kOk;
}

struct BoxArgs {
  std::vector<double> box;
  double alpha = 0.0;
};

int cmd_steklov(const BoxArgs& a, const Globals& g) {
  print_kv("sigma1", format_number(steklov_sigma1(BoxGeometry(a.box)), g.precision()));
  return kOk;
}

int cmd_gap(const BoxArgs& a, const Globals& g) {
  print_kv("gap", format_number(gap_box(BoxGeometry(a.box), a.alpha), g.precision()));
  return kOk;
}

int cmd_ratio(const BoxArgs& a, const Globals& g) {
  print_kv("ratio", format_number(ratio_box(BoxGeometry(a.box), a.alpha), g.precision()));
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Robin Laplacian eigenvalues of intervals and boxes"};
  app.require_subcommand(1);
  Globals g;
  g.precision_opt = app.add_option("--precision", g.precision_flag,
                                   "Significant digits in printed numbers (1-17, default 12)");
  app.add_flag("--serial", g.serial, "Use the serial reference path instead of OpenMP");

  EigArgs eig;
  auto* c_eig = app.add_subcommand("eig", "First k eigenvalues of a box with mode tags");
  c_eig->add_option("--box", eig.box, "Comma-separated half-widths")->required()->delimiter(',');
  c_eig->add_option("--alpha", eig.alpha, "Robin parameter")->required();
  c_eig->add_option("--k", eig.k, "Number of eigenvalues");
  c_eig->add_flag("--csv", eig.csv, "Emit CSV");

  auto* c_const = app.add_subcommand("constants", "Critical Robin parameters");

  FigureArgs fig;
  auto* c_fig = app.add_subcommand("figure", "Write the CSV behind one figure");
  c_fig->add_option("id", fig.id, "Figure id")->required();
  c_fig->add_option("--out,-o", fig.out, "Output path ('-' or omitted for stdout)");
  c_fig->add_option("--points", fig.points, "Number of sweep samples")->check(CLI::Range(2, 1000000));
  c_fig->add_option("--lo", fig.lo, "Sweep start");
  c_fig->add_option("--hi", fig.hi, "Sweep end");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "Run a property suite");
  c_ver->add_option("--suite", ver.suite, "lemmas, interval, box, shapes, oracle or all");
  ver.tol_abs_opt = c_ver->add_option("--tol-abs", ver.tol_abs, "Oracle absolute tolerance");
  ver.tol_rel_opt = c_ver->add_option("--tol-rel", ver.tol_rel, "Oracle relative tolerance");
  ver.oracle_grid_opt =
      c_ver->add_option("--oracle-grid", ver.oracle_grid, "Oracle base grid (0 = automatic)");
  c_ver->add_option("--scan-grid", ver.scan_grid, "Shape scan grid size");

  HearArgs hear;
  auto* c_hear = app.add_subcommand("hear", "Recover a rectangle from lambda1, lambda2");
  c_hear->add_option("--lambda1", hear.lambda1)->required();
  c_hear->add_option("--lambda2", hear.lambda2)->required();
  c_hear->add_option("--alpha", hear.alpha)->required();

  ScanArgs scan;
  auto* c_scan = app.add_subcommand("scan", "Optimize an objective over a box family");
  c_scan->add_option("--family", scan.family, "volume, perim, diameter or surface");
  c_scan->add_option("--objective", scan.objective,
                     "lambda1, lambda2, gap, ratio, steklov or a perim_* form");
  c_scan->add_option("--alpha", scan.alpha)->required();
  c_scan->add_option("--dim", scan.dim, "Dimension (perim requires 2)");
  c_scan->add_option("--grid", scan.grid, "Grid size before refinement");
  c_scan->add_option("--normalization", scan.normalization, "Fixed value of the size quantity");
  c_scan->add_option("--opt", scan.opt, "min or max (default: the theorem's direction)");
  c_scan->add_flag("--csv", scan.csv, "Emit the grid trace as CSV");

  BoxArgs stek, gap, ratio;
  auto* c_stek = app.add_subcommand("steklov", "First nonzero Steklov eigenvalue of a box");
  c_stek->add_option("--box", stek.box)->required()->delimiter(',');
  auto* c_gap = app.add_subcommand("gap", "Spectral gap lambda2 - lambda1");
  c_gap->add_option("--box", gap.box)->required()->delimiter(',');
  c_gap->add_option("--alpha", gap.alpha)->required();
  auto* c_ratio = app.add_subcommand("ratio", "Spectral ratio lambda2 / |lambda1|");
  c_ratio->add_option("--box", ratio.box)->required()->delimiter(',');
  c_ratio->add_option("--alpha", ratio.alpha)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c_eig) return cmd_eig(eig, g);
    if (*c_const) return cmd_constants(g);
    if (*c_fig) return cmd_figure(fig, g);
    if (*c_ver) return cmd_verify(ver, g);
    if (*c_hear) return cmd_hear(hear, g);
    if (*c_scan) return cmd_scan(scan, g);
    if (*c_stek) return cmd_steklov(stek, g);
    if (*c_gap) return cmd_gap(gap, g);
    if (*c_ratio) return cmd_ratio(ratio, g);
  } catch (const UsageError& e) {
    std::cerr << "robinbox: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "robinbox: " << e.what() << '\n';
    return kUsage;
  } catch (const Inconsistent& e) {
    std::cerr << "robinbox: " << e.what() << '\n';
    return kInconsistent;
  } catch (const NumericalFailure& e) {
    std::cerr << "robinbox: numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const IoError& e) {
    std::cerr << "robinbox: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
