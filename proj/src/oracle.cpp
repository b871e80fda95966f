#include "robinbox/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "robinbox/errors.hpp"

namespace robinbox::oracle {

namespace {

constexpr int kMinNodes = 8;
constexpr int kMinBaseGrid = 401;
constexpr double kMaxAlphaStep = 0.05;
constexpr double kBisectAbs = 1e-12;
constexpr double kBisectRel = 1e-12;

struct Enclosure {
  double lo;
  double hi;
};

Enclosure gershgorin(const DiscreteOperator& op) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < op.n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(op.offdiag[i - 1]);
    if (i + 1 < op.n) r += std::abs(op.offdiag[i]);
    lo = std::min(lo, op.diag[i] - r);
    hi = std::max(hi, op.diag[i] + r);
  }
  const double pad = 4.0 * std::numeric_limits<double>::epsilon() *
                     std::max(std::abs(lo), std::abs(hi));
  return {lo - pad, hi + pad};
}

double pivot_floor(const DiscreteOperator& op) {
  double m = 1.0;
  for (double b : op.offdiag) m = std::max(m, b * b);
  return std::numeric_limits<double>::min() * m;
}

int count_below(const DiscreteOperator& op, double x, double pivmin) {
  int negatives = 0;
  double q = op.diag[0] - x;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++negatives;
  for (int i = 1; i < op.n; ++i) {
    const double b = op.offdiag[i - 1];
    q = op.diag[i] - x - b * b / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++negatives;
  }
  return negatives;
}

double bisect_eigenvalue(const DiscreteOperator& op, int index, Enclosure box,
                         double pivmin) {
  double lo = box.lo;
  double hi = box.hi;
  for (int iter = 0; iter < 400; ++iter) {
    const double tol = kBisectAbs + kBisectRel * std::max(std::abs(lo), std::abs(hi));
    if (hi - lo <= tol) return 0.5 * (lo + hi);
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;
    if (count_below(op, mid, pivmin) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  throw MaxIterExceeded("eigenvalues_sturm: bisection did not converge for index " +
                        std::to_string(index));
}

}  // namespace

DiscreteOperator discretize(const IntervalGeometry& geom, double alpha, int n) {
  if (n < kMinNodes) {
    throw DomainError("discretize: need at least 8 nodes, got " + std::to_string(n));
  }
  if (!std::isfinite(alpha)) throw DomainError("discretize: alpha must be finite");
  DiscreteOperator op;
  op.n = n;
  op.h = 2.0 * geom.half_length() / (n - 1);
  const double inv_h2 = 1.0 / (op.h * op.h);
  op.diag.assign(n, 2.0 * inv_h2);
  op.offdiag.assign(n - 1, -inv_h2);
  const double boundary = (2.0 + 2.0 * op.h * alpha) * inv_h2;
  op.diag.front() = boundary;
  op.diag.back() = boundary;
  op.offdiag.front() = -std::sqrt(2.0) * inv_h2;
  op.offdiag.back() = -std::sqrt(2.0) * inv_h2;
  return op;
}

int sturm_count(const DiscreteOperator& op, double x) {
  return count_below(op, x, pivot_floor(op));
}

std::vector<double> eigenvalues_sturm(const DiscreteOperator& op, int k, Exec exec) {
  if (k < 1 || k > op.n) {
    throw DomainError("eigenvalues_sturm: k must lie in [1, n], got " + std::to_string(k));
  }
  const Enclosure box = gershgorin(op);
  const double pivmin = pivot_floor(op);
  if (count_below(op, box.lo, pivmin) != 0 || count_below(op, box.hi, pivmin) != op.n) {
    throw NumericalFailure("eigenvalues_sturm: Sturm counts inconsistent with the "
                           "Gershgorin enclosure");
  }
  return map_indexed(exec, static_cast<std::size_t>(k), [&](std::size_t j) {
    return bisect_eigenvalue(op, static_cast<int>(j), box, pivmin);
  });
}

int default_base_grid(const IntervalGeometry& geom, double alpha) {
  const double needed = std::ceil(geom.length() * std::abs(alpha) / kMaxAlphaStep) + 1.0;
  if (needed > 1e7) {
    throw DomainError("oracle: alpha * t too large for the boundary layer to be resolved");
  }
  return std::max(kMinBaseGrid, static_cast<int>(needed));
}

OracleResult oracle_eigs(const IntervalGeometry& geom, double alpha, int k, int base_n,
                         Exec exec) {
  if (k < 1 || k > 10) {
    throw DomainError("oracle_eigs: k must lie in [1, 10], got " + std::to_string(k));
  }
  OracleResult out;
  out.base_n = base_n > 0 ? base_n : default_base_grid(geom, alpha);
  const int grids[3] = {out.base_n, 2 * out.base_n - 1, 4 * out.base_n - 3};
  for (int n : grids) {
    out.levels.push_back(eigenvalues_sturm(discretize(geom, alpha, n), k, exec));
  }
  const auto& coarse = out.levels[0];
  const auto& middle = out.levels[1];
  const auto& fine = out.levels[2];
  for (int j = 0; j < k; ++j) {
    const double r1 = (4.0 * middle[j] - coarse[j]) / 3.0;
    const double r2 = (4.0 * fine[j] - middle[j]) / 3.0;
    out.values.push_back((16.0 * r2 - r1) / 15.0);
    out.error_estimates.push_back(std::abs(fine[j] - middle[j]) / 3.0);
  }
  return out;
}

}  // namespace robinbox::oracle
