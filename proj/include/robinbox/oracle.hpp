#pragma once

#include <vector>

#include "robinbox/interval.hpp"
#include "robinbox/parallel.hpp"

namespace robinbox::oracle {

// Symmetric tridiagonal matrix: diag has n entries, offdiag n - 1, with
// offdiag[i] coupling rows i and i + 1.
struct DiscreteOperator {
  int n = 0;
  double h = 0.0;
  std::vector<double> diag;
  std::vector<double> offdiag;
};

// Central differences for -u'' on n equally spaced nodes covering [-t, t].
// The Robin condition enters through a ghost node, u_{-1} = u_1 - 2 h alpha u_0
// (mirrored on the right). The two boundary rows carry half-cell weight and
// the operator is symmetrized by that weight, which turns the boundary
// couplings into -sqrt(2)/h^2. Requires n >= 8.
DiscreteOperator discretize(const IntervalGeometry& geom, double alpha, int n);

// Number of eigenvalues strictly below x.
int sturm_count(const DiscreteOperator& op, double x);

// The k smallest eigenvalues by Sturm bisection from the Gershgorin
// enclosure, each to 1e-12 absolute plus 1e-12 relative.
std::vector<double> eigenvalues_sturm(const DiscreteOperator& op, int k,
                                      Exec exec = Exec::serial);

struct OracleResult {
  std::vector<double> values;           // extrapolated eigenvalues
  std::vector<double> error_estimates;  // |finest - middle| / 3 per eigenvalue
  std::vector<std::vector<double>> levels;  // raw eigenvalues on n, 2n-1, 4n-3
  int base_n = 0;
};

// Smallest base grid keeping |alpha| h <= 0.05, and at least 401.
int default_base_grid(const IntervalGeometry& geom, double alpha);

// Two-stage Richardson extrapolation over the grids n, 2n - 1, 4n - 3,
// removing the h^2 and h^4 terms. base_n = 0 selects default_base_grid.
// Requires 1 <= k <= 10.
OracleResult oracle_eigs(const IntervalGeometry& geom, double alpha, int k, int base_n = 0,
                         Exec exec = Exec::serial);

}  // namespace robinbox::oracle
