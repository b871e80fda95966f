#pragma once

#include <string_view>

namespace robinbox::basisfn {

// The four strictly increasing building blocks of the interval spectrum:
//   G1fun: g1(x) =  x tan x,  (0, pi/2) -> (0, inf)
//   G2fun: g2(x) = -x cot x,  (0, pi)   -> (-1, inf)
//   H1fun: h1(x) =  x tanh x, (0, inf)  -> (0, inf)
//   H2fun: h2(x) =  x coth x, (0, inf)  -> (1, inf)
// Each is extended continuously to x = 0 (g1 = h1 = 0, g2 = -1, h2 = 1).
enum class BasisFunctionId { G1fun, G2fun, H1fun, H2fun };

struct Domain {
  double lo;
  double hi;  // +inf for the hyperbolic functions
};

std::string_view name(BasisFunctionId id);
Domain principal_domain(BasisFunctionId id);
Domain principal_range(BasisFunctionId id);

double eval(BasisFunctionId id, double x);

// Inverse on the principal branch, accurate to a few ulps of the result.
double eval_inverse(BasisFunctionId id, double y);

// eval_inverse(id, y) / y, i.e. the functions G1, G2, H1, H2.
double scaled_inverse(BasisFunctionId id, double y);

enum class AuxId { f1, f2 };

// f1(x) = 1/h1 - x h1'/(2 h1^2) = (coth x - x csch^2 x) / (2x), decreasing 1/3 -> 0
// f2(x) = 1/h2 - x h2'/(2 h2^2) = (tanh x + x sech^2 x) / (2x), decreasing 1 -> 0
double f_aux(AuxId which, double x);

// Inverse of the strictly decreasing f1 (w in (0,1/3)) or f2 (w in (0,1)).
double f_aux_inverse(AuxId which, double w);

enum class ThresholdId { y1, y2 };

// y1(c) = 0 for c <= 3, else h1(f1^{-1}(1/c)) / c.
// y2(c) = 1/c for c <= 1, else h2(f2^{-1}(1/c)) / c.
double threshold_y(ThresholdId which, double c);

// Root of g1^{-1}(a/8)^2 + g2^{-1}(a/8)^2 = a/4 in [8, 100]  (about 33.2054).
double alpha_plus();
// Root a < -8 of h1^{-1}(|a|/8)^2 + h2^{-1}(|a|/8)^2 = |a|/4  (about -9.3885).
double alpha_minus();

// Left-hand side minus right-hand side of the two defining equations.
double alpha_plus_residual(double alpha);
double alpha_minus_residual(double alpha);

// The root x in (0, pi/2) of tanh x = cot x. The square of side 2 has a
// vanishing second eigenvalue at alpha = -x cot x.
double tanh_cot_root();

}  // namespace robinbox::basisfn
