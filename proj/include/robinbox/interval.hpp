#pragma once

#include <cstddef>
#include <vector>

namespace robinbox {

// The symmetric interval (-t, t).
class IntervalGeometry {
 public:
  // Throws GeometryError unless t is finite and t >= 1e-12.
  explicit IntervalGeometry(double half_length);

  double half_length() const { return t_; }
  double length() const { return 2.0 * t_; }
  double diameter() const { return 2.0 * t_; }

 private:
  double t_;
};

enum class Parity { even, odd };
enum class SignClass { negative, zero, positive };

// One 1D Robin mode. The eigenvalue is -rho^2, 0 or rho^2 according to the
// sign class. Branch m of the even modes is the root of x tan x = alpha t
// near m*pi, branch m of the odd modes the root of -x cot x = alpha t near
// (m + 1/2)*pi, with x = rho t. Negative and zero modes live on branch 0.
struct ModeDescriptor {
  Parity parity = Parity::even;
  SignClass sign_class = SignClass::zero;
  int branch = 0;
  double rho = 0.0;
};

template <class Mode>
struct SpectrumEntry {
  double value;
  Mode mode;
};

// Eigenvalues in ascending order with the mode that produced each one.
template <class Mode>
struct Spectrum {
  std::vector<SpectrumEntry<Mode>> entries;

  std::size_t size() const { return entries.size(); }
  double operator[](std::size_t i) const { return entries[i].value; }
  std::vector<double> values() const {
    std::vector<double> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.value);
    return out;
  }
};

using IntervalSpectrum = Spectrum<ModeDescriptor>;

double lambda1_interval(const IntervalGeometry& geom, double alpha);
double lambda2_interval(const IntervalGeometry& geom, double alpha);

// The first two modes with their descriptors.
SpectrumEntry<ModeDescriptor> first_mode_interval(const IntervalGeometry& geom,
                                                  double alpha);
SpectrumEntry<ModeDescriptor> second_mode_interval(const IntervalGeometry& geom,
                                                   double alpha);

// The j-th mode counted from 0 in the natural branch order: j even gives the
// even mode on branch j/2, j odd the odd mode on branch (j-1)/2. Modes 0 and
// 1 coincide with the first two eigenvalues.
SpectrumEntry<ModeDescriptor> branch_mode_interval(const IntervalGeometry& geom,
                                                   double alpha, int j);

// First k eigenvalues, ascending. Throws NumericalFailure if a branch root
// cannot be bracketed.
IntervalSpectrum spectrum_interval(const IntervalGeometry& geom, double alpha,
                                   int k);

// lambda2 - lambda1, evaluated without cancellation when both are negative
// (there the gap is of order alpha^2 exp(2 alpha t)).
double gap_interval(const IntervalGeometry& geom, double alpha);

}  // namespace robinbox
