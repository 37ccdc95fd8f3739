#pragma once

#include "qss/rational.hpp"
#include "qss/unipoly.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace qss {

/// Working precision for root isolation (100 decimal digits).
using Real = boost::multiprecision::cpp_bin_float_100;

struct Complex {
  Real re;
  Real im;

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const Real den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
  Real abs() const;
  std::string str(int digits = 12) const;
};

/// Raised when simultaneous iteration fails to converge.
struct RootFindingFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RootApproximation {
  Complex value;
  int multiplicity = 1;
  /// A disc of this radius around `value` provably contains a root of the
  /// squarefree factor the root came from.
  Real inclusionRadius;
};

struct RootReport {
  /// One entry per distinct root; multiplicities sum to the degree.
  std::vector<RootApproximation> roots;
  /// Exact: gcd(f, f') is constant.
  bool squarefree = false;
  Rational discriminant;
  /// Smallest distance between two roots counted with multiplicity: zero when
  /// a root repeats, +infinity for fewer than two roots.
  Real minGap;
  /// minGap reduced by the inclusion radii. Positive means the numerically
  /// separated roots are proved distinct.
  Real certifiedGapLowerBound;
  int targetDigits = 0;

  /// Degree-many approximations, repeated roots listed multiplicity times.
  std::vector<Complex> all() const;
};

inline constexpr int kDefaultRootDigits = 50;

/// Approximates all complex roots of a nonzero rational polynomial.
///
/// The polynomial is first split exactly into squarefree parts; each part is
/// solved by Aberth-Ehrlich iteration to `digits` significant digits. Throws
/// std::domain_error for constant input and RootFindingFailure if the
/// iteration stalls.
RootReport numericRoots(const UniPoly<Rational>& f, int digits = kDefaultRootDigits);

}  // namespace qss
