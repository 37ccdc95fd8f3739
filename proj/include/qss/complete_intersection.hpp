#pragma once

#include "qss/rational.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qss {

/// Smooth complete intersection V of dimension n in P^{n+r}, cut out by
/// hypersurfaces of degrees d_1..d_r (each >= 2 after normalization).
class CompleteIntersection {
 public:
  /// Validates and normalizes: degree-1 factors are dropped (a hyperplane
  /// only lowers the ambient space), remaining degrees sorted ascending.
  /// Throws std::invalid_argument for n < 1, an empty degree list, or a
  /// degree below 1.
  CompleteIntersection(int n, std::vector<int> degrees);

  int dimension() const { return n_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<int>& inputDegrees() const { return input_; }
  int removedLinearFactors() const { return static_cast<int>(input_.size() - degrees_.size()); }
  int codimension() const { return static_cast<int>(degrees_.size()); }
  /// Ambient projective dimension n + r.
  int ambientDimension() const { return n_ + codimension(); }

  /// d = prod d_i
  mpz_class degree() const;
  /// prod d_i^{d_i}, the constant of the origin characteristic polynomial.
  mpz_class degreePowerProduct() const;
  /// e = 1 + sum (d_i - 1)
  int e() const { return e_; }
  /// c_1(V) = (n + 2 - e) H
  int fanoIndex() const { return n_ + 2 - e_; }
  /// delta = (n - 2e + 3) / (n - e + 2); requires n - e + 2 != 0.
  Rational delta() const;
  /// Exponent of H in the deformation class w = t * H^{n-2e+4}.
  int deformationPower() const { return n_ - 2 * e_ + 4; }

  bool isFano() const { return e_ <= n_ + 1; }
  /// n > 2e - 3
  bool degreeHypothesis() const { return n_ > 2 * e_ - 3; }
  /// (n, e) = (7, 3)
  bool isExceptionalCase() const { return n_ == 7 && e_ == 3; }

  /// "n=5 d=(3)"
  std::string label() const;
  /// "3" or "2;2" (semicolon separated, CSV friendly).
  std::string degreeString() const;

  friend bool operator==(const CompleteIntersection&, const CompleteIntersection&) = default;

 private:
  int n_;
  std::vector<int> input_;
  std::vector<int> degrees_;
  int e_;
};

}  // namespace qss
