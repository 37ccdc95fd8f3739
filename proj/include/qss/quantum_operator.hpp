#pragma once

#include "qss/complete_intersection.hpp"
#include "qss/jet.hpp"
#include "qss/matrix.hpp"
#include "qss/sympoly.hpp"
#include "qss/unipoly.hpp"

#include <compare>
#include <set>
#include <stdexcept>
#include <vector>

namespace qss {

/// Entries are jets in the single deformation parameter with symbolic
/// coefficients. Rows index the input class H^j, columns the output H^m.
using OperatorEntry = Jet<SymPoly>;
using OperatorMatrix = SquareMatrix<OperatorEntry>;

/// Thrown when a construction needs e >= 3 and n > 2e - 3.
struct HypothesisViolation : std::domain_error {
  using std::domain_error::domain_error;
};

/// One solution pattern of the dimension constraint
///   (n-j) + (n-m) + (n-2e+3) k_w = (n+2-e) k + (n-3)
/// for two insertions beta_j, beta_m (1 <= j, m <= n-1) and k_w insertions of
/// beta_{2e-3}: a curve degree k and the forced value of j + m.
struct ConstraintSolution {
  int degree = 0;
  int indexSum = 0;
  friend auto operator<=>(const ConstraintSolution&, const ConstraintSolution&) = default;
};

/// Solves the constraint for k_w in {0, 1}. Requires e >= 3 and n > 2e - 3;
/// k_w >= 2 lies outside the first-order computation and is rejected.
std::set<ConstraintSolution> insertionConstraintSolutions(int n, int e, int kw);

/// Coefficients entering the operator matrices, each either an opaque symbol
/// or a rational value (a constant SymPoly).
struct CoeffTable {
  std::vector<SymPoly> a;  // a_1 .. a_{n-e+3}
  std::vector<SymPoly> b;  // b_1 .. b_e
  SymPoly c1;

  const SymPoly& aAt(int i) const { return a.at(static_cast<std::size_t>(i - 1)); }
  const SymPoly& bAt(int i) const { return b.at(static_cast<std::size_t>(i - 1)); }

  /// Every coefficient opaque, except the e = 3 forced zeros a_1 = a_n = 0.
  static CoeffTable symbolic(const CompleteIntersection& ci);
  /// Pins b_1 = b_e = l0, c_1 = l0^2 / 2 and, for e > 3, a_1 = a_{n-e+3} = l0
  /// (for e = 3 the forced zeros). Interior coefficients stay symbolic.
  static CoeffTable beauville(const CompleteIntersection& ci, const Rational& l0);
  /// Replaces symbols by values where provided.
  CoeffTable substitute(const std::map<Symbol, Rational>& values) const;
};

/// Symbols a_i, b_i, c1 not pinned by the Beauville specialization.
std::vector<Symbol> unpinnedSymbols(const CompleteIntersection& ci);

/// H^1 * at t = 0: the classical shift plus the degree-one band
/// (j, j+1-(n+2-e)) = b_{j-n+e}. Defined for every Fano ci with e >= 1.
OperatorMatrix buildOrigin(const CompleteIntersection& ci, const CoeffTable& coeffs);

/// Matrix of H^1 *_w modulo t_{2e-3}^2 with w = t_{2e-3} H^{n-2e+4}.
OperatorMatrix buildMH(const CompleteIntersection& ci, const CoeffTable& coeffs);

/// Matrix of H^{n-2e+4} *_w modulo t_{2e-3} (constant entries).
OperatorMatrix buildMw(const CompleteIntersection& ci, const CoeffTable& coeffs);

/// Matrix of (H^1 - delta t_{2e-3} H^{n-2e+4}) *_w = -X(w) *_w / (n-e+2),
/// written in the rescaled variable t = delta * t_{2e-3}.
OperatorMatrix buildA(const CompleteIntersection& ci, const CoeffTable& coeffs);

/// -(n - e + 2): X(w) *_w equals this constant times the operator A.
int operatorScaleFactor(const CompleteIntersection& ci);

/// First-order part of det A(t).
struct DetLinear {
  SymPoly coefficient;            // from the jet determinant
  std::vector<SymPoly> perColumn; // det A_i(0): column i replaced by its t-derivative
};

DetLinear detLinearCoefficient(const OperatorMatrix& a);

/// Closed form (-1)^n (c1* - a1* b_e - a*_{n-e+3} b_1 - b_1 b_e),
/// with a_i* = (1/delta - 1) a_i and c1* = (2/delta - 1) c1.
SymPoly detBracketClosedForm(const CompleteIntersection& ci, const CoeffTable& coeffs);
/// Closed forms of det A_1(0) and det A_{n-e+3}(0) (1-indexed columns).
SymPoly detColumnFirstClosedForm(const CompleteIntersection& ci, const CoeffTable& coeffs);
SymPoly detColumnDeformationClosedForm(const CompleteIntersection& ci, const CoeffTable& coeffs);

/// G(lambda, t) = det(lambda I - A(t)) modulo t^2.
UniPoly<OperatorEntry> charPolyG(const OperatorMatrix& a);

/// Constant parts of a jet polynomial (the t = 0 specialization).
UniPoly<SymPoly> atOrigin(const UniPoly<OperatorEntry>& g);

/// Specializes a fully numeric operator matrix at a rational t, dropping
/// nothing further (the entries are already first order in t).
SquareMatrix<Rational> evaluateAt(const OperatorMatrix& a, const Rational& t,
                                  const std::map<Symbol, Rational>& values = {});

}  // namespace qss
