#pragma once

#include "qss/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qss {

/// A named indeterminate such as a3, b1 or c1.
struct Symbol {
  char family = 'x';
  int index = 0;

  std::string name() const { return std::string(1, family) + std::to_string(index); }
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Sorted (symbol, exponent) list with positive exponents; empty is the unit monomial.
using Monomial = std::vector<std::pair<Symbol, unsigned>>;

Monomial multiply(const Monomial& a, const Monomial& b);
unsigned totalDegree(const Monomial& m);

/// Sparse multivariate polynomial with Rational coefficients.
///
/// Carries opaque Gromov-Witten coefficients (a_i, b_i, c_1) through matrix
/// computations so identities can be checked as polynomial identities rather
/// than at sampled points. No zero coefficients are ever stored.
class SymPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  SymPoly() = default;
  SymPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  SymPoly(long c) : SymPoly(Rational(c)) {}  // NOLINT
  SymPoly(int c) : SymPoly(Rational(c)) {}   // NOLINT
  SymPoly(Symbol s);  // NOLINT

  static SymPoly variable(char family, int index) { return SymPoly(Symbol{family, index}); }

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  /// Constant value; nullopt when the polynomial involves any symbol.
  std::optional<Rational> constantValue() const;
  Rational coefficient(const Monomial& m) const;
  unsigned degree() const;

  /// Replaces the given symbols by rationals; the rest stay symbolic.
  SymPoly substitute(const std::map<Symbol, Rational>& values) const;
  /// Full evaluation; throws std::domain_error if a symbol has no value.
  Rational evaluate(const std::map<Symbol, Rational>& values) const;

  std::string str() const;

  SymPoly operator-() const;
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const SymPoly& o);

  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  void addTerm(const Monomial& m, const Rational& c);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const SymPoly& p);

inline bool isZero(const SymPoly& p) { return p.isZero(); }

}  // namespace qss
