#include "qss/quantum_operator.hpp"

#include <string>

namespace qss {

namespace {

Symbol aSym(int i) { return {'a', i}; }
Symbol bSym(int i) { return {'b', i}; }
const Symbol kC1{'c', 1};

OperatorEntry entry(const SymPoly& constant, const SymPoly& linear = SymPoly()) {
  return OperatorEntry(constant, {linear});
}

void requireDeformable(const CompleteIntersection& ci, const char* who) {
  if (ci.e() < 3 || !ci.degreeHypothesis()) {
    throw HypothesisViolation(std::string(who) + ": needs e >= 3 and n > 2e - 3, got " + ci.label() +
                              " with e = " + std::to_string(ci.e()));
  }
}

void requireTableShape(const CompleteIntersection& ci, const CoeffTable& coeffs, bool needA) {
  const int n = ci.dimension();
  const int e = ci.e();
  if (coeffs.b.size() != static_cast<std::size_t>(e))
    throw std::invalid_argument("CoeffTable: expected " + std::to_string(e) + " b coefficients");
  if (needA && coeffs.a.size() != static_cast<std::size_t>(n - e + 3))
    throw std::invalid_argument("CoeffTable: expected " + std::to_string(n - e + 3) + " a coefficients");
}

void collectSymbols(const SymPoly& p, std::set<Symbol>& out) {
  for (const auto& [m, c] : p.terms())
    for (const auto& [s, k] : m) out.insert(s);
}

}  // namespace

std::set<ConstraintSolution> insertionConstraintSolutions(int n, int e, int kw) {
  if (e < 3 || n <= 2 * e - 3) throw HypothesisViolation("insertionConstraintSolutions: needs e >= 3 and n > 2e - 3");
  if (kw < 0) throw std::invalid_argument("insertionConstraintSolutions: negative insertion count");
  if (kw >= 2) throw std::domain_error("insertionConstraintSolutions: only k_w in {0, 1} is supported (first order in t)");
  const int f = n + 2 - e;
  std::set<ConstraintSolution> out;
  // (n-j) + (n-m) + (n-2e+3) k_w = f k + (n-3)  <=>  j + m = n + 3 + (n-2e+3) k_w - f k
  for (int k = 1;; ++k) {
    const int sum = n + 3 + (n - 2 * e + 3) * kw - f * k;
    if (sum < 2) break;
    if (sum <= 2 * (n - 1)) out.insert({k, sum});
  }
  return out;
}

CoeffTable CoeffTable::symbolic(const CompleteIntersection& ci) {
  const int n = ci.dimension();
  const int e = ci.e();
  CoeffTable t;
  for (int i = 1; i <= e; ++i) t.b.emplace_back(bSym(i));
  t.c1 = SymPoly(kC1);
  if (e >= 3) {
    for (int i = 1; i <= n - e + 3; ++i) t.a.emplace_back(aSym(i));
    if (e == 3) {
      // Both entries would need an insertion beta_n, outside 1..n-1.
      t.a.front() = SymPoly();
      t.a.back() = SymPoly();
    }
  }
  return t;
}

CoeffTable CoeffTable::beauville(const CompleteIntersection& ci, const Rational& l0) {
  CoeffTable t = symbolic(ci);
  const int e = ci.e();
  t.b.front() = SymPoly(l0);
  t.b.back() = SymPoly(l0);
  t.c1 = SymPoly(l0 * l0 / Rational(2));
  if (e > 3) {
    t.a.front() = SymPoly(l0);
    t.a.back() = SymPoly(l0);
  }
  return t;
}

CoeffTable CoeffTable::substitute(const std::map<Symbol, Rational>& values) const {
  CoeffTable t;
  for (const auto& x : a) t.a.push_back(x.substitute(values));
  for (const auto& x : b) t.b.push_back(x.substitute(values));
  t.c1 = c1.substitute(values);
  return t;
}

std::vector<Symbol> unpinnedSymbols(const CompleteIntersection& ci) {
  const CoeffTable t = CoeffTable::beauville(ci, Rational(1));
  std::set<Symbol> syms;
  for (const auto& x : t.a) collectSymbols(x, syms);
  for (const auto& x : t.b) collectSymbols(x, syms);
  collectSymbols(t.c1, syms);
  return {syms.begin(), syms.end()};
}

OperatorMatrix buildOrigin(const CompleteIntersection& ci, const CoeffTable& coeffs) {
  if (!ci.isFano()) throw HypothesisViolation("buildOrigin: " + ci.label() + " is not Fano");
  requireTableShape(ci, coeffs, false);
  const int n = ci.dimension();
  const int e = ci.e();
  const int f = ci.fanoIndex();
  OperatorMatrix m = OperatorMatrix::Constant(n + 1, n + 1, entry(SymPoly()));
  for (int j = 0; j < n; ++j) m(j, j + 1) += entry(SymPoly(1));
  for (int j = n + 1 - e; j <= n; ++j) m(j, j + 1 - f) += entry(coeffs.bAt(j - n + e));
  return m;
}

OperatorMatrix buildMH(const CompleteIntersection& ci, const CoeffTable& coeffs) {
  requireDeformable(ci, "buildMH");
  requireTableShape(ci, coeffs, true);
  const int n = ci.dimension();
  const int e = ci.e();
  OperatorMatrix m = buildOrigin(ci, coeffs);
  // One w insertion, degree one.
  for (int j = e - 2; j <= n; ++j) m(j, j + 2 - e) += entry(SymPoly(), coeffs.aAt(j - e + 3));
  // One w insertion, degree two; the divisor axiom contributes the factor 2.
  m(n, 0) += entry(SymPoly(), SymPoly(2) * coeffs.c1);
  return m;
}

OperatorMatrix buildMw(const CompleteIntersection& ci, const CoeffTable& coeffs) {
  requireDeformable(ci, "buildMw");
  requireTableShape(ci, coeffs, true);
  const int n = ci.dimension();
  const int e = ci.e();
  const int p = ci.deformationPower();
  OperatorMatrix m = OperatorMatrix::Constant(n + 1, n + 1, entry(SymPoly()));
  for (int j = 0; j + p <= n; ++j) m(j, j + p) += entry(SymPoly(1));
  for (int j = e - 2; j <= n; ++j) m(j, j + 2 - e) += entry(coeffs.aAt(j - e + 3));
  m(n, 0) += entry(coeffs.c1);
  return m;
}

OperatorMatrix buildA(const CompleteIntersection& ci, const CoeffTable& coeffs) {
  const OperatorMatrix mh = buildMH(ci, coeffs);
  const OperatorMatrix mw = buildMw(ci, coeffs);
  const SymPoly invDelta(Rational(1) / ci.delta());
  // M_H - delta s M_w in s = t_{2e-3}, rewritten in t = delta s:
  // constant(M_H) + t (linear(M_H) / delta - constant(M_w)).
  OperatorMatrix a(mh.rows(), mh.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      a(i, j) = entry(mh(i, j).constant(), invDelta * mh(i, j).linear(0) - mw(i, j).constant());
    }
  }
  return a;
}

int operatorScaleFactor(const CompleteIntersection& ci) { return -(ci.dimension() - ci.e() + 2); }

DetLinear detLinearCoefficient(const OperatorMatrix& a) {
  DetLinear out;
  out.coefficient = determinant(a).linear(0);
  const auto base = mapEntries(a, [](const OperatorEntry& x) { return x.constant(); });
  for (Eigen::Index col = 0; col < a.cols(); ++col) {
    SquareMatrix<SymPoly> replaced = base;
    for (Eigen::Index row = 0; row < a.rows(); ++row) replaced(row, col) = a(row, col).linear(0);
    out.perColumn.push_back(determinant(replaced));
  }
  return out;
}

namespace {

struct Starred {
  SymPoly aFirst;   // a_1*
  SymPoly aLast;    // a_{n-e+3}*
  SymPoly c1;       // c_1*
  SymPoly bFirst;
  SymPoly bLast;
  SymPoly sign;     // (-1)^n
};

Starred starred(const CompleteIntersection& ci, const CoeffTable& coeffs) {
  requireDeformable(ci, "detBracketClosedForm");
  requireTableShape(ci, coeffs, true);
  const Rational invDelta = Rational(1) / ci.delta();
  const SymPoly aScale(invDelta - Rational(1));
  const SymPoly cScale(Rational(2) * invDelta - Rational(1));
  return {aScale * coeffs.a.front(), aScale * coeffs.a.back(), cScale * coeffs.c1,
          coeffs.b.front(), coeffs.b.back(), SymPoly(ci.dimension() % 2 == 0 ? 1 : -1)};
}

}  // namespace

SymPoly detBracketClosedForm(const CompleteIntersection& ci, const CoeffTable& coeffs) {
  const Starred s = starred(ci, coeffs);
  return s.sign * (s.c1 - s.aFirst * s.bLast - s.aLast * s.bFirst - s.bFirst * s.bLast);
}

SymPoly detColumnFirstClosedForm(const CompleteIntersection& ci, const CoeffTable& coeffs) {
  const Starred s = starred(ci, coeffs);
  return s.sign * (s.c1 - s.aFirst * s.bLast);
}

SymPoly detColumnDeformationClosedForm(const CompleteIntersection& ci, const CoeffTable& coeffs) {
  const Starred s = starred(ci, coeffs);
  return -s.sign * s.bFirst * (s.aLast + s.bLast);
}

UniPoly<OperatorEntry> charPolyG(const OperatorMatrix& a) { return characteristicPolynomial(a); }

UniPoly<SymPoly> atOrigin(const UniPoly<OperatorEntry>& g) {
  return g.map([](const OperatorEntry& x) { return x.constant(); });
}

SquareMatrix<Rational> evaluateAt(const OperatorMatrix& a, const Rational& t,
                                  const std::map<Symbol, Rational>& values) {
  return mapEntries(a, [&](const OperatorEntry& x) {
    return x.constant().evaluate(values) + x.linear(0).evaluate(values) * t;
  });
}

}  // namespace qss
