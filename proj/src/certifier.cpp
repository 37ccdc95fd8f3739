#include "qss/certifier.hpp"

#include "qss/matrix.hpp"
#include "qss/quantum_operator.hpp"
#include "qss/roots.hpp"
#include "qss/schubert.hpp"

#include <random>

namespace qss {

std::string toString(Verdict v) {
  switch (v) {
    case Verdict::CertifiedGenericSemisimple: return "CERTIFIED_GENERIC_SEMISIMPLE";
    case Verdict::SemisimpleAtOrigin: return "SEMISIMPLE_AT_ORIGIN";
    case Verdict::InconclusiveException: return "INCONCLUSIVE_EXCEPTION";
    case Verdict::HypothesisFail: return "HYPOTHESIS_FAIL";
  }
  return "?";
}

Verdict verdictFromString(const std::string& s) {
  for (Verdict v : {Verdict::CertifiedGenericSemisimple, Verdict::SemisimpleAtOrigin,
                    Verdict::InconclusiveException, Verdict::HypothesisFail}) {
    if (toString(v) == s) return v;
  }
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

std::string toString(Lemma1Verdict v) {
  return v == Lemma1Verdict::GenericDistinct ? "GENERIC_DISTINCT" : "INCONCLUSIVE";
}

Hypotheses checkHypotheses(const CompleteIntersection& ci) {
  Hypotheses h;
  h.nOk = ci.dimension() >= 3;
  h.fanoOk = ci.isFano();
  h.degreeOk = ci.degreeHypothesis();
  h.exceptionHit = ci.isExceptionalCase();
  h.smallE = ci.e() <= 2;
  return h;
}

RepeatedRootEvidence repeatedRootEvidence(const UniPoly<Rational>& g0) {
  RepeatedRootEvidence ev;
  ev.degree = g0.degree();
  ev.reference = g0;
  const auto common = gcd(g0, g0.derivative());
  ev.onlyRepeatedRootIsZero = common.degree() < 1 || common == UniPoly<Rational>::monomial(Rational(1), common.degree());
  return ev;
}

UniPoly<Rational> originCharPoly(int n, int e, const Rational& c) {
  return UniPoly<Rational>::monomial(Rational(1), static_cast<std::size_t>(n + 1)) -
         UniPoly<Rational>::monomial(c, static_cast<std::size_t>(e - 1));
}

RepeatedRootEvidence RootStructure::evidence() const {
  RepeatedRootEvidence ev;
  ev.degree = polynomial.degree();
  ev.onlyRepeatedRootIsZero = onlyRepeatedRootIsZero;
  ev.reference = polynomial;
  return ev;
}

RootStructure lemma2RootStructure(int n, int e, const Rational& c) {
  if (n < 3 || e < 1 || e >= n + 1) throw std::domain_error("lemma2RootStructure: needs n >= 3 and 1 <= e < n + 1");
  if (c.isZero()) throw std::domain_error("lemma2RootStructure: c = 0 puts every root at 0");
  RootStructure rs;
  rs.polynomial = originCharPoly(n, e, c);
  const auto common = gcd(rs.polynomial, rs.polynomial.derivative());
  rs.gcdDegree = std::max(common.degree(), 0);
  // G = lambda^{e-1} (lambda^{n+2-e} - c); the cofactor must be squarefree
  // and nonvanishing at 0.
  const auto [cofactor, rem] = divmod(rs.polynomial, UniPoly<Rational>::monomial(Rational(1), static_cast<std::size_t>(e - 1)));
  if (!rem.isZero() || cofactor.coeff(0).isZero() || !isSquarefree(cofactor))
    throw InternalInconsistency("lemma2RootStructure: unexpected factorization");
  rs.zeroMultiplicity = e - 1;
  rs.simpleNonzeroRoots = cofactor.degree();
  const auto expectedGcd = UniPoly<Rational>::monomial(Rational(1), static_cast<std::size_t>(std::max(e - 2, 0)));
  rs.onlyRepeatedRootIsZero = common == expectedGcd;
  return rs;
}

namespace {

const char* kAssumptionLines =
    "the varieties of lines and conics on a general V have the expected dimension";
const char* kAssumptionOrigin =
    "G(lambda, 0) = lambda^{n+1} - prod d_i^{d_i} lambda^{e-1} for e < n+1, n >= 3 (imported identity)";
const char* kAssumptionBeauville =
    "b_1 = b_e = l_0, a_1 = a_{n-e+3} = l_0 (e > 3), c_1 = l_0^2 / 2 (Beauville line and conic counts)";
const char* kCitationOpenness =
    "semi-simplicity is an open condition: distinct roots for generic t_{2e-3} along "
    "w = t_{2e-3} H^{n-2e+4} give distinct roots for generic w in H*_inv";
const char* kCitationLemma1 =
    "jet criterion: if lambda = 0 is the only repeated root of G(lambda, 0) and G(0, t) is not in (t)^2, "
    "then G(lambda, t) has distinct roots for generic t";

std::string failingFlag(const Hypotheses& h) {
  if (!h.nOk) return "n_ok";
  if (!h.fanoOk) return "fano_ok";
  if (!h.smallE && !h.degreeOk) return "degree_ok";
  if (h.l0Positive && !*h.l0Positive) return "l0_positive";
  return "";
}

Rational specializedClosedForm(const CompleteIntersection& ci, const Rational& l0, std::string& formula) {
  const int n = ci.dimension();
  const Rational invDelta = Rational(1) / ci.delta();
  const Rational sq = l0 * l0;
  if (ci.e() > 3) {
    formula = "(-1)^(n+1) (1/delta - 1/2) l0^2";
    const Rational v = (invDelta - Rational(1, 2)) * sq;
    return n % 2 == 0 ? -v : v;
  }
  formula = "(-1)^n ((n-1)/(n-3) - 3/2) l0^2";
  const Rational v = (Rational(n - 1, n - 3) - Rational(3, 2)) * sq;
  return n % 2 == 0 ? v : -v;
}

}  // namespace

Certificate certify(const CompleteIntersection& ci) {
  Certificate cert;
  cert.n = ci.dimension();
  cert.inputDegrees = ci.inputDegrees();
  cert.degrees = ci.degrees();
  cert.r = ci.codimension();
  cert.degree = ci.degree().get_str();
  cert.e = ci.e();
  cert.scaleFactor = operatorScaleFactor(ci);
  cert.hypotheses = checkHypotheses(ci);
  cert.assumptions = {kAssumptionLines, kAssumptionOrigin};

  auto fail = [&]() {
    cert.verdict = Verdict::HypothesisFail;
    cert.failingHypothesis = failingFlag(cert.hypotheses);
    return cert;
  };

  const Hypotheses& h = cert.hypotheses;
  if (!h.nOk || !h.fanoOk) return fail();

  const int n = ci.dimension();
  const int e = ci.e();
  cert.delta = ci.delta();
  if (e <= n) {
    const auto l0 = schubert::lineInvariant(n, ci.degrees(), 0);
    cert.l0 = l0.value;
    cert.l0Count = l0.count.get_str();
    cert.hypotheses.l0Positive = l0.value.sign() > 0;
  }

  const Rational c(ci.degreePowerProduct(), mpz_class(1));
  if (e < n + 1) {
    const RootStructure rs = lemma2RootStructure(n, e, c);
    cert.charpolyOrigin = rs.polynomial.coefficients();
    cert.zeroRootMultiplicity = rs.zeroMultiplicity;
    cert.simpleNonzeroRoots = rs.simpleNonzeroRoots;
    cert.gcdDegree = rs.gcdDegree;
  }

  if (h.smallE) {
    if (!isSquarefree(originCharPoly(n, e, c))) throw InternalInconsistency("origin polynomial with e <= 2 is not squarefree");
    cert.verdict = Verdict::SemisimpleAtOrigin;
    return cert;
  }
  if (!h.degreeOk) return fail();
  if (!cert.hypotheses.l0Positive.value_or(false)) return fail();

  cert.assumptions.push_back(kAssumptionBeauville);
  cert.citations = {kCitationLemma1, kCitationOpenness};

  const CoeffTable coeffs = CoeffTable::beauville(ci, *cert.l0);
  const OperatorMatrix a = buildA(ci, coeffs);
  const DetLinear direct = detLinearCoefficient(a);
  const SymPoly bracket = detBracketClosedForm(ci, coeffs);
  std::string formula;
  const Rational closed = specializedClosedForm(ci, *cert.l0, formula);
  const auto directValue = direct.coefficient.constantValue();
  if (!directValue || direct.coefficient != bracket || *directValue != closed) {
    throw InternalInconsistency("det-linear coefficient mismatch for " + ci.label() + ": jet determinant " +
                                direct.coefficient.str() + ", bracket " + bracket.str() + ", closed form " +
                                closed.str());
  }
  cert.detLinearCoeff = closed;
  cert.detFormula = formula;

  const auto g = charPolyG(a);
  const Lemma1Verdict l1 = lemma1Criterion(g, lemma2RootStructure(n, e, c).evidence());
  cert.jetCriterion = toString(l1);
  if (l1 == Lemma1Verdict::GenericDistinct && !h.exceptionHit) {
    cert.verdict = Verdict::CertifiedGenericSemisimple;
  } else if (l1 == Lemma1Verdict::Inconclusive && h.exceptionHit) {
    cert.verdict = Verdict::InconclusiveException;
  } else {
    throw InternalInconsistency("jet criterion returned " + toString(l1) + " for " + ci.label());
  }
  return cert;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31U);
}

// p / q with 1 <= |p| <= 100 and 1 <= q <= 100.
Rational drawRational(std::mt19937_64& rng) {
  const auto p = static_cast<long>(rng() % 200);
  const auto q = static_cast<long>(rng() % 100) + 1;
  return Rational(p < 100 ? p - 100 : p - 99, q);
}

}  // namespace

OracleReport numericOracle(const CompleteIntersection& ci, const Certificate& cert, int samples, std::uint64_t seed) {
  if (cert.verdict != Verdict::CertifiedGenericSemisimple && cert.verdict != Verdict::SemisimpleAtOrigin)
    throw OracleRefused("numericOracle: " + ci.label() + " has verdict " + toString(cert.verdict));
  if (samples < 1) throw std::invalid_argument("numericOracle: need at least one sample");
  if (!cert.l0) throw OracleRefused("numericOracle: certificate carries no l0");

  OracleReport report;
  report.seed = seed;
  report.samples = samples;
  const CoeffTable pinned = CoeffTable::beauville(ci, *cert.l0);
  const bool deform = cert.verdict == Verdict::CertifiedGenericSemisimple;
  const OperatorMatrix op = deform ? buildA(ci, pinned) : buildOrigin(ci, pinned);
  const auto free = unpinnedSymbols(ci);

  for (int i = 0; i < samples; ++i) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i) + 1)));
    OracleSample s;
    s.index = i;
    s.t = deform ? drawRational(rng) / Rational(1000) : Rational(0);
    std::map<Symbol, Rational> values;
    for (const Symbol& sym : free) values.emplace(sym, drawRational(rng));
    const auto m = evaluateAt(op, s.t, values);
    const auto charPoly = characteristicPolynomial(m);
    const auto roots = numericRoots(charPoly);
    s.discriminantNonzero = roots.squarefree;
    s.minGap = static_cast<double>(roots.minGap);
    s.certifiedGapLowerBound = static_cast<double>(roots.certifiedGapLowerBound);
    (s.discriminantNonzero ? report.successes : report.failures) += 1;
    report.results.push_back(std::move(s));
  }
  report.contradiction = report.successes == 0;
  return report;
}

OracleReport numericOracle(const CompleteIntersection& ci, int samples, std::uint64_t seed) {
  return numericOracle(ci, certify(ci), samples, seed);
}

}  // namespace qss
