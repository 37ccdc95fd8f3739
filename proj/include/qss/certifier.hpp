#pragma once

#include "qss/complete_intersection.hpp"
#include "qss/jet.hpp"
#include "qss/rational.hpp"
#include "qss/resultant.hpp"
#include "qss/unipoly.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qss {

/// Two independent routes to the same exact quantity disagreed. Never
/// expected in a correct build.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Verdict {
  CertifiedGenericSemisimple,
  SemisimpleAtOrigin,
  InconclusiveException,
  HypothesisFail,
};

std::string toString(Verdict v);
/// Inverse of toString; throws std::invalid_argument.
Verdict verdictFromString(const std::string& s);

struct Hypotheses {
  bool nOk = false;          // n >= 3
  bool fanoOk = false;       // e <= n + 1
  bool degreeOk = false;     // n > 2e - 3
  bool exceptionHit = false; // (n, e) = (7, 3)
  bool smallE = false;       // e in {1, 2}
  std::optional<bool> l0Positive;

  friend bool operator==(const Hypotheses&, const Hypotheses&) = default;
};

Hypotheses checkHypotheses(const CompleteIntersection& ci);

/// Evidence that the only repeated root of g(y, 0) is y = 0.
struct RepeatedRootEvidence {
  int degree = 0;
  bool onlyRepeatedRootIsZero = false;
  /// g(y, 0) itself when known exactly.
  std::optional<UniPoly<Rational>> reference;
};

/// Decides the hypothesis from gcd(g0, g0'): it holds iff that gcd is y^k.
RepeatedRootEvidence repeatedRootEvidence(const UniPoly<Rational>& g0);

/// Root multiplicities of lambda^{n+1} - c lambda^{e-1}.
struct RootStructure {
  UniPoly<Rational> polynomial;
  int zeroMultiplicity = 0;
  int simpleNonzeroRoots = 0;
  /// Degree of gcd(G, G'); equals e - 2 for e >= 2 and 0 for e = 1.
  int gcdDegree = 0;
  bool onlyRepeatedRootIsZero = false;

  RepeatedRootEvidence evidence() const;
};

/// Requires n >= 3 and e < n + 1; c = 0 is a domain error.
RootStructure lemma2RootStructure(int n, int e, const Rational& c);

/// lambda^{n+1} - c lambda^{e-1}
UniPoly<Rational> originCharPoly(int n, int e, const Rational& c);

enum class Lemma1Verdict { GenericDistinct, Inconclusive };

std::string toString(Lemma1Verdict v);

/// Sufficiency test for generically distinct roots of a monic
/// g(y, z) = y^m + g_1(z) y^{m-1} + ... + g_m(z).
///
/// Given that y = 0 is the only repeated root of g(y, 0), repeated roots for
/// generic z force g_m into (z_1, ..., z_N)^2. So a nonzero constant or
/// linear part of g_m proves the roots are distinct for generic z. A zero
/// part proves nothing, and the answer is then Inconclusive.
///
/// Throws std::invalid_argument if g is not monic or the evidence does not
/// describe g(y, 0), and std::domain_error when evidence is missing or says
/// the hypothesis fails.
template <typename Scalar>
Lemma1Verdict lemma1Criterion(const UniPoly<Jet<Scalar>>& g, const std::optional<RepeatedRootEvidence>& evidence) {
  if (g.degree() < 1 || !(g.leading() == Jet<Scalar>(Scalar(1))))
    throw std::invalid_argument("lemma1Criterion: polynomial must be monic of positive degree");
  if (!evidence) throw std::domain_error("lemma1Criterion: no evidence for the repeated-root hypothesis");
  if (!evidence->onlyRepeatedRootIsZero)
    throw std::domain_error("lemma1Criterion: g(y, 0) has a repeated nonzero root");
  if (evidence->degree != g.degree())
    throw std::invalid_argument("lemma1Criterion: evidence degree does not match g");
  if constexpr (std::is_same_v<Scalar, Rational>) {
    if (evidence->reference) {
      const auto g0 = g.map([](const Jet<Rational>& x) { return x.constant(); });
      if (!(g0 == *evidence->reference))
        throw std::invalid_argument("lemma1Criterion: evidence was computed for a different g(y, 0)");
    }
  }
  const Jet<Scalar> gm = g.coeff(0);
  return gm.isZero() ? Lemma1Verdict::Inconclusive : Lemma1Verdict::GenericDistinct;
}

struct OracleSample {
  int index = 0;
  Rational t;
  bool discriminantNonzero = false;
  double minGap = 0.0;
  double certifiedGapLowerBound = 0.0;

  friend bool operator==(const OracleSample&, const OracleSample&) = default;
};

struct OracleReport {
  std::uint64_t seed = 0;
  int samples = 0;
  int successes = 0;
  int failures = 0;
  /// Every sample had a vanishing discriminant although a certificate
  /// asserted genericity.
  bool contradiction = false;
  std::vector<OracleSample> results;

  friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

struct Certificate {
  int n = 0;
  std::vector<int> inputDegrees;
  std::vector<int> degrees;
  int r = 0;
  std::string degree;  // prod d_i, decimal
  int e = 0;
  Hypotheses hypotheses;
  Verdict verdict = Verdict::HypothesisFail;
  std::string failingHypothesis;

  std::optional<Rational> delta;
  std::optional<Rational> l0;
  std::optional<std::string> l0Count;  // d * l_0
  std::optional<Rational> detLinearCoeff;
  std::string detFormula;
  /// lambda^{n+1} - prod d_i^{d_i} lambda^{e-1}, lowest degree first.
  std::vector<Rational> charpolyOrigin;
  std::optional<int> zeroRootMultiplicity;
  std::optional<int> simpleNonzeroRoots;
  std::optional<int> gcdDegree;
  std::optional<std::string> jetCriterion;
  /// X(w) *_w = scaleFactor * A.
  int scaleFactor = 0;
  std::vector<std::string> assumptions;
  std::vector<std::string> citations;
  std::optional<OracleReport> oracle;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Runs the full decision flow. All outcomes are verdicts; throws only
/// InternalInconsistency when independent computations disagree.
Certificate certify(const CompleteIntersection& ci);

/// Thrown when the oracle is asked to check a case without a certificate.
struct OracleRefused : std::domain_error {
  using std::domain_error::domain_error;
};

inline constexpr std::uint64_t kDefaultSeed = 20240531;

/// Samples small rational deformations (and random values for the unpinned
/// coefficients), and checks each exact characteristic polynomial for a
/// nonzero discriminant and a positive numeric root gap. Deterministic in
/// (ci, samples, seed).
OracleReport numericOracle(const CompleteIntersection& ci, const Certificate& cert, int samples, std::uint64_t seed);
OracleReport numericOracle(const CompleteIntersection& ci, int samples, std::uint64_t seed);

}  // namespace qss
