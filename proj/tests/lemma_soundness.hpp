#pragma once

// Randomized check of the jet criterion: polynomials it accepts should have
// a nonzero discriminant at random small z.

#include "oracles.hpp"

#include "qss/certifier.hpp"
#include "qss/resultant.hpp"

#include <ostream>
#include <random>

namespace qss::testing {

struct SoundnessResult {
  int polynomials = 0;
  int draws = 0;
  int failures = 0;
  int redrawn = 0;
  /// Polynomials whose every redraw also failed.
  int persistent = 0;
  double successRate() const { return draws == 0 ? 0.0 : 1.0 - static_cast<double>(failures) / draws; }
};

using RJet = Jet<Rational>;
using JetPoly = UniPoly<RJet>;

/// y^k * h(y) + z * p(y), h squarefree with h(0) != 0, p(0) != 0, deg p < deg.
inline JetPoly randomAcceptedPolynomial(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> zeroMult(0, 3), rest(1, 4);
  UniPoly<Rational> h;
  do {
    std::vector<Rational> c;
    const int deg = rest(rng);
    for (int i = 0; i < deg; ++i) c.push_back(oracle::randomRational(rng, 9));
    c.emplace_back(1);
    h = UniPoly<Rational>(c);
  } while (h.coeff(0).isZero() || !isSquarefree(h));
  const int k = zeroMult(rng);
  const auto g0 = UniPoly<Rational>::monomial(Rational(1), static_cast<std::size_t>(k)) * h;
  const int m = g0.degree();
  std::vector<RJet> coeffs;
  for (int i = 0; i <= m; ++i) {
    Rational lin = i < m ? oracle::randomRational(rng, 9) : Rational(0);
    if (i == 0)
      while (lin.isZero()) lin = oracle::randomRational(rng, 9);
    coeffs.emplace_back(g0.coeff(static_cast<std::size_t>(i)), std::vector<Rational>{lin});
  }
  return JetPoly(coeffs);
}

inline Rational smallNonzero(std::mt19937_64& rng) {
  Rational z;
  while (z.isZero()) z = oracle::randomRational(rng, 100) / Rational(1000);
  return z;
}

inline UniPoly<Rational> specialize(const JetPoly& g, const Rational& z) {
  return g.map([&](const RJet& c) { return Rational(c.constant() + c.linear(0) * z); });
}

/// Runs `polynomials` x `points` draws; a failing z is logged and redrawn up
/// to five times before counting as persistent.
inline SoundnessResult lemmaSoundness(int polynomials, int points, std::uint64_t seed, std::ostream* log) {
  std::mt19937_64 rng(seed);
  SoundnessResult out;
  for (int p = 0; p < polynomials; ++p) {
    const JetPoly g = randomAcceptedPolynomial(rng);
    const auto g0 = g.map([](const RJet& c) { return c.constant(); });
    if (lemma1Criterion(g, repeatedRootEvidence(g0)) != Lemma1Verdict::GenericDistinct) {
      ++out.persistent;
      continue;
    }
    ++out.polynomials;
    for (int i = 0; i < points; ++i) {
      ++out.draws;
      Rational z = smallNonzero(rng);
      if (!discriminant(specialize(g, z)).isZero()) continue;
      ++out.failures;
      bool recovered = false;
      for (int attempt = 0; attempt < 5 && !recovered; ++attempt) {
        if (log) *log << "  discriminant vanished for " << g.str("y") << " at z = " << z << ", redrawing\n";
        ++out.redrawn;
        z = smallNonzero(rng);
        recovered = !discriminant(specialize(g, z)).isZero();
      }
      if (!recovered) ++out.persistent;
    }
  }
  return out;
}

}  // namespace qss::testing
