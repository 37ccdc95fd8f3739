#include "oracles.hpp"

#include "qss/jet.hpp"
#include "qss/rational.hpp"
#include "qss/resultant.hpp"
#include "qss/sympoly.hpp"
#include "qss/unipoly.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using qss::Jet;
using qss::Rational;
using qss::SymPoly;
using qss::UniPoly;
using RJet = Jet<Rational>;
using RPoly = UniPoly<Rational>;

namespace {

RJet randomJet(std::mt19937_64& rng, std::size_t width) {
  std::vector<Rational> lin;
  for (std::size_t i = 0; i < width; ++i) lin.push_back(qss::oracle::randomRational(rng));
  return RJet(qss::oracle::randomRational(rng), lin);
}

RPoly randomPoly(std::mt19937_64& rng, int maxDegree) {
  std::uniform_int_distribution<int> deg(0, maxDegree);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(qss::oracle::randomRational(rng));
  return RPoly(c);
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3) == Rational(-1, 3));
  CHECK(Rational::parse("-6/8") == Rational(-3, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-5).str() == "-5");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(qss::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("symbolic polynomials") {
  const SymPoly a = SymPoly::variable('a', 1);
  const SymPoly b = SymPoly::variable('b', 2);
  const SymPoly p = (a + b) * (a - b);
  CHECK(p == a * a - b * b);
  CHECK(p.degree() == 2);
  CHECK_FALSE(p.isConstant());
  CHECK((a - a).isZero());
  CHECK(p.substitute({{qss::Symbol{'a', 1}, Rational(3)}}) == SymPoly(9) - b * b);
  CHECK(p.evaluate({{qss::Symbol{'a', 1}, Rational(3)}, {qss::Symbol{'b', 2}, Rational(1)}}) == Rational(8));
  CHECK_THROWS_AS(p.evaluate({{qss::Symbol{'a', 1}, Rational(3)}}), std::domain_error);
  CHECK(SymPoly(Rational(5, 2)).constantValue() == Rational(5, 2));
  CHECK_FALSE(a.constantValue().has_value());
}

TEST_CASE("jet examples") {
  const RJet z = RJet::variable(1, 0);
  CHECK((RJet(1) + 2 * z) * (RJet(1) - 2 * z) == RJet(1));
  CHECK((RJet(1) + z).inverse() == RJet(1) - z);
  CHECK((RJet(3) + z) * (RJet(2) + 5 * z) == RJet(Rational(6), {Rational(17)}));
  CHECK(z * z == RJet(0));
  CHECK_THROWS_AS(z.inverse(), qss::NonUnitJet);
  const RJet w = RJet::variable(2, 1);
  CHECK_THROWS_AS(z + w, qss::JetMismatch);
  // constants broadcast against any width
  CHECK((RJet(2) * w).linear(1) == Rational(2));
}

TEST_CASE("jet ring axioms on random inputs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t width = 1 + static_cast<std::size_t>(trial % 3);
    const RJet x = randomJet(rng, width), y = randomJet(rng, width), u = randomJet(rng, width);
    REQUIRE(x + y == y + x);
    REQUIRE(x * y == y * x);
    REQUIRE((x * y) * u == x * (y * u));
    REQUIRE(x * (y + u) == x * y + x * u);
    REQUIRE(x - x == RJet(0));
    if (!x.constant().isZero()) REQUIRE(x * x.inverse() == RJet(1));
  }
}

TEST_CASE("univariate polynomial ring and field operations") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const RPoly f = randomPoly(rng, 6), g = randomPoly(rng, 6), h = randomPoly(rng, 4);
    REQUIRE(f * g == g * f);
    REQUIRE(f * (g + h) == f * g + f * h);
    REQUIRE((f * g).derivative() == f.derivative() * g + f * g.derivative());
    if (!g.isZero()) {
      const auto [q, r] = qss::divmod(f, g);
      REQUIRE(q * g + r == f);
      REQUIRE(r.degree() < g.degree());
    }
    if (!h.isZero() && h.degree() >= 1) {
      const RPoly gg = qss::gcd(f * h, g * h);
      REQUIRE(qss::divmod(gg, qss::makeMonic(h)).second.isZero());
    }
  }
}

TEST_CASE("squarefree decomposition") {
  const RPoly x{Rational(0), Rational(1)};
  const RPoly xm1{Rational(-1), Rational(1)};
  const RPoly f = x * x * x * xm1 * xm1 * RPoly{Rational(2), Rational(0), Rational(1)};
  const auto parts = qss::squarefreeDecomposition(f);
  REQUIRE(parts.size() == 3);
  RPoly product{Rational(1)};
  for (const auto& [p, k] : parts)
    for (int i = 0; i < k; ++i) product = product * p;
  CHECK(product == qss::makeMonic(f));
  CHECK(parts[0].second == 1);
  CHECK(parts[0].first == (RPoly{Rational(2), Rational(0), Rational(1)}));
  CHECK(parts[1].first == xm1);
  CHECK(parts[2].first == x);
  CHECK(parts[2].second == 3);
}

TEST_CASE("polynomial printing") {
  const RPoly g{Rational(0), Rational(0), Rational(-27), Rational(0), Rational(0), Rational(0), Rational(1)};
  CHECK(g.str("lambda") == "lambda^6 - 27*lambda^2");
}

TEST_CASE("resultant and discriminant examples") {
  const Rational b(3), c(5);
  CHECK(qss::discriminant(RPoly{c, b, Rational(1)}) == b * b - 4 * c);
  CHECK(qss::resultant(RPoly{Rational(-1), Rational(1)}, RPoly{Rational(1), Rational(1)}) == Rational(2));
  const RPoly cubic{Rational(1), Rational(-2), Rational(0), Rational(1)};
  CHECK_FALSE(qss::discriminant(cubic).isZero());
  CHECK(qss::discriminant(RPoly{Rational(4), Rational(1)}) == Rational(1));
  CHECK_THROWS_AS(qss::resultant(RPoly{}, cubic), std::domain_error);
  CHECK_THROWS_AS(qss::discriminant(RPoly{}), std::domain_error);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const RPoly f = randomPoly(rng, 5), g = randomPoly(rng, 5);
    if (f.degree() < 1 || g.degree() < 1) continue;
    REQUIRE(qss::resultant(f, g) == qss::oracle::sylvesterResultant(f, g));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("resultant vanishes iff there is a common factor") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    RPoly f = randomPoly(rng, 4), g = randomPoly(rng, 4);
    if (f.degree() < 1 || g.degree() < 1) continue;
    if (trial % 2 == 0) {
      const RPoly common{qss::oracle::randomRational(rng), Rational(1)};
      f = f * common;
      g = g * common;
    }
    const bool shared = qss::gcd(f, g).degree() >= 1;
    REQUIRE(qss::resultant(f, g).isZero() == shared);
    REQUIRE(qss::isSquarefree(f) == !qss::discriminant(f).isZero());
  }
}
