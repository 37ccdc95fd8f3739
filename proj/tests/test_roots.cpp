#include "oracles.hpp"

#include "qss/resultant.hpp"
#include "qss/roots.hpp"

#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <random>

using qss::Rational;
using qss::Real;
using RPoly = qss::UniPoly<Rational>;

namespace {

RPoly fromRoots(const std::vector<long>& roots) {
  RPoly p{Rational(1)};
  for (long r : roots) p = p * RPoly{Rational(-r), Rational(1)};
  return p;
}

Real toReal(const Rational& q) {
  return Real(q.numerator().get_str()) / Real(q.denominator().get_str());
}

}  // namespace

TEST_CASE("gap of lambda^5 - 4 lambda is sqrt 2") {
  const RPoly f{Rational(0), Rational(-4), Rational(0), Rational(0), Rational(0), Rational(1)};
  const auto report = qss::numericRoots(f);
  CHECK(report.squarefree);
  CHECK(report.roots.size() == 5);
  const Real err = abs(report.minGap - sqrt(Real(2)));
  CHECK(err < Real("1e-40"));
  CHECK(report.certifiedGapLowerBound > Real(1));
}

TEST_CASE("repeated roots have zero gap") {
  const RPoly sq{Rational(0), Rational(0), Rational(1)};
  const auto report = qss::numericRoots(sq);
  CHECK_FALSE(report.squarefree);
  CHECK(report.discriminant.isZero());
  REQUIRE(report.roots.size() == 1);
  CHECK(report.roots[0].multiplicity == 2);
  CHECK(report.minGap == 0);
  CHECK(report.all().size() == 2);
}

TEST_CASE("lambda^6 - 27 lambda^2") {
  const RPoly g{Rational(0), Rational(0), Rational(-27), Rational(0), Rational(0), Rational(0), Rational(1)};
  const auto report = qss::numericRoots(g);
  int zeroMultiplicity = 0;
  for (const auto& r : report.roots) {
    if (r.value.abs() < Real("1e-30")) zeroMultiplicity = r.multiplicity;
    else CHECK(abs(r.value.abs() - sqrt(sqrt(Real(27)))) < Real("1e-40"));
  }
  CHECK(zeroMultiplicity == 2);
  CHECK(report.roots.size() == 5);
}

TEST_CASE("integer roots are recovered") {
  const auto report = qss::numericRoots(fromRoots({-3, 1, 2, 7}));
  std::vector<double> re;
  for (const auto& r : report.roots) re.push_back(static_cast<double>(r.value.re));
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(-3));
  CHECK(re[3] == doctest::Approx(7));
  CHECK(static_cast<double>(report.minGap) == doctest::Approx(1));
}

TEST_CASE("random squarefree polynomials separate their roots") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> c;
    const int degree = 2 + trial % 11;
    for (int i = 0; i < degree; ++i) c.push_back(qss::oracle::randomRational(rng, 20));
    c.emplace_back(1);
    const RPoly f(c);
    if (!qss::isSquarefree(f)) continue;
    const auto report = qss::numericRoots(f);
    REQUIRE(report.all().size() == static_cast<std::size_t>(degree));
    REQUIRE(report.minGap > Real("1e-8"));
    REQUIRE(report.certifiedGapLowerBound > 0);
    for (const auto& r : report.roots) {
      // residual check by direct evaluation
      qss::Complex acc{Real(0), Real(0)};
      for (int k = f.degree(); k >= 0; --k)
        acc = acc * r.value + qss::Complex{toReal(f.coeff(static_cast<std::size_t>(k))), Real(0)};
      REQUIRE(acc.abs() < Real("1e-30"));
    }
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(qss::numericRoots(RPoly{Rational(3)}), std::domain_error);
  CHECK_THROWS_AS(qss::numericRoots(RPoly{}), std::domain_error);
  CHECK_THROWS_AS(qss::numericRoots(RPoly{Rational(1), Rational(1)}, 0), std::domain_error);
  const auto linear = qss::numericRoots(RPoly{Rational(-1), Rational(2)});
  CHECK(linear.roots.size() == 1);
  CHECK(boost::multiprecision::isinf(linear.minGap));
}
