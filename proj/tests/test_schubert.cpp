#include "oracles.hpp"

#include "qss/schubert.hpp"

#include <doctest.h>

#include <random>

using namespace qss::schubert;
namespace oracle = qss::oracle;

namespace {

std::vector<SchurIndex> basis(int N) {
  std::vector<SchurIndex> out;
  for (int a = 0; a <= N - 2; ++a)
    for (int b = 0; b <= a; ++b) out.push_back({a, b});
  return out;
}

/// Integral of a class through the monomial oracle, term by term.
mpz_class oracleIntegral(const GrassmannClass& x) {
  mpz_class total = 0;
  for (const auto& [idx, c] : x.terms()) total += c * oracle::grassmannIntegral(oracle::schur(idx.a, idx.b), x.ambient());
  return total;
}

}  // namespace

TEST_CASE("monomial oracle golden numbers") {
  // Written before the ring code and kept independent of it.
  oracle::BiPoly s1pow4{{{0, 0}, mpz_class(1)}};
  for (int i = 0; i < 4; ++i) s1pow4 = oracle::biMul(s1pow4, oracle::h(1));
  CHECK(oracle::grassmannIntegral(s1pow4, 4) == 2);
  CHECK(oracle::grassmannIntegral(oracle::topChernSymMonomial(3), 4) == 27);
  CHECK(oracle::grassmannIntegral(oracle::topChernSymMonomial(5), 5) == 2875);
  CHECK(oracle::grassmannIntegral(oracle::schur(2, 2), 4) == 1);
}

TEST_CASE("Pieri examples") {
  const auto s1 = GrassmannClass::sigma(4, 1);
  CHECK(s1 * s1 == GrassmannClass::sigma(4, 2) + GrassmannClass::sigma(4, 1, 1));
  auto twoPoints = GrassmannClass(4);
  twoPoints.add({2, 2}, 2);
  CHECK(power(s1, 4) == twoPoints);
  const auto s2 = GrassmannClass::sigma(5, 2);
  CHECK(s2 * s2 == GrassmannClass::sigma(5, 3, 1) + GrassmannClass::sigma(5, 2, 2));
  CHECK(power(s1, 5).isZero());
  CHECK_THROWS_AS(GrassmannClass::sigma(4, 3), std::domain_error);
  CHECK_THROWS_AS(GrassmannClass::sigma(4, 1, 2), std::domain_error);
  CHECK_THROWS_AS(s1 * GrassmannClass::sigma(5, 1), std::invalid_argument);
}

TEST_CASE("golden enumerative numbers") {
  CHECK(integrate(power(GrassmannClass::sigma(4, 1), 4)) == 2);
  CHECK(integrate(topChernSym(3, 4)) == 27);
  CHECK(integrate(topChernSym(5, 5)) == 2875);
  CHECK(integrate(GrassmannClass::sigma(5, 1)) == 0);
}

TEST_CASE("top Chern classes match the monomial expansion") {
  for (int N = 3; N <= 8; ++N)
    for (int d = 1; d <= 6; ++d) {
      const auto c = topChernSym(d, N);
      for (const auto& [idx, coeff] : c.terms()) {
        REQUIRE(idx.degree() == d + 1);
        REQUIRE(coeff >= 0);
      }
      // pair with every complementary basis class through both routes
      for (const auto& idx : basis(N)) {
        if (idx.degree() + d + 1 != 2 * (N - 2)) continue;
        const mpz_class viaRing = integrate(c * GrassmannClass::sigma(N, idx.a, idx.b));
        const mpz_class viaOracle =
            oracle::grassmannIntegral(oracle::biMul(oracle::topChernSymMonomial(d), oracle::schur(idx.a, idx.b)), N);
        REQUIRE(viaRing == viaOracle);
      }
    }
}

TEST_CASE("Poincare duality is orthonormal for N <= 8") {
  for (int N = 2; N <= 8; ++N) {
    const auto b = basis(N);
    for (const auto& x : b)
      for (const auto& y : b) {
        if (x.degree() + y.degree() != 2 * (N - 2)) continue;
        const auto product = GrassmannClass::sigma(N, x.a, x.b) * GrassmannClass::sigma(N, y.a, y.b);
        REQUIRE(integrate(product) == (y == x.dual(N) ? 1 : 0));
        REQUIRE(integrate(product) == oracleIntegral(product));
      }
  }
}

TEST_CASE("cup product is associative and commutative") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int N = 3 + trial % 6;
    const auto b = basis(N);
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    const auto& ix = b[pick(rng)];
    const auto& iy = b[pick(rng)];
    const auto& iz = b[pick(rng)];
    const auto x = GrassmannClass::sigma(N, ix.a, ix.b);
    const auto y = GrassmannClass::sigma(N, iy.a, iy.b);
    const auto z = GrassmannClass::sigma(N, iz.a, iz.b);
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x * y == y * x);
  }
}

TEST_CASE("line invariants") {
  const auto cubic = lineInvariant(4, {3}, 0);
  CHECK(cubic.count == 18);
  CHECK(cubic.value == qss::Rational(6));
  const auto twoQuadrics = lineInvariant(5, {2, 2}, 0);
  CHECK(twoQuadrics.count == 16);
  CHECK(twoQuadrics.value == qss::Rational(4));
  CHECK(incidenceIndices(4, {3}, 0) == std::pair{3, 1});
  CHECK_THROWS_AS(lineInvariant(4, {3}, -2), std::domain_error);
  CHECK_THROWS_AS(lineInvariant(4, {3}, 9), std::domain_error);
}

TEST_CASE("line invariants agree with the monomial oracle") {
  const std::vector<std::pair<int, std::vector<int>>> cases{
      {3, {2}}, {4, {3}}, {5, {3}}, {5, {2, 2}}, {6, {4}}, {7, {2, 3}}, {8, {4}}, {9, {3, 2}}, {9, {2, 2, 2}}};
  for (const auto& [n, degrees] : cases) {
    const auto table = lineInvariantTable(n, degrees);
    REQUIRE_FALSE(table.empty());
    const int N = n + static_cast<int>(degrees.size()) + 1;
    oracle::BiPoly lines{{{0, 0}, mpz_class(1)}};
    mpz_class d = 1;
    for (int di : degrees) {
      lines = oracle::biMul(lines, oracle::topChernSymMonomial(di));
      d *= di;
    }
    for (const auto& [j, inv] : table) {
      const auto [p, q] = incidenceIndices(n, degrees, j);
      const auto integrand = oracle::biMul(lines, oracle::biMul(oracle::h(p), oracle::h(q)));
      REQUIRE(inv.count == oracle::grassmannIntegral(integrand, N));
      REQUIRE(inv.count >= 0);
      REQUIRE(inv.value == qss::Rational(inv.count, d));
    }
  }
}

TEST_CASE("line invariants are symmetric in j") {
  for (const auto& [n, degrees] : std::vector<std::pair<int, std::vector<int>>>{{4, {3}}, {9, {3, 2}}, {8, {4}}}) {
    int e = 1;
    for (int d : degrees) e += d - 1;
    const auto table = lineInvariantTable(n, degrees);
    for (const auto& [j, inv] : table) {
      const int mirror = e - 1 - j;
      if (mirror < 0 || !table.contains(mirror)) continue;
      CHECK(inv.count == table.at(mirror).count);
    }
  }
}

TEST_CASE("a linear factor only lowers the ambient space") {
  for (int j = 0; j <= 1; ++j) CHECK(lineInvariant(5, {1, 3}, j).count == lineInvariant(5, {3}, j).count);
  CHECK(lineInvariant(5, {2, 1, 2}, 0).count == lineInvariant(5, {2, 2}, 0).count);
}
