#include "qss/roots.hpp"

#include "qss/resultant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qss {

namespace {

Real toReal(const Rational& q) {
  return Real(q.numerator().get_str()) / Real(q.denominator().get_str());
}

struct Evaluation {
  Complex value;
  Complex derivative;
};

Evaluation hornerWithDerivative(const std::vector<Real>& coeffs, const Complex& z) {
  Complex p{Real(0), Real(0)};
  Complex dp{Real(0), Real(0)};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + Complex{*it, Real(0)};
  }
  return {p, dp};
}

// Roots of a monic squarefree polynomial of degree >= 1.
std::vector<RootApproximation> aberth(const UniPoly<Rational>& monic, int digits) {
  const int k = monic.degree();
  std::vector<Real> coeffs;
  coeffs.reserve(static_cast<std::size_t>(k + 1));
  for (const auto& c : monic.coefficients()) coeffs.push_back(toReal(c));

  if (k == 1) {
    return {{Complex{-coeffs[0], Real(0)}, 1, Real(0)}};
  }

  // Fujiwara bound for the initial circle.
  double radius = 0.0;
  for (int i = 0; i < k; ++i) {
    const double a = std::fabs(static_cast<double>(coeffs[static_cast<std::size_t>(i)]));
    if (a == 0.0) continue;
    const double scale = (i == 0 ? 0.5 : 1.0);
    radius = std::max(radius, std::pow(a * scale, 1.0 / (k - i)));
  }
  radius = 2.0 * std::max(radius, 1e-3);

  std::vector<Complex> z(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const double angle = 2.0 * M_PI * i / k + 0.4;
    z[static_cast<std::size_t>(i)] = {Real(radius * std::cos(angle)), Real(radius * std::sin(angle))};
  }

  const Real tol = pow(Real(10), -digits);
  constexpr int kMaxIterations = 2000;
  bool converged = false;
  for (int iter = 0; iter < kMaxIterations && !converged; ++iter) {
    converged = true;
    for (int i = 0; i < k; ++i) {
      const auto& zi = z[static_cast<std::size_t>(i)];
      const auto [p, dp] = hornerWithDerivative(coeffs, zi);
      if (p.re == 0 && p.im == 0) continue;
      if (dp.re == 0 && dp.im == 0) {
        z[static_cast<std::size_t>(i)] = zi + Complex{tol, tol};
        converged = false;
        continue;
      }
      const Complex ratio = p / dp;
      Complex sum{Real(0), Real(0)};
      for (int j = 0; j < k; ++j) {
        if (j == i) continue;
        sum = sum + Complex{Real(1), Real(0)} / (zi - z[static_cast<std::size_t>(j)]);
      }
      const Complex step = ratio / (Complex{Real(1), Real(0)} - ratio * sum);
      z[static_cast<std::size_t>(i)] = zi - step;
      if (step.abs() > tol * std::max(Real(1), zi.abs())) converged = false;
    }
  }
  if (!converged) {
    throw RootFindingFailure("numericRoots: Aberth iteration did not converge for degree " +
                             std::to_string(k));
  }

  std::vector<RootApproximation> out;
  out.reserve(static_cast<std::size_t>(k));
  for (const auto& zi : z) {
    const auto [p, dp] = hornerWithDerivative(coeffs, zi);
    const Real dpAbs = dp.abs();
    if (dpAbs == 0) throw RootFindingFailure("numericRoots: vanishing derivative at a root of a squarefree factor");
    out.push_back({zi, 1, Real(k) * p.abs() / dpAbs});
  }
  return out;
}

}  // namespace

Real Complex::abs() const { return sqrt(re * re + im * im); }

std::string Complex::str(int digits) const {
  std::ostringstream os;
  os.precision(digits);
  os << re;
  if (im >= 0) os << '+';
  os << im << 'i';
  return os.str();
}

std::vector<Complex> RootReport::all() const {
  std::vector<Complex> out;
  for (const auto& r : roots)
    for (int i = 0; i < r.multiplicity; ++i) out.push_back(r.value);
  return out;
}

RootReport numericRoots(const UniPoly<Rational>& f, int digits) {
  if (f.degree() < 1) throw std::domain_error("numericRoots: polynomial must have degree >= 1");
  if (digits < 1 || digits > 90) throw std::domain_error("numericRoots: target digits must be in [1, 90]");

  RootReport report;
  report.targetDigits = digits;
  report.discriminant = discriminant(f);
  report.squarefree = !report.discriminant.isZero();

  for (const auto& [factor, multiplicity] : squarefreeDecomposition(f)) {
    for (auto root : aberth(factor, digits)) {
      root.multiplicity = multiplicity;
      report.roots.push_back(std::move(root));
    }
  }

  const Real inf = std::numeric_limits<Real>::infinity();
  report.minGap = inf;
  report.certifiedGapLowerBound = inf;
  for (const auto& r : report.roots) {
    if (r.multiplicity > 1) {
      report.minGap = Real(0);
      report.certifiedGapLowerBound = Real(0);
    }
  }
  for (std::size_t i = 0; i < report.roots.size(); ++i) {
    for (std::size_t j = i + 1; j < report.roots.size(); ++j) {
      const auto& a = report.roots[i];
      const auto& b = report.roots[j];
      const Real d = (a.value - b.value).abs();
      report.minGap = std::min(report.minGap, d);
      report.certifiedGapLowerBound =
          std::min(report.certifiedGapLowerBound, d - a.inclusionRadius - b.inclusionRadius);
    }
  }
  return report;
}

}  // namespace qss
