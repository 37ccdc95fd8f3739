#pragma once

#include "qss/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qss {

/// Dense univariate polynomial over a commutative ring, lowest degree first.
///
/// The coefficient list never ends in a zero; the zero polynomial is the
/// empty list and has degree -1.
template <typename Scalar>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  /// c * x^k
  static UniPoly monomial(Scalar c, std::size_t k) {
    std::vector<Scalar> v(k + 1, Scalar(0));
    v[k] = std::move(c);
    return UniPoly(std::move(v));
  }
  static UniPoly constant(Scalar c) { return UniPoly(std::vector<Scalar>{std::move(c)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const { return c_.empty(); }
  const std::vector<Scalar>& coefficients() const { return c_; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  const Scalar& leading() const {
    if (c_.empty()) throw std::domain_error("UniPoly::leading: zero polynomial");
    return c_.back();
  }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(static_cast<int>(i)));
    return UniPoly(std::move(d));
  }

  /// Applies f to every coefficient, e.g. to take constant parts of jets.
  template <typename F>
  auto map(F&& f) const -> UniPoly<std::decay_t<decltype(f(std::declval<const Scalar&>()))>> {
    using Out = std::decay_t<decltype(f(std::declval<const Scalar&>()))>;
    std::vector<Out> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(f(x));
    return UniPoly<Out>(std::move(v));
  }

  UniPoly operator-() const { return map([](const Scalar& x) { return Scalar(-x); }); }

  UniPoly& operator+=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::scalarIsZero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(v));
  }
  friend UniPoly operator*(const Scalar& s, const UniPoly& p) {
    return p.map([&](const Scalar& x) { return Scalar(s * x); });
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Highest degree first, e.g. "x^3 - 2*x + 1". Coefficients in parentheses
  /// unless they print as a bare token.
  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Scalar& c = c_[static_cast<std::size_t>(k)];
      if (detail::scalarIsZero(c)) continue;
      std::ostringstream cs;
      cs << c;
      std::string text = cs.str();
      const bool simple = text.find_first_of(" +*") == std::string::npos &&
                          text.find('-', 1) == std::string::npos;
      const bool negative = simple && text.front() == '-';
      if (negative) text.erase(0, 1);
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        os << (simple ? text : "(" + text + ")");
        continue;
      }
      if (text != "1") {
        os << (simple ? text : "(" + text + ")") << '*';
      }
      os << var;
      if (k > 1) os << '^' << k;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && detail::scalarIsZero(c_.back())) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

template <typename Scalar>
bool isZero(const UniPoly<Scalar>& p) {
  return p.isZero();
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const UniPoly<Scalar>& p) {
  return os << p.str();
}

// Field-coefficient operations.

template <typename Field>
std::pair<UniPoly<Field>, UniPoly<Field>> divmod(const UniPoly<Field>& num, const UniPoly<Field>& den) {
  if (den.isZero()) throw std::domain_error("divmod: division by zero polynomial");
  std::vector<Field> rem = num.coefficients();
  const int dd = den.degree();
  if (num.degree() < dd) return {UniPoly<Field>(), num};
  std::vector<Field> quot(static_cast<std::size_t>(num.degree() - dd + 1), Field(0));
  const Field lead = den.leading();
  for (int k = num.degree(); k >= dd; --k) {
    const Field q = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - dd)] = q;
    if (detail::scalarIsZero(q)) continue;
    for (int i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(k - dd + i)] -= q * den.coeff(static_cast<std::size_t>(i));
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UniPoly<Field>(std::move(quot)), UniPoly<Field>(std::move(rem))};
}

template <typename Field>
UniPoly<Field> makeMonic(const UniPoly<Field>& p) {
  if (p.isZero()) return p;
  const Field inv = Field(1) / p.leading();
  return inv * p;
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <typename Field>
UniPoly<Field> gcd(UniPoly<Field> a, UniPoly<Field> b) {
  while (!b.isZero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return makeMonic(a);
}

/// Squarefree factorization by Yun's algorithm (characteristic zero).
/// Returns (factor, multiplicity) pairs with monic, pairwise coprime,
/// non-constant squarefree factors.
template <typename Field>
std::vector<std::pair<UniPoly<Field>, int>> squarefreeDecomposition(const UniPoly<Field>& f) {
  std::vector<std::pair<UniPoly<Field>, int>> out;
  if (f.degree() < 1) return out;
  const auto fm = makeMonic(f);
  const auto df = fm.derivative();
  auto a = gcd(fm, df);
  auto b = divmod(fm, a).first;
  auto c = divmod(df, a).first;
  auto d = c - b.derivative();
  int k = 1;
  while (b.degree() >= 1) {
    auto g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, k);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++k;
  }
  return out;
}

}  // namespace qss
