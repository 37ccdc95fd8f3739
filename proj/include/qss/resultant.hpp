#pragma once

#include "qss/unipoly.hpp"

#include <stdexcept>
#include <utility>

namespace qss {

/// Resultant over a field, normalized as
///   Res(f, g) = lc(f)^deg(g) * lc(g)^deg(f) * prod (alpha_i - beta_j)
/// over the roots alpha of f and beta of g. So Res(x - 1, x + 1) = 2.
///
/// Evaluated by the Euclidean remainder sequence
///   Res(f, g) = (-1)^(deg f * deg g) * lc(g)^(deg f - deg r) * Res(g, r),  r = f mod g,
/// which stays exact because the field divisions are exact.
template <typename Field>
Field resultant(UniPoly<Field> f, UniPoly<Field> g) {
  if (f.isZero() || g.isZero()) throw std::domain_error("resultant: zero polynomial");
  Field acc(1);
  while (true) {
    const int m = f.degree();
    const int n = g.degree();
    if (n == 0) {
      Field p(1);
      for (int i = 0; i < m; ++i) p *= g.leading();
      return acc * p;
    }
    if (m == 0) {
      Field p(1);
      for (int i = 0; i < n; ++i) p *= f.leading();
      return acc * p;
    }
    if (m < n) {
      if ((m * n) % 2 != 0) acc = -acc;
      std::swap(f, g);
      continue;
    }
    auto r = divmod(f, g).second;
    if (r.isZero()) return Field(0);
    const int k = r.degree();
    if ((m * n) % 2 != 0) acc = -acc;
    for (int i = 0; i < m - k; ++i) acc *= g.leading();
    f = std::move(g);
    g = std::move(r);
  }
}

/// disc(f) = (-1)^(m(m-1)/2) * Res(f, f') / lc(f) for deg f = m >= 1, so that
/// disc(x^2 + b x + c) = b^2 - 4c and every linear polynomial has disc 1.
/// Nonzero exactly when f is squarefree.
template <typename Field>
Field discriminant(const UniPoly<Field>& f) {
  if (f.isZero()) throw std::domain_error("discriminant: zero polynomial");
  const int m = f.degree();
  if (m < 1) throw std::domain_error("discriminant: constant polynomial");
  Field d = resultant(f, f.derivative()) / f.leading();
  if ((m * (m - 1) / 2) % 2 != 0) d = -d;
  return d;
}

template <typename Field>
bool isSquarefree(const UniPoly<Field>& f) {
  return gcd(f, f.derivative()).degree() < 1;
}

}  // namespace qss
