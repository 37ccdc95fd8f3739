#pragma once

#include "qss/num_traits.hpp"
#include "qss/scalar.hpp"
#include "qss/unipoly.hpp"

#include <Eigen/Core>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace qss {

template <typename Scalar>
using SquareMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace detail {

template <typename Derived>
void requireSquare(const Eigen::MatrixBase<Derived>& m, const char* who) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(who) + ": matrix is not square");
}

template <typename Derived>
std::vector<std::vector<Eigen::Index>> rowSupport(const Eigen::MatrixBase<Derived>& m) {
  std::vector<std::vector<Eigen::Index>> support(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!scalarIsZero(m(i, j))) support[static_cast<std::size_t>(i)].push_back(j);
  return support;
}

/// Laplace expansion along rows, memoized on the set of consumed columns.
/// Division-free; states that can no longer be completed are pruned.
template <typename Derived>
typename Derived::Scalar laplaceDeterminant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (n > 63) throw std::invalid_argument("determinant: dimension above 63 needs the Berkowitz route");
  const auto support = rowSupport(m);

  // lastRow[c]: the last row with a nonzero in column c.
  std::vector<Eigen::Index> lastRow(static_cast<std::size_t>(n), -1);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index c : support[static_cast<std::size_t>(i)]) lastRow[static_cast<std::size_t>(c)] = i;

  std::unordered_map<std::uint64_t, Scalar> layer{{0, Scalar(1)}};
  for (Eigen::Index row = 0; row < n; ++row) {
    std::uint64_t mustHave = 0;  // columns nobody below this row can fill
    for (Eigen::Index c = 0; c < n; ++c)
      if (lastRow[static_cast<std::size_t>(c)] <= row) mustHave |= std::uint64_t{1} << c;
    std::unordered_map<std::uint64_t, Scalar> next;
    for (const auto& [mask, value] : layer) {
      for (Eigen::Index c : support[static_cast<std::size_t>(row)]) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        if (mask & bit) continue;
        const std::uint64_t grown = mask | bit;
        // Columns that only rows <= row can reach must already be used.
        if ((mustHave & ~grown) != 0) continue;
        const bool odd = (std::popcount(mask >> c) & 1) != 0;
        Scalar term = value * m(row, c);
        auto [it, inserted] = next.try_emplace(grown, Scalar(0));
        if (odd) {
          it->second -= term;
        } else {
          it->second += term;
        }
      }
    }
    layer = std::move(next);
    if (layer.empty()) return Scalar(0);
  }
  const auto it = layer.find(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  return it == layer.end() ? Scalar(0) : it->second;
}

/// Berkowitz: coefficients of det(x I - m), highest degree first. Division-free.
template <typename Derived>
std::vector<typename Derived::Scalar> berkowitz(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  const auto support = rowSupport(m);
  std::vector<Scalar> poly{Scalar(1)};
  for (Eigen::Index r = 0; r < n; ++r) {
    // Leading block A_r is r x r; C = m(0..r-1, r); R = m(r, 0..r-1).
    std::vector<Scalar> toeplitz;
    toeplitz.reserve(static_cast<std::size_t>(r + 2));
    toeplitz.push_back(Scalar(1));
    toeplitz.push_back(-m(r, r));
    std::vector<Scalar> v(static_cast<std::size_t>(r));
    for (Eigen::Index i = 0; i < r; ++i) v[static_cast<std::size_t>(i)] = m(i, r);
    for (Eigen::Index k = 0; k < r; ++k) {
      Scalar dot(0);
      for (Eigen::Index c : support[static_cast<std::size_t>(r)]) {
        if (c >= r) break;
        if (!scalarIsZero(v[static_cast<std::size_t>(c)])) dot += m(r, c) * v[static_cast<std::size_t>(c)];
      }
      toeplitz.push_back(-dot);
      if (k + 1 == r) break;
      std::vector<Scalar> w(static_cast<std::size_t>(r), Scalar(0));
      for (Eigen::Index i = 0; i < r; ++i) {
        for (Eigen::Index c : support[static_cast<std::size_t>(i)]) {
          if (c >= r) break;
          if (!scalarIsZero(v[static_cast<std::size_t>(c)])) w[static_cast<std::size_t>(i)] += m(i, c) * v[static_cast<std::size_t>(c)];
        }
      }
      v = std::move(w);
    }
    std::vector<Scalar> next(poly.size() + 1, Scalar(0));
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j < poly.size() && j <= i; ++j)
        if (i - j < toeplitz.size() && !scalarIsZero(poly[j])) next[i] += toeplitz[i - j] * poly[j];
    poly = std::move(next);
  }
  return poly;
}

template <typename Derived>
std::size_t nonZeroCount(const Eigen::MatrixBase<Derived>& m) {
  std::size_t count = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!scalarIsZero(m(i, j))) ++count;
  return count;
}

}  // namespace detail

/// Exact determinant over any commutative ring.
///
/// Small or sparse matrices use memoized cofactor expansion; dense matrices
/// beyond dimension 10 fall back to Berkowitz. Neither route divides, so
/// nilpotent jet entries are safe.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::requireSquare(m, "determinant");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  const bool sparse = detail::nonZeroCount(m) <= static_cast<std::size_t>(6 * n);
  if (n <= 63 && (n <= 10 || sparse)) return detail::laplaceDeterminant(m);
  const auto coeffs = detail::berkowitz(m);
  return (n % 2 == 0) ? coeffs.back() : Scalar(-coeffs.back());
}

/// det(x I - m) as a monic polynomial of degree dim(m).
template <typename Derived>
UniPoly<typename Derived::Scalar> characteristicPolynomial(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::requireSquare(m, "characteristicPolynomial");
  auto coeffs = detail::berkowitz(m);
  return UniPoly<Scalar>(std::vector<Scalar>(coeffs.rbegin(), coeffs.rend()));
}

/// Applies f entrywise, producing a matrix over a possibly different ring.
template <typename Derived, typename F>
auto mapEntries(const Eigen::MatrixBase<Derived>& m, F&& f) {
  using Out = std::decay_t<decltype(f(m(0, 0)))>;
  SquareMatrix<Out> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  return out;
}

template <typename Scalar>
SquareMatrix<Scalar> zeroMatrix(Eigen::Index n) {
  return SquareMatrix<Scalar>::Constant(n, n, Scalar(0));
}

template <typename Scalar>
SquareMatrix<Scalar> identityMatrix(Eigen::Index n) {
  SquareMatrix<Scalar> m = zeroMatrix<Scalar>(n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

}  // namespace qss
