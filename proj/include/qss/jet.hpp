#pragma once

#include "qss/scalar.hpp"

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qss {

/// Thrown when combining jets over different numbers of variables.
struct JetMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when inverting a jet whose constant term vanishes.
struct NonUnitJet : std::domain_error {
  using std::domain_error::domain_error;
};

/// First-order jet c + sum_i l_i z_i, computed modulo (z_1, ..., z_N)^2.
///
/// A jet with an empty linear part is a pure constant and combines with jets
/// of any width. Two jets that both carry linear parts must agree on N.
template <typename Scalar>
class Jet {
 public:
  Jet() = default;
  Jet(Scalar constant) : constant_(std::move(constant)) {}  // NOLINT(google-explicit-constructor)
  Jet(int constant) : constant_(Scalar(constant)) {}         // NOLINT
  Jet(Scalar constant, std::vector<Scalar> linear)
      : constant_(std::move(constant)), linear_(std::move(linear)) {}

  /// The jet z_index in N variables.
  static Jet variable(std::size_t num_vars, std::size_t index) {
    Jet j(Scalar(0), std::vector<Scalar>(num_vars, Scalar(0)));
    j.linear_.at(index) = Scalar(1);
    return j;
  }

  const Scalar& constant() const { return constant_; }
  const std::vector<Scalar>& linear() const { return linear_; }
  std::size_t numVars() const { return linear_.size(); }
  /// Coefficient of z_i; zero for constant jets.
  Scalar linear(std::size_t i) const { return i < linear_.size() ? linear_[i] : Scalar(0); }

  bool isZero() const {
    if (!isZeroScalar(constant_)) return false;
    for (const auto& l : linear_)
      if (!isZeroScalar(l)) return false;
    return true;
  }
  bool linearIsZero() const {
    for (const auto& l : linear_)
      if (!isZeroScalar(l)) return false;
    return true;
  }

  Jet operator-() const {
    Jet out(-constant_);
    out.linear_.reserve(linear_.size());
    for (const auto& l : linear_) out.linear_.push_back(-l);
    return out;
  }

  Jet& operator+=(const Jet& o) {
    const std::size_t n = widen(o);
    constant_ += o.constant_;
    for (std::size_t i = 0; i < o.linear_.size() && i < n; ++i) linear_[i] += o.linear_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    const std::size_t n = widen(o);
    constant_ -= o.constant_;
    for (std::size_t i = 0; i < o.linear_.size() && i < n; ++i) linear_[i] -= o.linear_[i];
    return *this;
  }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b) {
    const std::size_t n = checkWidth(a, b);
    Jet out(a.constant_ * b.constant_);
    if (n == 0) return out;
    out.linear_.assign(n, Scalar(0));
    const bool a_const_zero = isZeroScalar(a.constant_);
    const bool b_const_zero = isZeroScalar(b.constant_);
    for (std::size_t i = 0; i < n; ++i) {
      if (!a_const_zero && i < b.linear_.size() && !isZeroScalar(b.linear_[i]))
        out.linear_[i] += a.constant_ * b.linear_[i];
      if (!b_const_zero && i < a.linear_.size() && !isZeroScalar(a.linear_[i]))
        out.linear_[i] += b.constant_ * a.linear_[i];
    }
    return out;
  }

  /// Multiplicative inverse c^-1 - c^-2 * l. Requires a field of scalars.
  Jet inverse() const
    requires requires(Scalar x) { x / x; }
  {
    if (isZeroScalar(constant_)) throw NonUnitJet("Jet::inverse: constant term is zero");
    const Scalar inv = Scalar(1) / constant_;
    Jet out(inv);
    const Scalar scale = -(inv * inv);
    for (const auto& l : linear_) out.linear_.push_back(scale * l);
    return out;
  }

  friend Jet operator/(const Jet& a, const Jet& b)
    requires requires(Scalar x) { x / x; }
  {
    return a * b.inverse();
  }

  /// Equality as elements of the truncated ring: missing linear slots are zero.
  friend bool operator==(const Jet& a, const Jet& b) {
    if (!(a.constant_ == b.constant_)) return false;
    const std::size_t n = std::max(a.linear_.size(), b.linear_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (!(a.linear(i) == b.linear(i))) return false;
    return true;
  }

  std::string str() const {
    std::ostringstream os;
    os << constant_;
    for (std::size_t i = 0; i < linear_.size(); ++i) {
      if (isZeroScalar(linear_[i])) continue;
      os << " + (" << linear_[i] << ")*z" << i + 1;
    }
    return os.str();
  }

 private:
  static bool isZeroScalar(const Scalar& s) { return detail::scalarIsZero(s); }

  static std::size_t checkWidth(const Jet& a, const Jet& b) {
    if (!a.linear_.empty() && !b.linear_.empty() && a.linear_.size() != b.linear_.size())
      throw JetMismatch("Jet: mismatched number of variables");
    return std::max(a.linear_.size(), b.linear_.size());
  }

  std::size_t widen(const Jet& o) {
    const std::size_t n = checkWidth(*this, o);
    if (linear_.size() < n) linear_.resize(n, Scalar(0));
    return n;
  }

  Scalar constant_{};
  std::vector<Scalar> linear_;
};

template <typename Scalar>
bool isZero(const Jet<Scalar>& j) {
  return j.isZero();
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Jet<Scalar>& j) {
  return os << j.str();
}

}  // namespace qss
