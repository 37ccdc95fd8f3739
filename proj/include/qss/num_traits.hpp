#pragma once

// Eigen scalar registrations for the exact coefficient rings.

#include "qss/jet.hpp"
#include "qss/rational.hpp"
#include "qss/sympoly.hpp"

#include <Eigen/Core>

namespace qss::detail {

template <typename T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Literal = T;
  using Nested = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static T epsilon() { return T(0); }
  static T dummy_precision() { return T(0); }
  static int digits10() { return 0; }
};

}  // namespace qss::detail

namespace Eigen {

template <>
struct NumTraits<qss::Rational> : qss::detail::ExactNumTraits<qss::Rational> {};

template <>
struct NumTraits<qss::SymPoly> : qss::detail::ExactNumTraits<qss::SymPoly> {};

template <typename Scalar>
struct NumTraits<qss::Jet<Scalar>> : qss::detail::ExactNumTraits<qss::Jet<Scalar>> {};

}  // namespace Eigen
