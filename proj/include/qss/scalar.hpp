#pragma once

#include <type_traits>

namespace qss {

template <typename T>
  requires std::is_arithmetic_v<T>
bool isZero(T x) {
  return x == T(0);
}

namespace detail {

// Unqualified call so that argument-dependent lookup picks up the isZero
// overload that ships with each coefficient type.
template <typename T>
bool scalarIsZero(const T& x) {
  return isZero(x);
}

}  // namespace detail
}  // namespace qss
