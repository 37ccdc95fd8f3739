#include "qss/complete_intersection.hpp"

#include <algorithm>
#include <stdexcept>

namespace qss {

CompleteIntersection::CompleteIntersection(int n, std::vector<int> degrees) : n_(n), input_(std::move(degrees)) {
  if (n_ < 1) throw std::invalid_argument("CompleteIntersection: dimension must be >= 1");
  if (input_.empty()) throw std::invalid_argument("CompleteIntersection: degree list is empty");
  for (int d : input_) {
    if (d < 1) throw std::invalid_argument("CompleteIntersection: degrees must be >= 1");
    if (d >= 2) degrees_.push_back(d);
  }
  std::sort(degrees_.begin(), degrees_.end());
  e_ = 1;
  for (int d : degrees_) e_ += d - 1;
}

mpz_class CompleteIntersection::degree() const {
  mpz_class d = 1;
  for (int di : degrees_) d *= di;
  return d;
}

mpz_class CompleteIntersection::degreePowerProduct() const {
  mpz_class p = 1;
  for (int di : degrees_) {
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(di), static_cast<unsigned long>(di));
    p *= f;
  }
  return p;
}

Rational CompleteIntersection::delta() const { return Rational(n_ - 2 * e_ + 3, n_ - e_ + 2); }

std::string CompleteIntersection::label() const {
  return "n=" + std::to_string(n_) + " d=(" + [&] {
    std::string s;
    for (std::size_t i = 0; i < degrees_.size(); ++i) s += (i ? "," : "") + std::to_string(degrees_[i]);
    return s;
  }() + ")";
}

std::string CompleteIntersection::degreeString() const {
  std::string s;
  for (std::size_t i = 0; i < degrees_.size(); ++i) s += (i ? ";" : "") + std::to_string(degrees_[i]);
  return s;
}

}  // namespace qss
