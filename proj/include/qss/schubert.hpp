#pragma once

#include "qss/rational.hpp"

#include <gmpxx.h>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qss::schubert {

/// Partition (a, b) with a >= b >= 0, indexing sigma_{a,b} on G(2, N).
struct SchurIndex {
  int a = 0;
  int b = 0;

  int degree() const { return a + b; }
  bool validFor(int N) const { return b >= 0 && a >= b && a <= N - 2; }
  /// Poincare dual index (N-2-b, N-2-a).
  SchurIndex dual(int N) const { return {N - 2 - b, N - 2 - a}; }
  std::string str() const;

  friend auto operator<=>(const SchurIndex&, const SchurIndex&) = default;
};

/// Integer combination of Schubert classes in H*(G(2, N)), where G(2, N) is
/// the Grassmannian of lines in P^{N-1}.
///
/// Classes are stored as Schur polynomials s_{(a,b)}(x1, x2) in the Chern
/// roots of the dual tautological bundle; sigma_c = h_c(x1, x2) is the
/// special class of lines meeting a codimension-(c+1) linear space.
class GrassmannClass {
 public:
  using Terms = std::map<SchurIndex, mpz_class>;

  explicit GrassmannClass(int N);

  static GrassmannClass one(int N) { return sigma(N, 0, 0); }
  /// sigma_{a,b}; throws std::domain_error when (a, b) is not valid for N.
  static GrassmannClass sigma(int N, int a, int b = 0);

  int ambient() const { return N_; }
  const Terms& terms() const { return terms_; }
  mpz_class coefficient(SchurIndex idx) const;
  bool isZero() const { return terms_.empty(); }

  /// Adds c * s_{(a,b)}; indices with a > N-2 vanish in the quotient ring.
  void add(SchurIndex idx, const mpz_class& c);

  GrassmannClass& operator+=(const GrassmannClass& o);
  friend GrassmannClass operator+(GrassmannClass x, const GrassmannClass& y) { return x += y; }
  friend bool operator==(const GrassmannClass&, const GrassmannClass&) = default;

  std::string str() const;

 private:
  int N_;
  Terms terms_;
};

/// Cup product. Two-row Schur functions multiply as
///   s_{a,b} s_{c,d} = (x1 x2)^{b+d} * sum_{i=0}^{min(p,q)} s_{p+q-i, i},  p = a-b, q = c-d,
/// after which every term with first part above N-2 is dropped.
/// Throws std::invalid_argument for different N.
GrassmannClass pieriProduct(const GrassmannClass& x, const GrassmannClass& y);

inline GrassmannClass operator*(const GrassmannClass& x, const GrassmannClass& y) {
  return pieriProduct(x, y);
}

GrassmannClass power(const GrassmannClass& x, unsigned k);

/// Top Chern class of Sym^d of the dual tautological bundle, the class of the
/// lines contained in a degree-d hypersurface:
///   prod_{k=0}^{d} (k x1 + (d-k) x2)
/// converted to the Schur basis through the bialternant
///   s_{(a,b)} = (x1^{a+1} x2^b - x1^b x2^{a+1}) / (x1 - x2).
GrassmannClass topChernSym(int d, int N);

/// Degree of a zero-cycle: the coefficient of the point class s_{(N-2,N-2)}.
mpz_class integrate(const GrassmannClass& x);

struct LineInvariant {
  int j = 0;
  /// d * l_j, the number of lines on V meeting two general linear spaces of
  /// codimension n-j and n+1-e+j.
  mpz_class count;
  /// l_j = count / d. Not assumed to be an integer.
  Rational value;
};

/// Schubert indices of the two incidence conditions for l_j:
/// sigma_{n-j-1} and sigma_{n-e+j}.
std::pair<int, int> incidenceIndices(int n, const std::vector<int>& degrees, int j);

/// Computes d * l_j = integral over G(2, n+r+1) of
///   prod_i c_top(Sym^{d_i} S^*) * sigma_{n-j-1} * sigma_{n-e+j}.
/// Throws std::domain_error when j puts either index outside [0, N-2] or the
/// input is malformed.
LineInvariant lineInvariant(int n, const std::vector<int>& degrees, int j);

/// All admissible l_j for (n, degrees), keyed by j.
std::map<int, LineInvariant> lineInvariantTable(int n, const std::vector<int>& degrees);

}  // namespace qss::schubert
