#include "qss/schubert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qss::schubert {

std::string SchurIndex::str() const {
  if (b == 0) return "s" + std::to_string(a);
  return "s" + std::to_string(a) + "," + std::to_string(b);
}

GrassmannClass::GrassmannClass(int N) : N_(N) {
  if (N < 2) throw std::domain_error("GrassmannClass: need N >= 2");
}

GrassmannClass GrassmannClass::sigma(int N, int a, int b) {
  GrassmannClass x(N);
  const SchurIndex idx{a, b};
  if (!idx.validFor(N)) {
    throw std::domain_error("GrassmannClass::sigma: index " + idx.str() + " invalid on G(2," +
                            std::to_string(N) + ")");
  }
  x.terms_.emplace(idx, 1);
  return x;
}

mpz_class GrassmannClass::coefficient(SchurIndex idx) const {
  const auto it = terms_.find(idx);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void GrassmannClass::add(SchurIndex idx, const mpz_class& c) {
  if (idx.b < 0 || idx.a < idx.b) throw std::domain_error("GrassmannClass::add: not a partition");
  if (idx.a > N_ - 2 || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GrassmannClass& GrassmannClass::operator+=(const GrassmannClass& o) {
  if (o.N_ != N_) throw std::invalid_argument("GrassmannClass: mismatched N");
  for (const auto& [idx, c] : o.terms_) add(idx, c);
  return *this;
}

std::string GrassmannClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const mpz_class mag = abs(c);
    if (mag != 1) os << mag.get_str() << '*';
    os << idx.str();
  }
  return os.str();
}

GrassmannClass pieriProduct(const GrassmannClass& x, const GrassmannClass& y) {
  if (x.ambient() != y.ambient()) throw std::invalid_argument("pieriProduct: mismatched N");
  GrassmannClass out(x.ambient());
  for (const auto& [u, cu] : x.terms()) {
    for (const auto& [v, cv] : y.terms()) {
      const int shift = u.b + v.b;
      const int p = u.a - u.b;
      const int q = v.a - v.b;
      const mpz_class c = cu * cv;
      for (int i = 0; i <= std::min(p, q); ++i) out.add({shift + p + q - i, shift + i}, c);
    }
  }
  return out;
}

GrassmannClass power(const GrassmannClass& x, unsigned k) {
  GrassmannClass out = GrassmannClass::one(x.ambient());
  for (unsigned i = 0; i < k; ++i) out = out * x;
  return out;
}

GrassmannClass topChernSym(int d, int N) {
  if (d < 1) throw std::domain_error("topChernSym: degree must be >= 1");
  // coeffs[i] = coefficient of x1^i x2^(deg-i).
  std::vector<mpz_class> coeffs{1};
  for (int k = 0; k <= d; ++k) {
    std::vector<mpz_class> next(coeffs.size() + 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i] * k;        // k * x1
      next[i] += coeffs[i] * (d - k);      // (d-k) * x2
    }
    coeffs = std::move(next);
  }
  const int deg = d + 1;
  // Multiply by (x1 - x2): the coefficient of x1^{a+1} x2^b with a >= b is
  // the coefficient of s_{(a,b)}.
  std::vector<mpz_class> alt(static_cast<std::size_t>(deg + 2), 0);
  for (int i = 0; i <= deg; ++i) {
    alt[static_cast<std::size_t>(i + 1)] += coeffs[static_cast<std::size_t>(i)];
    alt[static_cast<std::size_t>(i)] -= coeffs[static_cast<std::size_t>(i)];
  }
  GrassmannClass out(N);
  for (int p = 0; p <= deg + 1; ++p) {
    const int q = deg + 1 - p;
    if (p <= q) continue;
    out.add({p - 1, q}, alt[static_cast<std::size_t>(p)]);
  }
  return out;
}

mpz_class integrate(const GrassmannClass& x) {
  const int top = x.ambient() - 2;
  return x.coefficient({top, top});
}

namespace {

void validate(int n, const std::vector<int>& degrees) {
  if (n < 1) throw std::domain_error("lineInvariant: dimension must be positive");
  for (int d : degrees)
    if (d < 1) throw std::domain_error("lineInvariant: degrees must be >= 1");
}

int excess(const std::vector<int>& degrees) {
  return 1 + std::accumulate(degrees.begin(), degrees.end(), 0, [](int s, int d) { return s + d - 1; });
}

}  // namespace

std::pair<int, int> incidenceIndices(int n, const std::vector<int>& degrees, int j) {
  validate(n, degrees);
  const int e = excess(degrees);
  return {n - j - 1, n - e + j};
}

LineInvariant lineInvariant(int n, const std::vector<int>& degrees, int j) {
  validate(n, degrees);
  const int r = static_cast<int>(degrees.size());
  const int N = n + r + 1;
  const auto [first, second] = incidenceIndices(n, degrees, j);
  if (first < 0 || first > N - 2 || second < 0 || second > N - 2) {
    throw std::domain_error("lineInvariant: j = " + std::to_string(j) +
                            " gives Schubert indices outside [0, N-2]");
  }
  GrassmannClass acc = GrassmannClass::sigma(N, first) * GrassmannClass::sigma(N, second);
  mpz_class d = 1;
  for (int di : degrees) {
    acc = acc * topChernSym(di, N);
    d *= di;
  }
  LineInvariant out;
  out.j = j;
  out.count = integrate(acc);
  out.value = Rational(out.count, d);
  return out;
}

std::map<int, LineInvariant> lineInvariantTable(int n, const std::vector<int>& degrees) {
  validate(n, degrees);
  std::map<int, LineInvariant> table;
  const int N = n + static_cast<int>(degrees.size()) + 1;
  for (int j = 0; j <= n; ++j) {
    const auto [first, second] = incidenceIndices(n, degrees, j);
    if (first < 0 || first > N - 2 || second < 0 || second > N - 2) continue;
    table.emplace(j, lineInvariant(n, degrees, j));
  }
  return table;
}

}  // namespace qss::schubert
