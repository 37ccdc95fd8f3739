#include "qss/sympoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qss {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      out.push_back(*i++);
    } else if (j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  out.insert(out.end(), j, b.end());
  return out;
}

unsigned totalDegree(const Monomial& m) {
  unsigned d = 0;
  for (const auto& [s, k] : m) d += k;
  return d;
}

SymPoly::SymPoly(const Rational& c) {
  if (!c.isZero()) terms_.emplace(Monomial{}, c);
}

SymPoly::SymPoly(Symbol s) { terms_.emplace(Monomial{{s, 1U}}, Rational(1)); }

bool SymPoly::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::optional<Rational> SymPoly::constantValue() const {
  if (terms_.empty()) return Rational(0);
  if (isConstant()) return terms_.begin()->second;
  return std::nullopt;
}

Rational SymPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned SymPoly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, totalDegree(m));
  return d;
}

void SymPoly::addTerm(const Monomial& m, const Rational& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

SymPoly SymPoly::substitute(const std::map<Symbol, Rational>& values) const {
  SymPoly out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial rest;
    for (const auto& [s, k] : m) {
      const auto v = values.find(s);
      if (v == values.end()) {
        rest.emplace_back(s, k);
      } else {
        coeff *= pow(v->second, k);
      }
    }
    out.addTerm(rest, coeff);
  }
  return out;
}

Rational SymPoly::evaluate(const std::map<Symbol, Rational>& values) const {
  const SymPoly p = substitute(values);
  const auto c = p.constantValue();
  if (!c) throw std::domain_error("SymPoly::evaluate: unassigned symbol in " + p.str());
  return *c;
}

std::string SymPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (!unit || m.empty()) os << mag;
    bool sep = !unit;
    for (const auto& [s, k] : m) {
      if (sep) os << '*';
      os << s.name();
      if (k > 1) os << '^' << k;
      sep = true;
    }
  }
  return os.str();
}

SymPoly SymPoly::operator-() const {
  SymPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const SymPoly& o) { return *this = *this * o; }

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.addTerm(multiply(ma, mb), ca * cb);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SymPoly& p) { return os << p.str(); }

}  // namespace qss
