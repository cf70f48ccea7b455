#include "trigrid/laurent.hpp"

#include <cstdlib>
#include <stdexcept>

namespace trigrid {

LaurentPolynomial::LaurentPolynomial(Coefficient constant) { add_term(0, constant); }

LaurentPolynomial LaurentPolynomial::monomial(Coefficient c, int exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, c);
  return p;
}

LaurentPolynomial::Coefficient LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPolynomial::add_term(int exponent, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (auto [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (auto [ea, ca] : a.terms_)
    for (auto [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(int k) const {
  if (k < 0) {
    // Only monomials are invertible.
    if (terms_.size() != 1 || std::abs(terms_.begin()->second) != 1)
      throw std::domain_error("negative power of a non-monomial");
    auto [e, c] = *terms_.begin();
    return monomial((k % 2 == 0) ? 1 : c, e * k);
  }
  LaurentPolynomial out(1), base = *this;
  while (k > 0) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::mirrored() const {
  LaurentPolynomial out;
  for (auto [e, c] : terms_) out.add_term(-e, c);
  return out;
}

std::string LaurentPolynomial::to_string(const char* var) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    Coefficient mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag);
    s += var;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

LaurentPolynomial loop_value() {
  return LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
}

}  // namespace trigrid
