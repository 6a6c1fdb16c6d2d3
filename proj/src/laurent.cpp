#include "rpoly/laurent.hpp"

#include <ostream>

#include "rpoly/errors.hpp"

namespace rpoly {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.emplace(0, BigInt(c));
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, int exponent) {
  LaurentPoly p;
  p.add_term(coeff, exponent);
  return p;
}

LaurentPoly LaurentPoly::q_minus_one_pow(int k) {
  if (k < 0) throw PreconditionError("negative power of (q - 1)");
  LaurentPoly p;
  BigInt binom = 1;
  for (int j = 0; j <= k; ++j) {
    p.add_term(((k - j) % 2 == 0) ? binom : BigInt(-binom), j);
    binom = binom * (k - j) / (j + 1);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const Terms& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(c, e);
  return p;
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::degree() const {
  if (terms_.empty()) throw PreconditionError("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

int LaurentPoly::low_degree() const {
  if (terms_.empty()) throw PreconditionError("low degree of the zero polynomial");
  return terms_.begin()->first;
}

void LaurentPoly::add_term(const BigInt& c, int e) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(-c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_) out.add_term(c1 * c2, e1 + e2);
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    BigInt c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (e == 0) {
      out += c.str();
      continue;
    }
    if (c != 1) out += c.str() + "*";
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly pow(const LaurentPoly& p, int k) {
  if (k < 0) throw PreconditionError("negative exponent in pow");
  LaurentPoly result(1);
  LaurentPoly base = p;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly bar(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(c, -e);
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace rpoly
