#include "hecke/laurent.hpp"

#include "hecke/error.hpp"

namespace hecke {

LaurentPoly LaurentPoly::monomial(int exponent, Coeff c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::quantum_integer(int k) {
  LaurentPoly p;
  for (int j = 0; j < k; ++j) p.add_term(k - 1 - 2 * j, 1);
  return p;
}

LaurentPoly LaurentPoly::quantum_factorial(int k) {
  LaurentPoly p(1);
  for (int j = 2; j <= k; ++j) p *= quantum_integer(j);
  return p;
}

LaurentPoly::Coeff LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly::Coeff LaurentPoly::at_one() const {
  Coeff s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  LaurentPoly quotient;
  LaurentPoly rem = *this;
  const int lead_deg = divisor.max_degree();
  const Coeff lead = divisor.coefficient(lead_deg);
  while (!rem.is_zero()) {
    const int d = rem.max_degree();
    const Coeff c = rem.coefficient(d);
    if (d - lead_deg < rem.min_degree() - divisor.min_degree() || c % lead != 0) {
      throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
    }
    const auto step = monomial(d - lead_deg, c / lead);
    quotient += step;
    rem -= step * divisor;
  }
  return quotient;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    auto [e, c] = *it;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const auto mag = c < 0 ? -c : c;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "v";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace hecke
