#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace hecke {

// Sparse Laurent polynomial in v with integer coefficients. Zero
// coefficients are never stored.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(Coeff c) { add_term(0, c); }  // NOLINT: constants convert implicitly

  static LaurentPoly monomial(int exponent, Coeff c = 1);
  // [k] = v^(k−1) + v^(k−3) + … + v^(1−k)
  static LaurentPoly quantum_integer(int k);
  static LaurentPoly quantum_factorial(int k);

  bool is_zero() const noexcept { return terms_.empty(); }
  Coeff coefficient(int exponent) const;
  const std::map<int, Coeff>& terms() const noexcept { return terms_; }
  // Undefined for the zero polynomial.
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }

  void add_term(int exponent, Coeff c);

  Coeff at_one() const;
  // v ↦ v^{-1}
  LaurentPoly bar() const;
  bool is_bar_invariant() const { return bar() == *this; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;

  // Exact division; throws InvalidArgument if the divisor does not divide.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, Coeff> terms_;
};

// "0", "1", "v", "2v^3 + v^-1", ... (descending exponents)
std::string to_string(const LaurentPoly& p);

}  // namespace hecke
