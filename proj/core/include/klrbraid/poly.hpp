#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace klrbraid {

// Dense polynomial in q with integer coefficients; coeffs[k] is the q^k term.
// Always trimmed: the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(mpz_class c);
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly monomial(mpz_class c, int exp);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Exponent of the lowest nonzero term; 0 for the zero polynomial.
  int low_degree() const;
  bool is_monomial() const;

  const mpz_class& lead() const { return coeffs_.back(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(int k) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const mpz_class& c);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& c) { return a *= c; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly shifted(int k) const;  // multiply by q^k, k >= 0
  IntPoly lowered(int k) const;  // divide by q^k, requires low_degree() >= k

  mpz_class content() const;
  IntPoly primitive_part() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

// Exact quotient a / b; throws std::domain_error if b does not divide a.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
// Exact quotient by an integer.
IntPoly divexact(const IntPoly& a, const mpz_class& c);
// Gcd over Z[q], normalized to a positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace klrbraid
