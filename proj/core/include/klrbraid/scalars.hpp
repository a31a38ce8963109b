#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klrbraid/poly.hpp"

namespace klrbraid {

class RationalQ;

// Laurent polynomial in q with rational coefficients; zero terms never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(mpq_class c);
  static LaurentPoly q_pow(int k, mpq_class c = 1);

  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;
  int max_degree() const;
  mpq_class coeff(int k) const;
  const std::map<int, mpq_class>& terms() const { return terms_; }
  void add_term(int k, const mpq_class& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const mpq_class& c);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // f(q) -> f(q^-1)
  LaurentPoly bar() const;
  std::string to_string() const;

 private:
  std::map<int, mpq_class> terms_;
};

// Element of Q(q), stored as num/den with num, den in Z[q] coprime and the
// leading coefficient of den positive.
class RationalQ {
 public:
  RationalQ() : den_(mpz_class(1)) {}
  RationalQ(long c);  // NOLINT(google-explicit-constructor)
  explicit RationalQ(const mpq_class& c);
  explicit RationalQ(const LaurentPoly& p);
  RationalQ(IntPoly num, IntPoly den);
  static RationalQ q_pow(int k);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  // True if den is a monomial c q^k.
  bool is_laurent() const { return den_.is_monomial(); }
  std::optional<LaurentPoly> to_laurent() const;
  // Returns (c, k) if this equals c q^k.
  std::optional<std::pair<mpq_class, int>> as_monomial() const;

  RationalQ& operator+=(const RationalQ& o);
  RationalQ& operator-=(const RationalQ& o);
  RationalQ& operator*=(const RationalQ& o);
  RationalQ& operator/=(const RationalQ& o);
  RationalQ operator-() const;
  RationalQ inverse() const;
  friend RationalQ operator+(RationalQ a, const RationalQ& b) { return a += b; }
  friend RationalQ operator-(RationalQ a, const RationalQ& b) { return a -= b; }
  friend RationalQ operator*(RationalQ a, const RationalQ& b) { return a *= b; }
  friend RationalQ operator/(RationalQ a, const RationalQ& b) { return a /= b; }
  friend bool operator==(const RationalQ& a, const RationalQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Multiply by q^k without renormalizing the whole fraction.
  RationalQ times_q_pow(int k) const;
  RationalQ bar() const;
  std::string to_string() const;

 private:
  void normalize();
  IntPoly num_;
  IntPoly den_;
};

// Truncated Laurent series sum_{k=lower}^{upper} c_k q^k with integer
// coefficients, optionally remembering the rational function it expands.
struct GradedSeries {
  int lower = 0;
  int upper = -1;
  std::vector<mpz_class> coeffs;  // coeffs[k - lower]
  std::optional<RationalQ> closed_form;

  mpz_class at(int k) const;
  bool operator==(const GradedSeries& o) const {
    return lower == o.lower && upper == o.upper && coeffs == o.coeffs;
  }
};

GradedSeries series_truncate(const RationalQ& f, int lower, int upper);
// Product truncated to the degree window of the operands' intersection.
GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b, int upper);

// [n]_{q^d}
LaurentPoly quantum_int(int n, int d = 1);
LaurentPoly quantum_factorial(int n, int d = 1);
// [m choose k]_{q^d}; m may be negative.
LaurentPoly quantum_binomial(int m, int k, int d = 1);

}  // namespace klrbraid
