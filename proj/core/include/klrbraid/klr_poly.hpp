#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "klrbraid/rootdata.hpp"

namespace klrbraid {

using Exps = std::vector<int>;

// Polynomial in x_0, ..., x_{n-1} over Q.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : n_(nvars) {}
  static Poly constant(int nvars, const mpq_class& c);
  static Poly var(int nvars, int k);
  static Poly monomial(Exps a, const mpq_class& c = 1);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exps, mpq_class>& terms() const { return terms_; }
  void add_term(const Exps& a, const mpq_class& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const mpq_class& c);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const mpq_class& c) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly times_monomial(const Exps& a) const;
  // s_k: exchange x_k and x_{k+1}
  Poly swapped(int k) const;
  // (s_k f - f) / (x_k - x_{k+1})
  Poly demazure(int k) const;
  // Substitute x_p -> x_{perm[p]} where perm maps variable positions.
  Poly relabeled(const std::vector<int>& perm, int nvars) const;
  // Apply Demazure operators along a word, rightmost letter first.
  Poly demazure_word(const Word& w) const;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::map<Exps, mpq_class> terms_;
};

// Parameters t_{i,j} and s_{i,j}^{p,q} of the polynomials Q_{i,j}.
struct ScalarsChoice {
  std::map<std::pair<int, int>, mpq_class> t;                  // default 1
  std::map<std::tuple<int, int, int, int>, mpq_class> s;       // (i, j, p, q), default 0

  mpq_class t_of(int i, int j) const;
  mpq_class s_of(int i, int j, int p, int q) const;
  // Throws std::invalid_argument on a violated condition.
  void validate(const CartanDatum& c) const;
};

// Q_{i,j}(x_u, x_v) and Qbar_{i,i',i''}(x_k, x_{k+1}, x_{k+2}) as polynomials in n variables.
Poly q_poly(const CartanDatum& c, const ScalarsChoice& s, int i, int j, int n, int u, int v);
Poly qbar_poly(const CartanDatum& c, const ScalarsChoice& s, int i, int i1, int i2, int n, int k);

}  // namespace klrbraid
