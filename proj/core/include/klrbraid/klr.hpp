#pragma once

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "klrbraid/klr_poly.hpp"
#include "klrbraid/rootdata.hpp"

namespace klrbraid {

// A permutation w of {0..n-1} stored as the sequence obtained by applying
// w to (0, 1, ..., n-1): position p holds the strand that ends there.
using Perm = std::vector<int>;

// S_n with its fixed reduced words (lexicographically smallest).
struct PermTable {
  int n = 0;
  std::vector<Perm> perms;  // index 0 is the identity
  std::map<Perm, int> index;
  std::vector<Word> reduced;
  std::vector<int> length;
  std::vector<std::vector<int>> left_mul;  // left_mul[v][k] = index of s_k v
  int longest = 0;
};

constexpr int kMaxStrands = 6;
// Throws BoundExceeded for n > kMaxStrands.
const PermTable& perm_table(int n);

Perm perm_of_word(const Word& w, int n);
// w(nu): the sequence with entry nu[w[p]] at position p.
Word permute_sequence(const Perm& w, const Word& nu);
// Applies a word to a sequence, rightmost letter first.
Word act_word(const Word& w, Word nu);
// No a < b < c with w(a) > w(b) > w(c); tau_w is then independent of the reduced word.
bool is_321_avoiding(const Perm& w);

// x^a tau_{w} e(nu) with the fixed reduced word of w.
struct KLRTerm {
  Word nu;  // source idempotent
  int w = 0;
  Exps a;
  auto operator<=>(const KLRTerm&) const = default;
};

class KLRElem {
 public:
  KLRElem() = default;
  explicit KLRElem(int n) : n_(n) {}

  int strands() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<KLRTerm, mpq_class>& terms() const { return terms_; }
  void add_term(const KLRTerm& t, const mpq_class& c);
  mpq_class coeff(const KLRTerm& t) const;

  KLRElem& operator+=(const KLRElem& o);
  KLRElem& operator-=(const KLRElem& o);
  KLRElem& operator*=(const mpq_class& c);
  KLRElem operator-() const;
  friend KLRElem operator+(KLRElem a, const KLRElem& b) { return a += b; }
  friend KLRElem operator-(KLRElem a, const KLRElem& b) { return a -= b; }
  friend KLRElem operator*(KLRElem a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const KLRElem& a, const KLRElem& b) { return a.terms_ == b.terms_; }

  // The part e(target) * this * e(source); empty sequences match everything.
  KLRElem block(const Word& target, const Word& source) const;

 private:
  int n_ = 0;
  std::map<KLRTerm, mpq_class> terms_;
};

// Element of the faithful module: one polynomial per idempotent.
struct PolyVector {
  int n = 0;
  std::map<Word, Poly> comps;

  void add(const Word& nu, const Poly& f);
  void prune();
  friend bool operator==(const PolyVector& a, const PolyVector& b) { return a.comps == b.comps; }
};

class KLRAlgebra {
 public:
  explicit KLRAlgebra(CartanDatum c, ScalarsChoice s = {});

  const CartanDatum& datum() const { return datum_; }
  const ScalarsChoice& scalars() const { return scalars_; }

  std::vector<Word> sequences(const RootVec& beta) const;
  RootVec weight(const Word& nu) const { return RootVec::of_word(datum_.rank(), nu); }

  KLRElem e(const Word& nu) const;
  KLRElem one(const RootVec& beta) const;
  KLRElem x(const RootVec& beta, int k) const;
  KLRElem tau(const RootVec& beta, int k) const;
  KLRElem x_e(const Word& nu, int k) const;
  KLRElem tau_e(const Word& nu, int k) const;
  KLRElem basis_term(const Word& nu, const Perm& w, Exps a = {}) const;
  KLRElem poly_e(const Poly& f, const Word& nu) const;  // f e(nu)

  Word target(const KLRTerm& t) const;
  int degree(const KLRTerm& t) const;
  int tau_degree(const Word& nu, const Perm& w) const;
  // Degree of a homogeneous element; nullopt if zero or inhomogeneous.
  std::optional<int> degree(const KLRElem& x) const;

  KLRElem mul(const KLRElem& a, const KLRElem& b) const;
  KLRElem mul(std::initializer_list<KLRElem> factors) const;
  KLRElem poly_left(const Poly& f, const KLRElem& y) const;
  // Normal form of tau_{w} e(nu) for an arbitrary word w.
  KLRElem tau_word(const Word& w, const Word& nu) const;
  // tau_{w_1} ... tau_{w_m} y
  KLRElem tau_left(const Word& w, const KLRElem& y) const;

  KLRElem sigma(const KLRElem& x) const;
  KLRElem phi(const KLRElem& x) const;
  // R(alpha) (x) R(beta) -> R(alpha + beta)
  KLRElem boxtimes(const KLRElem& a, const KLRElem& b) const;

  // Polynomial representation.
  PolyVector apply(const KLRElem& x, const PolyVector& v) const;
  PolyVector apply_e(const Word& nu, const PolyVector& v) const;
  PolyVector apply_x(int k, const PolyVector& v) const;
  PolyVector apply_tau(int k, const PolyVector& v) const;

  Poly q(int i, int j, int n, int u, int v) const { return q_poly(datum_, scalars_, i, j, n, u, v); }
  Poly qbar(int i, int i1, int i2, int n, int k) const { return qbar_poly(datum_, scalars_, i, i1, i2, n, k); }

 private:
  KLRElem left_mul_tau(int k, const KLRElem& y) const;
  KLRElem tau_times_basis(int k, int v, const Word& nu) const;
  Poly tau_on_poly(int k, const Word& cur, const Poly& f) const;

  CartanDatum datum_;
  ScalarsChoice scalars_;
  mutable std::shared_mutex mu_;
  mutable std::map<std::tuple<int, int, Word>, KLRElem> tau_basis_cache_;
  mutable std::map<std::pair<Word, Word>, KLRElem> word_cache_;
};

// Special elements of R(n alpha_i).
enum class SpecialKind { BPlus, BMinus, BPrimePlus, BPrimeMinus };
KLRElem tau_longest(const KLRAlgebra& r, int n, int i);
KLRElem bold_x(const KLRAlgebra& r, int n, int i);        // x_2 x_3^2 ... x_n^{n-1}
KLRElem bold_x_prime(const KLRAlgebra& r, int n, int i);  // x_1^{n-1} ... x_{n-1}
KLRElem special_idempotent(const KLRAlgebra& r, SpecialKind kind, int n, int i);

// Intertwiners phi_k and g_k of R(beta); k is 0-based (tau_k swaps strands k, k+1).
enum class IntertwinerKind { Phi, G };
KLRElem intertwiner(const KLRAlgebra& r, IntertwinerKind kind, int k, const RootVec& beta);

// A_{j,beta,Lambda} = x_1^level sum_nu e(j,nu) prod_{nu_k != j} Q_{j,nu_k}(x_1, x_{k+1}) in R(alpha_j + beta).
KLRElem a_element(const KLRAlgebra& r, int j, const RootVec& beta, int level);

}  // namespace klrbraid
