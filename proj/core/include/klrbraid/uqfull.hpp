#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "klrbraid/uqminus.hpp"

namespace klrbraid {

// Exponents of t_i = q^{d_i h_i}.
using Kappa = std::vector<int>;

// Basis monomial f_F t^kappa e_E of the triangular decomposition.
struct TriKey {
  Word f;
  Kappa kappa;
  Word e;
  friend auto operator<=>(const TriKey&, const TriKey&) = default;
};

class TriangularElem {
 public:
  TriangularElem() = default;
  static TriangularElem monomial(TriKey key, RationalQ c = RationalQ(1L));

  const std::map<TriKey, RationalQ>& terms() const { return terms_; }
  bool is_structurally_zero() const { return terms_.empty(); }
  void add_term(const TriKey& k, const RationalQ& c);

  TriangularElem& operator+=(const TriangularElem& o);
  TriangularElem& operator-=(const TriangularElem& o);
  TriangularElem& operator*=(const RationalQ& c);
  TriangularElem operator-() const;
  friend TriangularElem operator+(TriangularElem a, const TriangularElem& b) { return a += b; }
  friend TriangularElem operator-(TriangularElem a, const TriangularElem& b) { return a -= b; }
  friend TriangularElem operator*(TriangularElem a, const RationalQ& c) { return a *= c; }
  friend TriangularElem operator*(const RationalQ& c, TriangularElem a) { return a *= c; }
  friend bool operator==(const TriangularElem&, const TriangularElem&) = default;

 private:
  std::map<TriKey, RationalQ> terms_;
};

enum class Gen { E, F, T };

// U_q(g) with elements kept in triangular normal form.
class UqFull {
 public:
  explicit UqFull(CartanDatum datum, int height_bound = 8);

  const UqMinus& minus() const { return minus_; }
  const CartanDatum& datum() const { return minus_.datum(); }
  int rank() const { return datum().rank(); }

  TriangularElem one() const;
  TriangularElem e(int i) const;
  TriangularElem f(int i) const;
  TriangularElem t(int i, int power = 1) const;
  TriangularElem t(const Kappa& k) const;
  TriangularElem generator(Gen g, int i) const;
  TriangularElem from_f(const FWordElem& u) const;
  TriangularElem from_e(const FWordElem& u) const;  // e-words with the same letters

  TriangularElem mul(const TriangularElem& a, const TriangularElem& b) const;
  TriangularElem mul(std::initializer_list<TriangularElem> factors) const;
  bool is_zero(const TriangularElem& a) const;
  bool equals(const TriangularElem& a, const TriangularElem& b) const { return is_zero(a - b); }

  // T_i or T_i^{-1} on a generator.
  TriangularElem ti_gen(int i, Gen g, int j, bool inverse) const;
  // T_{w_1} ... T_{w_l}(u); the rightmost letter acts first.
  TriangularElem apply_braid(const BraidWord& w, const TriangularElem& u) const;
  TriangularElem apply_t(int i, bool inverse, const TriangularElem& u) const;

  // Anti-automorphism fixing e_i, f_i and inverting t_i.
  TriangularElem sigma(const TriangularElem& u) const;
  // Anti-automorphism swapping e_i and f_i, fixing t_i.
  TriangularElem phi(const TriangularElem& u) const;

  // u v_Lambda in the Verma module, as an element of U^-.
  FWordElem eval_highest_weight(const TriangularElem& u, const Weight& lambda) const;
  // The U^- part if u has only terms with kappa = 0 and no e-letters.
  std::optional<FWordElem> as_pure_f(const TriangularElem& u) const;

 private:
  using TermMap = std::map<TriKey, RationalQ>;
  // e_E f_F in normal form
  const TermMap& straighten(const Word& e, const Word& f) const;
  int kappa_pair(const Kappa& k, const Word& w) const;  // sum_i k_i (alpha_i, wt w)
  TriangularElem word_image(int i, bool inverse, bool e_side, const Word& w) const;

  UqMinus minus_;
  mutable std::shared_mutex mu_;
  mutable std::map<std::pair<Word, Word>, TermMap> se_cache_;
  mutable std::map<std::tuple<int, bool, bool, Word>, TriangularElem> image_cache_;
};

}  // namespace klrbraid
