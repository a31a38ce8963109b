#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "klrbraid/linalg.hpp"
#include "klrbraid/rootdata.hpp"
#include "klrbraid/scalars.hpp"

namespace klrbraid {

// Linear combination of words f_{w_1} ... f_{w_n} in the free algebra over Q(q).
class FWordElem {
 public:
  FWordElem() = default;
  static FWordElem word(Word w, RationalQ c = RationalQ(1L));
  static FWordElem one() { return word(Word{}); }

  bool is_structurally_zero() const { return terms_.empty(); }
  const std::map<Word, RationalQ>& terms() const { return terms_; }
  void add_term(const Word& w, const RationalQ& c);
  RationalQ coeff(const Word& w) const;

  FWordElem& operator+=(const FWordElem& o);
  FWordElem& operator-=(const FWordElem& o);
  FWordElem& operator*=(const RationalQ& c);
  FWordElem operator-() const;
  friend FWordElem operator+(FWordElem a, const FWordElem& b) { return a += b; }
  friend FWordElem operator-(FWordElem a, const FWordElem& b) { return a -= b; }
  friend FWordElem operator*(FWordElem a, const RationalQ& c) { return a *= c; }
  friend FWordElem operator*(const RationalQ& c, FWordElem a) { return a *= c; }
  // concatenation product
  friend FWordElem operator*(const FWordElem& a, const FWordElem& b);
  friend bool operator==(const FWordElem&, const FWordElem&) = default;

  // Weight of the terms, or nullopt if terms have different weights.
  std::optional<RootVec> homogeneous_weight(int rank) const;

 private:
  std::map<Word, RationalQ> terms_;
};

// Integer Laurent polynomials stored contiguously, one per word of a weight.
class PackedLaurentRow {
 public:
  void push(int low, const std::vector<long long>& coeffs);
  size_t size() const { return low_.size(); }
  bool is_zero(size_t k) const { return start_[k] == start_[k + 1]; }
  LaurentPoly get(size_t k) const;

 private:
  std::vector<int> low_;
  std::vector<size_t> start_{0};
  std::vector<long long> coeffs_;
};

// Words of one weight together with the data needed to decide equality in U^-.
struct WeightBasis {
  RootVec beta;
  std::vector<Word> words;  // lexicographic
  std::map<Word, int> index;
  // pivot_rows[a] holds r_{w_n} ... r_{w_1}(f_v) for w = words[pivots[a]] and every
  // word v; the bilinear form is gram_factor times this pairing.
  std::vector<PackedLaurentRow> pivot_rows;
  RationalQ gram_factor;
  std::vector<int> pivots;  // words whose monomials form a basis of U^-_{-beta}

  int dim() const { return static_cast<int>(pivots.size()); }
  RationalQ pivot_pairing(int a, int word) const { return RationalQ(pivot_rows[a].get(word)); }
  // Inverse of the pairing among pivot words, computed on first use.
  const Matrix<RationalQ>& pivot_inverse() const;

 private:
  mutable std::once_flag inverse_once_;
  mutable Matrix<RationalQ> pivot_inverse_;
};

std::vector<Word> words_of_weight(const RootVec& beta);

class UqMinus {
 public:
  explicit UqMinus(CartanDatum datum, int height_bound = 8);

  const CartanDatum& datum() const { return datum_; }
  int height_bound() const { return height_bound_; }

  FWordElem gen(int i) const { return FWordElem::word(make_word({i})); }
  FWordElem divided_power(int i, int n) const;
  FWordElem serre_element(int i, int j) const;

  // Skew derivations _ir and r_i.
  FWordElem ir_op(int i, const FWordElem& u) const;
  FWordElem ri_op(int i, const FWordElem& u) const;

  RationalQ gram(const FWordElem& a, const FWordElem& b) const;
  RationalQ gram_words(const Word& a, const Word& b) const;

  std::shared_ptr<const WeightBasis> basis(const RootVec& beta) const;
  // Coordinates of a homogeneous element in the pivot basis of its weight.
  std::vector<RationalQ> coords(const RootVec& beta, const FWordElem& u) const;
  FWordElem from_coords(const RootVec& beta, const std::vector<RationalQ>& c) const;
  // Canonical representative supported on pivot words.
  FWordElem reduce(const FWordElem& u) const;
  bool is_zero(const FWordElem& u) const;
  bool equal(const FWordElem& a, const FWordElem& b) const { return is_zero(a - b); }
  int dim(const RootVec& beta) const { return basis(beta)->dim(); }

  // q_i = q^{d_i}
  RationalQ qi_pow(int i, int k) const { return RationalQ::q_pow(datum_.d(i) * k); }

 private:
  std::map<RootVec, FWordElem> split_by_weight(const FWordElem& u) const;
  std::shared_ptr<WeightBasis> build_basis(const RootVec& beta) const;

  CartanDatum datum_;
  int height_bound_;
  mutable std::shared_mutex mu_;
  mutable std::map<RootVec, std::shared_ptr<const WeightBasis>> bases_;
};

}  // namespace klrbraid
