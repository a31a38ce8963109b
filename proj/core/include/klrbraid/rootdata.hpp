#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <initializer_list>
#include <vector>

namespace klrbraid {

// Raised when a configured size bound would be exceeded.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Word in the index set; letter k is the char with value k.
using Word = std::string;

Word make_word(std::initializer_list<int> letters);
Word make_word(const std::vector<int>& letters);
std::vector<int> word_letters(const Word& w);

// Element of the root lattice in simple-root coordinates.
class RootVec {
 public:
  RootVec() = default;
  explicit RootVec(int rank) : c_(rank, 0) {}
  explicit RootVec(std::vector<int> coords) : c_(std::move(coords)) {}
  RootVec(std::initializer_list<int> coords) : c_(coords) {}
  static RootVec simple(int rank, int i);
  static RootVec of_word(int rank, const Word& w);

  int size() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }
  const std::vector<int>& coords() const { return c_; }
  int height() const;
  bool is_nonneg() const;
  bool is_zero() const;

  RootVec& operator+=(const RootVec& o);
  RootVec& operator-=(const RootVec& o);
  friend RootVec operator+(RootVec a, const RootVec& b) { return a += b; }
  friend RootVec operator-(RootVec a, const RootVec& b) { return a -= b; }
  friend RootVec operator*(int k, RootVec a) {
    for (auto& x : a.c_) x *= k;
    return a;
  }
  friend auto operator<=>(const RootVec&, const RootVec&) = default;

  std::string to_string() const;

 private:
  std::vector<int> c_;
};

// Integral weight stored by its pairings <h_i, lambda>.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> pairings) : p_(std::move(pairings)) {}
  int size() const { return static_cast<int>(p_.size()); }
  int operator[](int i) const { return p_[i]; }
  const std::vector<int>& pairings() const { return p_; }
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<int> p_;
};

// Letter of a braid word: T_i or its inverse.
struct BraidLetter {
  int index = 0;
  bool inverse = false;
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};
using BraidWord = std::vector<BraidLetter>;

// Symmetrizable generalized Cartan matrix with symmetrizers d_i > 0 such that
// (alpha_i, alpha_j) = d_i a_ij is symmetric.
class CartanDatum {
 public:
  CartanDatum(std::vector<std::string> labels, std::vector<std::vector<int>> gcm,
              std::vector<int> symmetrizers);
  // Named rank <= 3 types: A1, A1xA1, A2, A3, B2, C2, G2.
  static CartanDatum from_type(const std::string& name);

  int rank() const { return static_cast<int>(gcm_.size()); }
  int a(int i, int j) const { return gcm_[i][j]; }
  int d(int i) const { return sym_[i]; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  int index_of(const std::string& label) const;
  const std::vector<std::vector<int>>& gcm() const { return gcm_; }

  // (alpha_i, alpha_j)
  int bilin_simple(int i, int j) const { return sym_[i] * gcm_[i][j]; }
  int bilin(const RootVec& b, const RootVec& c) const;
  // (alpha_i, b)
  int bilin_simple(int i, const RootVec& b) const;
  // <h_i, b>
  int pairing(int i, const RootVec& b) const;
  // Coxeter exponent m_ij; 0 encodes infinity.
  int coxeter_m(int i, int j) const;

  RootVec reflect(int i, const RootVec& b) const;
  Weight reflect(int i, const Weight& w) const;
  // w(b) for w = s_{i_1} ... s_{i_l}; the rightmost reflection acts first.
  RootVec weyl_act(const Word& w, const RootVec& b) const;
  Weight weyl_act(const Word& w, const Weight& lambda) const;
  Weight weight_of(const RootVec& b) const;  // pairings of a root-lattice element

  // nullopt if reduced; otherwise the first position p (0-based) such that
  // s_{i_1}...s_{i_{p-1}}(alpha_{i_p}) is negative.
  std::optional<int> non_reduced_witness(const Word& w) const;
  bool is_reduced(const Word& w) const { return !non_reduced_witness(w); }
  // All reduced words of the element represented by a reduced word, sorted.
  std::vector<Word> reduced_words(const Word& w, int length_bound = 8) const;
  bool is_finite_type() const;
  // Positive roots sorted by height, then coordinates; throws if the
  // count exceeds `bound`.
  std::vector<RootVec> positive_roots(int bound = 64) const;
  bool is_root(const RootVec& b) const;

  std::string word_to_string(const Word& w) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> gcm_;
  std::vector<int> sym_;
};

}  // namespace klrbraid
