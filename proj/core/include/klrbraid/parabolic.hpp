#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "klrbraid/uqfull.hpp"

namespace klrbraid {

// Weight space V_J(Lambda)_{Lambda - beta} as a quotient of U^-_{-beta}.
struct VJSlice {
  RootVec beta;
  std::vector<Word> pivot_words;   // basis: classes of f_w v_Lambda
  std::vector<int> basis_columns;  // positions of pivot_words among the U^- pivots
  Matrix<RationalQ> relations;     // rref rows in U^- pivot coordinates
  std::vector<int> relation_pivots;
  int dim() const { return static_cast<int>(pivot_words.size()); }
};

struct VJVector {
  RootVec beta;
  std::vector<RationalQ> coords;
  bool is_zero() const;
};

// Generators acting on V_J(Lambda): f_i, e_j for j in J, and the q-boson
// operators e'_i for i not in J.
struct VJGen {
  enum class Kind { F, E, Boson } kind;
  int index;
};

class ParabolicModule {
 public:
  ParabolicModule(const UqFull& u, std::vector<bool> in_j, Weight lambda);

  const UqFull& algebra() const { return u_; }
  const Weight& lambda() const { return lambda_; }
  bool in_j(int i) const { return in_j_[i]; }

  std::shared_ptr<const VJSlice> slice(const RootVec& beta) const;
  int dim(const RootVec& beta) const { return slice(beta)->dim(); }
  VJVector highest_weight_vector() const;
  VJVector basis_vector(const RootVec& beta, int k) const;
  VJVector project(const RootVec& beta, const FWordElem& x) const;
  FWordElem lift(const VJVector& v) const;

  VJVector act(VJGen g, const VJVector& v) const;
  // e for j in J, the q-boson operator otherwise
  VJVector raise(int i, const VJVector& v) const;
  // adjoint of f_i under the form: q^{-(alpha_i, beta)} e_i into slice beta for i in J,
  // the q-boson operator otherwise
  VJVector form_adjoint(int i, const VJVector& y) const;
  RationalQ form(const VJVector& x, const VJVector& y) const;
  Matrix<RationalQ> gram_matrix(const RootVec& beta) const;

 private:
  std::shared_ptr<VJSlice> build(const RootVec& beta) const;

  const UqFull& u_;
  std::vector<bool> in_j_;
  Weight lambda_;
  mutable std::shared_mutex mu_;
  mutable std::map<RootVec, std::shared_ptr<const VJSlice>> slices_;
};

// dim V(Lambda)_{Lambda - beta} by Freudenthal's formula (finite type only).
long weyl_dim_oracle(const CartanDatum& c, const Weight& lambda, const RootVec& beta);

struct DimRow {
  RootVec beta;
  int dim = 0;
  std::optional<long> oracle;
  bool exceeded = false;  // the slice was beyond the computation bounds
};
std::string dims_to_csv(const std::vector<DimRow>& rows);

}  // namespace klrbraid
