#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "klrbraid/klr.hpp"
#include "klrbraid/linalg.hpp"
#include "klrbraid/scalars.hpp"

namespace klrbraid {

// Normal-form monomials of e(target) R(beta) e(source) in one degree.
std::vector<KLRTerm> nf_monomials(const KLRAlgebra& r, const Word& target, const Word& source, int degree);
// Smallest degree of a monomial in the block, or nullopt if the block is empty.
std::optional<int> block_min_degree(const KLRAlgebra& r, const Word& target, const Word& source);

// Linear independence of the normal-form monomials of a block, certified by
// a full-rank evaluation of the tau_w e(source) at a random point mod 2^61-1.
bool nf_independence_certificate(const KLRAlgebra& r, const Word& target, const Word& source,
                                 std::uint64_t seed);

// Assigns stable column indices to normal-form terms.
class TermIndex {
 public:
  int id(const KLRTerm& t);
  const KLRTerm& term(int id) const { return terms_.at(id); }
  SparseVec vec(const KLRElem& x);
  KLRElem elem(const SparseVec& v, int strands) const;

 private:
  std::map<KLRTerm, int> ids_;
  std::vector<KLRTerm> terms_;
};

// Left P-submodule P * span(generators) of R(beta), computed per block and
// degree. With the generators of TwoSidedGenerators it is the two-sided ideal.
class GradedIdeal {
 public:
  // Generators of exact degree d in the block (target, source).
  using GenFn = std::function<std::vector<KLRElem>(const Word& target, const Word& source, int d)>;
  GradedIdeal(const KLRAlgebra& r, GenFn gens);

  // Echelon basis of the degree-d piece of the block.
  const SparseEchelon& piece(const Word& target, const Word& source, int d);
  int dim(const Word& target, const Word& source, int d) { return static_cast<int>(piece(target, source, d).rank()); }
  // Membership of a homogeneous element lying in a single block.
  bool contains(const KLRElem& x);
  std::vector<KLRElem> basis(const Word& target, const Word& source, int d);
  TermIndex& index() { return index_; }

 private:
  const KLRAlgebra& r_;
  GenFn gens_;
  TermIndex index_;
  std::map<std::tuple<Word, Word, int>, SparseEchelon> pieces_;
};

// Generators tau_w g tau_v x^b e(source), b in the staircase, of the
// two-sided ideal generated by g.
GradedIdeal::GenFn two_sided_generators(const KLRAlgebra& r, const RootVec& beta, KLRElem g);
// e(pattern) summed over sequences with a given prefix or suffix.
KLRElem pattern_idempotent(const KLRAlgebra& r, const RootVec& beta, const Word& prefix, const Word& suffix);

struct KillPattern {
  Word prefix;  // e(prefix, *)
  Word suffix;  // e(*, suffix)
};

struct QuotientTable {
  RootVec beta;
  int lower = 0, upper = -1;
  // dims[(target, source)][d - lower]
  std::map<std::pair<Word, Word>, std::vector<long>> dims;
  long total(const Word& target, const Word& source) const;
};

constexpr int kMaxQuotientHeight = 4;
constexpr int kMaxQuotientDegree = 24;

QuotientTable truncated_quotient(const KLRAlgebra& r, const RootVec& beta, const std::vector<KillPattern>& kill,
                                 int lower, int upper);

struct NilHeckeResult {
  int l = 0, n = 0;
  bool zero = false;
  std::string certificate;
  int lower = 0, upper = -1;
  std::vector<long> dims;  // dims[d - lower]
  bool stabilized = false;
  long total() const;
};

// How the ideal of a nonzero quotient is computed per degree: echelon closure
// of the monomial span, or a truncated Groebner basis of the ideal as a left
// module over the polynomial ring.
enum class IdealMethod { Closure, Groebner };

// R(n alpha) / <x_1^l> for a single vertex.
NilHeckeResult cyclotomic_nilhecke(int l, int n, IdealMethod method = IdealMethod::Groebner);

// Checks that x_n and tau_{w_n} give inverse isomorphisms between b'_- R and b_+ R through max_degree.
struct ProjIsomReport {
  int n = 0;
  int checked = 0;
  bool pass = false;
  std::string detail;
};
ProjIsomReport projisom_check(const KLRAlgebra& r, int n, int i, int max_degree);

// tau_1 ... tau_n g_n ... g_1 e(j, nu) - A_{j,beta,0} e(j, nu) lies in the left ideal
// R(alpha_j + beta)(1 (x) R(beta) e(j, *) R(beta)) for every nu, checked per block
// and degree up to max_degree.
struct RCompositeReport {
  int parts = 0;
  bool pass = false;
  std::string detail;
};
RCompositeReport r_composite_check(const KLRAlgebra& r, int j, const RootVec& beta, int max_degree);

}  // namespace klrbraid
