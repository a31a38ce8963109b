#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klrbraid/klr.hpp"
#include "klrbraid/scalars.hpp"
#include "klrbraid/uqfull.hpp"
#include "klrbraid/uqminus.hpp"

namespace klrbraid {

constexpr int kMaxHilbertHeight = 6;

// Graded dimension of e(target) R(beta) e(source) as a rational function:
// sum over w with w(source) = target of q^{deg tau_w e(source)} prod_k 1/(1 - q^{(alpha_{target_k}, alpha_{target_k})}).
RationalQ hilbert_full(const KLRAlgebra& r, const Word& source, const Word& target);
// prod_k (1 - q^{(alpha_{nu_k}, alpha_{nu_k})})
LaurentPoly hilbert_denominator(const CartanDatum& c, const Word& nu);
// Degree-by-degree count of normal-form monomials of the block.
GradedSeries hilbert_count(const KLRAlgebra& r, const Word& source, const Word& target, int lower, int upper);

// qdim e(nu) M for every sequence nu of weight beta; missing words are zero.
struct CharVector {
  RootVec beta;
  std::map<Word, GradedSeries> series;
};

// qdim e(nu) R(beta) e(column) from the closed form, truncated to [lower, upper].
CharVector regular_character(const KLRAlgebra& r, const Word& column, int lower, int upper);

struct ChiSolveResult {
  bool ok = false;
  FWordElem chi;
  std::string residual;  // set when the system is inconsistent or a closed form is missing
};

// The unique u in U^-_{-beta} with (f_nu, u) = qdim e(nu) M for all nu.
ChiSolveResult chi_solve(const UqMinus& m, const CharVector& c);

// Finds the smallest divisor of the Hilbert series denominator whose product
// with the series is a polynomial vanishing on the top window of the truncation.
bool reconstruct(const CartanDatum& c, CharVector& v);

struct MjResult {
  int i = 0, j = 0, n = 0;
  int lower = 0, upper = 0;
  CharVector chars;
  bool reconstructed = false;
  FWordElem chi;
  FWordElem expected;        // ad_{f_i}^{(n)}(f_j)
  std::optional<int> shift;  // chi = q^shift expected
  bool exact = false;        // reconstructed and equal up to the shift
  bool truncated = false;    // coefficientwise agreement up to the shift through degree upper
  std::string detail;
};

constexpr int kMaxMjDegree = 24;

// M_j = q_i^{n(n-1)/2} R_i(n alpha_i + alpha_j)(b_{-,n} (x) e(j)), n = -a_{ij}, where
// R_i = R / <e(*, i)>; qdim per degree through D.
MjResult mj_char(const UqFull& u, const KLRAlgebra& r, int i, int j, int D);

struct ResCheck {
  int compared = 0;
  bool pass = false;
  std::string detail;
};

// qdim e(i, nu) R(beta) e(mu) = (f_nu, _ir(f_mu)) / (1 - q_i^2) for all mu, nu.
ResCheck res_check(const UqMinus& m, const KLRAlgebra& r, int i, const RootVec& beta);

}  // namespace klrbraid
