#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "klrbraid/uqfull.hpp"

namespace klrbraid {

// ad_{f_i}, ad_{e_i} and their right-handed versions ad*.
enum class AdVariant { F, E, StarF, StarE };

TriangularElem ad(const UqFull& u, int i, AdVariant v, const TriangularElem& x);
// ad^n / [n]_i!
TriangularElem ad_divided(const UqFull& u, int i, AdVariant v, int n, const TriangularElem& x);

// T_i^{-1}(f_j), or T_i(f_j) when primed; both lie in U^-.
FWordElem uj_elem(const UqFull& u, int i, int j, bool primed);

bool in_Ui(const UqMinus& m, int i, const FWordElem& x);   // Ker r_i
bool in_iU(const UqMinus& m, int i, const FWordElem& x);   // Ker _ir

// dim of Ker r_i on U^-_{-beta}
int kernel_dim(const UqMinus& m, int i, const RootVec& beta);

// T_{w}(f_i) for a reduced word w with w(alpha_i) > 0, reduced to the pivot
// basis; multiplied by (1 - q_i^2) when normalized.
FWordElem delta_char(const UqFull& u, const Word& w, int i, bool normalized);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct BimoduleReport {
  int samples = 0;
  std::vector<CheckResult> checks;
  bool pass() const;
};

// Random elements of _iU checked against the bimodule intertwining identities.
BimoduleReport verify_bimodule(const UqFull& u, int i, int height_bound, int samples, std::uint64_t seed);

struct OrientationReport {
  int i = 0, j = 0, n = 0;
  bool ti_is_ad = false;          // T_i(f_j) = ad_{f_i}^{(n)}(f_j)
  bool ti_inv_is_ad_star = false; // T_i^{-1}(f_j) = (ad*_{f_i})^{(n)}(f_j)
  bool ti_in_Ui = false;
  bool ti_inv_in_iU = false;
  bool sigma_mirror = false;      // sigma(T_i(f_j)) = T_i^{-1}(f_j)
  bool pass() const {
    return ti_is_ad && ti_inv_is_ad_star && ti_in_Ui && ti_inv_in_iU && sigma_mirror;
  }
};

OrientationReport orientation(const UqFull& u, int i, int j);

}  // namespace klrbraid
