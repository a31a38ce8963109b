#pragma once

// Independent reference computations used to derive expected values in tests.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "klrbraid/rootdata.hpp"
#include "klrbraid/scalars.hpp"

namespace oracle {

// Value of [n]_{q^d} at a rational point via (x^n - x^-n)/(x - x^-1), x = q^d.
mpq_class quantum_int_at(int n, int d, const mpq_class& q);
mpq_class eval_at(const klrbraid::LaurentPoly& p, const mpq_class& q);

// Power series coefficients of num/den (both given as q-exponent -> integer
// maps, den with nonzero constant term), by solving den * s = num term by term
// from the lowest degree: coefficient list for q^0 .. q^top.
std::vector<mpq_class> power_series(const std::map<int, long>& num, const std::map<int, long>& den,
                                    int top);

// Bilinear form on words via the recursion (f_i x, y) = (x, _ir y)/(1 - q_i^2),
// with Laurent polynomials kept as exponent maps and the 1/(1-q_i^2) factors
// returned separately as an exponent count per index.
struct FormValue {
  std::map<int, mpq_class> laurent;  // numerator
  std::vector<int> factor_powers;    // power of 1/(1-q^{2 d_i}) per index
};
FormValue word_form(const klrbraid::CartanDatum& c, const std::vector<int>& x, const std::vector<int>& y);

// Number of ways to write beta as a sum of positive roots of a finite type.
long kostant_partitions(const klrbraid::CartanDatum& c, const std::vector<int>& beta);

// Weyl dimension formula prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha).
mpz_class weyl_dimension(const klrbraid::CartanDatum& c, const std::vector<int>& lambda);

mpz_class binomial(long n, long k);
mpz_class factorial(long n);

}  // namespace oracle
