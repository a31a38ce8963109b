#include "klrbraid/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klrbraid {

IntPoly::IntPoly(mpz_class c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(mpz_class c, int exp) {
  if (exp < 0) throw std::invalid_argument("IntPoly::monomial: negative exponent");
  IntPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<size_t>(exp) + 1, mpz_class(0));
  p.coeffs_[exp] = std::move(c);
  return p;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int IntPoly::low_degree() const {
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return static_cast<int>(k);
  return 0;
}

bool IntPoly::is_monomial() const {
  return !coeffs_.empty() && low_degree() == degree();
}

mpz_class IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpz_class(0));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpz_class(0));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  r.coeffs_.assign(static_cast<size_t>(k), mpz_class(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

IntPoly IntPoly::lowered(int k) const {
  if (is_zero() || k == 0) return *this;
  if (low_degree() < k) throw std::domain_error("IntPoly::lowered: not divisible by q^k");
  IntPoly r;
  r.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
  return r;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class c = content();
  if (lead() < 0) c = -c;
  return divexact(*this, c);
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    mpz_class a = abs(c);
    if (k == 0 || a != 1) os << a;
    if (k > 0) os << "q";
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

IntPoly divexact(const IntPoly& a, const mpz_class& c) {
  if (c == 0) throw std::domain_error("divexact: division by zero");
  std::vector<mpz_class> out(a.coeffs());
  for (auto& x : out) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw std::domain_error("divexact: integer does not divide polynomial");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("divexact: division by zero polynomial");
  if (a.is_zero()) return {};
  if (b.is_constant()) return divexact(a, b.lead());
  int db = b.degree();
  if (a.degree() < db) throw std::domain_error("divexact: degree too small");
  std::vector<mpz_class> rem(a.coeffs());
  std::vector<mpz_class> quo(static_cast<size_t>(a.degree() - db) + 1, mpz_class(0));
  const mpz_class& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lb.get_mpz_t()))
      throw std::domain_error("divexact: inexact division");
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), rem[k].get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      const mpz_class& bj = b.coeffs()[j];
      if (bj != 0) mpz_submul(rem[k - db + j].get_mpz_t(), t.get_mpz_t(), bj.get_mpz_t());
    }
    quo[k - db] = std::move(t);
  }
  for (int k = 0; k < db; ++k)
    if (rem[k] != 0) throw std::domain_error("divexact: nonzero remainder");
  return IntPoly(std::move(quo));
}

namespace {

// Pseudo-remainder of a by b.
IntPoly prem(IntPoly a, const IntPoly& b) {
  int db = b.degree();
  const mpz_class& lb = b.lead();
  while (!a.is_zero() && a.degree() >= db) {
    mpz_class la = a.lead();
    int shift = a.degree() - db;
    a *= lb;
    IntPoly t = b.shifted(shift);
    t *= la;
    a -= t;
  }
  return a;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.is_zero() ? IntPoly{} : (b.lead() < 0 ? -b : b);
  if (b.is_zero()) return a.lead() < 0 ? -a : a;
  int low = std::min(a.low_degree(), b.low_degree());
  IntPoly x = a.lowered(a.low_degree());
  IntPoly y = b.lowered(b.low_degree());
  mpz_class cg;
  mpz_class ca = x.content(), cb = y.content();
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  x = x.primitive_part();
  y = y.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero() && y.degree() > 0) {
    IntPoly r = prem(x, y);
    x = std::move(y);
    y = r.is_zero() ? IntPoly{} : r.primitive_part();
  }
  IntPoly g = y.is_zero() ? x : IntPoly(mpz_class(1));
  g = g.primitive_part();
  g *= cg;
  return g.shifted(low);
}

}  // namespace klrbraid
