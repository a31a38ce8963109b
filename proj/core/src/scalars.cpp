#include "klrbraid/scalars.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klrbraid {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, mpq_class(c));
}

LaurentPoly::LaurentPoly(mpq_class c) {
  if (c != 0) terms_.emplace(0, std::move(c));
}

LaurentPoly LaurentPoly::q_pow(int k, mpq_class c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(k, std::move(c));
  return p;
}

int LaurentPoly::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

mpq_class LaurentPoly::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void LaurentPoly::add_term(int k, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly r;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) r.add_term(a + b, ca * cb);
  *this = std::move(r);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(-k, c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    mpq_class a = abs(c);
    if (k == 0 || a != 1) os << a;
    if (k != 0) os << "q";
    if (k != 0 && k != 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

// ------------------------------------------------------------------ RationalQ

RationalQ::RationalQ(long c) : num_(mpz_class(c)), den_(mpz_class(1)) {}

RationalQ::RationalQ(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}

RationalQ::RationalQ(const LaurentPoly& p) : den_(mpz_class(1)) {
  if (p.is_zero()) return;
  mpz_class l = 1;
  for (const auto& [k, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  int low = p.min_degree();
  int shift = low < 0 ? -low : 0;
  std::vector<mpz_class> coeffs(static_cast<size_t>(p.max_degree() + shift) + 1, mpz_class(0));
  for (const auto& [k, c] : p.terms()) {
    mpq_class scaled = c * l;
    coeffs[k + shift] = scaled.get_num();
  }
  num_ = IntPoly(std::move(coeffs));
  den_ = IntPoly::monomial(l, shift);
  normalize();
}

RationalQ::RationalQ(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalQ: zero denominator");
  normalize();
}

RationalQ RationalQ::q_pow(int k) {
  RationalQ r;
  if (k >= 0) {
    r.num_ = IntPoly::monomial(1, k);
  } else {
    r.num_ = IntPoly(mpz_class(1));
    r.den_ = IntPoly::monomial(1, -k);
  }
  return r;
}

void RationalQ::normalize() {
  if (num_.is_zero()) {
    den_ = IntPoly(mpz_class(1));
    return;
  }
  if (!den_.is_one()) {
    IntPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
  }
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

std::optional<LaurentPoly> RationalQ::to_laurent() const {
  if (!den_.is_monomial()) return std::nullopt;
  int k = den_.degree();
  const mpz_class& c = den_.lead();
  LaurentPoly p;
  const auto& nc = num_.coeffs();
  for (size_t i = 0; i < nc.size(); ++i)
    if (nc[i] != 0) p.add_term(static_cast<int>(i) - k, mpq_class(nc[i], c));
  return p;
}

std::optional<std::pair<mpq_class, int>> RationalQ::as_monomial() const {
  if (num_.is_zero() || !num_.is_monomial() || !den_.is_monomial()) return std::nullopt;
  mpq_class c(num_.lead(), den_.lead());
  c.canonicalize();
  return std::make_pair(c, num_.degree() - den_.degree());
}

RationalQ& RationalQ::operator+=(const RationalQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalQ& RationalQ::operator-=(const RationalQ& o) {
  if (o.is_zero()) return *this;
  return *this += -o;
}

RationalQ& RationalQ::operator*=(const RationalQ& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalQ();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  IntPoly g1 = gcd(num_, o.den_);
  IntPoly g2 = gcd(o.num_, den_);
  IntPoly a = g1.is_one() ? num_ : divexact(num_, g1);
  IntPoly d = g1.is_one() ? o.den_ : divexact(o.den_, g1);
  IntPoly c = g2.is_one() ? o.num_ : divexact(o.num_, g2);
  IntPoly b = g2.is_one() ? den_ : divexact(den_, g2);
  num_ = a * c;
  den_ = b * d;
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

RationalQ RationalQ::inverse() const {
  if (is_zero()) throw std::domain_error("RationalQ: inverse of zero");
  RationalQ r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.lead() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RationalQ& RationalQ::operator/=(const RationalQ& o) { return *this *= o.inverse(); }

RationalQ RationalQ::operator-() const {
  RationalQ r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalQ RationalQ::times_q_pow(int k) const {
  if (k == 0 || is_zero()) return *this;
  RationalQ r = *this;
  if (k > 0) {
    int cancel = std::min(k, r.den_.low_degree());
    r.den_ = r.den_.lowered(cancel);
    r.num_ = r.num_.shifted(k - cancel);
  } else {
    int cancel = std::min(-k, r.num_.low_degree());
    r.num_ = r.num_.lowered(cancel);
    r.den_ = r.den_.shifted(-k - cancel);
  }
  return r;
}

RationalQ RationalQ::bar() const {
  // p(q^-1) = q^-deg p * rev(p)
  auto reversed = [](const IntPoly& p) {
    std::vector<mpz_class> c(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPoly(std::move(c));
  };
  RationalQ r(reversed(num_), reversed(den_));
  return r.times_q_pow(den_.degree() - num_.degree());
}

std::string RationalQ::to_string() const {
  if (auto l = to_laurent()) return l->to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// -------------------------------------------------------------- GradedSeries

mpz_class GradedSeries::at(int k) const {
  if (k < lower || k > upper) return 0;
  return coeffs[k - lower];
}

GradedSeries series_truncate(const RationalQ& f, int lower, int upper) {
  GradedSeries s;
  s.lower = lower;
  s.upper = upper;
  s.closed_form = f;
  if (upper < lower) return s;
  s.coeffs.assign(static_cast<size_t>(upper - lower) + 1, mpz_class(0));
  if (f.is_zero()) return s;
  const IntPoly& den = f.den();
  int shift = den.low_degree();
  IntPoly d = den.lowered(shift);
  const IntPoly& n = f.num();
  const mpz_class& d0 = d.coeffs()[0];
  // f = q^-shift * n / d, d(0) != 0; expand n/d as a power series.
  int top = upper + shift;
  std::vector<mpq_class> a;
  a.reserve(top >= 0 ? static_cast<size_t>(top) + 1 : 0);
  for (int m = 0; m <= top; ++m) {
    mpq_class acc = n.coeff(m);
    for (int t = 1; t <= std::min(m, d.degree()); ++t) {
      const mpz_class& dt = d.coeffs()[t];
      if (dt != 0) acc -= a[m - t] * dt;
    }
    acc /= d0;
    a.push_back(acc);
  }
  for (int k = lower; k <= upper; ++k) {
    int m = k + shift;
    if (m < 0) continue;
    const mpq_class& c = a[m];
    if (c.get_den() != 1)
      throw std::domain_error("series_truncate: expansion has non-integral coefficients");
    s.coeffs[k - lower] = c.get_num();
  }
  return s;
}

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b, int upper) {
  GradedSeries s;
  s.lower = a.lower + b.lower;
  s.upper = std::min({upper, a.upper + b.lower, b.upper + a.lower});
  if (s.upper < s.lower) return s;
  s.coeffs.assign(static_cast<size_t>(s.upper - s.lower) + 1, mpz_class(0));
  for (int i = a.lower; i <= a.upper; ++i) {
    const mpz_class& ca = a.at(i);
    if (ca == 0) continue;
    for (int j = b.lower; i + j <= s.upper && j <= b.upper; ++j) s.coeffs[i + j - s.lower] += ca * b.at(j);
  }
  if (a.closed_form && b.closed_form) s.closed_form = *a.closed_form * *b.closed_form;
  return s;
}

// ----------------------------------------------------------- quantum numbers

LaurentPoly quantum_int(int n, int d) {
  if (n == 0) return {};
  if (n < 0) return -quantum_int(-n, d);
  LaurentPoly p;
  for (int k = 0; k < n; ++k) p.add_term(d * (n - 1 - 2 * k), 1);
  return p;
}

LaurentPoly quantum_factorial(int n, int d) {
  if (n < 0) throw std::invalid_argument("quantum_factorial: negative argument");
  LaurentPoly p(1L);
  for (int k = 2; k <= n; ++k) p *= quantum_int(k, d);
  return p;
}

LaurentPoly quantum_binomial(int m, int k, int d) {
  if (k < 0) return {};
  RationalQ r(1L);
  for (int s = 1; s <= k; ++s) {
    r *= RationalQ(quantum_int(m - s + 1, d));
    r /= RationalQ(quantum_int(s, d));
  }
  auto l = r.to_laurent();
  if (!l) throw std::logic_error("quantum_binomial: result is not a Laurent polynomial");
  return *l;
}

}  // namespace klrbraid
