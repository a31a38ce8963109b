#include "klrbraid/klr_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace klrbraid {

Poly Poly::constant(int nvars, const mpq_class& c) {
  Poly p(nvars);
  p.add_term(Exps(nvars, 0), c);
  return p;
}

Poly Poly::var(int nvars, int k) {
  Exps a(nvars, 0);
  a.at(k) = 1;
  return monomial(std::move(a));
}

Poly Poly::monomial(Exps a, const mpq_class& c) {
  Poly p(static_cast<int>(a.size()));
  p.add_term(a, c);
  return p;
}

void Poly::add_term(const Exps& a, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

Poly& Poly::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, x] : terms_) x *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [a, x] : r.terms_) x = -x;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(std::max(a.n_, b.n_));
  Exps e;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      e = ea;
      for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::times_monomial(const Exps& m) const {
  Poly r(n_);
  for (const auto& [a, c] : terms_) {
    Exps e = a;
    for (size_t k = 0; k < e.size(); ++k) e[k] += m[k];
    r.terms_.emplace_hint(r.terms_.end(), std::move(e), c);
  }
  return r;
}

Poly Poly::swapped(int k) const {
  Poly r(n_);
  for (const auto& [a, c] : terms_) {
    Exps e = a;
    std::swap(e[k], e[k + 1]);
    r.terms_.emplace(std::move(e), c);
  }
  return r;
}

Poly Poly::demazure(int k) const {
  Poly r(n_);
  for (const auto& [e, c] : terms_) {
    const int a = e[k], b = e[k + 1];
    if (a == b) continue;
    // (x_k^b x_{k+1}^a - x_k^a x_{k+1}^b) / (x_k - x_{k+1})
    const int lo = std::min(a, b), len = std::abs(a - b);
    const mpq_class sign = a > b ? mpq_class(-c) : mpq_class(c);
    Exps m = e;
    for (int t = 0; t < len; ++t) {
      m[k] = lo + t;
      m[k + 1] = lo + len - 1 - t;
      r.add_term(m, sign);
    }
  }
  return r;
}

Poly Poly::relabeled(const std::vector<int>& perm, int nvars) const {
  Poly r(nvars);
  for (const auto& [a, c] : terms_) {
    Exps e(nvars, 0);
    for (size_t p = 0; p < a.size(); ++p) e[perm[p]] += a[p];
    r.add_term(e, c);
  }
  return r;
}

Poly Poly::demazure_word(const Word& w) const {
  Poly r = *this;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = r.demazure(static_cast<int>(*it));
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [a, c] = *it;
    bool constant = true;
    for (int x : a) constant = constant && x == 0;
    mpq_class abs_c = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (constant || abs_c != 1) os << abs_c.get_str();
    bool need_star = !constant && abs_c != 1;
    for (size_t k = 0; k < a.size(); ++k) {
      if (a[k] == 0) continue;
      if (need_star) os << "*";
      os << "x" << k + 1;
      if (a[k] > 1) os << "^" << a[k];
      need_star = true;
    }
  }
  return os.str();
}

mpq_class ScalarsChoice::t_of(int i, int j) const {
  auto it = t.find({i, j});
  return it == t.end() ? mpq_class(1) : it->second;
}

mpq_class ScalarsChoice::s_of(int i, int j, int p, int q) const {
  auto it = s.find({i, j, p, q});
  return it == s.end() ? mpq_class(0) : it->second;
}

void ScalarsChoice::validate(const CartanDatum& c) const {
  const int r = c.rank();
  for (const auto& [ij, v] : t) {
    const auto [i, j] = ij;
    if (i < 0 || j < 0 || i >= r || j >= r) throw std::invalid_argument("scalars: t index out of range");
    if (v == 0) throw std::invalid_argument("scalars: t must be nonzero");
    if (i == j && v != 1) throw std::invalid_argument("scalars: t_{i,i} must be 1");
    if (i != j && c.a(i, j) == 0 && v != t_of(j, i))
      throw std::invalid_argument("scalars: t_{i,j} != t_{j,i} for orthogonal i, j");
  }
  for (const auto& [key, v] : s) {
    const auto [i, j, p, q] = key;
    if (i < 0 || j < 0 || i >= r || j >= r || i == j) throw std::invalid_argument("scalars: s index out of range");
    if (p <= 0 || q <= 0) throw std::invalid_argument("scalars: s exponents must be positive");
    if (p * c.bilin_simple(i, i) + q * c.bilin_simple(j, j) != -2 * c.bilin_simple(i, j))
      throw std::invalid_argument("scalars: s exponents do not give a homogeneous Q");
    if (v != s_of(j, i, q, p)) throw std::invalid_argument("scalars: s_{i,j}^{p,q} != s_{j,i}^{q,p}");
  }
}

namespace {

// Terms (p, r, c) of Q_{i,j}(u, v) = sum c u^p v^r.
std::vector<std::tuple<int, int, mpq_class>> q_terms(const CartanDatum& c, const ScalarsChoice& s, int i, int j) {
  std::vector<std::tuple<int, int, mpq_class>> out;
  if (i == j) return out;
  if (c.a(i, j) == 0) {
    out.emplace_back(0, 0, s.t_of(i, j));
    return out;
  }
  out.emplace_back(-c.a(i, j), 0, s.t_of(i, j));
  out.emplace_back(0, -c.a(j, i), s.t_of(j, i));
  for (const auto& [key, v] : s.s) {
    const auto [a, b, p, q] = key;
    if (a == i && b == j && v != 0) out.emplace_back(p, q, v);
  }
  return out;
}

}  // namespace

Poly q_poly(const CartanDatum& c, const ScalarsChoice& s, int i, int j, int n, int u, int v) {
  Poly r(n);
  for (const auto& [p, q, k] : q_terms(c, s, i, j)) {
    Exps e(n, 0);
    e[u] += p;
    e[v] += q;
    r.add_term(e, k);
  }
  return r;
}

Poly qbar_poly(const CartanDatum& c, const ScalarsChoice& s, int i, int i1, int i2, int n, int k) {
  Poly r(n);
  if (i != i2 || i == i1) return r;
  // (Q(u,u') - Q(u'',u')) / (u - u'') with u = x_k, u' = x_{k+1}, u'' = x_{k+2}
  for (const auto& [p, q, coef] : q_terms(c, s, i, i1)) {
    for (int a = 0; a + 1 <= p; ++a) {
      Exps e(n, 0);
      e[k] = a;
      e[k + 1] = q;
      e[k + 2] = p - 1 - a;
      r.add_term(e, coef);
    }
  }
  return r;
}

}  // namespace klrbraid
