#include "klrbraid/uqfull.hpp"

#include <algorithm>

namespace klrbraid {

// -------------------------------------------------------------- TriangularElem

TriangularElem TriangularElem::monomial(TriKey key, RationalQ c) {
  TriangularElem r;
  r.add_term(key, c);
  return r;
}

void TriangularElem::add_term(const TriKey& k, const RationalQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TriangularElem& TriangularElem::operator+=(const TriangularElem& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TriangularElem& TriangularElem::operator-=(const TriangularElem& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

TriangularElem& TriangularElem::operator*=(const RationalQ& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

TriangularElem TriangularElem::operator-() const {
  TriangularElem r = *this;
  for (auto& [k, x] : r.terms_) x = -x;
  return r;
}

// ---------------------------------------------------------------------- UqFull

UqFull::UqFull(CartanDatum datum, int height_bound) : minus_(std::move(datum), height_bound) {}

TriangularElem UqFull::one() const { return TriangularElem::monomial({Word{}, Kappa(rank(), 0), Word{}}); }

TriangularElem UqFull::e(int i) const {
  return TriangularElem::monomial({Word{}, Kappa(rank(), 0), make_word({i})});
}

TriangularElem UqFull::f(int i) const {
  return TriangularElem::monomial({make_word({i}), Kappa(rank(), 0), Word{}});
}

TriangularElem UqFull::t(int i, int power) const {
  Kappa k(rank(), 0);
  k[i] = power;
  return t(k);
}

TriangularElem UqFull::t(const Kappa& k) const { return TriangularElem::monomial({Word{}, k, Word{}}); }

TriangularElem UqFull::generator(Gen g, int i) const {
  switch (g) {
    case Gen::E: return e(i);
    case Gen::F: return f(i);
    case Gen::T: return t(i);
  }
  return {};
}

TriangularElem UqFull::from_f(const FWordElem& u) const {
  TriangularElem r;
  for (const auto& [w, c] : u.terms()) r.add_term({w, Kappa(rank(), 0), Word{}}, c);
  return r;
}

TriangularElem UqFull::from_e(const FWordElem& u) const {
  TriangularElem r;
  for (const auto& [w, c] : u.terms()) r.add_term({Word{}, Kappa(rank(), 0), w}, c);
  return r;
}

int UqFull::kappa_pair(const Kappa& k, const Word& w) const {
  int s = 0;
  for (char l : w)
    for (int i = 0; i < rank(); ++i)
      if (k[i]) s += k[i] * datum().bilin_simple(i, static_cast<int>(l));
  return s;
}

const UqFull::TermMap& UqFull::straighten(const Word& e, const Word& f) const {
  auto key = std::make_pair(e, f);
  {
    std::shared_lock lock(mu_);
    if (auto it = se_cache_.find(key); it != se_cache_.end()) return it->second;
  }
  TermMap out;
  auto add = [&](TermMap& m, const TriKey& k, const RationalQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  };
  const Kappa zero(rank(), 0);
  if (e.empty() || f.empty()) {
    out.emplace(TriKey{f, zero, e}, RationalQ(1L));
  } else {
    const int a = e.back();
    const Word rest = e.substr(0, e.size() - 1);
    const int da = datum().d(a);
    const RationalQ inv_denom = (RationalQ::q_pow(da) - RationalQ::q_pow(-da)).inverse();
    // e_a f_F = f_F e_a + sum_p f_{<p} f_{>p} (q^{-s} t_a - q^{s} t_a^{-1})/(q_a - q_a^{-1}),
    // s = (alpha_a, wt f_{>p})
    std::vector<std::pair<TriKey, RationalQ>> single;
    single.emplace_back(TriKey{f, zero, make_word({a})}, RationalQ(1L));
    int s = 0;
    for (size_t p = f.size(); p-- > 0;) {
      int l = f[p];
      if (l == a) {
        Word g = f;
        g.erase(p, 1);
        Kappa kp = zero, km = zero;
        kp[a] = 1;
        km[a] = -1;
        single.emplace_back(TriKey{g, kp, Word{}}, inv_denom.times_q_pow(-s));
        single.emplace_back(TriKey{g, km, Word{}}, -inv_denom.times_q_pow(s));
      }
      s += datum().bilin_simple(a, l);
    }
    for (const auto& [k2, c2] : single) {
      // e_rest f_{k2.f} t^{k2.kappa} e_{k2.e}
      const TermMap& inner = straighten(rest, k2.f);
      for (const auto& [k3, c3] : inner) {
        Kappa kk = k3.kappa;
        for (int i = 0; i < rank(); ++i) kk[i] += k2.kappa[i];
        RationalQ c = (c2 * c3).times_q_pow(-kappa_pair(k2.kappa, k3.e));
        add(out, TriKey{k3.f, kk, k3.e + k2.e}, c);
      }
    }
  }
  std::unique_lock lock(mu_);
  auto [it, inserted] = se_cache_.try_emplace(std::move(key), std::move(out));
  return it->second;
}

TriangularElem UqFull::mul(const TriangularElem& a, const TriangularElem& b) const {
  TriangularElem r;
  for (const auto& [k1, c1] : a.terms())
    for (const auto& [k2, c2] : b.terms()) {
      const TermMap& se = straighten(k1.e, k2.f);
      RationalQ c12 = c1 * c2;
      for (const auto& [k3, c3] : se) {
        Kappa kk = k1.kappa;
        for (int i = 0; i < rank(); ++i) kk[i] += k3.kappa[i] + k2.kappa[i];
        int shift = -kappa_pair(k1.kappa, k3.f) - kappa_pair(k2.kappa, k3.e);
        r.add_term(TriKey{k1.f + k3.f, std::move(kk), k3.e + k2.e}, (c12 * c3).times_q_pow(shift));
      }
    }
  return r;
}

TriangularElem UqFull::mul(std::initializer_list<TriangularElem> factors) const {
  TriangularElem r = one();
  for (const auto& x : factors) r = mul(r, x);
  return r;
}

bool UqFull::is_zero(const TriangularElem& a) const {
  // group by (kappa, wt f, wt e); decide with the tensor of pairing vectors
  struct Group {
    RootVec wf, we;
    std::vector<std::pair<TriKey, RationalQ>> terms;
  };
  std::map<std::tuple<Kappa, RootVec, RootVec>, Group> groups;
  for (const auto& [k, c] : a.terms()) {
    RootVec wf = RootVec::of_word(rank(), k.f), we = RootVec::of_word(rank(), k.e);
    auto& g = groups[{k.kappa, wf, we}];
    g.wf = wf;
    g.we = we;
    g.terms.emplace_back(k, c);
  }
  for (const auto& [key, g] : groups) {
    auto bf = minus_.basis(g.wf);
    auto be = minus_.basis(g.we);
    const size_t nf = bf->pivots.size(), ne = be->pivots.size();
    Matrix<RationalQ> m(nf, std::vector<RationalQ>(ne));
    for (const auto& [k, c] : g.terms) {
      int jf = bf->index.at(k.f), je = be->index.at(k.e);
      for (size_t x = 0; x < nf; ++x) {
        if (bf->pivot_rows[x].is_zero(jf)) continue;
        RationalQ cpf = c * bf->pivot_pairing(static_cast<int>(x), jf);
        for (size_t y = 0; y < ne; ++y)
          if (!be->pivot_rows[y].is_zero(je)) m[x][y] += cpf * be->pivot_pairing(static_cast<int>(y), je);
      }
    }
    for (const auto& row : m)
      for (const auto& v : row)
        if (!v.is_zero()) return false;
  }
  return true;
}

TriangularElem UqFull::ti_gen(int i, Gen g, int j, bool inverse) const {
  const CartanDatum& c = datum();
  if (g == Gen::T) {
    Kappa k(rank(), 0);
    k[j] += 1;
    k[i] -= c.a(i, j);
    return t(k);
  }
  const int di = c.d(i);
  if (i == j) {
    if (g == Gen::E) return inverse ? -mul(f(i), t(i)) : -mul(t(i, -1), f(i));
    return inverse ? -mul(t(i, -1), e(i)) : -mul(e(i), t(i));
  }
  const int n = -c.a(i, j);
  TriangularElem sum;
  for (int r = 0; r <= n; ++r) {
    const int s = n - r;
    RationalQ sign = r % 2 ? RationalQ(-1L) : RationalQ(1L);
    if (g == Gen::E) {
      FWordElem left = minus_.divided_power(i, inverse ? s : r);
      FWordElem right = minus_.divided_power(i, inverse ? r : s);
      FWordElem prod = left * minus_.gen(j) * right;
      sum += from_e(prod) * (sign * RationalQ::q_pow(-di * r));
    } else {
      FWordElem left = minus_.divided_power(i, inverse ? r : s);
      FWordElem right = minus_.divided_power(i, inverse ? s : r);
      FWordElem prod = left * minus_.gen(j) * right;
      sum += from_f(prod) * (sign * RationalQ::q_pow(di * r));
    }
  }
  return sum;
}

TriangularElem UqFull::word_image(int i, bool inverse, bool e_side, const Word& w) const {
  if (w.empty()) return one();
  auto key = std::make_tuple(i, inverse, e_side, w);
  {
    std::shared_lock lock(mu_);
    if (auto it = image_cache_.find(key); it != image_cache_.end()) return it->second;
  }
  TriangularElem head = word_image(i, inverse, e_side, w.substr(0, w.size() - 1));
  TriangularElem last = ti_gen(i, e_side ? Gen::E : Gen::F, w.back(), inverse);
  TriangularElem r = mul(head, last);
  std::unique_lock lock(mu_);
  image_cache_.try_emplace(key, r);
  return r;
}

TriangularElem UqFull::apply_t(int i, bool inverse, const TriangularElem& u) const {
  TriangularElem r;
  for (const auto& [k, c] : u.terms()) {
    Kappa kk = k.kappa;
    int shift = 0;
    for (int j = 0; j < rank(); ++j) shift -= k.kappa[j] * datum().a(i, j);
    kk[i] += shift;
    TriangularElem img = mul(mul(word_image(i, inverse, false, k.f), t(kk)), word_image(i, inverse, true, k.e));
    r += img * c;
  }
  return r;
}

TriangularElem UqFull::apply_braid(const BraidWord& w, const TriangularElem& u) const {
  TriangularElem r = u;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = apply_t(it->index, it->inverse, r);
  return r;
}

TriangularElem UqFull::sigma(const TriangularElem& u) const {
  TriangularElem r;
  for (const auto& [k, c] : u.terms()) {
    Word re(k.e.rbegin(), k.e.rend()), rf(k.f.rbegin(), k.f.rend());
    Kappa neg = k.kappa;
    for (auto& x : neg) x = -x;
    TriangularElem left = TriangularElem::monomial({Word{}, Kappa(rank(), 0), re});
    TriangularElem right = TriangularElem::monomial({rf, Kappa(rank(), 0), Word{}});
    r += mul(mul(left, t(neg)), right) * c;
  }
  return r;
}

TriangularElem UqFull::phi(const TriangularElem& u) const {
  TriangularElem r;
  for (const auto& [k, c] : u.terms()) {
    Word re(k.e.rbegin(), k.e.rend()), rf(k.f.rbegin(), k.f.rend());
    r.add_term(TriKey{re, k.kappa, rf}, c);
  }
  return r;
}

FWordElem UqFull::eval_highest_weight(const TriangularElem& u, const Weight& lambda) const {
  FWordElem r;
  for (const auto& [k, c] : u.terms()) {
    if (!k.e.empty()) continue;
    int s = 0;
    for (int i = 0; i < rank(); ++i) s += k.kappa[i] * datum().d(i) * lambda[i];
    r.add_term(k.f, c.times_q_pow(s));
  }
  return r;
}

std::optional<FWordElem> UqFull::as_pure_f(const TriangularElem& u) const {
  FWordElem r;
  for (const auto& [k, c] : u.terms()) {
    if (!k.e.empty() || std::any_of(k.kappa.begin(), k.kappa.end(), [](int x) { return x != 0; }))
      return std::nullopt;
    r.add_term(k.f, c);
  }
  return r;
}

}  // namespace klrbraid
