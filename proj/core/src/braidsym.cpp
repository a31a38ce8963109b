#include "klrbraid/braidsym.hpp"

#include <algorithm>
#include <random>

namespace klrbraid {

TriangularElem ad(const UqFull& u, int i, AdVariant v, const TriangularElem& x) {
  switch (v) {
    case AdVariant::F:
      return u.mul(u.f(i), x) - u.mul({u.t(i), x, u.t(i, -1), u.f(i)});
    case AdVariant::E:
      return u.mul({u.e(i), x, u.t(i)}) - u.mul({x, u.e(i), u.t(i)});
    case AdVariant::StarF:
      return u.mul(x, u.f(i)) - u.mul({u.f(i), u.t(i), x, u.t(i, -1)});
    case AdVariant::StarE:
      return u.mul({u.t(i, -1), x, u.e(i)}) - u.mul({u.t(i, -1), u.e(i), x});
  }
  return {};
}

TriangularElem ad_divided(const UqFull& u, int i, AdVariant v, int n, const TriangularElem& x) {
  TriangularElem r = x;
  for (int k = 0; k < n; ++k) r = ad(u, i, v, r);
  return r * RationalQ(quantum_factorial(n, u.datum().d(i))).inverse();
}

FWordElem uj_elem(const UqFull& u, int i, int j, bool primed) {
  if (i == j) throw std::invalid_argument("uj_elem: i == j");
  auto pure = u.as_pure_f(u.ti_gen(i, Gen::F, j, !primed));
  if (!pure) throw std::logic_error("uj_elem: image is not in U^-");
  return *pure;
}

bool in_Ui(const UqMinus& m, int i, const FWordElem& x) { return m.is_zero(m.ri_op(i, x)); }
bool in_iU(const UqMinus& m, int i, const FWordElem& x) { return m.is_zero(m.ir_op(i, x)); }

int kernel_dim(const UqMinus& m, int i, const RootVec& beta) {
  const int d = m.dim(beta);
  if (beta[i] == 0) return d;
  RootVec target = beta - RootVec::simple(beta.size(), i);
  auto wb = m.basis(beta);
  Matrix<RationalQ> rows;
  for (int p : wb->pivots) rows.push_back(m.coords(target, m.ri_op(i, FWordElem::word(wb->words[p]))));
  return d - (rows.empty() || rows[0].empty() ? 0 : rank(rows));
}

FWordElem delta_char(const UqFull& u, const Word& w, int i, bool normalized) {
  const CartanDatum& c = u.datum();
  if (!c.is_reduced(w)) throw std::invalid_argument("delta_char: word is not reduced");
  RootVec img = c.weyl_act(w, RootVec::simple(c.rank(), i));
  if (!img.is_nonneg()) throw std::invalid_argument("delta_char: w(alpha_i) is not positive");
  BraidWord bw;
  for (char l : w) bw.push_back({static_cast<int>(l), false});
  auto pure = u.as_pure_f(u.apply_braid(bw, u.f(i)));
  if (!pure) throw std::logic_error("delta_char: T_w(f_i) is not in U^-");
  FWordElem r = u.minus().reduce(*pure);
  if (normalized) r *= RationalQ(1L) - RationalQ::q_pow(2 * c.d(i));
  return r;
}

bool BimoduleReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

BimoduleReport verify_bimodule(const UqFull& u, int i, int height_bound, int samples, std::uint64_t seed) {
  const CartanDatum& c = u.datum();
  const UqMinus& m = u.minus();
  std::mt19937_64 rng(seed);
  BimoduleReport rep;
  BraidWord ti{{i, false}};
  auto height = [&](const TriangularElem& x) {
    int h = 0;
    for (const auto& [k, cf] : x.terms()) h = std::max(h, static_cast<int>(k.f.size()));
    return h;
  };
  auto record = [&](std::string name, bool ok) {
    for (auto& ch : rep.checks)
      if (ch.name == name) {
        ch.pass = ch.pass && ok;
        return;
      }
    rep.checks.push_back({std::move(name), ok, ""});
  };

  for (int s = 0; s < samples; ++s) {
    // random walk from an element of _iU under the right action
    TriangularElem x = u.one();
    int steps = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, height_bound)));
    for (int k = 0; k < steps; ++k) {
      int choice = static_cast<int>(rng() % 10);
      if (choice < 5 || height(x) == 0) {
        int j = static_cast<int>(rng() % c.rank());
        if (j == i) j = (j + 1) % c.rank();
        if (c.rank() == 1 || height(x) + 1 > height_bound) continue;
        x = u.mul(x, u.f(j));
      } else if (choice < 8) {
        if (height(x) + 1 > height_bound) continue;
        x = ad(u, i, AdVariant::StarF, x);
      } else {
        x = ad(u, i, AdVariant::StarE, x);
      }
    }
    auto xf = u.as_pure_f(x);
    if (!xf) {
      record("sample stays in U^-", false);
      continue;
    }
    ++rep.samples;
    record("sample lies in _iU", in_iU(m, i, *xf));
    TriangularElem tx = u.apply_braid(ti, x);
    auto txf = u.as_pure_f(tx);
    record("T_i maps _iU into U_i", txf && in_Ui(m, i, *txf));
    // right action of f_i and e_i on _iU corresponds to ad_{e_i}, ad_{f_i} on U_i
    record("T_i(u.f_i) = ad_{e_i}(T_i u)",
           u.equals(u.apply_braid(ti, ad(u, i, AdVariant::StarF, x)), ad(u, i, AdVariant::E, tx)));
    record("T_i(u.e_i) = ad_{f_i}(T_i u)",
           u.equals(u.apply_braid(ti, ad(u, i, AdVariant::StarE, x)), ad(u, i, AdVariant::F, tx)));
    for (int j = 0; j < c.rank(); ++j) {
      if (j == i) continue;
      TriangularElem uj = u.from_f(uj_elem(u, i, j, true));
      record("T_i(u f_j) = T_i(u) T_i(f_j)", u.equals(u.apply_braid(ti, u.mul(x, u.f(j))), u.mul(tx, uj)));
    }
    // ad_{f_i} T_i = T_i ad*_{e_i} and ad_{e_i} T_i = T_i ad*_{f_i} on the full algebra
    TriangularElem y = u.mul(x, u.e(static_cast<int>(rng() % c.rank())));
    TriangularElem ty = u.apply_braid(ti, y);
    record("ad_{f_i} T_i = T_i ad*_{e_i}",
           u.equals(ad(u, i, AdVariant::F, ty), u.apply_braid(ti, ad(u, i, AdVariant::StarE, y))));
    record("ad_{e_i} T_i = T_i ad*_{f_i}",
           u.equals(ad(u, i, AdVariant::E, ty), u.apply_braid(ti, ad(u, i, AdVariant::StarF, y))));
  }
  return rep;
}

OrientationReport orientation(const UqFull& u, int i, int j) {
  OrientationReport r;
  r.i = i;
  r.j = j;
  r.n = -u.datum().a(i, j);
  const UqMinus& m = u.minus();
  FWordElem ti = uj_elem(u, i, j, true);
  FWordElem ti_inv = uj_elem(u, i, j, false);
  auto adf = u.as_pure_f(ad_divided(u, i, AdVariant::F, r.n, u.f(j)));
  auto ads = u.as_pure_f(ad_divided(u, i, AdVariant::StarF, r.n, u.f(j)));
  r.ti_is_ad = adf && m.equal(*adf, ti);
  r.ti_inv_is_ad_star = ads && m.equal(*ads, ti_inv);
  r.ti_in_Ui = in_Ui(m, i, ti);
  r.ti_inv_in_iU = in_iU(m, i, ti_inv);
  r.sigma_mirror = u.equals(u.sigma(u.from_f(ti)), u.from_f(ti_inv));
  return r;
}

}  // namespace klrbraid
