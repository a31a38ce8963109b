#include "klrbraid/klr.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "klrbraid/uqminus.hpp"

namespace klrbraid {

namespace {

std::unique_ptr<PermTable> build_table(int n) {
  auto t = std::make_unique<PermTable>();
  t->n = n;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    t->index.emplace(p, static_cast<int>(t->perms.size()));
    t->perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int count = static_cast<int>(t->perms.size());
  t->reduced.resize(count);
  t->length.resize(count);
  t->left_mul.assign(count, std::vector<int>(std::max(0, n - 1)));
  for (int v = 0; v < count; ++v) {
    Perm cur = t->perms[v];
    Word w;
    for (;;) {
      int d = -1;
      for (int k = 0; k + 1 < n; ++k)
        if (cur[k] > cur[k + 1]) {
          d = k;
          break;
        }
      if (d < 0) break;
      w.push_back(static_cast<char>(d));
      std::swap(cur[d], cur[d + 1]);
    }
    t->reduced[v] = w;
    t->length[v] = static_cast<int>(w.size());
    for (int k = 0; k + 1 < n; ++k) {
      Perm s = t->perms[v];
      std::swap(s[k], s[k + 1]);
      t->left_mul[v][k] = t->index.at(s);
    }
  }
  Perm rev(n);
  std::iota(rev.rbegin(), rev.rend(), 0);
  t->longest = t->index.at(rev);
  return t;
}

void check_strands(const KLRElem& a, const KLRElem& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("klr: elements of different R(beta)");
}

struct Move {
  int pos;
  bool braid;
};

struct MovePath {
  std::vector<std::pair<Word, Move>> steps;  // (word before the move, move)
  Word final;
};

// Shortest sequence of commutation and braid moves from `start` to a word
// satisfying `goal`.
template <class Goal>
MovePath move_path(const Word& start, Goal goal) {
  std::map<Word, std::pair<Word, Move>> parent;
  std::deque<Word> queue{start};
  parent.emplace(start, std::pair<Word, Move>{start, {-1, false}});
  const int len = static_cast<int>(start.size());
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    if (goal(cur)) {
      MovePath path{{}, cur};
      Word w = cur;
      while (w != start) {
        const auto& [prev, mv] = parent.at(w);
        path.steps.emplace_back(prev, mv);
        w = prev;
      }
      std::reverse(path.steps.begin(), path.steps.end());
      return path;
    }
    for (int p = 0; p + 1 < len; ++p) {
      const int a = cur[p], b = cur[p + 1];
      if (std::abs(a - b) >= 2) {
        Word nxt = cur;
        std::swap(nxt[p], nxt[p + 1]);
        if (parent.emplace(nxt, std::pair<Word, Move>{cur, {p, false}}).second) queue.push_back(nxt);
      }
      if (p + 2 < len && cur[p + 2] == a && std::abs(a - b) == 1) {
        Word nxt = cur;
        nxt[p] = static_cast<char>(b);
        nxt[p + 1] = static_cast<char>(a);
        nxt[p + 2] = static_cast<char>(b);
        if (parent.emplace(nxt, std::pair<Word, Move>{cur, {p, true}}).second) queue.push_back(nxt);
      }
    }
  }
  throw std::logic_error("klr: no braid-move path between reduced words");
}

}  // namespace

const PermTable& perm_table(int n) {
  if (n < 0 || n > kMaxStrands) throw BoundExceeded("klr: at most " + std::to_string(kMaxStrands) + " strands");
  static std::array<std::unique_ptr<PermTable>, kMaxStrands + 1> tables;
  static std::once_flag flags[kMaxStrands + 1];
  std::call_once(flags[n], [n] { tables[n] = build_table(n); });
  return *tables[n];
}

Perm perm_of_word(const Word& w, int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int k = *it;
    if (k < 0 || k + 1 >= n) throw std::invalid_argument("klr: letter out of range");
    std::swap(p[k], p[k + 1]);
  }
  return p;
}

Word permute_sequence(const Perm& w, const Word& nu) {
  Word r(nu.size(), 0);
  for (size_t p = 0; p < w.size(); ++p) r[p] = nu[w[p]];
  return r;
}

Word act_word(const Word& w, Word nu) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) std::swap(nu[*it], nu[*it + 1]);
  return nu;
}

bool is_321_avoiding(const Perm& w) {
  // w(a) is the position of strand a
  const int n = static_cast<int>(w.size());
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[w[p]] = p;
  for (int b = 1; b + 1 < n; ++b) {
    bool left = false, right = false;
    for (int a = 0; a < b; ++a) left = left || pos[a] > pos[b];
    for (int c = b + 1; c < n; ++c) right = right || pos[b] > pos[c];
    if (left && right) return false;
  }
  return true;
}

void KLRElem::add_term(const KLRTerm& t, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpq_class KLRElem::coeff(const KLRTerm& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

KLRElem& KLRElem::operator+=(const KLRElem& o) {
  if (terms_.empty()) n_ = o.n_;
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

KLRElem& KLRElem::operator-=(const KLRElem& o) {
  if (terms_.empty()) n_ = o.n_;
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

KLRElem& KLRElem::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, x] : terms_) x *= c;
  return *this;
}

KLRElem KLRElem::operator-() const {
  KLRElem r = *this;
  for (auto& [t, x] : r.terms_) x = -x;
  return r;
}

KLRElem KLRElem::block(const Word& target, const Word& source) const {
  KLRElem r(n_);
  const PermTable& tab = perm_table(n_);
  for (const auto& [t, c] : terms_) {
    if (!source.empty() && t.nu != source) continue;
    if (!target.empty() && permute_sequence(tab.perms[t.w], t.nu) != target) continue;
    r.add_term(t, c);
  }
  return r;
}

void PolyVector::add(const Word& nu, const Poly& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = comps.try_emplace(nu, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) comps.erase(it);
  }
}

void PolyVector::prune() {
  std::erase_if(comps, [](const auto& kv) { return kv.second.is_zero(); });
}

KLRAlgebra::KLRAlgebra(CartanDatum c, ScalarsChoice s) : datum_(std::move(c)), scalars_(std::move(s)) {
  scalars_.validate(datum_);
}

std::vector<Word> KLRAlgebra::sequences(const RootVec& beta) const { return words_of_weight(beta); }

KLRElem KLRAlgebra::e(const Word& nu) const {
  const int n = static_cast<int>(nu.size());
  KLRElem r(n);
  r.add_term({nu, 0, Exps(n, 0)}, 1);
  return r;
}

KLRElem KLRAlgebra::one(const RootVec& beta) const {
  KLRElem r(beta.height());
  for (const auto& nu : sequences(beta)) r += e(nu);
  return r;
}

KLRElem KLRAlgebra::x_e(const Word& nu, int k) const {
  const int n = static_cast<int>(nu.size());
  if (k < 0 || k >= n) throw std::invalid_argument("klr: x index out of range");
  Exps a(n, 0);
  a[k] = 1;
  KLRElem r(n);
  r.add_term({nu, 0, a}, 1);
  return r;
}

KLRElem KLRAlgebra::tau_e(const Word& nu, int k) const {
  const int n = static_cast<int>(nu.size());
  if (k < 0 || k + 1 >= n) throw std::invalid_argument("klr: tau index out of range");
  const PermTable& tab = perm_table(n);
  KLRElem r(n);
  r.add_term({nu, tab.left_mul[0][k], Exps(n, 0)}, 1);
  return r;
}

KLRElem KLRAlgebra::x(const RootVec& beta, int k) const {
  KLRElem r(beta.height());
  for (const auto& nu : sequences(beta)) r += x_e(nu, k);
  return r;
}

KLRElem KLRAlgebra::tau(const RootVec& beta, int k) const {
  KLRElem r(beta.height());
  for (const auto& nu : sequences(beta)) r += tau_e(nu, k);
  return r;
}

KLRElem KLRAlgebra::basis_term(const Word& nu, const Perm& w, Exps a) const {
  const int n = static_cast<int>(nu.size());
  if (a.empty()) a.assign(n, 0);
  KLRElem r(n);
  r.add_term({nu, perm_table(n).index.at(w), std::move(a)}, 1);
  return r;
}

KLRElem KLRAlgebra::poly_e(const Poly& f, const Word& nu) const { return poly_left(f, e(nu)); }

Word KLRAlgebra::target(const KLRTerm& t) const {
  return permute_sequence(perm_table(static_cast<int>(t.nu.size())).perms[t.w], t.nu);
}

int KLRAlgebra::tau_degree(const Word& nu, const Perm& w) const {
  const int n = static_cast<int>(w.size());
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[w[p]] = p;
  int d = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (pos[a] > pos[b]) d -= datum_.bilin_simple(nu[a], nu[b]);
  return d;
}

int KLRAlgebra::degree(const KLRTerm& t) const {
  const int n = static_cast<int>(t.nu.size());
  const Perm& w = perm_table(n).perms[t.w];
  const Word tgt = permute_sequence(w, t.nu);
  int d = tau_degree(t.nu, w);
  for (int p = 0; p < n; ++p) d += t.a[p] * datum_.bilin_simple(tgt[p], tgt[p]);
  return d;
}

std::optional<int> KLRAlgebra::degree(const KLRElem& x) const {
  std::optional<int> d;
  for (const auto& [t, c] : x.terms()) {
    const int k = degree(t);
    if (d && *d != k) return std::nullopt;
    d = k;
  }
  return d;
}

KLRElem KLRAlgebra::poly_left(const Poly& f, const KLRElem& y) const {
  KLRElem r(y.strands());
  for (const auto& [t, c] : y.terms())
    for (const auto& [m, cf] : f.terms()) {
      KLRTerm s = t;
      for (size_t p = 0; p < s.a.size(); ++p) s.a[p] += m[p];
      r.add_term(s, c * cf);
    }
  return r;
}

Poly KLRAlgebra::tau_on_poly(int k, const Word& cur, const Poly& f) const {
  if (cur[k] == cur[k + 1]) return f.demazure(k);
  if (cur[k] < cur[k + 1]) return f.swapped(k);
  return q(cur[k + 1], cur[k], f.nvars(), k, k + 1) * f.swapped(k);
}

KLRElem KLRAlgebra::tau_word(const Word& w, const Word& nu) const {
  if (w.empty()) return e(nu);
  const auto key = std::make_pair(w, nu);
  {
    std::shared_lock lock(mu_);
    if (auto it = word_cache_.find(key); it != word_cache_.end()) return it->second;
  }
  KLRElem r = left_mul_tau(w[0], tau_word(w.substr(1), nu));
  std::unique_lock lock(mu_);
  return word_cache_.try_emplace(key, std::move(r)).first->second;
}

KLRElem KLRAlgebra::tau_left(const Word& w, const KLRElem& y) const {
  KLRElem r = y;
  for (auto l = w.rbegin(); l != w.rend(); ++l) r = left_mul_tau(*l, r);
  return r;
}

KLRElem KLRAlgebra::left_mul_tau(int k, const KLRElem& y) const {
  const int n = y.strands();
  const PermTable& tab = perm_table(n);
  KLRElem r(n);
  for (const auto& [t, c] : y.terms()) {
    const Word tgt = permute_sequence(tab.perms[t.w], t.nu);
    // tau_k x^a = x^{s_k a} tau_k (+ d_k(x^a) for equal colors)
    Exps sa = t.a;
    std::swap(sa[k], sa[k + 1]);
    const KLRElem moved = tau_times_basis(k, t.w, t.nu);
    for (const auto& [s, cs] : moved.terms()) {
      KLRTerm u = s;
      for (int p = 0; p < n; ++p) u.a[p] += sa[p];
      r.add_term(u, c * cs);
    }
    if (tgt[k] == tgt[k + 1]) {
      Poly d = Poly::monomial(t.a).demazure(k);
      for (const auto& [m, cm] : d.terms()) r.add_term({t.nu, t.w, m}, c * cm);
    }
  }
  return r;
}

KLRElem KLRAlgebra::tau_times_basis(int k, int v, const Word& nu) const {
  const int n = static_cast<int>(nu.size());
  const auto key = std::make_tuple(k, v, nu);
  {
    std::shared_lock lock(mu_);
    if (auto it = tau_basis_cache_.find(key); it != tau_basis_cache_.end()) return it->second;
  }
  const PermTable& tab = perm_table(n);
  const Perm& pv = tab.perms[v];
  KLRElem r(n);
  // tau_P Qbar tau_S e(nu) for a braid move inside the word P (a,b,a) S
  auto correction = [&](const Word& prefix, const Word& word, int pos) {
    const int a = word[pos], b = word[pos + 1];
    const int l = std::min(a, b);
    const Word suffix = word.substr(pos + 3);
    const Word col = act_word(suffix, nu);
    Poly qb = qbar(col[l], col[l + 1], col[l + 2], n, l);
    if (qb.is_zero()) return;
    KLRElem y = poly_left(qb, tau_word(suffix, nu));
    const Word full_prefix = prefix + word.substr(0, pos);
    for (auto it = full_prefix.rbegin(); it != full_prefix.rend(); ++it) y = left_mul_tau(*it, y);
    // (l, l+1, l) -> (l+1, l, l+1) subtracts Qbar, the reverse move adds it
    if (a == l)
      r -= y;
    else
      r += y;
  };
  if (pv[k] < pv[k + 1]) {
    const int t = tab.left_mul[v][k];
    const Word start = Word(1, static_cast<char>(k)) + tab.reduced[v];
    const Word& goal = tab.reduced[t];
    if (start != goal)
      for (const auto& [word, mv] : move_path(start, [&](const Word& w) { return w == goal; }).steps)
        if (mv.braid) correction(Word{}, word, mv.pos);
    r.add_term({nu, t, Exps(n, 0)}, 1);
  } else {
    const Word prefix(1, static_cast<char>(k));
    const auto path = move_path(tab.reduced[v], [&](const Word& w) { return w[0] == k; });
    for (const auto& [word, mv] : path.steps)
      if (mv.braid) correction(prefix, word, mv.pos);
    const Word rest = path.final.substr(1);
    const Word col = act_word(rest, nu);
    r += poly_left(q(col[k], col[k + 1], n, k, k + 1), tau_word(rest, nu));
  }
  std::unique_lock lock(mu_);
  return tau_basis_cache_.try_emplace(key, std::move(r)).first->second;
}

KLRElem KLRAlgebra::mul(const KLRElem& a, const KLRElem& b) const {
  check_strands(a, b);
  const int n = a.strands();
  const PermTable& tab = perm_table(n);
  std::map<Word, KLRElem> by_target;
  for (const auto& [t, c] : b.terms()) {
    auto [it, ins] = by_target.try_emplace(permute_sequence(tab.perms[t.w], t.nu), KLRElem(n));
    it->second.add_term(t, c);
  }
  std::map<std::pair<Word, int>, Poly> groups;
  for (const auto& [t, c] : a.terms()) {
    auto [it, ins] = groups.try_emplace({t.nu, t.w}, Poly(n));
    it->second.add_term(t.a, c);
  }
  KLRElem r(n);
  for (const auto& [key, f] : groups) {
    auto it = by_target.find(key.first);
    if (it == by_target.end()) continue;
    KLRElem y = it->second;
    const Word& w = tab.reduced[key.second];
    for (auto l = w.rbegin(); l != w.rend(); ++l) y = left_mul_tau(*l, y);
    r += poly_left(f, y);
  }
  return r;
}

KLRElem KLRAlgebra::mul(std::initializer_list<KLRElem> factors) const {
  if (factors.size() == 0) throw std::invalid_argument("klr_mul: empty product");
  auto it = factors.end();
  KLRElem r = *--it;
  while (it != factors.begin()) r = mul(*--it, r);
  return r;
}

KLRElem KLRAlgebra::sigma(const KLRElem& x) const {
  const int n = x.strands();
  const PermTable& tab = perm_table(n);
  KLRElem r(n);
  for (const auto& [t, c] : x.terms()) {
    const Word& w = tab.reduced[t.w];
    Word cur = t.nu;
    Word sw(w.size(), 0);
    int sign = 1;
    for (int p = static_cast<int>(w.size()) - 1; p >= 0; --p) {
      const int l = w[p];
      if (cur[l] == cur[l + 1]) sign = -sign;
      std::swap(cur[l], cur[l + 1]);
      sw[p] = static_cast<char>(n - 2 - l);
    }
    Word rnu(t.nu.rbegin(), t.nu.rend());
    Exps ra(t.a.rbegin(), t.a.rend());
    r += poly_left(Poly::monomial(ra, c * sign), tau_word(sw, rnu));
  }
  return r;
}

KLRElem KLRAlgebra::phi(const KLRElem& x) const {
  const int n = x.strands();
  const PermTable& tab = perm_table(n);
  KLRElem r(n);
  for (const auto& [t, c] : x.terms()) {
    KLRElem y(n);
    y.add_term({target(t), 0, t.a}, c);
    for (char l : tab.reduced[t.w]) y = left_mul_tau(l, y);
    r += y;
  }
  return r;
}

KLRElem KLRAlgebra::boxtimes(const KLRElem& a, const KLRElem& b) const {
  const int n1 = a.strands(), n2 = b.strands(), n = n1 + n2;
  const PermTable& t1 = perm_table(n1);
  const PermTable& t2 = perm_table(n2);
  const PermTable& tab = perm_table(n);
  KLRElem r(n);
  for (const auto& [s, cs] : a.terms())
    for (const auto& [t, ct] : b.terms()) {
      Perm w = t1.perms[s.w];
      for (int x : t2.perms[t.w]) w.push_back(x + n1);
      Exps e = s.a;
      e.insert(e.end(), t.a.begin(), t.a.end());
      r.add_term({s.nu + t.nu, tab.index.at(w), e}, cs * ct);
    }
  return r;
}

PolyVector KLRAlgebra::apply(const KLRElem& x, const PolyVector& v) const {
  const int n = x.strands();
  const PermTable& tab = perm_table(n);
  PolyVector r{n, {}};
  for (const auto& [t, c] : x.terms()) {
    auto it = v.comps.find(t.nu);
    if (it == v.comps.end()) continue;
    Poly f = it->second;
    Word cur = t.nu;
    const Word& w = tab.reduced[t.w];
    for (auto l = w.rbegin(); l != w.rend() && !f.is_zero(); ++l) {
      f = tau_on_poly(*l, cur, f);
      std::swap(cur[*l], cur[*l + 1]);
    }
    r.add(permute_sequence(tab.perms[t.w], t.nu), f.times_monomial(t.a) * c);
  }
  return r;
}

PolyVector KLRAlgebra::apply_e(const Word& nu, const PolyVector& v) const {
  PolyVector r{v.n, {}};
  if (auto it = v.comps.find(nu); it != v.comps.end()) r.add(nu, it->second);
  return r;
}

PolyVector KLRAlgebra::apply_x(int k, const PolyVector& v) const {
  PolyVector r{v.n, {}};
  Exps m(v.n, 0);
  m[k] = 1;
  for (const auto& [nu, f] : v.comps) r.add(nu, f.times_monomial(m));
  return r;
}

PolyVector KLRAlgebra::apply_tau(int k, const PolyVector& v) const {
  PolyVector r{v.n, {}};
  for (const auto& [nu, f] : v.comps) {
    Word s = nu;
    std::swap(s[k], s[k + 1]);
    r.add(s, tau_on_poly(k, nu, f));
  }
  return r;
}

KLRElem tau_longest(const KLRAlgebra& r, int n, int i) {
  const PermTable& tab = perm_table(n);
  return r.basis_term(Word(n, static_cast<char>(i)), tab.perms[tab.longest]);
}

KLRElem bold_x(const KLRAlgebra& r, int n, int i) {
  Exps a(n);
  std::iota(a.begin(), a.end(), 0);
  return r.basis_term(Word(n, static_cast<char>(i)), perm_table(n).perms[0], a);
}

KLRElem bold_x_prime(const KLRAlgebra& r, int n, int i) {
  Exps a(n);
  std::iota(a.rbegin(), a.rend(), 0);
  return r.basis_term(Word(n, static_cast<char>(i)), perm_table(n).perms[0], a);
}

KLRElem special_idempotent(const KLRAlgebra& r, SpecialKind kind, int n, int i) {
  if (n < 1) throw std::invalid_argument("special_idempotent: n must be positive");
  const KLRElem t = tau_longest(r, n, i);
  const mpq_class sign = (n * (n - 1) / 2) % 2 ? -1 : 1;
  switch (kind) {
    case SpecialKind::BPlus:
      return r.mul(bold_x(r, n, i), t);
    case SpecialKind::BMinus:
      return r.mul(t, bold_x(r, n, i));
    case SpecialKind::BPrimePlus:
      return r.mul(bold_x_prime(r, n, i), t) * sign;
    case SpecialKind::BPrimeMinus:
      return r.mul(t, bold_x_prime(r, n, i)) * sign;
  }
  return {};
}

KLRElem intertwiner(const KLRAlgebra& r, IntertwinerKind kind, int k, const RootVec& beta) {
  const int n = beta.height();
  if (k < 0 || k + 1 >= n) throw std::invalid_argument("intertwiner: index out of range");
  const PermTable& tab = perm_table(n);
  const Perm& sk = tab.perms[tab.left_mul[0][k]];
  KLRElem out(n);
  for (const auto& nu : r.sequences(beta)) {
    KLRElem t = r.basis_term(nu, sk);
    if (nu[k] != nu[k + 1]) {
      out += t;
      continue;
    }
    const Poly diff = Poly::var(n, k + 1) - Poly::var(n, k);
    if (kind == IntertwinerKind::Phi) {
      out += r.poly_left(diff, t) - r.e(nu);
    } else {
      out += r.poly_e(diff, nu) - r.poly_left(diff * diff, t);
    }
  }
  return out;
}

KLRElem a_element(const KLRAlgebra& r, int j, const RootVec& beta, int level) {
  const int n = beta.height() + 1;
  KLRElem out(n);
  for (const auto& nu : r.sequences(beta)) {
    const Word c = Word(1, static_cast<char>(j)) + nu;
    Exps a(n, 0);
    a[0] = level;
    Poly f = Poly::monomial(a);
    for (int p = 1; p < n; ++p)
      if (c[p] != j) f = f * r.q(j, c[p], n, 0, p);
    out += r.poly_e(f, c);
  }
  return out;
}

}  // namespace klrbraid
