#include "klrbraid/klr_quotient.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include <functional>

namespace klrbraid {

namespace {

constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

std::uint64_t reduce_mpz(const mpz_class& z) {
  mpz_class m = z % mpz_class(std::to_string(kPrime));
  if (m < 0) m += mpz_class(std::to_string(kPrime));
  return std::stoull(m.get_str());
}

std::uint64_t reduce_mpq(const mpq_class& q) {
  return mulmod(reduce_mpz(q.get_num()), powmod(reduce_mpz(q.get_den()), kPrime - 2));
}

std::uint64_t eval_mod(const Poly& f, const std::vector<std::uint64_t>& pt) {
  std::uint64_t s = 0;
  for (const auto& [a, c] : f.terms()) {
    std::uint64_t t = reduce_mpq(c);
    for (size_t k = 0; k < a.size(); ++k) t = mulmod(t, powmod(pt[k], a[k]));
    s = (s + t) % kPrime;
  }
  return s;
}

// Exponent vectors with sum_p a_p w_p = total.
void weighted_exps(const std::vector<int>& w, int total, std::vector<Exps>& out) {
  Exps a(w.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t p, int rem) {
    if (p + 1 == w.size()) {
      if (rem % w[p] == 0) {
        a[p] = rem / w[p];
        out.push_back(a);
      }
      return;
    }
    for (int k = 0; k * w[p] <= rem; ++k) {
      a[p] = k;
      rec(p + 1, rem - k * w[p]);
    }
  };
  if (total < 0) return;
  if (w.empty()) {
    if (total == 0) out.push_back(a);
    return;
  }
  rec(0, total);
}

std::vector<Exps> staircase(int n) {
  std::vector<Exps> out{Exps{}};
  for (int p = 0; p < n; ++p) {
    std::vector<Exps> next;
    for (const auto& a : out)
      for (int k = 0; k <= p; ++k) {
        Exps b = a;
        b.push_back(k);
        next.push_back(std::move(b));
      }
    out = std::move(next);
  }
  return out;
}


// Homogeneous submodule of the free left P-module with basis tau_w e(nu),
// graded by deg(x^a tau_w e(nu)) = 2|a| + deg(tau_w e(nu)).
struct GbMono {
  int deg = 0;
  int tot = 0;
  Exps a;
  int comp = 0;
};

// degree, then total x-degree, then reverse lexicographic, then component
int gb_cmp(const GbMono& x, const GbMono& y) {
  if (x.deg != y.deg) return x.deg < y.deg ? -1 : 1;
  if (x.tot != y.tot) return x.tot < y.tot ? -1 : 1;
  for (int k = static_cast<int>(x.a.size()) - 1; k >= 0; --k)
    if (x.a[k] != y.a[k]) return x.a[k] > y.a[k] ? -1 : 1;
  if (x.comp != y.comp) return x.comp < y.comp ? -1 : 1;
  return 0;
}

struct GbGreater {
  bool operator()(const GbMono& x, const GbMono& y) const { return gb_cmp(x, y) > 0; }
};

using GbElem = std::map<GbMono, mpq_class, GbGreater>;

bool gb_divides(const GbMono& d, const GbMono& m) {
  if (d.comp != m.comp) return false;
  for (size_t k = 0; k < d.a.size(); ++k)
    if (d.a[k] > m.a[k]) return false;
  return true;
}

class ModuleGroebner {
 public:
  ModuleGroebner(std::vector<int> offsets, int nvars) : off_(std::move(offsets)), n_(nvars) {}

  GbMono mono(Exps a, int comp) const {
    const int tot = std::accumulate(a.begin(), a.end(), 0);
    return {2 * tot + off_[comp], tot, std::move(a), comp};
  }

  // Adds the generators of degree d and all S-pairs of degree d; must be
  // called with increasing d.
  void step(int d, const std::vector<GbElem>& inputs) {
    std::vector<GbElem> todo = inputs;
    if (auto it = pairs_.find(d); it != pairs_.end()) {
      for (const auto& [i, j] : it->second) todo.push_back(spoly(i, j));
      pairs_.erase(it);
    }
    for (auto& f : todo) {
      GbElem r = reduce(std::move(f));
      if (!r.empty()) add(std::move(r));
    }
  }

  // Monomials of degree d outside the leading-term module.
  long standard_count(int d) const {
    long count = 0;
    for (int c = 0; c < static_cast<int>(off_.size()); ++c) {
      if ((d - off_[c]) % 2 != 0 || d < off_[c]) continue;
      std::vector<Exps> exps;
      weighted_exps(std::vector<int>(n_, 1), (d - off_[c]) / 2, exps);
      for (auto& a : exps) {
        const GbMono m = mono(std::move(a), c);
        bool hit = false;
        for (int g : by_comp(c))
          if (gb_divides(lead(g), m)) {
            hit = true;
            break;
          }
        if (!hit) ++count;
      }
    }
    return count;
  }

  size_t size() const { return basis_.size(); }

 private:
  const GbMono& lead(int g) const { return basis_[g].begin()->first; }
  const std::vector<int>& by_comp(int c) const {
    static const std::vector<int> none;
    auto it = comp_.find(c);
    return it == comp_.end() ? none : it->second;
  }

  GbMono lcm(const GbMono& x, const GbMono& y) const {
    Exps a(x.a.size());
    for (size_t k = 0; k < a.size(); ++k) a[k] = std::max(x.a[k], y.a[k]);
    return mono(std::move(a), x.comp);
  }

  // x^(m - lead(g)) * c * g subtracted from f
  void sub_multiple(GbElem& f, const GbMono& m, const mpq_class& c, int g) const {
    const GbMono& lt = lead(g);
    Exps shift(lt.a.size());
    for (size_t k = 0; k < shift.size(); ++k) shift[k] = m.a[k] - lt.a[k];
    for (const auto& [t, v] : basis_[g]) {
      Exps a = t.a;
      for (size_t k = 0; k < a.size(); ++k) a[k] += shift[k];
      auto [it, ins] = f.try_emplace(mono(std::move(a), t.comp), 0);
      it->second -= c * v;
      if (it->second == 0) f.erase(it);
    }
  }

  GbElem spoly(int i, int j) const {
    const GbMono l = lcm(lead(i), lead(j));
    GbElem f;
    sub_multiple(f, l, -1, i);
    sub_multiple(f, l, 1, j);
    return f;
  }

  GbElem reduce(GbElem f) const {
    auto it = f.begin();
    while (it != f.end()) {
      const GbMono m = it->first;
      int hit = -1;
      for (int g : by_comp(m.comp))
        if (gb_divides(lead(g), m)) {
          hit = g;
          break;
        }
      if (hit < 0) {
        ++it;
        continue;
      }
      const mpq_class c = it->second;
      sub_multiple(f, m, c, hit);
      it = f.upper_bound(m);
    }
    return f;
  }

  void add(GbElem h) {
    const mpq_class inv = 1 / h.begin()->second;
    for (auto& [t, v] : h) v *= inv;
    const int hi = static_cast<int>(basis_.size());
    basis_.push_back(std::move(h));
    const GbMono& lh = lead(hi);
    // Gebauer-Moeller update without the product criterion, which fails for modules
    std::vector<std::pair<int, GbMono>> cand;
    for (int g : by_comp(lh.comp)) cand.push_back({g, lcm(lead(g), lh)});
    for (auto& [d, list] : pairs_) {
      std::vector<std::pair<int, int>> kept;
      for (const auto& [i, j] : list) {
        const GbMono l = lcm(lead(i), lead(j));
        if (l.comp == lh.comp && gb_divides(lh, l) && gb_cmp(lcm(lead(i), lh), l) != 0 &&
            gb_cmp(lcm(lead(j), lh), l) != 0)
          continue;
        kept.push_back({i, j});
      }
      list = std::move(kept);
    }
    std::vector<bool> drop(cand.size(), false);
    for (size_t x = 0; x < cand.size(); ++x)
      for (size_t y = 0; y < cand.size() && !drop[x]; ++y) {
        if (x == y || drop[y] || !gb_divides(cand[y].second, cand[x].second)) continue;
        // strict divisor, or an equal lcm kept from an earlier candidate
        if (gb_cmp(cand[y].second, cand[x].second) != 0 || y < x) drop[x] = true;
      }
    for (size_t x = 0; x < cand.size(); ++x)
      if (!drop[x]) pairs_[cand[x].second.deg].push_back({cand[x].first, hi});
    comp_[lh.comp].push_back(hi);
  }

  std::vector<int> off_;
  int n_;
  std::vector<GbElem> basis_;
  std::map<int, std::vector<int>> comp_;
  std::map<int, std::vector<std::pair<int, int>>> pairs_;
};

}  // namespace

std::vector<KLRTerm> nf_monomials(const KLRAlgebra& r, const Word& target, const Word& source, int degree) {
  const int n = static_cast<int>(source.size());
  const PermTable& tab = perm_table(n);
  std::vector<int> w(n);
  for (int p = 0; p < n; ++p) w[p] = r.datum().bilin_simple(target[p], target[p]);
  std::vector<KLRTerm> out;
  for (size_t v = 0; v < tab.perms.size(); ++v) {
    if (permute_sequence(tab.perms[v], source) != target) continue;
    std::vector<Exps> exps;
    weighted_exps(w, degree - r.tau_degree(source, tab.perms[v]), exps);
    for (auto& a : exps) out.push_back({source, static_cast<int>(v), std::move(a)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> block_min_degree(const KLRAlgebra& r, const Word& target, const Word& source) {
  const PermTable& tab = perm_table(static_cast<int>(source.size()));
  std::optional<int> best;
  for (const auto& p : tab.perms) {
    if (permute_sequence(p, source) != target) continue;
    const int d = r.tau_degree(source, p);
    if (!best || d < *best) best = d;
  }
  return best;
}

bool nf_independence_certificate(const KLRAlgebra& r, const Word& target, const Word& source, std::uint64_t seed) {
  const int n = static_cast<int>(source.size());
  const PermTable& tab = perm_table(n);
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> pt(n);
  for (auto& x : pt) x = rng() % kPrime;
  const auto inputs = staircase(n);
  std::vector<std::vector<std::uint64_t>> m;
  for (const auto& p : tab.perms) {
    if (permute_sequence(p, source) != target) continue;
    KLRElem op = r.basis_term(source, p);
    std::vector<std::uint64_t> row;
    for (const auto& b : inputs) {
      PolyVector v{n, {}};
      v.add(source, Poly::monomial(b));
      PolyVector out = r.apply(op, v);
      auto it = out.comps.find(target);
      row.push_back(it == out.comps.end() ? 0 : eval_mod(it->second, pt));
    }
    m.push_back(std::move(row));
  }
  const int rows = static_cast<int>(m.size());
  return rows == 0 || rank_mod_p(std::move(m), kPrime) == rows;
}

int TermIndex::id(const KLRTerm& t) {
  auto [it, inserted] = ids_.try_emplace(t, static_cast<int>(terms_.size()));
  if (inserted) terms_.push_back(t);
  return it->second;
}

SparseVec TermIndex::vec(const KLRElem& x) {
  SparseVec v;
  for (const auto& [t, c] : x.terms()) v.emplace_back(id(t), c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

KLRElem TermIndex::elem(const SparseVec& v, int strands) const {
  KLRElem x(strands);
  for (const auto& [col, c] : v) x.add_term(terms_.at(col), c);
  return x;
}

GradedIdeal::GradedIdeal(const KLRAlgebra& r, GenFn gens) : r_(r), gens_(std::move(gens)) {}

const SparseEchelon& GradedIdeal::piece(const Word& target, const Word& source, int d) {
  const auto key = std::make_tuple(target, source, d);
  if (auto it = pieces_.find(key); it != pieces_.end()) return it->second;
  SparseEchelon e;
  const auto lo = block_min_degree(r_, target, source);
  if (lo && d >= *lo) {
    const int n = static_cast<int>(source.size());
    // pivot on the smallest term in a monomial order, so x_k keeps leading terms leading
    for (const auto& t : nf_monomials(r_, target, source, d)) index_.id(t);
    for (const auto& g : gens_(target, source, d)) e.insert(index_.vec(g));
    for (int k = 0; k < n; ++k) {
      const int wk = r_.datum().bilin_simple(target[k], target[k]);
      std::vector<SparseVec> rows;
      for (const auto& [lead, row] : piece(target, source, d - wk).rows()) rows.push_back(row);
      Exps m(n, 0);
      m[k] = 1;
      for (const auto& row : rows) e.insert(index_.vec(r_.poly_left(Poly::monomial(m), index_.elem(row, n))));
    }
  }
  return pieces_.emplace(key, std::move(e)).first->second;
}

bool GradedIdeal::contains(const KLRElem& x) {
  if (x.is_zero()) return true;
  const auto d = r_.degree(x);
  if (!d) throw std::invalid_argument("ideal membership: element is not homogeneous");
  const KLRTerm& t0 = x.terms().begin()->first;
  const Word tgt = r_.target(t0);
  if (!(x.block(tgt, t0.nu) == x)) throw std::invalid_argument("ideal membership: element spans several blocks");
  const SparseEchelon& e = piece(tgt, t0.nu, *d);
  return e.contains(index_.vec(x));
}

std::vector<KLRElem> GradedIdeal::basis(const Word& target, const Word& source, int d) {
  std::vector<KLRElem> out;
  for (const auto& [lead, row] : piece(target, source, d).rows())
    out.push_back(index_.elem(row, static_cast<int>(source.size())));
  return out;
}

GradedIdeal::GenFn two_sided_generators(const KLRAlgebra& r, const RootVec& beta, KLRElem g) {
  using Bucket = std::map<std::pair<Word, int>, std::vector<KLRElem>>;
  auto cache = std::make_shared<std::map<Word, Bucket>>();
  const int n = beta.height();
  return [&r, g = std::move(g), cache, n](const Word& target, const Word& source, int d) {
    auto it = cache->find(source);
    if (it == cache->end()) {
      const PermTable& tab = perm_table(n);
      // g tau_v x^b e(source), reduced to an echelon basis per degree
      std::map<int, SparseEchelon> right;
      TermIndex idx;
      for (const auto& p : tab.perms)
        for (const auto& b : staircase(n)) {
          KLRElem y = r.mul(g, r.mul(r.basis_term(source, p), r.basis_term(source, tab.perms[0], b)));
          if (y.is_zero()) continue;
          for (const auto& [tgt, part] : [&] {
                 std::map<Word, KLRElem> parts;
                 for (const auto& [t, c] : y.terms()) {
                   auto [pi, ins] = parts.try_emplace(r.target(t), KLRElem(n));
                   pi->second.add_term(t, c);
                 }
                 return parts;
               }()) {
            (void)tgt;
            right[*r.degree(part)].insert(idx.vec(part));
          }
        }
      Bucket bucket;
      for (const auto& [deg, ech] : right)
        for (const auto& [lead, row] : ech.rows()) {
          const KLRElem y = idx.elem(row, n);
          for (const auto& w : tab.reduced) {
            KLRElem z = r.tau_left(w, y);
            std::map<std::pair<Word, int>, KLRElem> parts;
            for (const auto& [t, c] : z.terms()) {
              auto [pi, ins] = parts.try_emplace({r.target(t), r.degree(t)}, KLRElem(n));
              pi->second.add_term(t, c);
            }
            for (auto& [k, part] : parts) bucket[k].push_back(std::move(part));
          }
        }
      it = cache->emplace(source, std::move(bucket)).first;
    }
    auto b = it->second.find({target, d});
    return b == it->second.end() ? std::vector<KLRElem>{} : b->second;
  };
}

KLRElem pattern_idempotent(const KLRAlgebra& r, const RootVec& beta, const Word& prefix, const Word& suffix) {
  KLRElem out(beta.height());
  for (const auto& nu : r.sequences(beta)) {
    const bool pre = nu.size() >= prefix.size() && nu.compare(0, prefix.size(), prefix) == 0;
    const bool suf = nu.size() >= suffix.size() && nu.compare(nu.size() - suffix.size(), suffix.size(), suffix) == 0;
    if (pre && suf) out += r.e(nu);
  }
  return out;
}

long QuotientTable::total(const Word& target, const Word& source) const {
  auto it = dims.find({target, source});
  if (it == dims.end()) return 0;
  return std::accumulate(it->second.begin(), it->second.end(), 0L);
}

QuotientTable truncated_quotient(const KLRAlgebra& r, const RootVec& beta, const std::vector<KillPattern>& kill,
                                 int lower, int upper) {
  if (beta.height() > kMaxQuotientHeight) throw BoundExceeded("truncated_quotient: height bound exceeded");
  if (upper > kMaxQuotientDegree) throw BoundExceeded("truncated_quotient: degree bound exceeded");
  KLRElem g(beta.height());
  for (const auto& k : kill) g += pattern_idempotent(r, beta, k.prefix, k.suffix);
  // a sequence matching two patterns must count once
  KLRElem gi(beta.height());
  for (const auto& [t, c] : g.terms()) gi.add_term(t, 1);
  GradedIdeal ideal(r, two_sided_generators(r, beta, gi));
  QuotientTable table{beta, lower, upper, {}};
  const auto seqs = r.sequences(beta);
  for (const auto& t : seqs)
    for (const auto& s : seqs) {
      std::vector<long> row;
      for (int d = lower; d <= upper; ++d)
        row.push_back(static_cast<long>(nf_monomials(r, t, s, d).size()) - ideal.dim(t, s, d));
      table.dims.emplace(std::make_pair(t, s), std::move(row));
    }
  return table;
}

long NilHeckeResult::total() const { return std::accumulate(dims.begin(), dims.end(), 0L); }

NilHeckeResult cyclotomic_nilhecke(int l, int n, IdealMethod method) {
  if (l < 0 || n < 1 || l > 5 || n > 5) throw BoundExceeded("cyclotomic_nilhecke: l, n must lie in [0,5] x [1,5]");
  KLRAlgebra r(CartanDatum::from_type("A1"));
  const Word nu(n, 0);
  const RootVec beta{n};
  const PermTable& tab = perm_table(n);
  Exps a(n, 0);
  a[0] = l;
  const GradedIdeal::GenFn gens = two_sided_generators(r, beta, r.basis_term(nu, tab.perms[0], a));
  GradedIdeal ideal(r, gens);
  NilHeckeResult res;
  res.l = l;
  res.n = n;
  if (ideal.contains(r.e(nu))) {
    res.zero = true;
    res.certificate = "e(i^" + std::to_string(n) + ") lies in the degree-0 piece of the ideal generated by x_1^" +
                      std::to_string(l);
    return res;
  }
  // degrees of the quotient lie in [-n(n-1), n(n-1) + 2n(l-n)]; two extra degrees witness stabilization
  res.lower = -n * (n - 1);
  const int top = n * (n - 1) + 2 * n * std::max(0, l - n);
  res.upper = top + 4;
  if (method == IdealMethod::Closure) {
    for (int d = res.lower; d <= res.upper; ++d)
      res.dims.push_back(static_cast<long>(nf_monomials(r, nu, nu, d).size()) - ideal.dim(nu, nu, d));
  } else {
    std::vector<int> off;
    for (const auto& p : tab.perms) off.push_back(r.tau_degree(nu, p));
    ModuleGroebner gb(off, n);
    for (int d = res.lower; d <= res.upper; ++d) {
      std::vector<GbElem> inputs;
      for (const auto& g : gens(nu, nu, d)) {
        GbElem f;
        for (const auto& [t, c] : g.terms()) f.emplace(gb.mono(t.a, t.w), c);
        inputs.push_back(std::move(f));
      }
      gb.step(d, inputs);
      res.dims.push_back(gb.standard_count(d));
    }
  }
  res.stabilized = res.dims[res.dims.size() - 1] == 0 && res.dims[res.dims.size() - 2] == 0 &&
                   res.dims[res.dims.size() - 3] == 0;
  return res;
}

ProjIsomReport projisom_check(const KLRAlgebra& r, int n, int i, int max_degree) {
  ProjIsomReport rep;
  rep.n = n;
  rep.pass = true;
  const Word nu(n, static_cast<char>(i));
  const KLRElem bp = special_idempotent(r, SpecialKind::BPlus, n, i);
  const KLRElem bpm = special_idempotent(r, SpecialKind::BPrimeMinus, n, i);
  const KLRElem xn = bold_x(r, n, i);
  const KLRElem tw = tau_longest(r, n, i);
  const int lo = *block_min_degree(r, nu, nu);
  for (int d = lo; d <= max_degree; ++d)
    for (const auto& t : nf_monomials(r, nu, nu, d)) {
      KLRElem m(n);
      m.add_term(t, 1);
      // b'_- R -> b_+ R -> b'_- R
      const KLRElem y = r.mul(bpm, m);
      const KLRElem z = r.mul(xn, y);
      if (!(r.mul(bp, z) == z) || !(r.mul(tw, z) == y)) {
        rep.pass = false;
        rep.detail = "b'_- R -> b_+ R fails in degree " + std::to_string(d);
      }
      // b_+ R -> b'_- R -> b_+ R
      const KLRElem u = r.mul(bp, m);
      const KLRElem v = r.mul(tw, u);
      if (!(r.mul(bpm, v) == v) || !(r.mul(xn, v) == u)) {
        rep.pass = false;
        rep.detail = "b_+ R -> b'_- R fails in degree " + std::to_string(d);
      }
      ++rep.checked;
    }
  return rep;
}


RCompositeReport r_composite_check(const KLRAlgebra& r, int j, const RootVec& beta, int max_degree) {
  RCompositeReport rep;
  rep.pass = true;
  const int n = beta.height();
  const int N = n + 1;
  const Word jw(1, static_cast<char>(j));
  const RootVec full = beta + RootVec::simple(beta.size(), j);
  const PermTable& tab = perm_table(N);
  std::vector<Word> heads;
  for (const auto& t : r.sequences(beta))
    if (!t.empty() && t[0] == j) heads.push_back(t);

  // tau_w (e(j) (x) y) with y a monomial of R(beta) whose target starts with j
  GradedIdeal::GenFn gens = [&](const Word& target, const Word& source, int d) {
    std::vector<KLRElem> out;
    const Word nu = source.substr(1);
    for (size_t w = 0; w < tab.perms.size(); ++w)
      for (const auto& ty : heads) {
        const Word jt = jw + ty;
        if (permute_sequence(tab.perms[w], jt) != target) continue;
        for (const auto& t : nf_monomials(r, ty, nu, d - r.tau_degree(jt, tab.perms[w]))) {
          KLRElem y(n);
          y.add_term(t, 1);
          out.push_back(r.tau_left(tab.reduced[w], r.boxtimes(r.e(jw), y)));
        }
      }
    return out;
  };
  GradedIdeal k(r, gens);

  Word up;
  for (int p = 0; p < n; ++p) up.push_back(static_cast<char>(p));
  const KLRElem a = a_element(r, j, beta, 0);
  for (const auto& nu : r.sequences(beta)) {
    const Word s = jw + nu;
    KLRElem y = r.e(s);
    for (int p = 0; p < n; ++p) y = r.mul(intertwiner(r, IntertwinerKind::G, p, full), y);
    const KLRElem diff = r.tau_left(up, y) - r.mul(a, r.e(s));
    std::map<std::pair<Word, int>, KLRElem> parts;
    for (const auto& [t, c] : diff.terms()) {
      auto [it, ins] = parts.try_emplace({r.target(t), r.degree(t)}, KLRElem(N));
      it->second.add_term(t, c);
    }
    for (const auto& [key, part] : parts) {
      ++rep.parts;
      if (key.second > max_degree) {
        rep.pass = false;
        rep.detail = "component of degree " + std::to_string(key.second) + " exceeds the truncation";
      } else if (!k.contains(part)) {
        rep.pass = false;
        rep.detail = "degree " + std::to_string(key.second) + " component outside the ideal";
      }
    }
  }
  return rep;
}

}  // namespace klrbraid
