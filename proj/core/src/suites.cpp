#include "klrbraid/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "klrbraid/braidsym.hpp"
#include "klrbraid/json_io.hpp"
#include "klrbraid/klr.hpp"
#include "klrbraid/klr_quotient.hpp"
#include "klrbraid/klrchar.hpp"
#include "klrbraid/parabolic.hpp"

namespace klrbraid {

namespace {

using Job = std::function<std::vector<CheckResult>()>;

std::uint64_t seed_for(std::uint64_t seed, const std::string& tag) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : tag) h = (h ^ c) * 1099511628211ULL;
  return h ^ (seed * 0x9E3779B97F4A7C15ULL);
}

CheckResult check(std::string name, bool pass, std::string detail = {}) {
  return {std::move(name), pass, std::move(detail)};
}

std::string root_str(const RootVec& b) { return b.to_string(); }

std::string word_str(const CartanDatum& c, const Word& w) { return w.empty() ? "()" : c.word_to_string(w); }

// Nonnegative vectors of the given rank with height in [lo, hi].
std::vector<RootVec> lattice_points(int rank, int lo, int hi) {
  std::vector<RootVec> out;
  RootVec cur(rank);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == rank) {
      if (cur.height() >= lo) out.push_back(cur);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      cur[k] = c;
      rec(k + 1, left - c);
    }
    cur[k] = 0;
  };
  rec(0, hi);
  std::sort(out.begin(), out.end(), [](const RootVec& a, const RootVec& b) {
    return a.height() != b.height() ? a.height() < b.height() : a < b;
  });
  return out;
}

Poly random_poly(std::mt19937_64& rng, int n, int terms = 4, int max_exp = 3) {
  Poly f(n);
  for (int t = 0; t < terms; ++t) {
    Exps a(n);
    for (auto& e : a) e = static_cast<int>(rng() % (max_exp + 1));
    f.add_term(a, mpq_class(static_cast<long>(rng() % 7) - 3));
  }
  return f;
}

PolyVector single(const Word& nu, const Poly& f) {
  PolyVector v{static_cast<int>(nu.size()), {}};
  v.add(nu, f);
  return v;
}

bool same(PolyVector a, PolyVector b) {
  a.prune();
  b.prune();
  return a == b;
}

std::vector<CheckResult> guarded(const std::string& name, const Job& job) {
  try {
    return job();
  } catch (const std::exception& e) {
    return {check(name, false, std::string("error: ") + e.what())};
  }
}

SuiteReport make_report(const std::string& name, const SuiteParams& p) {
  SuiteReport rep;
  rep.suite = name;
  rep.datum = p.cfg.datum().name();
  if (const SuiteInfo* info = find_suite(name)) rep.certifies = info->certifies;
  return rep;
}

void collect(SuiteReport& rep, const std::vector<std::pair<std::string, Job>>& jobs) {
  std::vector<Job> wrapped;
  for (const auto& [name, job] : jobs) wrapped.push_back([name, job] { return guarded(name, job); });
  for (auto& part : run_parallel(wrapped))
    for (auto& c : part) rep.checks.push_back(std::move(c));
}

// ---- U_q(g) suites

SuiteReport braid_relations(const SuiteParams& p) {
  SuiteReport rep = make_report("braid-relations", p);
  const CartanDatum c = p.cfg.datum();
  auto u = std::make_shared<UqFull>(c);
  std::vector<std::pair<Gen, int>> gens;
  for (Gen g : {Gen::E, Gen::F, Gen::T})
    for (int i = 0; i < c.rank(); ++i) gens.push_back({g, i});
  if (p.gen) {
    const std::string& s = *p.gen;
    if (s.size() < 2 || std::string("eft").find(s[0]) == std::string::npos)
      throw std::invalid_argument("--gen must look like e1, f2 or t1");
    const Gen g = s[0] == 'e' ? Gen::E : s[0] == 'f' ? Gen::F : Gen::T;
    gens = {{g, c.index_of(s.substr(1))}};
  }
  const char* names = "EFT";
  std::vector<std::pair<std::string, Job>> jobs;
  for (int i = 0; i < c.rank(); ++i)
    for (int j = i + 1; j < c.rank(); ++j) {
      const int m = c.coxeter_m(i, j);
      if (m == 0) {
        rep.checks.push_back(check("T" + c.label(i) + " T" + c.label(j), false, "infinite order, no braid relation"));
        continue;
      }
      BraidWord wi, wj;
      for (int k = 0; k < m; ++k) {
        wi.push_back({k % 2 ? j : i, false});
        wj.push_back({k % 2 ? i : j, false});
      }
      for (const auto& [g, k] : gens) {
        const std::string name = "h=" + std::to_string(m) + " T" + c.label(i) + "T" + c.label(j) + "... on " +
                                 static_cast<char>(std::tolower(names[static_cast<int>(g)])) + c.label(k);
        jobs.push_back({name, [=] {
                          const TriangularElem x = u->generator(g, k);
                          const bool ok = u->equals(u->apply_braid(wi, x), u->apply_braid(wj, x));
                          return std::vector<CheckResult>{check(name, ok)};
                        }});
      }
    }
  collect(rep, jobs);
  rep.data["generators"] = static_cast<int>(gens.size());
  return rep;
}

SuiteReport reduced_words(const SuiteParams& p) {
  SuiteReport rep = make_report("reduced-words", p);
  const CartanDatum c = p.cfg.datum();
  auto u = std::make_shared<UqFull>(c);
  const Weight rho(std::vector<int>(c.rank(), 1));
  std::set<Weight> seen{rho};
  std::vector<Word> layer{Word{}}, elements{Word{}};
  for (int len = 1; len <= p.word_length; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (int k = 0; k < c.rank(); ++k) {
        Word v = w;
        v.push_back(static_cast<char>(k));
        if (!c.is_reduced(v)) continue;
        if (seen.insert(c.weyl_act(v, rho)).second) next.push_back(v);
      }
    if (next.empty()) break;
    elements.insert(elements.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::vector<std::pair<std::string, Job>> jobs;
  int cases = 0;
  for (const Word& w : elements) {
    const auto words = c.reduced_words(w, p.word_length);
    for (int i = 0; i < c.rank(); ++i) {
      if (!c.weyl_act(w, RootVec::simple(c.rank(), i)).is_nonneg()) continue;
      ++cases;
      const std::string name = "w=" + word_str(c, w) + " i=" + c.label(i);
      jobs.push_back({name, [=] {
                        const FWordElem first = delta_char(*u, words.front(), i, false);
                        for (size_t k = 1; k < words.size(); ++k)
                          if (!u->minus().equal(first, delta_char(*u, words[k], i, false)))
                            return std::vector<CheckResult>{check(name, false, "differs on " + word_str(c, words[k]))};
                        return std::vector<CheckResult>{
                            check(name, true, std::to_string(words.size()) + " reduced words")};
                      }});
    }
  }
  collect(rep, jobs);
  rep.data["elements"] = static_cast<int>(elements.size());
  rep.data["cases"] = cases;
  return rep;
}

SuiteReport serre(const SuiteParams& p) {
  SuiteReport rep = make_report("serre", p);
  const CartanDatum c = p.cfg.datum();
  UqMinus m(c);
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j)
      if (i != j) rep.checks.push_back(check("serre(" + c.label(i) + "," + c.label(j) + ")", m.is_zero(m.serre_element(i, j))));
  return rep;
}

SuiteReport kernels(const SuiteParams& p) {
  SuiteReport rep = make_report("kernels", p);
  const CartanDatum c = p.cfg.datum();
  UqFull u(c);
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j) {
      if (i == j) continue;
      const std::string ij = c.label(i) + "," + c.label(j);
      rep.checks.push_back(check("r_i T_i(f_j) = 0 (" + ij + ")", in_Ui(u.minus(), i, uj_elem(u, i, j, true))));
      rep.checks.push_back(check("_ir T_i^-1(f_j) = 0 (" + ij + ")", in_iU(u.minus(), i, uj_elem(u, i, j, false))));
    }
  return rep;
}

SuiteReport bimodule(const SuiteParams& p) {
  SuiteReport rep = make_report("bimodule", p);
  const CartanDatum c = p.cfg.datum();
  auto u = std::make_shared<UqFull>(c, 24);
  const int height = std::min(p.cfg.height, 4);
  const int samples = std::max(p.samples, 20);
  std::vector<std::pair<std::string, Job>> jobs;
  for (int i = 0; i < c.rank(); ++i) {
    const std::string name = "i=" + c.label(i);
    const std::uint64_t seed = seed_for(p.cfg.seed, "bimodule" + name);
    jobs.push_back({name, [=] {
                      BimoduleReport b = verify_bimodule(*u, i, height, samples, seed);
                      std::vector<CheckResult> out;
                      for (auto& r : b.checks) out.push_back(check(name + " " + r.name, r.pass, r.detail));
                      if (b.samples < samples)
                        out.push_back(check(name + " samples", false, std::to_string(b.samples) + " drawn"));
                      return out;
                    }});
  }
  collect(rep, jobs);
  rep.data["height"] = height;
  rep.data["samples"] = samples;
  return rep;
}

SuiteReport uj_orientation(const SuiteParams& p) {
  SuiteReport rep = make_report("uj-orientation", p);
  const CartanDatum c = p.cfg.datum();
  UqFull u(c);
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j) {
      if (i == j) continue;
      const OrientationReport o = orientation(u, i, j);
      const std::string tag = " (" + c.label(i) + "," + c.label(j) + ") n=" + std::to_string(o.n);
      rep.checks.push_back(check("T_i(f_j) = ad_{f_i}^(n)(f_j)" + tag, o.ti_is_ad));
      rep.checks.push_back(check("T_i^-1(f_j) = ad*_{f_i}^(n)(f_j)" + tag, o.ti_inv_is_ad_star));
      rep.checks.push_back(check("T_i(f_j) in U_i" + tag, o.ti_in_Ui));
      rep.checks.push_back(check("T_i^-1(f_j) in _iU" + tag, o.ti_inv_in_iU));
      rep.checks.push_back(check("sigma(T_i(f_j)) = T_i^-1(f_j)" + tag, o.sigma_mirror));
    }
  return rep;
}

std::vector<Weight> small_weights(int rank, int total) {
  std::vector<Weight> out;
  for (const RootVec& v : lattice_points(rank, 0, total)) out.emplace_back(v.coords());
  return out;
}

// Shared by parabolic-dims and form-nondegeneracy.
SuiteReport parabolic_suite(const std::string& suite, const SuiteParams& p, bool gram) {
  SuiteReport rep = make_report(suite, p);
  const CartanDatum c = p.cfg.datum();
  auto u = std::make_shared<UqFull>(c);
  const auto betas = lattice_points(c.rank(), 0, p.cfg.height);
  std::vector<std::pair<std::string, Job>> jobs;
  for (const Weight& lambda : small_weights(c.rank(), 2)) {
    std::ostringstream ls;
    for (int k = 0; k < lambda.size(); ++k) ls << (k ? "," : "") << lambda[k];
    const std::string name = "Lambda=(" + ls.str() + ")";
    jobs.push_back({name, [=] {
                      ParabolicModule v(*u, std::vector<bool>(c.rank(), true), lambda);
                      int slices = 0, bad = 0;
                      std::string first;
                      for (const RootVec& beta : betas) {
                        const int d = v.dim(beta);
                        bool ok = true;
                        std::string what;
                        if (gram) {
                          if (d == 0) continue;
                          const int r = rank(v.gram_matrix(beta));
                          ok = r == d;
                          what = "rank " + std::to_string(r) + " dim " + std::to_string(d);
                        } else {
                          const long want = weyl_dim_oracle(c, lambda, beta);
                          ok = d == want;
                          what = "dim " + std::to_string(d) + " oracle " + std::to_string(want);
                        }
                        ++slices;
                        if (!ok && bad++ == 0) first = "beta=" + root_str(beta) + ": " + what;
                      }
                      const std::string detail =
                          std::to_string(slices) + " slices" + (bad ? ", " + std::to_string(bad) + " bad, " + first : "");
                      return std::vector<CheckResult>{check(name, bad == 0, detail)};
                    }});
  }
  collect(rep, jobs);
  rep.data["height"] = p.cfg.height;
  return rep;
}

SuiteReport parabolic_dims(const SuiteParams& p) { return parabolic_suite("parabolic-dims", p, false); }
SuiteReport form_nondegeneracy(const SuiteParams& p) { return parabolic_suite("form-nondegeneracy", p, true); }

// ---- KLR suites

struct KLRSetup {
  CartanDatum c;
  std::shared_ptr<KLRAlgebra> r;
  explicit KLRSetup(const RunConfig& cfg) : c(cfg.datum()), r(std::make_shared<KLRAlgebra>(c, cfg.scalars)) {}
};

using Relation = std::function<bool(const KLRAlgebra&, const Word&, const Poly&, std::mt19937_64&)>;

SuiteReport klr_relations(const SuiteParams& p) {
  SuiteReport rep = make_report("klr-relations", p);
  const KLRSetup s(p.cfg);
  const int height = std::min(p.cfg.height, 4);
  constexpr int kSamples = 50;

  const Relation idempotents = [](const KLRAlgebra& r, const Word& nu, const Poly& f, std::mt19937_64& rng) {
    const auto seqs = r.sequences(r.weight(nu));
    const Word& mu = seqs[rng() % seqs.size()];
    const PolyVector v = single(nu, f);
    PolyVector want = mu == nu ? v : PolyVector{v.n, {}};
    PolyVector sum{v.n, {}};
    for (const auto& s : seqs)
      for (const auto& [w, g] : r.apply_e(s, v).comps) sum.add(w, g);
    return same(r.apply_e(mu, r.apply_e(nu, v)), want) && same(sum, v);
  };
  const Relation dots = [](const KLRAlgebra& r, const Word& nu, const Poly& f, std::mt19937_64& rng) {
    const int n = static_cast<int>(nu.size());
    const int k = static_cast<int>(rng() % n), l = static_cast<int>(rng() % n);
    const PolyVector v = single(nu, f);
    return same(r.apply_x(k, r.apply_x(l, v)), r.apply_x(l, r.apply_x(k, v)));
  };
  const Relation distant = [](const KLRAlgebra& r, const Word& nu, const Poly& f, std::mt19937_64& rng) {
    const int n = static_cast<int>(nu.size());
    const PolyVector v = single(nu, f);
    const int k = static_cast<int>(rng() % (n - 1));
    bool ok = true;
    for (int l = 0; l < n; ++l)
      if (l != k && l != k + 1) ok = ok && same(r.apply_x(l, r.apply_tau(k, v)), r.apply_tau(k, r.apply_x(l, v)));
    for (int l = 0; l + 1 < n; ++l)
      if (std::abs(l - k) > 1) ok = ok && same(r.apply_tau(l, r.apply_tau(k, v)), r.apply_tau(k, r.apply_tau(l, v)));
    return ok;
  };
  const Relation dot_slide = [](const KLRAlgebra& r, const Word& nu, const Poly& f, std::mt19937_64& rng) {
    const int n = static_cast<int>(nu.size());
    const int k = static_cast<int>(rng() % (n - 1));
    const PolyVector v = single(nu, f);
    const PolyVector want = nu[k] == nu[k + 1] ? v : PolyVector{n, {}};
    PolyVector a = r.apply_tau(k, r.apply_x(k + 1, v)), b = r.apply_x(k, r.apply_tau(k, v));
    PolyVector c = r.apply_x(k + 1, r.apply_tau(k, v)), d = r.apply_tau(k, r.apply_x(k, v));
    for (auto& [w, g] : b.comps) a.add(w, -g);
    for (auto& [w, g] : d.comps) c.add(w, -g);
    return same(a, want) && same(c, want);
  };
  const Relation quadratic = [](const KLRAlgebra& r, const Word& nu, const Poly& f, std::mt19937_64& rng) {
    const int n = static_cast<int>(nu.size());
    const int k = static_cast<int>(rng() % (n - 1));
    const PolyVector v = single(nu, f);
    const Poly q = nu[k] == nu[k + 1] ? Poly(n) : r.q(nu[k], nu[k + 1], n, k, k + 1);
    return same(r.apply_tau(k, r.apply_tau(k, v)), single(nu, q * f));
  };
  const Relation cubic = [](const KLRAlgebra& r, const Word& nu, const Poly& f, std::mt19937_64& rng) {
    const int n = static_cast<int>(nu.size());
    const int k = static_cast<int>(rng() % (n - 2));
    const PolyVector v = single(nu, f);
    PolyVector lhs = r.apply_tau(k + 1, r.apply_tau(k, r.apply_tau(k + 1, v)));
    for (const auto& [w, g] : r.apply_tau(k, r.apply_tau(k + 1, r.apply_tau(k, v))).comps) lhs.add(w, -g);
    return same(lhs, single(nu, r.qbar(nu[k], nu[k + 1], nu[k + 2], n, k) * f));
  };

  const std::vector<std::tuple<std::string, Relation, int>> families = {
      {"idempotents", idempotents, 1}, {"dots commute", dots, 1},    {"distant commutation", distant, 3},
      {"dot slide", dot_slide, 2},     {"quadratic", quadratic, 2}, {"braid", cubic, 3}};
  std::vector<std::pair<std::string, Job>> jobs;
  for (const auto& [name, rel, min_height] : families) {
    if (min_height > height) continue;
    const auto betas = lattice_points(s.c.rank(), min_height, height);
    const std::uint64_t seed = seed_for(p.cfg.seed, "klr-relations " + name);
    auto r = s.r;
    const std::string fam = name;
    const Relation relation = rel;
    jobs.push_back({fam, [=] {
                      std::mt19937_64 rng(seed);
                      int bad = 0;
                      std::string first;
                      for (int t = 0; t < kSamples; ++t) {
                        const RootVec& beta = betas[t % betas.size()];
                        const auto seqs = r->sequences(beta);
                        const Word nu = seqs[rng() % seqs.size()];
                        const Poly f = random_poly(rng, beta.height());
                        if (!relation(*r, nu, f, rng) && bad++ == 0)
                          first = ", first at e(" + word_str(r->datum(), nu) + ")";
                      }
                      return std::vector<CheckResult>{check(
                          fam, bad == 0,
                          std::to_string(kSamples - bad) + "/" + std::to_string(kSamples) + " samples" + first)};
                    }});
  }
  collect(rep, jobs);
  rep.data["height"] = height;
  rep.data["samples_per_relation"] = kSamples;
  return rep;
}

SuiteReport nf_oracle(const SuiteParams& p) {
  SuiteReport rep = make_report("nf-oracle", p);
  const KLRSetup s(p.cfg);
  const int height = std::clamp(p.cfg.height, 2, 4);
  const auto betas = lattice_points(s.c.rank(), 2, height);
  constexpr int kProducts = 200;
  std::vector<std::pair<std::string, Job>> jobs;
  for (size_t b = 0; b < betas.size(); ++b) {
    const RootVec beta = betas[b];
    const int count = kProducts / static_cast<int>(betas.size()) +
                      (static_cast<int>(b) < kProducts % static_cast<int>(betas.size()) ? 1 : 0);
    const std::string name = "beta=" + root_str(beta);
    const std::uint64_t seed = seed_for(p.cfg.seed, "nf-oracle " + name);
    auto r = s.r;
    jobs.push_back({name, [=] {
                      std::mt19937_64 rng(seed);
                      const int n = beta.height();
                      const auto seqs = r->sequences(beta);
                      int bad = 0;
                      for (int t = 0; t < count; ++t) {
                        // a random word in e(nu), x_k and tau_k
                        std::vector<KLRElem> factors;
                        const int len = 2 + static_cast<int>(rng() % 4);
                        for (int f = 0; f < len; ++f) {
                          const int kind = static_cast<int>(rng() % 3);
                          if (kind == 0) factors.push_back(r->e(seqs[rng() % seqs.size()]));
                          if (kind == 1) factors.push_back(r->x(beta, static_cast<int>(rng() % n)));
                          if (kind == 2) factors.push_back(r->tau(beta, static_cast<int>(rng() % (n - 1))));
                        }
                        KLRElem prod = factors.front();
                        for (size_t f = 1; f < factors.size(); ++f) prod = r->mul(prod, factors[f]);
                        PolyVector v{n, {}};
                        for (const auto& nu : seqs) v.add(nu, random_poly(rng, n, 3, 2));
                        PolyVector seq = v;
                        for (auto it = factors.rbegin(); it != factors.rend(); ++it) seq = r->apply(*it, seq);
                        if (!same(r->apply(prod, v), seq)) ++bad;
                      }
                      return std::vector<CheckResult>{
                          check(name, bad == 0, std::to_string(count - bad) + "/" + std::to_string(count) + " products")};
                    }});
  }
  collect(rep, jobs);
  rep.data["products"] = kProducts;
  return rep;
}

SuiteReport hilbert(const SuiteParams& p) {
  SuiteReport rep = make_report("hilbert", p);
  const KLRSetup s(p.cfg);
  const int height = std::min(p.cfg.height, 4);
  const int upper = p.cfg.degree;
  std::vector<std::pair<std::string, Job>> jobs;
  for (const RootVec& beta : lattice_points(s.c.rank(), 1, height)) {
    const std::string name = "beta=" + root_str(beta);
    const std::uint64_t seed = seed_for(p.cfg.seed, "hilbert " + name);
    auto r = s.r;
    jobs.push_back({name, [=] {
                      const auto seqs = r->sequences(beta);
                      int blocks = 0, bad = 0, dependent = 0;
                      std::string first;
                      for (const auto& src : seqs)
                        for (const auto& tgt : seqs) {
                          const auto low = block_min_degree(*r, tgt, src);
                          if (!low) continue;
                          ++blocks;
                          const int lower = std::min(*low, upper);
                          const GradedSeries count = hilbert_count(*r, src, tgt, lower, upper);
                          if (!(series_truncate(hilbert_full(*r, src, tgt), lower, upper) == count) && bad++ == 0)
                            first = ", first at " + word_str(r->datum(), src) + " -> " + word_str(r->datum(), tgt);
                          if (!nf_independence_certificate(*r, tgt, src, seed)) ++dependent;
                        }
                      std::vector<CheckResult> out;
                      out.push_back(check(name + " counts", bad == 0,
                                          std::to_string(blocks - bad) + "/" + std::to_string(blocks) +
                                              " blocks agree through degree " + std::to_string(upper) + first));
                      out.push_back(check(name + " independence", dependent == 0,
                                          std::to_string(blocks - dependent) + "/" + std::to_string(blocks) +
                                              " blocks certified"));
                      return out;
                    }});
  }
  collect(rep, jobs);
  rep.data["height"] = height;
  rep.data["degree"] = upper;
  return rep;
}

SuiteReport idempotents(const SuiteParams& p) {
  SuiteReport rep = make_report("idempotents", p);
  const KLRSetup s(p.cfg);
  const int nmax = std::min(p.cfg.height, 4);
  std::vector<std::pair<std::string, Job>> jobs;
  for (int i = 0; i < s.c.rank(); ++i)
    for (int n = 1; n <= nmax; ++n) {
      const std::string tag = " n=" + std::to_string(n) + " i=" + s.c.label(i);
      auto r = s.r;
      jobs.push_back({"idempotent" + tag, [=] {
                        std::vector<CheckResult> out;
                        const char* names[] = {"b+", "b-", "b'+", "b'-"};
                        const SpecialKind kinds[] = {SpecialKind::BPlus, SpecialKind::BMinus,
                                                     SpecialKind::BPrimePlus, SpecialKind::BPrimeMinus};
                        for (int k = 0; k < 4; ++k) {
                          const KLRElem b = special_idempotent(*r, kinds[k], n, i);
                          out.push_back(check(std::string(names[k]) + "^2 = " + names[k] + tag,
                                              !b.is_zero() && r->mul(b, b) == b));
                        }
                        const KLRElem bp = special_idempotent(*r, SpecialKind::BPlus, n, i);
                        out.push_back(check("phi(b+) = b-" + tag,
                                            r->phi(bp) == special_idempotent(*r, SpecialKind::BMinus, n, i)));
                        out.push_back(check("sigma(b+) = b'+" + tag,
                                            r->sigma(bp) == special_idempotent(*r, SpecialKind::BPrimePlus, n, i)));
                        return out;
                      }});
      const int trunc = n <= 2 ? 6 : 8;
      jobs.push_back({"projisom" + tag, [=] {
                        const ProjIsomReport pr = projisom_check(*r, n, i, trunc);
                        return std::vector<CheckResult>{
                            check("x_n: b'_- R -> b_+ R isomorphism" + tag, pr.pass && pr.checked > 0,
                                  std::to_string(pr.checked) + " pieces through degree " + std::to_string(trunc) +
                                      (pr.detail.empty() ? "" : ", " + pr.detail))};
                      }});
    }
  collect(rep, jobs);
  return rep;
}

SuiteReport demazure(const SuiteParams& p) {
  SuiteReport rep = make_report("demazure", p);
  const KLRSetup s(p.cfg);
  const int nmax = std::min(p.cfg.height, 4);
  constexpr int kSamples = 50;
  std::vector<std::pair<std::string, Job>> jobs;
  for (int i = 0; i < s.c.rank(); ++i)
    for (int n = 2; n <= nmax; ++n) {
      const std::string name = "n=" + std::to_string(n) + " i=" + s.c.label(i);
      const std::uint64_t seed = seed_for(p.cfg.seed, "demazure " + name);
      auto r = s.r;
      jobs.push_back({name, [=] {
                        std::mt19937_64 rng(seed);
                        const Word nu(n, static_cast<char>(i));
                        const KLRElem tw = tau_longest(*r, n, i);
                        int bad = 0;
                        for (int t = 0; t < kSamples; ++t) {
                          const Poly f = random_poly(rng, n, 3, 3);
                          const int k = t % (n - 1);
                          if (!(r->mul({tw, r->poly_e(f, nu), r->tau_e(nu, k)}) ==
                                r->mul(tw, r->poly_e(f.demazure(k), nu))))
                            ++bad;
                        }
                        return std::vector<CheckResult>{check(
                            name, bad == 0, std::to_string(kSamples - bad) + "/" + std::to_string(kSamples) + " samples")};
                      }});
    }
  collect(rep, jobs);
  return rep;
}

json nilhecke_json(const NilHeckeResult& r) {
  json j = {{"l", r.l}, {"n", r.n}, {"zero", r.zero}};
  if (r.zero) {
    j["certificate"] = r.certificate;
  } else {
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["dims"] = r.dims;
    j["stabilized"] = r.stabilized;
    j["total"] = r.total();
  }
  return j;
}

SuiteReport nilhecke_vanishing(const SuiteParams& p) {
  SuiteReport rep = make_report("nilhecke-vanishing", p);
  std::vector<std::pair<int, int>> cases;
  if (p.l || p.n) {
    if (!p.l || !p.n) throw std::invalid_argument("--l and --n must be given together");
    cases.push_back({*p.l, *p.n});
  } else {
    for (int n = 1; n <= 4; ++n)
      for (int l = 1; l <= 4; ++l) cases.push_back({l, n});
  }
  std::vector<NilHeckeResult> results(cases.size());
  std::vector<std::pair<std::string, Job>> jobs;
  for (size_t k = 0; k < cases.size(); ++k) {
    const auto [l, n] = cases[k];
    const std::string name = "l=" + std::to_string(l) + " n=" + std::to_string(n);
    NilHeckeResult* slot = &results[k];
    jobs.push_back({name, [=] {
                      *slot = cyclotomic_nilhecke(l, n);
                      if (n > l)
                        return std::vector<CheckResult>{check(name + " ZERO", slot->zero, slot->certificate)};
                      const bool ok = !slot->zero && slot->stabilized && slot->total() > 0;
                      return std::vector<CheckResult>{
                          check(name + " nonzero", ok, "total dim " + std::to_string(slot->total()))};
                    }});
  }
  collect(rep, jobs);
  json arr = json::array();
  for (const auto& r : results) arr.push_back(nilhecke_json(r));
  rep.data["cases"] = arr;
  return rep;
}

SuiteReport r_composite(const SuiteParams& p) {
  SuiteReport rep = make_report("r-composite", p);
  const KLRSetup s(p.cfg);
  std::vector<std::pair<std::string, Job>> jobs;
  for (int j = 0; j < s.c.rank(); ++j)
    for (const RootVec& beta : lattice_points(s.c.rank(), 0, 2)) {
      const std::string name = "j=" + s.c.label(j) + " beta=" + root_str(beta);
      auto r = s.r;
      const int degree = p.cfg.degree;
      jobs.push_back({name, [=] {
                        const RCompositeReport c = r_composite_check(*r, j, beta, degree);
                        return std::vector<CheckResult>{
                            check(name, c.pass, std::to_string(c.parts) + " blocks" + (c.detail.empty() ? "" : ", " + c.detail))};
                      }});
    }
  collect(rep, jobs);
  rep.data["degree"] = p.cfg.degree;
  return rep;
}

SuiteReport chi_mj(const SuiteParams& p) {
  SuiteReport rep = make_report("chi-mj", p);
  const CartanDatum c = p.cfg.datum();
  auto u = std::make_shared<UqFull>(c);
  auto r = std::make_shared<KLRAlgebra>(c, p.cfg.scalars);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j)
      if (i != j) pairs.push_back({i, j});
  std::vector<MjResult> results(pairs.size());
  std::vector<std::pair<std::string, Job>> jobs;
  for (size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    const std::string name = "(i,j)=(" + c.label(i) + "," + c.label(j) + ")";
    MjResult* slot = &results[k];
    const int degree = p.cfg.degree;
    jobs.push_back({name, [=] {
                      *slot = mj_char(*u, *r, i, j, degree);
                      const std::string sh = slot->shift ? "shift q^" + std::to_string(*slot->shift) : "no shift found";
                      std::vector<CheckResult> out;
                      out.push_back(check(name + " through degree " + std::to_string(degree), slot->truncated,
                                          sh + (slot->detail.empty() ? "" : ", " + slot->detail)));
                      if (slot->reconstructed)
                        out.push_back(check(name + " exact", slot->exact, sh));
                      return out;
                    }});
  }
  collect(rep, jobs);
  json arr = json::array();
  for (size_t k = 0; k < results.size(); ++k) {
    const MjResult& m = results[k];
    json e = {{"i", m.i + 1}, {"j", m.j + 1}, {"n", m.n}, {"reconstructed", m.reconstructed},
              {"exact", m.exact}, {"truncated", m.truncated}, {"expected", to_json(m.expected)}};
    if (m.shift) e["shift"] = *m.shift;
    if (m.reconstructed) e["chi"] = to_json(m.chi);
    e["characters"] = to_json(m.chars);
    arr.push_back(e);
  }
  rep.data["degree"] = p.cfg.degree;
  rep.data["pairs"] = arr;
  return rep;
}

SuiteReport chi_anchor(const SuiteParams& p) {
  SuiteReport rep = make_report("chi-anchor", p);
  const CartanDatum c = p.cfg.datum();
  UqMinus m(c);
  KLRAlgebra r(c, p.cfg.scalars);
  for (int i = 0; i < c.rank(); ++i) {
    const ChiSolveResult s = chi_solve(m, regular_character(r, make_word({i}), 0, p.cfg.degree));
    rep.checks.push_back(check("chi(R(alpha_" + c.label(i) + ")) = f_" + c.label(i), s.ok && m.equal(s.chi, m.gen(i)),
                               s.residual));
  }
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j) {
      const RootVec beta = RootVec::simple(c.rank(), i) + RootVec::simple(c.rank(), j);
      const ResCheck rc = res_check(m, r, i, beta);
      rep.checks.push_back(check("restriction e(" + c.label(i) + ",*) on R(" + root_str(beta) + ")",
                                 rc.pass && rc.compared > 0,
                                 std::to_string(rc.compared) + " entries" + (rc.detail.empty() ? "" : ", " + rc.detail)));
    }
  return rep;
}

}  // namespace

bool SuiteReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all = {
      {"braid-relations", "The automorphisms T_i satisfy the braid relations", braid_relations},
      {"reduced-words", "T_w is independent of the choice of the reduced word", reduced_words},
      {"serre", "The quantum Serre elements vanish in U^-", serre},
      {"kernels", "U_i = Ker r_i and _iU = Ker _ir contain T_i(f_j) and T_i^-1(f_j)", kernels},
      {"bimodule", "T_i restricts to an isomorphism of U_q(p_i)-bimodules between _iU and U_i", bimodule},
      {"uj-orientation", "u_j = ad_{f_i}^(-a_ij)(f_j)", uj_orientation},
      {"parabolic-dims", "V_J(Lambda) for J = I has the weight multiplicities of V(Lambda)", parabolic_dims},
      {"form-nondegeneracy", "V_J(Lambda) carries a nondegenerate symmetric bilinear form", form_nondegeneracy},
      {"klr-relations", "The polynomial representation satisfies the defining relations of R(beta)", klr_relations},
      {"nf-oracle", "Normal-form multiplication agrees with the polynomial representation", nf_oracle},
      {"hilbert", "Normal-form monomials form a basis with the expected graded dimension", hilbert},
      {"idempotents", "b_+, b_-, b'_+, b'_- are idempotents and x_n induces b'_- R = b_+ R", idempotents},
      {"demazure", "tau_{w_n} f tau_k = tau_{w_n} d_k(f)", demazure},
      {"nilhecke-vanishing", "The cyclotomic nil-Hecke algebra R^l(n alpha) is zero for n > l", nilhecke_vanishing},
      {"r-composite", "The composite of R-matrices on {}^{J,0}R(alpha_j + beta) coincides with multiplication by A",
       r_composite},
      {"chi-mj", "chi(M_j) = ad_{f_i}^(-a_ij)(f_j)", chi_mj},
      {"chi-anchor", "chi(R(alpha_i)) = f_i", chi_anchor},
  };
  return all;
}

const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& p) {
  const SuiteInfo* s = find_suite(name);
  if (!s) throw std::invalid_argument("unknown suite '" + name + "'");
  p.cfg.validate();
  return s->run(p);
}

json to_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e = {{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  return {{"suite", r.suite},        {"certifies", r.certifies},   {"datum", r.datum},
          {"pass", r.pass()},        {"failures", r.failures()},   {"checks", checks},
          {"data", r.data}};
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream os;
  os << r.suite << " [" << r.datum << "]: " << r.certifies << "\n";
  for (const auto& c : r.checks) {
    os << (c.pass ? "  PASS  " : "  FAIL  ") << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << (r.pass() ? "PASS" : "FAIL") << ": " << r.checks.size() - r.failures() << "/" << r.checks.size()
     << " checks\n";
  return os.str();
}

std::vector<std::vector<CheckResult>> run_parallel(const std::vector<Job>& jobs) {
  std::vector<std::vector<CheckResult>> out(jobs.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(jobs.size())));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k; (k = next++) < jobs.size();) {
      try {
        out[k] = jobs[k]();
      } catch (const std::exception& e) {
        out[k] = {check("job " + std::to_string(k), false, std::string("error: ") + e.what())};
      }
    }
  };
  if (workers == 1) {
    worker();
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  pool.clear();
  return out;
}

}  // namespace klrbraid
