#include "klrbraid/klrchar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "klrbraid/braidsym.hpp"
#include "klrbraid/klr_quotient.hpp"
#include "klrbraid/linalg.hpp"

namespace klrbraid {

namespace {

std::string word_str(const Word& w) {
  std::string s;
  for (char c : w) s += std::to_string(c + 1);
  return s.empty() ? "()" : s;
}

std::optional<int> lowest_nonzero(const GradedSeries& s) {
  for (int k = s.lower; k <= s.upper; ++k)
    if (s.at(k) != 0) return k;
  return std::nullopt;
}

}  // namespace

RationalQ hilbert_full(const KLRAlgebra& r, const Word& source, const Word& target) {
  const int n = static_cast<int>(source.size());
  if (n > kMaxHilbertHeight) throw BoundExceeded("hilbert_full: height bound exceeded");
  if (r.weight(source) != r.weight(target)) return RationalQ();
  LaurentPoly num;
  for (const auto& p : perm_table(n).perms)
    if (permute_sequence(p, source) == target) num.add_term(r.tau_degree(source, p), 1);
  return RationalQ(num) / RationalQ(hilbert_denominator(r.datum(), target));
}

LaurentPoly hilbert_denominator(const CartanDatum& c, const Word& nu) {
  LaurentPoly den(1);
  for (char k : nu) den *= LaurentPoly(1) - LaurentPoly::q_pow(c.bilin_simple(k, k));
  return den;
}

GradedSeries hilbert_count(const KLRAlgebra& r, const Word& source, const Word& target, int lower, int upper) {
  GradedSeries s;
  s.lower = lower;
  s.upper = upper;
  for (int d = lower; d <= upper; ++d)
    s.coeffs.emplace_back(static_cast<unsigned long>(nf_monomials(r, target, source, d).size()));
  return s;
}

CharVector regular_character(const KLRAlgebra& r, const Word& column, int lower, int upper) {
  CharVector v{r.weight(column), {}};
  for (const auto& nu : r.sequences(v.beta)) v.series[nu] = series_truncate(hilbert_full(r, column, nu), lower, upper);
  return v;
}

ChiSolveResult chi_solve(const UqMinus& m, const CharVector& c) {
  ChiSolveResult res;
  const auto wb = m.basis(c.beta);
  std::vector<RationalQ> rhs;
  Matrix<RationalQ> a;
  for (const auto& nu : wb->words) {
    auto it = c.series.find(nu);
    if (it == c.series.end()) {
      rhs.emplace_back();
    } else if (!it->second.closed_form) {
      res.residual = "no closed form for word " + word_str(nu);
      return res;
    } else {
      rhs.push_back(*it->second.closed_form);
    }
    std::vector<RationalQ> row;
    for (int p : wb->pivots) row.push_back(m.gram_words(nu, wb->words[p]));
    a.push_back(std::move(row));
  }
  if (wb->pivots.empty()) {
    const bool zero = std::all_of(rhs.begin(), rhs.end(), [](const RationalQ& x) { return x.is_zero(); });
    res.ok = zero;
    if (!zero) res.residual = "nonzero character on a zero weight space";
    return res;
  }
  auto x = solve(a, rhs);
  if (!x) {
    res.residual = "character is not in the image of the pairing";
    return res;
  }
  res.chi = m.from_coords(c.beta, *x);
  res.ok = true;
  return res;
}

bool reconstruct(const CartanDatum& c, CharVector& v) {
  bool all = true;
  for (auto& [nu, s] : v.series) {
    const LaurentPoly full = hilbert_denominator(c, nu);
    // divisors prod_w (1 - q^w)^{e_w} of the full denominator, smallest degree first
    std::map<int, int> count;
    for (char k : nu) ++count[c.bilin_simple(k, k)];
    std::vector<std::pair<int, LaurentPoly>> dens{{0, LaurentPoly(1)}};
    for (const auto& [w, cnt] : count) {
      std::vector<std::pair<int, LaurentPoly>> next;
      for (const auto& [deg, d] : dens) {
        LaurentPoly f = d;
        for (int e = 0; e <= cnt; ++e) {
          next.emplace_back(deg + e * w, f);
          f *= LaurentPoly(1) - LaurentPoly::q_pow(w);
        }
      }
      dens = std::move(next);
    }
    std::stable_sort(dens.begin(), dens.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    s.closed_form.reset();
    for (const auto& [deg, den] : dens) {
      LaurentPoly num;
      for (int k = s.lower; k <= s.upper; ++k)
        for (const auto& [e, dc] : den.terms())
          if (k + e <= s.upper) num.add_term(k + e, mpq_class(s.at(k)) * dc);
      // the numerator must vanish on a top window as long as the full denominator
      if (num.is_zero() || num.max_degree() <= s.upper - full.max_degree()) {
        s.closed_form = RationalQ(num) / RationalQ(den);
        break;
      }
    }
    all = all && s.closed_form.has_value();
  }
  return all;
}

MjResult mj_char(const UqFull& u, const KLRAlgebra& r, int i, int j, int D) {
  const CartanDatum& c = r.datum();
  const UqMinus& m = u.minus();
  if (i == j) throw std::invalid_argument("mj_char: i == j");
  if (D > kMaxMjDegree) throw BoundExceeded("mj_char: degree bound exceeded");
  MjResult res;
  res.i = i;
  res.j = j;
  res.n = -c.a(i, j);
  res.upper = D;
  const int n = res.n;
  const Word src = Word(n, static_cast<char>(i)) + Word(1, static_cast<char>(j));
  const RootVec beta = r.weight(src);
  res.chars.beta = beta;
  auto pure = u.as_pure_f(ad_divided(u, i, AdVariant::F, n, u.from_f(m.gen(j))));
  if (!pure) throw std::logic_error("mj_char: ad_{f_i}^{(n)}(f_j) is not in U^-");
  res.expected = *pure;

  const int sh = c.d(i) * n * (n - 1) / 2;
  const KLRElem ej = r.e(Word(1, static_cast<char>(j)));
  const KLRElem b = n == 0 ? ej : r.boxtimes(special_idempotent(r, SpecialKind::BMinus, n, i), ej);
  GradedIdeal ideal(r, two_sided_generators(r, beta, pattern_idempotent(r, beta, Word{}, Word(1, static_cast<char>(i)))));
  const auto seqs = r.sequences(beta);
  int lo = D;
  for (const auto& nu : seqs)
    if (auto d = block_min_degree(r, nu, src)) lo = std::min(lo, *d);
  res.lower = lo + sh;
  for (const auto& nu : seqs) {
    GradedSeries s;
    s.lower = res.lower;
    s.upper = D;
    const auto first = block_min_degree(r, nu, src);
    for (int k = lo; k + sh <= D; ++k) {
      long dim = 0;
      if (first && k >= *first) {
        TermIndex idx;
        SparseEchelon full, sub;
        for (const auto& t : nf_monomials(r, nu, src, k)) {
          KLRElem mono(beta.height());
          mono.add_term(t, 1);
          full.insert(idx.vec(r.mul(mono, b)));
        }
        for (const auto& y : ideal.basis(nu, src, k)) sub.insert(idx.vec(r.mul(y, b)));
        dim = static_cast<long>(full.rank()) - static_cast<long>(sub.rank());
      }
      s.coeffs.emplace_back(dim);
    }
    res.chars.series[nu] = std::move(s);
  }

  // shift from the lowest degree of the source component
  std::map<Word, RationalQ> pairing;
  for (const auto& nu : seqs) pairing[nu] = m.gram(FWordElem::word(nu), res.expected);
  const auto got_low = lowest_nonzero(res.chars.series[src]);
  const auto want_low = lowest_nonzero(series_truncate(pairing[src], res.lower - 64, D + 64));
  if (got_low && want_low) res.shift = *got_low - *want_low;
  if (!res.shift) {
    res.detail = "no nonzero degree in the truncation window";
    return res;
  }
  res.truncated = true;
  for (const auto& nu : seqs) {
    const GradedSeries want = series_truncate(pairing[nu].times_q_pow(*res.shift), res.lower, D);
    if (!(want == res.chars.series[nu])) {
      res.truncated = false;
      res.detail = "series mismatch on word " + word_str(nu);
    }
  }
  res.reconstructed = reconstruct(c, res.chars);
  if (res.reconstructed) {
    const ChiSolveResult sol = chi_solve(m, res.chars);
    if (sol.ok) {
      res.chi = sol.chi;
      res.exact = m.equal(res.chi, res.expected * RationalQ::q_pow(*res.shift));
      if (!res.exact) res.detail = "reconstructed character differs from the shifted target";
    } else {
      res.detail = sol.residual;
    }
  } else if (res.detail.empty()) {
    res.detail = "truncation too small for reconstruction";
  }
  return res;
}

ResCheck res_check(const UqMinus& m, const KLRAlgebra& r, int i, const RootVec& beta) {
  ResCheck out;
  out.pass = true;
  if (beta[i] == 0) return out;
  const RootVec rest = beta - RootVec::simple(beta.size(), i);
  const RationalQ scale = (RationalQ(1L) - m.qi_pow(i, 2)).inverse();
  for (const auto& mu : r.sequences(beta)) {
    const FWordElem d = m.ir_op(i, FWordElem::word(mu));
    for (const auto& nu : r.sequences(rest)) {
      const Word inu = Word(1, static_cast<char>(i)) + nu;
      ++out.compared;
      if (!(hilbert_full(r, mu, inu) == m.gram(FWordElem::word(nu), d) * scale)) {
        out.pass = false;
        out.detail = "mismatch at mu = " + word_str(mu) + ", nu = " + word_str(nu);
      }
    }
  }
  return out;
}

}  // namespace klrbraid
