#include "klrbraid/uqminus.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <mutex>
#include <random>

namespace klrbraid {

// ------------------------------------------------------------------ FWordElem

FWordElem FWordElem::word(Word w, RationalQ c) {
  FWordElem e;
  e.add_term(w, c);
  return e;
}

void FWordElem::add_term(const Word& w, const RationalQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RationalQ FWordElem::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RationalQ() : it->second;
}

FWordElem& FWordElem::operator+=(const FWordElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FWordElem& FWordElem::operator-=(const FWordElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FWordElem& FWordElem::operator*=(const RationalQ& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

FWordElem FWordElem::operator-() const {
  FWordElem r = *this;
  for (auto& [w, x] : r.terms_) x = -x;
  return r;
}

FWordElem operator*(const FWordElem& a, const FWordElem& b) {
  FWordElem r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
  return r;
}

std::optional<RootVec> FWordElem::homogeneous_weight(int rank) const {
  if (terms_.empty()) return RootVec(rank);
  RootVec b = RootVec::of_word(rank, terms_.begin()->first);
  for (const auto& [w, c] : terms_)
    if (RootVec::of_word(rank, w) != b) return std::nullopt;
  return b;
}

// -------------------------------------------------------------------- words

std::vector<Word> words_of_weight(const RootVec& beta) {
  std::vector<Word> out;
  std::vector<int> left = beta.coords();
  Word cur;
  const int n = beta.height();
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (size_t i = 0; i < left.size(); ++i) {
      if (!left[i]) continue;
      --left[i];
      cur.push_back(static_cast<char>(i));
      rec();
      cur.pop_back();
      ++left[i];
    }
  };
  rec();
  return out;
}

namespace {

// Kostant partition count of beta over the given positive roots.
long kostant_count(const std::vector<RootVec>& roots, const RootVec& beta) {
  std::map<std::pair<size_t, RootVec>, long> memo;
  std::function<long(size_t, const RootVec&)> rec = [&](size_t k, const RootVec& b) -> long {
    if (b.is_zero()) return 1;
    if (k == roots.size()) return 0;
    auto key = std::make_pair(k, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long total = 0;
    RootVec rest = b;
    while (rest.is_nonneg()) {
      total += rec(k + 1, rest);
      rest -= roots[k];
    }
    memo.emplace(key, total);
    return total;
  };
  return rec(0, beta);
}

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

// Lexicographic rank of a word among the words of its weight.
class WordRanker {
 public:
  explicit WordRanker(int rank) : rank_(rank) {
    for (int n = 0; n <= kMaxLen; ++n) {
      binom_[n][0] = 1;
      for (int k = 1; k <= n; ++k) binom_[n][k] = binom_[n - 1][k - 1] + (k < n ? binom_[n - 1][k] : 0);
    }
  }

  std::uint64_t count(const std::vector<int>& c) const {
    std::uint64_t r = 1;
    int total = 0;
    for (int x : c) {
      total += x;
      r *= binom_[total][x];
    }
    return r;
  }

  std::uint64_t rank_of(const Word& w, std::vector<int> c) const {
    std::uint64_t r = 0;
    for (char l : w) {
      for (int x = 0; x < l; ++x) {
        if (!c[x]) continue;
        --c[x];
        r += count(c);
        ++c[x];
      }
      --c[l];
    }
    return r;
  }

  int rank() const { return rank_; }

 private:
  static constexpr int kMaxLen = 64;
  int rank_;
  std::uint64_t binom_[kMaxLen + 1][kMaxLen + 1] = {};
};

// Integer Laurent polynomial with a dense coefficient array.
struct DenseLaurent {
  int low = 0;
  std::vector<__int128> c;

  void add_shifted(const DenseLaurent& o, int shift) {
    if (o.c.empty()) return;
    const int olow = o.low + shift;
    if (c.empty()) {
      low = olow;
      c = o.c;
      return;
    }
    const int new_low = std::min(low, olow);
    const int new_high = std::max(low + static_cast<int>(c.size()), olow + static_cast<int>(o.c.size()));
    if (new_low < low || new_high > low + static_cast<int>(c.size())) {
      std::vector<__int128> grown(new_high - new_low, 0);
      std::copy(c.begin(), c.end(), grown.begin() + (low - new_low));
      c = std::move(grown);
      low = new_low;
    }
    for (size_t k = 0; k < o.c.size(); ++k) c[olow - low + k] += o.c[k];
  }
};

// Pairing of a fixed word w with every word of its weight: row[v] = (w, v) up to
// the gram factor. Built from the last letter of w by inserting letters; an
// inserted letter a at position p contributes q^{-sum_{l<p} (alpha_a, alpha_{v_l})}.
template <class Value, class Shift>
std::vector<Value> pairing_row(const CartanDatum& c, const WordRanker& ranker, const Word& w, Shift add_shifted) {
  std::vector<int> counts(c.rank(), 0);
  std::vector<Word> cur_words{Word{}};
  std::vector<Value> cur(1);
  cur[0] = Value{};
  add_shifted(cur[0], Value{}, 0, true);
  for (size_t k = w.size(); k-- > 0;) {
    const int a = w[k];
    ++counts[a];
    const std::uint64_t n = ranker.count(counts);
    std::vector<Word> next_words(n);
    std::vector<Value> next(n);
    for (size_t idx = 0; idx < cur_words.size(); ++idx) {
      const Word& v = cur_words[idx];
      int s = 0;
      for (size_t p = 0; p <= v.size(); ++p) {
        Word ins = v;
        ins.insert(ins.begin() + static_cast<long>(p), static_cast<char>(a));
        const std::uint64_t r = ranker.rank_of(ins, counts);
        if (next_words[r].empty()) next_words[r] = std::move(ins);
        add_shifted(next[r], cur[idx], -s, false);
        if (p < v.size()) s += c.bilin_simple(a, v[p]);
      }
    }
    cur_words = std::move(next_words);
    cur = std::move(next);
  }
  return cur;
}

std::vector<std::uint64_t> numeric_row(const CartanDatum& c, const WordRanker& ranker, const Word& w,
                                       std::uint64_t qv) {
  const std::uint64_t qinv = powmod(qv, kPrime - 2);
  std::map<int, std::uint64_t> pow_cache;
  auto qpow = [&](int e) {
    auto it = pow_cache.find(e);
    if (it != pow_cache.end()) return it->second;
    const std::uint64_t v = e >= 0 ? powmod(qv, e) : powmod(qinv, -e);
    pow_cache.emplace(e, v);
    return v;
  };
  return pairing_row<std::uint64_t>(c, ranker, w,
                                    [&](std::uint64_t& dst, const std::uint64_t& src, int shift, bool init) {
                                      if (init) {
                                        dst = 1;
                                        return;
                                      }
                                      dst = (dst + mulmod(src, qpow(shift))) % kPrime;
                                    });
}

PackedLaurentRow exact_row(const CartanDatum& c, const WordRanker& ranker, const Word& w) {
  const auto row = pairing_row<DenseLaurent>(c, ranker, w,
                                             [](DenseLaurent& dst, const DenseLaurent& src, int shift, bool init) {
                                               if (init) {
                                                 dst.low = 0;
                                                 dst.c = {1};
                                                 return;
                                               }
                                               dst.add_shifted(src, shift);
                                             });
  PackedLaurentRow out;
  constexpr __int128 kMax = std::numeric_limits<long long>::max();
  for (const auto& d : row) {
    size_t lo = 0, hi = d.c.size();
    while (lo < hi && d.c[lo] == 0) ++lo;
    while (hi > lo && d.c[hi - 1] == 0) --hi;
    std::vector<long long> coeffs;
    for (size_t k = lo; k < hi; ++k) {
      if (d.c[k] > kMax || d.c[k] < -kMax) throw BoundExceeded("pairing coefficient exceeds 64 bits");
      coeffs.push_back(static_cast<long long>(d.c[k]));
    }
    out.push(d.low + static_cast<int>(lo), coeffs);
  }
  return out;
}

// Pairing of two words through the recursion on the first letter.
LaurentPoly word_pairing(const CartanDatum& c, const Word& w, const Word& v) {
  std::map<std::pair<Word, Word>, LaurentPoly> memo;
  std::function<LaurentPoly(const Word&, const Word&)> pair = [&](const Word& x, const Word& y) -> LaurentPoly {
    if (x.empty()) return LaurentPoly(1L);
    auto key = std::make_pair(x, y);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int a = x[0];
    const Word tail = x.substr(1);
    LaurentPoly acc;
    int s = 0;
    for (size_t p = 0; p < y.size(); ++p) {
      const int l = y[p];
      if (l == a) {
        Word rest = y;
        rest.erase(p, 1);
        const LaurentPoly sub = pair(tail, rest);
        for (const auto& [k, cf] : sub.terms()) acc.add_term(k - s, cf);
      }
      s += c.bilin_simple(a, l);
    }
    memo.emplace(std::move(key), acc);
    return acc;
  };
  return pair(w, v);
}

}  // namespace

// -------------------------------------------------------------------- UqMinus

const Matrix<RationalQ>& WeightBasis::pivot_inverse() const {
  std::call_once(inverse_once_, [this] {
    const size_t d = pivots.size();
    if (d == 0) return;
    Matrix<RationalQ> sub(d, std::vector<RationalQ>(d));
    for (size_t a = 0; a < d; ++a)
      for (size_t b = 0; b < d; ++b) sub[a][b] = pivot_pairing(static_cast<int>(a), pivots[b]);
    auto inv = inverse(sub);
    if (!inv) throw std::logic_error("weight basis: pivot block is singular");
    pivot_inverse_ = std::move(*inv);
  });
  return pivot_inverse_;
}

void PackedLaurentRow::push(int low, const std::vector<long long>& coeffs) {
  low_.push_back(low);
  coeffs_.insert(coeffs_.end(), coeffs.begin(), coeffs.end());
  start_.push_back(coeffs_.size());
}

LaurentPoly PackedLaurentRow::get(size_t k) const {
  LaurentPoly p;
  for (size_t j = start_[k]; j < start_[k + 1]; ++j)
    if (coeffs_[j] != 0) p.add_term(low_[k] + static_cast<int>(j - start_[k]), mpq_class(static_cast<long>(coeffs_[j])));
  return p;
}

UqMinus::UqMinus(CartanDatum datum, int height_bound)
    : datum_(std::move(datum)), height_bound_(height_bound) {}

FWordElem UqMinus::divided_power(int i, int n) const {
  if (n < 0) return {};
  Word w(static_cast<size_t>(n), static_cast<char>(i));
  return FWordElem::word(w, RationalQ(quantum_factorial(n, datum_.d(i))).inverse());
}

FWordElem UqMinus::serre_element(int i, int j) const {
  if (i == j) throw std::invalid_argument("serre_element: i == j");
  const int m = 1 - datum_.a(i, j);
  FWordElem s;
  for (int k = 0; k <= m; ++k) {
    FWordElem t = divided_power(i, k) * gen(j) * divided_power(i, m - k);
    s += (k % 2 ? -t : t);
  }
  return s;
}

FWordElem UqMinus::ir_op(int i, const FWordElem& u) const {
  FWordElem r;
  for (const auto& [w, c] : u.terms()) {
    int s = 0;
    for (size_t p = 0; p < w.size(); ++p) {
      int l = w[p];
      if (l == i) {
        Word rest = w;
        rest.erase(p, 1);
        r.add_term(rest, c.times_q_pow(-s));
      }
      s += datum_.bilin_simple(i, l);
    }
  }
  return r;
}

FWordElem UqMinus::ri_op(int i, const FWordElem& u) const {
  FWordElem r;
  for (const auto& [w, c] : u.terms()) {
    int s = 0;
    for (size_t p = w.size(); p-- > 0;) {
      int l = w[p];
      if (l == i) {
        Word rest = w;
        rest.erase(p, 1);
        r.add_term(rest, c.times_q_pow(-s));
      }
      s += datum_.bilin_simple(i, l);
    }
  }
  return r;
}

std::shared_ptr<WeightBasis> UqMinus::build_basis(const RootVec& beta) const {
  auto wb = std::make_shared<WeightBasis>();
  wb->beta = beta;
  wb->words = words_of_weight(beta);
  for (size_t k = 0; k < wb->words.size(); ++k) wb->index.emplace(wb->words[k], static_cast<int>(k));

  RationalQ factor(1L);
  for (int i = 0; i < datum_.rank(); ++i) {
    RationalQ one_minus = RationalQ(1L) - RationalQ::q_pow(2 * datum_.d(i));
    for (int k = 0; k < beta[i]; ++k) factor /= one_minus;
  }
  wb->gram_factor = factor;

  const size_t n = wb->words.size();
  if (n == 0) return wb;
  const WordRanker ranker(datum_.rank());

  // Words i v with v a pivot of beta - alpha_i span; the lexicographically
  // greedy choice among them agrees with the greedy choice among all words.
  std::vector<Word> candidates;
  if (beta.height() <= 1) {
    candidates = wb->words;
  } else {
    for (int i = 0; i < datum_.rank(); ++i) {
      if (beta[i] == 0) continue;
      auto sub = basis(beta - RootVec::simple(datum_.rank(), i));
      for (int p : sub->pivots) candidates.push_back(static_cast<char>(i) + sub->words[p]);
    }
    std::sort(candidates.begin(), candidates.end());
  }

  bool certified = false;
  if (datum_.is_finite_type()) {
    // Rows independent at an evaluation point are independent over Q(q);
    // a count equal to the PBW dimension makes them a basis.
    const long expected = kostant_count(datum_.positive_roots(), beta);
    std::mt19937_64 rng(0x5eed ^ static_cast<std::uint64_t>(beta.height()));
    for (int attempt = 0; attempt < 4 && !certified; ++attempt) {
      const std::uint64_t qv = 2 + rng() % (kPrime - 3);
      std::vector<std::pair<size_t, std::vector<std::uint64_t>>> echelon;  // (pivot column, row with 1 there)
      std::vector<int> chosen;
      for (const Word& w : candidates) {
        if (static_cast<long>(chosen.size()) == expected) break;
        std::vector<std::uint64_t> row = numeric_row(datum_, ranker, w, qv);
        for (const auto& [col, e] : echelon) {
          const std::uint64_t f = row[col];
          if (!f) continue;
          for (size_t k = 0; k < n; ++k)
            if (e[k]) row[k] = (row[k] + kPrime - mulmod(f, e[k])) % kPrime;
        }
        size_t col = 0;
        while (col < n && row[col] == 0) ++col;
        if (col == n) continue;
        const std::uint64_t inv = powmod(row[col], kPrime - 2);
        for (auto& x : row) x = mulmod(x, inv);
        echelon.emplace_back(col, std::move(row));
        chosen.push_back(wb->index.at(w));
      }
      if (static_cast<long>(chosen.size()) == expected) {
        wb->pivots = std::move(chosen);
        certified = true;
      }
    }
  }
  if (certified) {
    for (int p : wb->pivots) wb->pivot_rows.push_back(exact_row(datum_, ranker, wb->words[p]));
  } else {
    std::vector<PackedLaurentRow> rows;
    Matrix<RationalQ> m;
    for (const Word& w : candidates) {
      rows.push_back(exact_row(datum_, ranker, w));
      std::vector<RationalQ> r(n);
      for (size_t k = 0; k < n; ++k)
        if (!rows.back().is_zero(k)) r[k] = RationalQ(rows.back().get(k));
      m.push_back(std::move(r));
    }
    for (int k : independent_rows(m)) {
      wb->pivots.push_back(wb->index.at(candidates[k]));
      wb->pivot_rows.push_back(std::move(rows[k]));
    }
  }

  return wb;
}

std::shared_ptr<const WeightBasis> UqMinus::basis(const RootVec& beta) const {
  if (!beta.is_nonneg()) throw std::invalid_argument("basis: weight is not in Q+");
  if (beta.height() > height_bound_)
    throw BoundExceeded("height " + std::to_string(beta.height()) + " exceeds bound " +
                        std::to_string(height_bound_));
  {
    std::shared_lock lock(mu_);
    if (auto it = bases_.find(beta); it != bases_.end()) return it->second;
  }
  auto built = build_basis(beta);
  std::unique_lock lock(mu_);
  auto [it, inserted] = bases_.try_emplace(beta, std::move(built));
  return it->second;
}

RationalQ UqMinus::gram_words(const Word& a, const Word& b) const {
  RootVec wa = RootVec::of_word(datum_.rank(), a);
  if (wa != RootVec::of_word(datum_.rank(), b)) return {};
  auto wb = basis(wa);
  const int ia = wb->index.at(a), ib = wb->index.at(b);
  for (size_t k = 0; k < wb->pivots.size(); ++k) {
    if (wb->pivots[k] == ia) return wb->gram_factor * wb->pivot_pairing(static_cast<int>(k), ib);
    if (wb->pivots[k] == ib) return wb->gram_factor * wb->pivot_pairing(static_cast<int>(k), ia);
  }
  return wb->gram_factor * RationalQ(word_pairing(datum_, a, b));
}

RationalQ UqMinus::gram(const FWordElem& a, const FWordElem& b) const {
  RationalQ total;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      RationalQ g = gram_words(wa, wb);
      if (!g.is_zero()) total += ca * cb * g;
    }
  return total;
}

std::map<RootVec, FWordElem> UqMinus::split_by_weight(const FWordElem& u) const {
  std::map<RootVec, FWordElem> parts;
  for (const auto& [w, c] : u.terms()) parts[RootVec::of_word(datum_.rank(), w)].add_term(w, c);
  return parts;
}

namespace {

// Pairings of a homogeneous element with the pivot words; all vanish iff it is zero.
std::vector<RationalQ> pivot_pairings(const WeightBasis& wb, const FWordElem& u) {
  const size_t d = wb.pivots.size();
  std::vector<RationalQ> pv(d);
  for (const auto& [w, c] : u.terms()) {
    auto it = wb.index.find(w);
    if (it == wb.index.end()) throw std::invalid_argument("coords: term of the wrong weight");
    for (size_t a = 0; a < d; ++a)
      if (!wb.pivot_rows[a].is_zero(it->second)) pv[a] += c * wb.pivot_pairing(static_cast<int>(a), it->second);
  }
  return pv;
}

}  // namespace

std::vector<RationalQ> UqMinus::coords(const RootVec& beta, const FWordElem& u) const {
  auto wb = basis(beta);
  const size_t d = wb->pivots.size();
  const std::vector<RationalQ> pv = pivot_pairings(*wb, u);
  std::vector<RationalQ> out(d);
  if (std::all_of(pv.begin(), pv.end(), [](const RationalQ& x) { return x.is_zero(); })) return out;
  const Matrix<RationalQ>& inv = wb->pivot_inverse();
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b)
      if (!pv[b].is_zero() && !inv[a][b].is_zero()) out[a] += inv[a][b] * pv[b];
  return out;
}

FWordElem UqMinus::from_coords(const RootVec& beta, const std::vector<RationalQ>& c) const {
  auto wb = basis(beta);
  FWordElem r;
  for (size_t a = 0; a < c.size(); ++a) r.add_term(wb->words[wb->pivots[a]], c[a]);
  return r;
}

FWordElem UqMinus::reduce(const FWordElem& u) const {
  FWordElem r;
  for (const auto& [beta, part] : split_by_weight(u)) r += from_coords(beta, coords(beta, part));
  return r;
}

bool UqMinus::is_zero(const FWordElem& u) const {
  for (const auto& [beta, part] : split_by_weight(u))
    for (const auto& c : pivot_pairings(*basis(beta), part))
      if (!c.is_zero()) return false;
  return true;
}

}  // namespace klrbraid
