#include "klrbraid/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "klrbraid/linalg.hpp"

namespace klrbraid {

Word make_word(std::initializer_list<int> letters) {
  return make_word(std::vector<int>(letters));
}

Word make_word(const std::vector<int>& letters) {
  Word w;
  w.reserve(letters.size());
  for (int l : letters) w.push_back(static_cast<char>(l));
  return w;
}

std::vector<int> word_letters(const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (char c : w) out.push_back(static_cast<int>(c));
  return out;
}

// -------------------------------------------------------------------- RootVec

RootVec RootVec::simple(int rank, int i) {
  RootVec r(rank);
  r.c_[i] = 1;
  return r;
}

RootVec RootVec::of_word(int rank, const Word& w) {
  RootVec r(rank);
  for (char c : w) r.c_[static_cast<int>(c)] += 1;
  return r;
}

int RootVec::height() const {
  int h = 0;
  for (int x : c_) h += x;
  return h;
}

bool RootVec::is_nonneg() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
}

bool RootVec::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

RootVec& RootVec::operator+=(const RootVec& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RootVec& RootVec::operator-=(const RootVec& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

std::string RootVec::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- CartanDatum

CartanDatum::CartanDatum(std::vector<std::string> labels, std::vector<std::vector<int>> gcm,
                         std::vector<int> symmetrizers)
    : name_("custom"), labels_(std::move(labels)), gcm_(std::move(gcm)), sym_(std::move(symmetrizers)) {
  const size_t n = gcm_.size();
  if (n == 0) throw std::invalid_argument("Cartan datum: empty index set");
  if (labels_.size() != n || sym_.size() != n)
    throw std::invalid_argument("Cartan datum: labels/symmetrizers do not match matrix size");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != n) throw std::invalid_argument("Cartan datum: duplicate labels");
  for (size_t i = 0; i < n; ++i) {
    if (gcm_[i].size() != n) throw std::invalid_argument("Cartan datum: matrix is not square");
    if (sym_[i] <= 0) throw std::invalid_argument("Cartan datum: symmetrizers must be positive");
  }
  for (size_t i = 0; i < n; ++i) {
    if (gcm_[i][i] != 2) throw std::invalid_argument("Cartan datum: diagonal entries must be 2");
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (gcm_[i][j] > 0) throw std::invalid_argument("Cartan datum: off-diagonal entries must be <= 0");
      if ((gcm_[i][j] == 0) != (gcm_[j][i] == 0))
        throw std::invalid_argument("Cartan datum: a_ij = 0 must imply a_ji = 0");
      if (sym_[i] * gcm_[i][j] != sym_[j] * gcm_[j][i])
        throw std::invalid_argument("Cartan datum: d_i a_ij is not symmetric");
    }
  }
}

CartanDatum CartanDatum::from_type(const std::string& name) {
  auto make = [&](std::vector<std::vector<int>> a, std::vector<int> d) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < a.size(); ++i) labels.push_back(std::to_string(i + 1));
    CartanDatum c(std::move(labels), std::move(a), std::move(d));
    c.name_ = name;
    return c;
  };
  if (name == "A1") return make({{2}}, {1});
  if (name == "A1xA1") return make({{2, 0}, {0, 2}}, {1, 1});
  if (name == "A2") return make({{2, -1}, {-1, 2}}, {1, 1});
  if (name == "B2") return make({{2, -1}, {-2, 2}}, {2, 1});
  if (name == "C2") return make({{2, -2}, {-1, 2}}, {1, 2});
  if (name == "G2") return make({{2, -1}, {-3, 2}}, {3, 1});
  if (name == "A3") return make({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1});
  throw std::invalid_argument("unknown Cartan type: " + name);
}

int CartanDatum::index_of(const std::string& label) const {
  for (int i = 0; i < rank(); ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("unknown index label: " + label);
}

int CartanDatum::bilin(const RootVec& b, const RootVec& c) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (!b[i]) continue;
    for (int j = 0; j < rank(); ++j) s += b[i] * c[j] * sym_[i] * gcm_[i][j];
  }
  return s;
}

int CartanDatum::bilin_simple(int i, const RootVec& b) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += b[j] * gcm_[i][j];
  return s * sym_[i];
}

int CartanDatum::pairing(int i, const RootVec& b) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += gcm_[i][j] * b[j];
  return s;
}

int CartanDatum::coxeter_m(int i, int j) const {
  if (i == j) return 1;
  switch (gcm_[i][j] * gcm_[j][i]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

RootVec CartanDatum::reflect(int i, const RootVec& b) const {
  RootVec r = b;
  r[i] -= pairing(i, b);
  return r;
}

Weight CartanDatum::reflect(int i, const Weight& w) const {
  std::vector<int> p = w.pairings();
  int c = w[i];
  for (int j = 0; j < rank(); ++j) p[j] -= c * gcm_[j][i];
  return Weight(std::move(p));
}

RootVec CartanDatum::weyl_act(const Word& w, const RootVec& b) const {
  RootVec r = b;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = reflect(static_cast<int>(*it), r);
  return r;
}

Weight CartanDatum::weyl_act(const Word& w, const Weight& lambda) const {
  Weight r = lambda;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = reflect(static_cast<int>(*it), r);
  return r;
}

Weight CartanDatum::weight_of(const RootVec& b) const {
  std::vector<int> p(rank());
  for (int i = 0; i < rank(); ++i) p[i] = pairing(i, b);
  return Weight(std::move(p));
}

std::optional<int> CartanDatum::non_reduced_witness(const Word& w) const {
  // l(u s_i) > l(u) iff u(alpha_i) > 0
  for (size_t p = 0; p < w.size(); ++p) {
    RootVec r = weyl_act(w.substr(0, p), RootVec::simple(rank(), w[p]));
    if (!r.is_nonneg()) return static_cast<int>(p);
  }
  return std::nullopt;
}

std::vector<Word> CartanDatum::reduced_words(const Word& w, int length_bound) const {
  if (length_bound > 8) throw BoundExceeded("reduced_words: length bound above 8");
  if (static_cast<int>(w.size()) > length_bound)
    throw BoundExceeded("reduced_words: word longer than bound " + std::to_string(length_bound));
  if (!is_reduced(w)) throw std::invalid_argument("reduced_words: input word is not reduced");
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    const int len = static_cast<int>(cur.size());
    for (int p = 0; p + 1 < len; ++p) {
      int a = cur[p], b = cur[p + 1];
      if (a == b) continue;
      int m = coxeter_m(a, b);
      if (m == 0 || p + m > len) continue;
      bool alternating = true;
      for (int k = 0; k < m && alternating; ++k) alternating = cur[p + k] == (k % 2 ? b : a);
      if (!alternating) continue;
      Word next = cur;
      for (int k = 0; k < m; ++k) next[p + k] = static_cast<char>(k % 2 ? a : b);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

bool CartanDatum::is_finite_type() const {
  // symmetrized matrix positive definite; check leading principal minors
  for (int k = 1; k <= rank(); ++k) {
    Matrix<mpq_class> m(k, std::vector<mpq_class>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m[i][j] = bilin_simple(i, j);
    mpq_class det = 1;
    for (int c = 0; c < k; ++c) {
      int p = -1;
      for (int r = c; r < k; ++r)
        if (m[r][c] != 0) {
          p = r;
          break;
        }
      if (p < 0) return false;
      if (p != c) {
        std::swap(m[p], m[c]);
        det = -det;
      }
      det *= m[c][c];
      for (int r = c + 1; r < k; ++r) {
        mpq_class f = m[r][c] / m[c][c];
        for (int j = c; j < k; ++j) m[r][j] -= f * m[c][j];
      }
    }
    if (det <= 0) return false;
  }
  return true;
}

std::vector<RootVec> CartanDatum::positive_roots(int bound) const {
  std::set<RootVec> roots;
  std::deque<RootVec> queue;
  for (int i = 0; i < rank(); ++i) {
    roots.insert(RootVec::simple(rank(), i));
    queue.push_back(RootVec::simple(rank(), i));
  }
  while (!queue.empty()) {
    RootVec r = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank(); ++i) {
      RootVec s = reflect(i, r);
      if (!s.is_nonneg() || s.is_zero()) continue;
      if (roots.insert(s).second) {
        if (static_cast<int>(roots.size()) > bound)
          throw BoundExceeded("positive_roots: more than " + std::to_string(bound) + " roots");
        queue.push_back(s);
      }
    }
  }
  std::vector<RootVec> out(roots.begin(), roots.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const RootVec& x, const RootVec& y) { return x.height() < y.height(); });
  return out;
}

bool CartanDatum::is_root(const RootVec& b) const {
  RootVec pos = b;
  if (!pos.is_nonneg()) pos = -1 * pos;
  if (!pos.is_nonneg()) return false;
  for (const auto& r : positive_roots()) {
    if (r.height() > pos.height()) break;
    if (r == pos) return true;
  }
  return false;
}

std::string CartanDatum::word_to_string(const Word& w) const {
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += labels_[static_cast<int>(w[k])];
  }
  return s;
}

}  // namespace klrbraid
