#include "klrbraid/parabolic.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

namespace klrbraid {

bool VJVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const RationalQ& c) { return c.is_zero(); });
}

ParabolicModule::ParabolicModule(const UqFull& u, std::vector<bool> in_j, Weight lambda)
    : u_(u), in_j_(std::move(in_j)), lambda_(std::move(lambda)) {
  const int r = u_.rank();
  if (static_cast<int>(in_j_.size()) != r || lambda_.size() != r)
    throw std::invalid_argument("parabolic module: J or Lambda has the wrong size");
  for (int j = 0; j < r; ++j)
    if (in_j_[j] && lambda_[j] < 0) throw std::invalid_argument("parabolic module: Lambda is not J-dominant");
}

std::shared_ptr<VJSlice> ParabolicModule::build(const RootVec& beta) const {
  const UqMinus& m = u_.minus();
  auto wb = m.basis(beta);
  auto s = std::make_shared<VJSlice>();
  s->beta = beta;
  const int r = wb->dim();
  Matrix<RationalQ> rel;
  for (int j = 0; j < u_.rank(); ++j) {
    if (!in_j_[j]) continue;
    const int p = lambda_[j] + 1;
    if (beta[j] < p) continue;
    RootVec rest = beta - p * RootVec::simple(u_.rank(), j);
    auto rb = m.basis(rest);
    FWordElem power = FWordElem::word(Word(static_cast<size_t>(p), static_cast<char>(j)));
    for (int piv : rb->pivots) rel.push_back(m.coords(beta, FWordElem::word(rb->words[piv]) * power));
  }
  std::vector<bool> is_rel_pivot(r, false);
  if (!rel.empty()) {
    s->relation_pivots = rref(rel);
    rel.resize(s->relation_pivots.size());
    for (int p : s->relation_pivots) is_rel_pivot[p] = true;
  }
  s->relations = std::move(rel);
  for (int c = 0; c < r; ++c)
    if (!is_rel_pivot[c]) {
      s->basis_columns.push_back(c);
      s->pivot_words.push_back(wb->words[wb->pivots[c]]);
    }
  return s;
}

std::shared_ptr<const VJSlice> ParabolicModule::slice(const RootVec& beta) const {
  {
    std::shared_lock lock(mu_);
    if (auto it = slices_.find(beta); it != slices_.end()) return it->second;
  }
  auto built = build(beta);
  std::unique_lock lock(mu_);
  auto [it, inserted] = slices_.try_emplace(beta, std::move(built));
  return it->second;
}

VJVector ParabolicModule::highest_weight_vector() const {
  return basis_vector(RootVec(u_.rank()), 0);
}

VJVector ParabolicModule::basis_vector(const RootVec& beta, int k) const {
  auto s = slice(beta);
  VJVector v{beta, std::vector<RationalQ>(s->dim())};
  v.coords.at(k) = RationalQ(1L);
  return v;
}

VJVector ParabolicModule::project(const RootVec& beta, const FWordElem& x) const {
  if (!beta.is_nonneg()) return VJVector{beta, {}};
  auto s = slice(beta);
  std::vector<RationalQ> c = u_.minus().coords(beta, x);
  for (size_t k = 0; k < s->relation_pivots.size(); ++k) {
    const int p = s->relation_pivots[k];
    if (c[p].is_zero()) continue;
    RationalQ f = c[p];
    for (size_t col = 0; col < c.size(); ++col)
      if (!s->relations[k][col].is_zero()) c[col] -= f * s->relations[k][col];
  }
  VJVector v{beta, {}};
  for (int col : s->basis_columns) v.coords.push_back(c[col]);
  return v;
}

FWordElem ParabolicModule::lift(const VJVector& v) const {
  FWordElem x;
  if (v.coords.empty()) return x;
  auto s = slice(v.beta);
  for (size_t k = 0; k < v.coords.size(); ++k) x.add_term(s->pivot_words[k], v.coords[k]);
  return x;
}

VJVector ParabolicModule::act(VJGen g, const VJVector& v) const {
  const int i = g.index;
  const RootVec ai = RootVec::simple(u_.rank(), i);
  switch (g.kind) {
    case VJGen::Kind::F:
      return project(v.beta + ai, u_.minus().gen(i) * lift(v));
    case VJGen::Kind::E: {
      if (!in_j_[i]) throw std::invalid_argument("vj_act: e_i with i outside J");
      RootVec target = v.beta - ai;
      if (!target.is_nonneg()) return VJVector{target, {}};
      TriangularElem prod = u_.mul(u_.e(i), u_.from_f(lift(v)));
      return project(target, u_.eval_highest_weight(prod, lambda_));
    }
    case VJGen::Kind::Boson: {
      if (in_j_[i]) throw std::invalid_argument("vj_act: q-boson operator with i in J");
      RootVec target = v.beta - ai;
      if (!target.is_nonneg()) return VJVector{target, {}};
      return project(target, u_.minus().ir_op(i, lift(v)));
    }
  }
  return {};
}

VJVector ParabolicModule::raise(int i, const VJVector& v) const {
  return act(VJGen{in_j_[i] ? VJGen::Kind::E : VJGen::Kind::Boson, i}, v);
}

VJVector ParabolicModule::form_adjoint(int i, const VJVector& y) const {
  VJVector r = raise(i, y);
  if (!in_j_[i] || r.coords.empty()) return r;
  // e_i t_i rescaled so that (f_i v, f_i v) = [<h_i, Lambda>]_i
  const RationalQ s = RationalQ::q_pow(-u_.datum().bilin(r.beta, RootVec::simple(u_.rank(), i)));
  for (auto& c : r.coords) c *= s;
  return r;
}

RationalQ ParabolicModule::form(const VJVector& x, const VJVector& y) const {
  if (x.beta != y.beta || x.coords.empty()) return {};
  auto s = slice(x.beta);
  RationalQ total;
  for (size_t a = 0; a < x.coords.size(); ++a) {
    if (x.coords[a].is_zero()) continue;
    // (f_{w_1} ... f_{w_n} v, y) = (v, e_{w_n} ... e_{w_1} y)
    VJVector cur = y;
    for (char l : s->pivot_words[a]) {
      cur = form_adjoint(static_cast<int>(l), cur);
      if (cur.coords.empty()) break;
    }
    if (!cur.coords.empty() && !cur.coords[0].is_zero()) total += x.coords[a] * cur.coords[0];
  }
  return total;
}

Matrix<RationalQ> ParabolicModule::gram_matrix(const RootVec& beta) const {
  const int d = dim(beta);
  Matrix<RationalQ> g(d, std::vector<RationalQ>(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) g[a][b] = form(basis_vector(beta, a), basis_vector(beta, b));
  return g;
}

long weyl_dim_oracle(const CartanDatum& c, const Weight& lambda, const RootVec& beta) {
  if (!c.is_finite_type()) throw std::invalid_argument("weyl_dim_oracle: datum is not of finite type");
  const int r = c.rank();
  for (int i = 0; i < r; ++i)
    if (lambda[i] < 0) throw std::invalid_argument("weyl_dim_oracle: Lambda is not dominant");
  const auto roots = c.positive_roots();
  // (Lambda, gamma) for gamma in the root lattice
  auto lam_pair = [&](const RootVec& g) {
    long s = 0;
    for (int j = 0; j < r; ++j) s += static_cast<long>(g[j]) * c.d(j) * lambda[j];
    return s;
  };
  auto rho_pair = [&](const RootVec& g) {
    long s = 0;
    for (int j = 0; j < r; ++j) s += static_cast<long>(g[j]) * c.d(j);
    return s;
  };
  std::map<RootVec, long> memo;
  std::function<long(const RootVec&)> mult = [&](const RootVec& b) -> long {
    if (!b.is_nonneg()) return 0;
    if (b.is_zero()) return 1;
    if (auto it = memo.find(b); it != memo.end()) return it->second;
    // m(mu) (2(Lambda+rho, b) - (b,b)) = 2 sum_{alpha>0} sum_{k>=1} m(mu + k alpha)(mu + k alpha, alpha)
    const long denom = 2 * (lam_pair(b) + rho_pair(b)) - c.bilin(b, b);
    long num = 0;
    for (const auto& a : roots)
      for (int k = 1;; ++k) {
        RootVec rest = b - k * a;
        if (!rest.is_nonneg()) break;
        long mk = mult(rest);
        if (mk) num += mk * (lam_pair(a) - c.bilin(rest, a));
      }
    num *= 2;
    long v = denom == 0 ? 0 : num / denom;
    if (denom != 0 && num % denom != 0) throw std::logic_error("weyl_dim_oracle: non-integral multiplicity");
    memo.emplace(b, v);
    return v;
  };
  return mult(beta);
}

std::string dims_to_csv(const std::vector<DimRow>& rows) {
  std::ostringstream os;
  if (rows.empty()) return "";
  for (int i = 0; i < rows[0].beta.size(); ++i) os << "beta" << i + 1 << ",";
  os << "dim,oracle\n";
  for (const auto& r : rows) {
    for (int i = 0; i < r.beta.size(); ++i) os << r.beta[i] << ",";
    if (r.exceeded) {
      os << "exceeded,\n";
      continue;
    }
    os << r.dim << ",";
    if (r.oracle) os << *r.oracle;
    os << "\n";
  }
  return os.str();
}

}  // namespace klrbraid
