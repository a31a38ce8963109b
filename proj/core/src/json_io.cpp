#include "klrbraid/json_io.hpp"

#include <stdexcept>

namespace klrbraid {

namespace {

json int_poly_json(const IntPoly& p) {
  json out = json::array();
  for (size_t k = 0; k < p.coeffs().size(); ++k)
    if (p.coeffs()[k] != 0) out.push_back({static_cast<int>(k), p.coeffs()[k].get_str()});
  return out;
}

IntPoly int_poly_from_json(const json& j) {
  std::vector<mpz_class> c;
  for (const auto& t : j) {
    const int k = t.at(0).get<int>();
    if (k < 0) throw std::invalid_argument("json: negative exponent in a polynomial");
    if (c.size() <= static_cast<size_t>(k)) c.resize(k + 1);
    c[k] += mpz_class(t.at(1).get<std::string>());
  }
  return IntPoly(std::move(c));
}

json exps_json(const Exps& a) { return json(std::vector<int>(a.begin(), a.end())); }

}  // namespace

json word_json(const Word& w) {
  json out = json::array();
  for (char c : w) out.push_back(static_cast<int>(c) + 1);
  return out;
}

Word word_from_json(const json& j) {
  Word w;
  for (const auto& x : j) {
    const int l = x.get<int>();
    if (l < 1 || l > 64) throw std::invalid_argument("json: letter out of range");
    w.push_back(static_cast<char>(l - 1));
  }
  return w;
}

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [k, c] : p.terms()) out.push_back({k, c.get_str()});
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly p;
  for (const auto& t : j) p.add_term(t.at(0).get<int>(), mpq_class(t.at(1).get<std::string>()));
  return p;
}

json to_json(const RationalQ& x) { return {{"num", int_poly_json(x.num())}, {"den", int_poly_json(x.den())}}; }

RationalQ rational_from_json(const json& j) {
  return RationalQ(int_poly_from_json(j.at("num")), int_poly_from_json(j.at("den")));
}

json to_json(const FWordElem& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms()) terms.push_back({{"word", word_json(w)}, {"coeff", to_json(c)}});
  return {{"terms", terms}};
}

FWordElem fword_from_json(const json& j) {
  FWordElem x;
  for (const auto& t : j.at("terms")) x.add_term(word_from_json(t.at("word")), rational_from_json(t.at("coeff")));
  return x;
}

json to_json(const TriangularElem& x) {
  json out = json::array();
  for (const auto& [k, c] : x.terms()) {
    json t = json::object();
    for (size_t i = 0; i < k.kappa.size(); ++i)
      if (k.kappa[i] != 0) t[std::to_string(i + 1)] = k.kappa[i];
    out.push_back({{"f", word_json(k.f)}, {"t", t}, {"e", word_json(k.e)}, {"coeff", to_json(c)}});
  }
  return out;
}

json to_json(const KLRAlgebra& r, const KLRElem& x) {
  json terms = json::array();
  std::vector<int> beta;
  for (const auto& [t, c] : x.terms()) {
    if (beta.empty()) {
      const RootVec b = r.weight(t.nu);
      for (int i = 0; i < b.size(); ++i) beta.push_back(b[i]);
    }
    terms.push_back({{"nu", word_json(t.nu)},
                     {"w", word_json(perm_table(x.strands()).reduced[t.w])},
                     {"a", exps_json(t.a)},
                     {"coeff", c.get_str()}});
  }
  return {{"beta", beta}, {"terms", terms}};
}

KLRElem klr_from_json(const KLRAlgebra& r, const json& j) {
  std::vector<int> coords = j.at("beta").get<std::vector<int>>();
  int n = 0;
  for (int c : coords) n += c;
  KLRElem x(n);
  for (const auto& t : j.at("terms")) {
    const Word nu = word_from_json(t.at("nu"));
    if (static_cast<int>(nu.size()) != n) throw std::invalid_argument("json: sequence length does not match beta");
    Exps a;
    for (int e : t.at("a").get<std::vector<int>>()) a.push_back(e);
    const Perm w = perm_of_word(word_from_json(t.at("w")), n);
    const KLRElem term = r.basis_term(nu, w, a);
    x += term * mpq_class(t.at("coeff").get<std::string>());
  }
  return x;
}

json to_json(const GradedSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(c.get_str());
  json out = {{"lower", s.lower}, {"upper", s.upper}, {"coeffs", coeffs}};
  if (s.closed_form) out["closed_form"] = to_json(*s.closed_form);
  return out;
}

json to_json(const CharVector& c) {
  json series = json::array();
  for (const auto& [nu, s] : c.series) series.push_back({{"nu", word_json(nu)}, {"series", to_json(s)}});
  std::vector<int> beta;
  for (int i = 0; i < c.beta.size(); ++i) beta.push_back(c.beta[i]);
  return {{"beta", beta}, {"series", series}};
}

}  // namespace klrbraid
