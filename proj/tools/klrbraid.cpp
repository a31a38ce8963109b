#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "klrbraid/config.hpp"
#include "klrbraid/json_io.hpp"
#include "klrbraid/parabolic.hpp"
#include "klrbraid/suites.hpp"

using namespace klrbraid;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<std::string> type, config, out;
  std::optional<std::uint64_t> seed;
  std::optional<int> degree, height;
  bool json = false;
};

RunConfig make_config(const Options& o) {
  RunConfig cfg = o.config ? load_config(*o.config) : RunConfig{};
  if (o.type) {
    cfg.type = *o.type;
    cfg.inline_datum.reset();
  }
  if (o.seed) cfg.seed = *o.seed;
  if (o.degree) cfg.degree = *o.degree;
  if (o.height) cfg.height = *o.height;
  cfg.json = o.json;
  if (o.out) cfg.out = *o.out;
  cfg.validate();
  return cfg;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw UsageError("cannot write " + cfg.out);
  out << text;
}

void emit_json(const RunConfig& cfg, const json& j) { emit(cfg, j.dump(2) + "\n"); }

// "1,2", "1 2" or "12" for single-character labels; "" is the empty word.
Word parse_word(const CartanDatum& c, const std::string& s) {
  std::string t = s;
  for (char& ch : t)
    if (ch == ',') ch = ' ';
  std::istringstream is(t);
  Word w;
  for (std::string tok; is >> tok;) {
    try {
      w.push_back(static_cast<char>(c.index_of(tok)));
    } catch (const std::exception&) {
      for (char ch : tok) {
        try {
          w.push_back(static_cast<char>(c.index_of(std::string(1, ch))));
        } catch (const std::exception&) {
          throw UsageError("unknown index '" + tok + "' in word");
        }
      }
    }
  }
  return w;
}

std::vector<int> parse_ints(const std::string& s) {
  std::string t = s;
  for (char& ch : t)
    if (ch == ',') ch = ' ';
  std::istringstream is(t);
  std::vector<int> out;
  for (std::string tok; is >> tok;) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("expected an integer, got '" + tok + "'");
    }
  }
  return out;
}

std::pair<Gen, int> parse_gen(const CartanDatum& c, const std::string& s) {
  if (s.size() < 2 || std::string("eft").find(s[0]) == std::string::npos)
    throw UsageError("generator must look like e1, f2 or t1");
  const Gen g = s[0] == 'e' ? Gen::E : s[0] == 'f' ? Gen::F : Gen::T;
  try {
    return {g, c.index_of(s.substr(1))};
  } catch (const std::exception&) {
    throw UsageError("unknown index in generator '" + s + "'");
  }
}

std::string letters(const CartanDatum& c, const char* g, const Word& w) {
  std::string out;
  for (char k : w) out += std::string(out.empty() ? "" : " ") + g + c.label(k);
  return out;
}

std::string to_text(const CartanDatum& c, const TriangularElem& x) {
  if (x.is_structurally_zero()) return "0";
  std::string out;
  for (const auto& [k, coeff] : x.terms()) {
    std::string mono = letters(c, "f", k.f);
    for (size_t i = 0; i < k.kappa.size(); ++i) {
      if (k.kappa[i] == 0) continue;
      mono += std::string(mono.empty() ? "" : " ") + "t" + c.label(static_cast<int>(i));
      if (k.kappa[i] != 1) mono += "^" + std::to_string(k.kappa[i]);
    }
    const std::string e = letters(c, "e", k.e);
    if (!e.empty()) mono += (mono.empty() ? "" : " ") + e;
    std::string cs = coeff.to_string();
    if (!out.empty()) out += " + ";
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else if (cs == "-1") {
      out += "-" + mono;
    } else {
      out += "(" + cs + ") " + mono;
    }
  }
  return out;
}

int cmd_braid_check(const RunConfig& cfg, const std::optional<std::string>& gen) {
  SuiteParams p;
  p.cfg = cfg;
  p.gen = gen;
  if (gen) parse_gen(cfg.datum(), *gen);
  const SuiteReport r = run_suite("braid-relations", p);
  emit(cfg, cfg.json ? to_json(r).dump(2) + "\n" : to_text(r));
  return r.pass() ? kExitPass : kExitFail;
}

int cmd_tw(const RunConfig& cfg, const std::string& word, const std::string& gen) {
  const CartanDatum c = cfg.datum();
  const Word w = parse_word(c, word);
  if (auto p = c.non_reduced_witness(w)) {
    throw UsageError("word " + c.word_to_string(w) + " is not reduced: s_" + c.word_to_string(w.substr(0, *p)) +
                     " sends alpha_" + c.label(w[*p]) + " to a negative root (position " + std::to_string(*p + 1) +
                     ")");
  }
  const auto [g, i] = parse_gen(c, gen);
  UqFull u(c);
  BraidWord bw;
  for (char k : w) bw.push_back({k, false});
  const TriangularElem x = u.apply_braid(bw, u.generator(g, i));
  if (cfg.json) {
    emit_json(cfg, {{"word", word_json(w)}, {"gen", gen}, {"datum", c.name()}, {"result", to_json(x)}});
  } else {
    emit(cfg, "T_" + (w.empty() ? std::string("()") : c.word_to_string(w)) + "(" + gen + ") = " + to_text(c, x) + "\n");
  }
  return kExitPass;
}

int cmd_vj_dim(const RunConfig& cfg, const std::string& hw, const std::optional<std::string>& jset) {
  const CartanDatum c = cfg.datum();
  const std::vector<int> lam = parse_ints(hw);
  if (static_cast<int>(lam.size()) != c.rank()) throw UsageError("--hw needs one entry per index");
  for (int x : lam)
    if (x < 0) throw UsageError("--hw must be dominant");
  std::vector<bool> in_j(c.rank(), true);
  if (jset) {
    std::fill(in_j.begin(), in_j.end(), false);
    for (char k : parse_word(c, *jset)) in_j[k] = true;
  }
  const bool full = std::all_of(in_j.begin(), in_j.end(), [](bool b) { return b; });
  const bool oracle = full && c.is_finite_type();
  UqFull u(c);
  ParabolicModule v(u, in_j, Weight(lam));
  std::vector<DimRow> rows;
  std::function<void(int, RootVec&, int)> walk = [&](int k, RootVec& b, int left) {
    if (k == c.rank()) {
      DimRow row;
      row.beta = b;
      try {
        row.dim = v.dim(b);
        if (oracle) row.oracle = weyl_dim_oracle(c, Weight(lam), b);
      } catch (const BoundExceeded&) {
        row.exceeded = true;
      }
      rows.push_back(row);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      b[k] = x;
      walk(k + 1, b, left - x);
    }
    b[k] = 0;
  };
  RootVec b(c.rank());
  walk(0, b, cfg.height);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const DimRow& x, const DimRow& y) { return x.beta.height() < y.beta.height(); });
  bool ok = true;
  for (const auto& r : rows)
    if (r.exceeded || (r.oracle && *r.oracle != r.dim)) ok = false;
  if (cfg.json) {
    json arr = json::array();
    for (const auto& r : rows) {
      json e = {{"beta", r.beta.coords()}};
      if (r.exceeded) {
        e["exceeded"] = true;
      } else {
        e["dim"] = r.dim;
      }
      if (r.oracle) e["oracle"] = *r.oracle;
      arr.push_back(e);
    }
    emit_json(cfg, {{"datum", c.name()}, {"hw", lam}, {"rows", arr}, {"pass", ok}});
  } else {
    emit(cfg, dims_to_csv(rows));
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_verify(const RunConfig& cfg, const std::string& name, const SuiteParams& extra) {
  SuiteParams p = extra;
  p.cfg = cfg;
  std::vector<std::string> names;
  if (name == "all") {
    for (const auto& s : suites()) names.push_back(s.name);
  } else {
    if (!find_suite(name)) throw UsageError("unknown suite '" + name + "'");
    names.push_back(name);
  }
  bool ok = true;
  json reports = json::array();
  std::string text;
  for (const auto& n : names) {
    const SuiteReport r = run_suite(n, p);
    ok = ok && r.pass();
    reports.push_back(to_json(r));
    text += to_text(r);
  }
  if (cfg.json) {
    emit_json(cfg, names.size() == 1 ? reports[0] : json{{"pass", ok}, {"reports", reports}});
  } else {
    emit(cfg, text);
  }
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid group actions on quantum groups and KLR algebras"};
  app.require_subcommand(1);
  Options o;
  auto common = [&o](CLI::App* sub) {
    sub->add_option("--type", o.type, "Cartan type: A1, A1xA1, A2, A3, B2, C2, G2");
    sub->add_option("--config", o.config, "Configuration file")->check(CLI::ExistingFile);
    sub->add_flag("--json", o.json, "Write JSON instead of text");
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--degree", o.degree, "Degree bound");
    sub->add_option("--height", o.height, "Height bound");
    sub->add_option("--out", o.out, "Output file");
  };

  std::optional<std::string> gen;
  auto* braid = app.add_subcommand("braid-check", "Check the braid relations of the T_i");
  common(braid);
  braid->add_option("--gen", gen, "Restrict to one generator, e.g. f1");

  std::string word, tw_gen;
  auto* tw = app.add_subcommand("tw", "Print T_w applied to a generator");
  common(tw);
  tw->add_option("--word", word, "Reduced word, e.g. 1,2")->required();
  tw->add_option("--gen", tw_gen, "Generator, e.g. e1")->required();

  std::string hw;
  std::optional<std::string> jset;
  auto* vj = app.add_subcommand("vj-dim", "Tabulate weight-space dimensions of V_J(Lambda) as CSV");
  common(vj);
  vj->add_option("--hw", hw, "Highest weight as <h_i, Lambda>, e.g. 1,0")->required();
  vj->add_option("--J", jset, "Parabolic subset, e.g. 1 (default: all indices)");

  std::string suite;
  SuiteParams extra;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  common(verify);
  std::string suite_help = "Suite name or all:";
  for (const auto& s : suites()) suite_help += " " + s.name;
  verify->add_option("suite", suite, suite_help)->required();
  verify->add_option("--gen", extra.gen, "braid-relations: one generator");
  verify->add_option("--l", extra.l, "nilhecke-vanishing: level");
  verify->add_option("--n", extra.n, "nilhecke-vanishing: strands");
  verify->add_option("--word-length", extra.word_length, "reduced-words: maximal length");
  verify->add_option("--samples", extra.samples, "bimodule: samples per index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    const RunConfig cfg = make_config(o);
    if (braid->parsed()) return cmd_braid_check(cfg, gen);
    if (tw->parsed()) return cmd_tw(cfg, word, tw_gen);
    if (vj->parsed()) return cmd_vj_dim(cfg, hw, jset);
    if (verify->parsed()) return cmd_verify(cfg, suite, extra);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
