#include "klrbraid/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <fstream>
#include <regex>
#include <sstream>

namespace klrbraid {

namespace {

namespace pt = boost::property_tree;

std::vector<int> parse_ints(const std::string& s) {
  std::istringstream is(s);
  std::vector<int> out;
  std::string tok;
  while (is >> tok) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ConfigError("config: expected an integer, got '" + tok + "'");
    }
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

mpq_class parse_rational(const std::string& s) {
  try {
    mpq_class q(std::regex_replace(s, std::regex("^\\s+|\\s+$"), ""));
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw ConfigError("config: invalid rational '" + s + "'");
  }
}

CartanDatum inline_datum(const pt::ptree& sec) {
  std::vector<std::string> labels;
  std::istringstream ls(sec.get<std::string>("labels", ""));
  for (std::string l; ls >> l;) labels.push_back(l);
  std::vector<std::vector<int>> gcm;
  for (const auto& row : split(sec.get<std::string>("gcm", ""), ',')) gcm.push_back(parse_ints(row));
  const std::vector<int> sym = parse_ints(sec.get<std::string>("symmetrizers", ""));
  try {
    return CartanDatum(labels, gcm, sym);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

void parse_scalars(const pt::ptree& sec, const CartanDatum& c, ScalarsChoice& s) {
  static const std::regex t_key(R"(t\(\s*([^,\s]+)\s*,\s*([^,\s]+)\s*\))");
  static const std::regex s_key(R"(s\(\s*([^,\s]+)\s*,\s*([^,\s]+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\))");
  auto index = [&](const std::string& label) {
    try {
      return c.index_of(label);
    } catch (const std::exception&) {
      throw ConfigError("config: unknown index label '" + label + "'");
    }
  };
  for (const auto& [key, node] : sec) {
    std::smatch m;
    const mpq_class v = parse_rational(node.data());
    if (std::regex_match(key, m, t_key)) {
      s.t[{index(m[1]), index(m[2])}] = v;
    } else if (std::regex_match(key, m, s_key)) {
      s.s[{index(m[1]), index(m[2]), std::stoi(m[3]), std::stoi(m[4])}] = v;
    } else {
      throw ConfigError("config: unknown scalars key '" + key + "'");
    }
  }
}

}  // namespace

CartanDatum RunConfig::datum() const {
  if (inline_datum) return *inline_datum;
  try {
    return CartanDatum::from_type(type);
  } catch (const std::exception&) {
    throw ConfigError("unknown Cartan type '" + type + "'");
  }
}

void RunConfig::validate() const {
  if (height < 0 || height > kMaxConfigHeight)
    throw ConfigError("height must lie in [0, " + std::to_string(kMaxConfigHeight) + "]");
  if (degree < 0 || degree > kMaxConfigDegree)
    throw ConfigError("degree must lie in [0, " + std::to_string(kMaxConfigDegree) + "]");
  try {
    scalars.validate(datum());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

RunConfig parse_config(const std::string& text) {
  pt::ptree tree;
  std::istringstream is(text);
  try {
    pt::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("config: " + e.message() + " at line " + std::to_string(e.line()));
  }
  RunConfig cfg;
  for (const auto& [name, sec] : tree)
    if (name != "cartan" && name != "scalars" && name != "bounds")
      throw ConfigError("config: unknown section [" + name + "]");
  if (auto sec = tree.get_child_optional("cartan")) {
    if (auto t = sec->get_optional<std::string>("type")) {
      cfg.type = *t;
    } else {
      cfg.inline_datum = inline_datum(*sec);
    }
  }
  if (auto sec = tree.get_child_optional("scalars")) parse_scalars(*sec, cfg.datum(), cfg.scalars);
  if (auto sec = tree.get_child_optional("bounds")) {
    for (const auto& [key, node] : *sec) {
      const std::vector<int> v = parse_ints(node.data());
      if (v.size() != 1) throw ConfigError("config: " + key + " takes one integer");
      if (key == "height") {
        cfg.height = v[0];
      } else if (key == "degree") {
        cfg.degree = v[0];
      } else {
        throw ConfigError("config: unknown bounds key '" + key + "'");
      }
    }
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace klrbraid
