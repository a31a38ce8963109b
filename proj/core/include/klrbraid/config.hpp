#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "klrbraid/klr_poly.hpp"
#include "klrbraid/rootdata.hpp"

namespace klrbraid {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kMaxConfigHeight = 6;
constexpr int kMaxConfigDegree = 24;

// Settings shared by all commands. Loaded from an ini-style file:
//
//   [cartan]
//   type = B2                      ; or an inline datum:
//   labels = 1 2
//   gcm = 2 -1, -2 2
//   symmetrizers = 2 1
//
//   [scalars]
//   t(1,2) = 3/2
//   s(1,2,1,1) = 1
//
//   [bounds]
//   height = 4
//   degree = 12
struct RunConfig {
  std::string type = "A2";
  std::optional<CartanDatum> inline_datum;
  ScalarsChoice scalars;
  int height = 4;
  int degree = 12;
  std::uint64_t seed = 1;
  bool json = false;
  std::string out;

  CartanDatum datum() const;
  // Throws ConfigError if bounds or scalars are out of range for the datum.
  void validate() const;
};

RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& text);

}  // namespace klrbraid
