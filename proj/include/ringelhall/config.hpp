#pragma once

// Sectioned key-value configuration files.
//
//   # comment
//   [quiver]
//   vertices = 2
//   arrows = [[1,2],[1,2]]   # 1-based source, target
//   bound = [2,2]            # optional, default 2 per vertex
//   height = 4               # optional, caps the region and root enumeration
//   [field]
//   q = 2
//   [limits]                 # optional section
//   max_states = 10000000
//   max_classes = 1000000
//   [output]                 # optional section
//   format = text            # or json
//
// Unknown sections and keys are errors. Every error names its line.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "ringelhall/class_table.hpp"
#include "ringelhall/quiver.hpp"

namespace ringelhall {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& msg)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class OutputFormat { text, json };

struct Config {
  int vertices = 0;
  std::vector<Arrow> arrows;  ///< 0-based
  std::uint64_t q = 0;
  DimVec bound;
  std::optional<int> height;
  Limits limits;
  OutputFormat format = OutputFormat::text;

  Quiver quiver() const { return Quiver(vertices, arrows); }
  Region region() const { return Region{bound, height}; }
  /// Height used by root enumeration and the Kac suite.
  int effective_height() const;
  friend bool operator==(const Config&, const Config&) = default;
};

Config parse_config(const std::string& text);
Config load_config(const std::string& path);
/// Canonical text form; parse_config(print_config(c)) == c.
std::string print_config(const Config& c);
/// FNV-1a 64-bit hash of print_config, as 16 hex digits.
std::string config_digest(const Config& c);

}  // namespace ringelhall
