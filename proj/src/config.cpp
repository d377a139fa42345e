#include "ringelhall/config.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "ringelhall/errors.hpp"

namespace ringelhall {

int Config::effective_height() const {
  if (height) return *height;
  int h = 0;
  for (int b : bound) h += b;
  return h;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Entry {
  std::string value;
  int line;
};

nlohmann::json parse_value(const Entry& e) {
  try {
    return nlohmann::json::parse(e.value);
  } catch (const nlohmann::json::parse_error&) {
    throw ConfigError(e.line, "malformed value '" + e.value + "'");
  }
}

long long get_int(const Entry& e, const std::string& key) {
  nlohmann::json j = parse_value(e);
  if (!j.is_number_integer()) throw ConfigError(e.line, key + " must be an integer");
  return j.get<long long>();
}

std::uint64_t get_unsigned(const Entry& e, const std::string& key) {
  nlohmann::json j = parse_value(e);
  if (!j.is_number_unsigned()) throw ConfigError(e.line, key + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

}  // namespace

Config parse_config(const std::string& text) {
  static const std::map<std::string, std::set<std::string>> allowed{
      {"quiver", {"vertices", "arrows", "bound", "height"}},
      {"field", {"q"}},
      {"limits", {"max_states", "max_classes"}},
      {"output", {"format"}},
  };
  std::map<std::string, std::map<std::string, Entry>> entries;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    if (s.front() == '[' && s.find('=') == std::string::npos) {
      if (s.back() != ']') throw ConfigError(line, "malformed section header");
      section = trim(s.substr(1, s.size() - 2));
      if (!allowed.contains(section)) throw ConfigError(line, "unknown section [" + section + "]");
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected key = value");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (section.empty()) throw ConfigError(line, "key '" + key + "' outside any section");
    if (!allowed.at(section).contains(key)) throw ConfigError(line, "unknown key '" + key + "' in [" + section + "]");
    if (value.empty()) throw ConfigError(line, "missing value for '" + key + "'");
    if (!entries[section].emplace(key, Entry{value, line}).second)
      throw ConfigError(line, "duplicate key '" + key + "'");
  }

  auto find = [&](const std::string& sec, const std::string& key) -> const Entry* {
    auto it = entries.find(sec);
    if (it == entries.end()) return nullptr;
    auto jt = it->second.find(key);
    return jt == it->second.end() ? nullptr : &jt->second;
  };
  auto require = [&](const std::string& sec, const std::string& key) -> const Entry& {
    const Entry* e = find(sec, key);
    if (!e) throw ConfigError(0, "missing required key '" + key + "' in [" + sec + "]");
    return *e;
  };

  Config c;
  const Entry& ve = require("quiver", "vertices");
  long long n = get_int(ve, "vertices");
  if (n < 1) throw ConfigError(ve.line, "vertices must be positive");
  c.vertices = static_cast<int>(n);

  const Entry& ae = require("quiver", "arrows");
  nlohmann::json arrows = parse_value(ae);
  if (!arrows.is_array()) throw ConfigError(ae.line, "arrows must be a list of [source, target] pairs");
  for (const auto& a : arrows) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
      throw ConfigError(ae.line, "arrows must be a list of [source, target] pairs");
    for (const auto& x : a) {
      long long v = x.get<long long>();
      if (v < 1 || v > n) throw ConfigError(ae.line, "vertex " + std::to_string(v) + " out of range");
    }
    c.arrows.push_back({a[0].get<int>() - 1, a[1].get<int>() - 1});
  }

  if (const Entry* be = find("quiver", "bound")) {
    nlohmann::json b = parse_value(*be);
    if (!b.is_array() || static_cast<long long>(b.size()) != n)
      throw ConfigError(be->line, "bound must list one entry per vertex");
    for (const auto& x : b) {
      if (!x.is_number_integer() || x.get<long long>() < 0) throw ConfigError(be->line, "bound entries must be nonnegative integers");
      c.bound.push_back(x.get<int>());
    }
  } else {
    c.bound.assign(static_cast<std::size_t>(n), 2);
  }
  if (const Entry* he = find("quiver", "height")) {
    long long h = get_int(*he, "height");
    if (h < 0) throw ConfigError(he->line, "height must be nonnegative");
    c.height = static_cast<int>(h);
  }

  const Entry& qe = require("field", "q");
  nlohmann::json qj = parse_value(qe);
  if (!qj.is_number_unsigned()) throw ConfigError(qe.line, "q must be prime");
  c.q = qj.get<std::uint64_t>();
  if (!is_prime(c.q)) throw ConfigError(qe.line, "q must be prime (got " + std::to_string(c.q) + ")");

  if (const Entry* e = find("limits", "max_states")) c.limits.max_states = get_unsigned(*e, "max_states");
  if (const Entry* e = find("limits", "max_classes")) c.limits.max_classes = get_unsigned(*e, "max_classes");

  if (const Entry* fe = find("output", "format")) {
    std::string f = fe->value;
    if (f.size() >= 2 && f.front() == '"' && f.back() == '"') f = f.substr(1, f.size() - 2);
    if (f == "text") c.format = OutputFormat::text;
    else if (f == "json") c.format = OutputFormat::json;
    else throw ConfigError(fe->line, "format must be text or json");
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string print_config(const Config& c) {
  std::ostringstream out;
  out << "[quiver]\n";
  out << "vertices = " << c.vertices << "\n";
  out << "arrows = [";
  for (std::size_t k = 0; k < c.arrows.size(); ++k)
    out << (k ? "," : "") << "[" << c.arrows[k].source + 1 << "," << c.arrows[k].target + 1 << "]";
  out << "]\n";
  out << "bound = [";
  for (std::size_t k = 0; k < c.bound.size(); ++k) out << (k ? "," : "") << c.bound[k];
  out << "]\n";
  if (c.height) out << "height = " << *c.height << "\n";
  out << "[field]\nq = " << c.q << "\n";
  out << "[limits]\nmax_states = " << c.limits.max_states << "\nmax_classes = " << c.limits.max_classes << "\n";
  out << "[output]\nformat = " << (c.format == OutputFormat::json ? "json" : "text") << "\n";
  return out.str();
}

std::string config_digest(const Config& c) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : print_config(c)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace ringelhall
