#include "gaplab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gaplab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

KeyValueConfig KeyValueConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_string(buf.str());
}

KeyValueConfig KeyValueConfig::from_string(const std::string& text) {
  KeyValueConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DomainError("config line " + std::to_string(lineno) +
                        ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw DomainError("config line " + std::to_string(lineno) +
                        ": empty key or value");
    cfg.entries_[key] = value;
  }
  return cfg;
}

bool KeyValueConfig::has(const std::string& key) const {
  return entries_.count(key) != 0;
}

const std::string& KeyValueConfig::raw(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw DomainError("missing config key '" + key + "'");
  return it->second;
}

void KeyValueConfig::set(const std::string& key, const std::string& value) {
  entries_[key] = value;
}

long KeyValueConfig::get_long(const std::string& key) const {
  const std::string& v = raw(key);
  char* end = nullptr;
  const long out = std::strtol(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0')
    throw DomainError("config key '" + key + "': '" + v + "' is not an integer");
  return out;
}

double KeyValueConfig::get_double(const std::string& key) const {
  const std::string& v = raw(key);
  const auto slash = v.find('/');
  char* end = nullptr;
  if (slash != std::string::npos) {
    const double num = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + slash)
      throw DomainError("config key '" + key + "': bad rational '" + v + "'");
    const char* dptr = v.c_str() + slash + 1;
    const double den = std::strtod(dptr, &end);
    if (end == dptr || *end != '\0' || den == 0.0)
      throw DomainError("config key '" + key + "': bad rational '" + v + "'");
    return num / den;
  }
  const double out = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0')
    throw DomainError("config key '" + key + "': '" + v + "' is not a number");
  return out;
}

void KeyValueConfig::require_known_keys(const std::set<std::string>& allowed) const {
  for (const auto& [k, _] : entries_)
    if (!allowed.count(k))
      throw DomainError("unknown config key '" + k + "'");
}

}  // namespace gaplab
