#pragma once

#include <map>
#include <set>
#include <string>

#include "gaplab/errors.hpp"

namespace gaplab {

// Flat "key = value" configuration: '#' comments, blank lines ignored,
// values kept verbatim (decimal, rational "p/q", integer, word). Command
// line flags override file values so a committed config plus a flag diff
// reproduces any run.
class KeyValueConfig {
 public:
  static KeyValueConfig from_file(const std::string& path);
  static KeyValueConfig from_string(const std::string& text);

  bool has(const std::string& key) const;
  const std::string& raw(const std::string& key) const;
  void set(const std::string& key, const std::string& value);  // override

  long get_long(const std::string& key) const;
  double get_double(const std::string& key) const;  // accepts p/q

  // Throws DomainError naming the first key outside `allowed`.
  void require_known_keys(const std::set<std::string>& allowed) const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace gaplab
