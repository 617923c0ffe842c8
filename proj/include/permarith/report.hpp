#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace permarith {

// Ordered key-value document emitted by every CLI command. The serialized
// form is one "key = value" line per entry, in insertion order, which makes
// reports diffable and round-trippable.
class RunReport {
 public:
  void add(std::string key, std::string value);
  void add(std::string key, const char* value);
  void add(std::string key, long long value);
  void add(std::string key, std::uint64_t value);
  void add(std::string key, int value);
  void add(std::string key, bool value);
  void add(std::string key, double value);

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  std::optional<std::string> get(const std::string& key) const;

  void write(std::ostream& out) const;
  void write_pretty(std::ostream& out) const;
  static RunReport parse(std::istream& in);

  friend bool operator==(const RunReport&, const RunReport&) = default;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace permarith
