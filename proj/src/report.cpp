#include "permarith/report.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace permarith {

void RunReport::add(std::string key, std::string value) {
  if (key.empty() || key.find(' ') != std::string::npos) {
    throw std::invalid_argument("report keys must be non-empty and space-free: '" + key + "'");
  }
  if (value.find('\n') != std::string::npos) {
    throw std::invalid_argument("report values must be single-line");
  }
  entries_.emplace_back(std::move(key), std::move(value));
}

void RunReport::add(std::string key, const char* value) { add(std::move(key), std::string(value)); }

void RunReport::add(std::string key, long long value) {
  add(std::move(key), std::to_string(value));
}

void RunReport::add(std::string key, std::uint64_t value) {
  add(std::move(key), std::to_string(value));
}

void RunReport::add(std::string key, int value) { add(std::move(key), std::to_string(value)); }

void RunReport::add(std::string key, bool value) {
  add(std::move(key), std::string(value ? "1" : "0"));
}

void RunReport::add(std::string key, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  add(std::move(key), std::string(buf));
}

std::optional<std::string> RunReport::get(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

void RunReport::write(std::ostream& out) const {
  for (const auto& [k, v] : entries_) {
    out << k << " = " << v << "\n";
  }
}

void RunReport::write_pretty(std::ostream& out) const {
  std::size_t width = 0;
  for (const auto& [k, v] : entries_) width = std::max(width, k.size());
  for (const auto& [k, v] : entries_) {
    out << "  " << k;
    for (std::size_t i = k.size(); i < width; ++i) out << ' ';
    out << "  " << v << "\n";
  }
}

RunReport RunReport::parse(std::istream& in) {
  RunReport r;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto sep = line.find(" = ");
    if (sep == std::string::npos) {
      throw std::invalid_argument("malformed report line: '" + line + "'");
    }
    r.entries_.emplace_back(line.substr(0, sep), line.substr(sep + 3));
  }
  return r;
}

}  // namespace permarith
