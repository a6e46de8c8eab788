#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mpirecon {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Line-oriented `[section]` / `key = value` text. See docs/config.md for the
/// grammar. Lookups record which keys were read so that leftovers (typos) can
/// be reported.
class ConfigDocument {
public:
  static ConfigDocument parse(std::istream& in, const std::string& source = "<config>");
  static ConfigDocument load(const std::string& path);

  const std::string& source() const noexcept { return source_; }
  /// Directory that relative paths in the document are resolved against.
  const std::string& base_dir() const noexcept { return base_dir_; }

  bool has(const std::string& section, const std::string& key) const;
  bool has_section(const std::string& section) const;
  std::optional<std::string> get(const std::string& section, const std::string& key) const;

  std::string text(const std::string& section, const std::string& key, const std::string& fallback) const;
  double number(const std::string& section, const std::string& key, double fallback) const;
  std::int64_t integer(const std::string& section, const std::string& key, std::int64_t fallback) const;
  bool boolean(const std::string& section, const std::string& key, bool fallback) const;
  /// Comma-separated numbers; `fallback` when the key is absent.
  std::vector<double> numbers(const std::string& section, const std::string& key,
                              std::vector<double> fallback) const;
  std::vector<std::string> list(const std::string& section, const std::string& key,
                                std::vector<std::string> fallback) const;
  /// Path value resolved against base_dir(); empty when absent.
  std::string path(const std::string& section, const std::string& key) const;

  /// `section.key` of every entry never looked up.
  std::vector<std::string> unused_keys() const;

  /// Sets or replaces a value, as `--set section.key=value` does on the CLI.
  void set(const std::string& section, const std::string& key, const std::string& value);

private:
  struct Entry {
    std::string value;
    int line = 0;
  };
  const Entry* find(const std::string& section, const std::string& key) const;
  [[noreturn]] void fail(const Entry& entry, const std::string& section, const std::string& key,
                         const std::string& why) const;

  std::string source_;
  std::string base_dir_;
  std::map<std::string, std::map<std::string, Entry>> sections_;
  mutable std::set<std::pair<std::string, std::string>> used_;
};

/// Splits on commas and trims whitespace around each item.
std::vector<std::string> split_list(const std::string& value);
double parse_number(const std::string& text);

}  // namespace mpirecon
