#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace relspan {

/// Outcome of one named equation or property check.
struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

/// Ordered list of checks; ok() iff every check passed.
class Report {
 public:
  void add(std::string name, bool passed, std::string witness = {}) {
    checks_.push_back({std::move(name), passed, std::move(witness)});
  }
  void pass(std::string name) { add(std::move(name), true); }
  void fail(std::string name, std::string witness) { add(std::move(name), false, std::move(witness)); }

  // Appends other's checks, prefixing their names.
  void merge(const Report& other, std::string_view prefix = {}) {
    for (const auto& c : other.checks_) {
      std::string name = prefix.empty() ? c.name : std::string(prefix) + "." + c.name;
      checks_.push_back({std::move(name), c.passed, c.witness});
    }
  }

  bool ok() const noexcept {
    for (const auto& c : checks_)
      if (!c.passed) return false;
    return true;
  }

  std::optional<Check> first_failure() const {
    for (const auto& c : checks_)
      if (!c.passed) return c;
    return std::nullopt;
  }

  bool has_failure(std::string_view name) const {
    for (const auto& c : checks_)
      if (!c.passed && c.name == name) return true;
    return false;
  }

  const std::vector<Check>& checks() const noexcept { return checks_; }

 private:
  std::vector<Check> checks_;
};

}  // namespace relspan
