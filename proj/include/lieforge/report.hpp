#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lieforge/rational.hpp"

namespace lieforge {

/// One failed instance of an identity. `indices` are basis indices in the
/// order the identity names them; `residual` is lhs - rhs, exactly.
struct Violation {
  std::string condition;
  std::vector<std::size_t> indices;
  Vector residual;
};

/// Result of a checker. Empty means every instance held.
struct Report {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  bool has(const std::string& condition) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.condition == condition; });
  }

  /// First witness recorded for `condition`, in enumeration order.
  std::optional<Violation> first(const std::string& condition) const {
    for (const auto& v : violations) {
      if (v.condition == condition) return v;
    }
    return std::nullopt;
  }

  bool has_witness(const std::string& condition, const std::vector<std::size_t>& indices) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) {
      return v.condition == condition && v.indices == indices;
    });
  }

  void add(std::string condition, std::vector<std::size_t> indices, Vector residual) {
    violations.push_back({std::move(condition), std::move(indices), std::move(residual)});
  }

  void append(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

/// Thrown when an operation's mathematical precondition fails. Carries the
/// witnesses so callers can show them.
class ViolationError : public std::runtime_error {
 public:
  ViolationError(const std::string& what, Report report)
      : std::runtime_error(what), report_(std::move(report)) {}

  const Report& report() const { return report_; }

 private:
  Report report_;
};

}  // namespace lieforge
