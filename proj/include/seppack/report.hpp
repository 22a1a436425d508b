#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace seppack {

/// One failed condition. Indices are 0-based; `j` equals `i` for per-element checks.
struct Violation {
  std::size_t i = 0;
  std::size_t j = 0;
  std::string condition;
  std::string witness;
};

/// Outcome of a verifier. `accepted` holds exactly when there are no violations.
class VerificationReport {
public:
  VerificationReport() = default;
  VerificationReport(std::vector<Violation> violations, bool floating_input)
      : violations_(std::move(violations)), floating_(floating_input) {}

  bool accepted() const noexcept { return violations_.empty(); }
  /// Accepted, but only up to the float margin; no exact statement is implied.
  bool numerically_accepted() const noexcept { return accepted() && floating_; }
  bool floating_input() const noexcept { return floating_; }
  const std::vector<Violation> &violations() const noexcept { return violations_; }

  std::string verdict() const {
    if (!accepted())
      return "rejected";
    return floating_ ? "numerically accepted" : "accepted";
  }

private:
  std::vector<Violation> violations_;
  bool floating_ = false;
};

} // namespace seppack
