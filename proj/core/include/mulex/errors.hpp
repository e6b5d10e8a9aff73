#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mulex {

/// Malformed external input (.mg text, VWGraph JSON, fractions).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search or enumeration ran out of its node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes_explored)
      : std::runtime_error(what), nodes_(nodes_explored) {}

  std::uint64_t nodes_explored() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

/// Interval evaluation could not decide a sign, even at the precision cap.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proved structural property failed at runtime. Indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mulex
