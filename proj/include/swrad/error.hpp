#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace swrad {

enum class ErrorCode {
  Optics,        // rho + alpha + tau != 1, or a component outside [0, 1]
  Mirror,        // opaque absorptance below the minimum
  NoSlab,
  BadTopology,   // unknown / repeated / self-referencing zone ids
  BadValue,      // non-positive area, fraction out of range
  EmptyEntity,   // zone with zero total indoor area
  Singular,
  Divergent,
  NoConverge,
  NotExternal,
  InputSchema,
  LeakGtOne,     // diagnostic only
  Io,
};

std::string_view code_name(ErrorCode code) noexcept;

struct Issue {
  ErrorCode code;
  std::string id;
  std::string message;

  bool operator==(const Issue&) const = default;
};

std::string to_string(const Issue& issue);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by validate(); carries every invariant violation found, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Issue> issues);
  const std::vector<Issue>& issues() const noexcept { return issues_; }

 private:
  std::vector<Issue> issues_;
};

/// Process exit status used by the CLI: 1 validation/input, 2 solve, 3 I/O.
int exit_status(ErrorCode code) noexcept;

}  // namespace swrad
