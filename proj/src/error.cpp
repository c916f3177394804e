#include "swrad/error.hpp"

namespace swrad {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Optics: return "E_OPTICS";
    case ErrorCode::Mirror: return "E_MIRROR";
    case ErrorCode::NoSlab: return "E_NO_SLAB";
    case ErrorCode::BadTopology: return "E_BAD_TOPOLOGY";
    case ErrorCode::BadValue: return "E_BAD_VALUE";
    case ErrorCode::EmptyEntity: return "E_EMPTY_ENTITY";
    case ErrorCode::Singular: return "E_SINGULAR";
    case ErrorCode::Divergent: return "E_DIVERGENT";
    case ErrorCode::NoConverge: return "E_NO_CONVERGE";
    case ErrorCode::NotExternal: return "E_NOT_EXTERNAL";
    case ErrorCode::InputSchema: return "E_INPUT_SCHEMA";
    case ErrorCode::LeakGtOne: return "E_LEAK_GT_ONE";
    case ErrorCode::Io: return "E_IO";
  }
  return "E_UNKNOWN";
}

std::string to_string(const Issue& issue) {
  std::string out(code_name(issue.code));
  if (!issue.id.empty()) out += " [" + issue.id + "]";
  if (!issue.message.empty()) out += ": " + issue.message;
  return out;
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code) {}

namespace {

std::string join_issues(const std::vector<Issue>& issues) {
  std::string out = std::to_string(issues.size()) + " validation error(s)";
  for (const auto& issue : issues) out += "\n  " + to_string(issue);
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Issue> issues)
    : Error(issues.empty() ? ErrorCode::BadValue : issues.front().code, join_issues(issues)),
      issues_(std::move(issues)) {}

int exit_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Singular:
    case ErrorCode::Divergent:
    case ErrorCode::NoConverge:
    case ErrorCode::EmptyEntity:
      return 2;
    case ErrorCode::Io:
      return 3;
    default:
      return 1;
  }
}

}  // namespace swrad
