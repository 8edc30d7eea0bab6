#ifndef PROPUSE_ERRORS_HPP
#define PROPUSE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace propuse {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax error with source position (1-based line/column).
struct ParseError : Error {
  ParseError(std::string msg, int line, int column)
      : Error(std::move(msg)), line(line), column(column) {}
  int line;
  int column;
};

struct Diagnostic {
  std::string subject;  // item or constructor id
  std::string reason;
  std::string str() const { return subject + ": " + reason; }
};

// Raised when a parsed library fails invariant validation.
struct ValidationFailed : Error {
  explicit ValidationFailed(std::vector<Diagnostic> diags);
  std::vector<Diagnostic> diagnostics;
};

struct AttachmentNotFound : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct OracleBoundExceeded : Error {
  using Error::Error;
};

struct MalformedItem : Error {
  using Error::Error;
};

struct BaselineFailed : Error {
  using Error::Error;
};

struct UnknownItem : Error {
  using Error::Error;
};

struct MissingDirectEntry : Error {
  using Error::Error;
};

}  // namespace propuse

#endif
