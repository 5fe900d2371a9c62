#pragma once

#include <stdexcept>
#include <string>

namespace towercalc {

/// Raised when input text (group expressions, descriptors, matrices,
/// cohomology profiles) cannot be parsed.  Profile errors carry the
/// 1-based line number in the message.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& msg) : std::invalid_argument(msg) {}
  ParseError(int line, const std::string& msg)
      : std::invalid_argument("line " + std::to_string(line) + ": " + msg) {}
};

/// Raised when a query lands outside the fixed low-degree tables or the
/// finitely many supported twisted-covering cases.  The CLI maps this to
/// the UNKNOWN: channel rather than a usage error.
class OutsideTable : public std::domain_error {
 public:
  explicit OutsideTable(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace towercalc
