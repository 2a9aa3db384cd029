#ifndef CRITLAB_ERRORS_HPP
#define CRITLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace critlab {

// Caller passed something structurally invalid (bad vertex id, malformed
// split, precondition violation).
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input text could not be decoded.  `offset`, when known, is the byte
// position of the first offending byte within the string handed to the
// parser; npos means the error is not tied to a single byte.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what)
      : std::runtime_error(what), offset(std::string::npos) {}
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

// The request is well-formed but outside what this build supports
// (graph too large, enumeration past the built-in limit, ...).
class capability_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace critlab

#endif
