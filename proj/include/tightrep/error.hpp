#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tightrep {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table or map violates one of the axioms of its structure.
class validation_error : public error {
 public:
  using error::error;
};

/// An element name or index does not belong to the structure.
class unknown_element_error : public error {
 public:
  using error::error;
};

/// An operation was called outside its precondition (e.g. b \ a with a not <= b).
class precondition_error : public error {
 public:
  using error::error;
};

/// A property that the mathematics guarantees did not hold. Always a bug.
class internal_error : public error {
 public:
  using error::error;
};

/// Structure file syntax or reference error, tagged with a 1-based line.
class parse_error : public error {
 public:
  parse_error(std::size_t line, std::string const& message)
      : error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tightrep
