#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace degenlab {

enum class ErrorKind {
  invalid_operand,
  domain_error,
  size_limit,
  malformed_input,
  not_a_permutation,
  not_a_covering_sum,
  io_error,
  unknown_check,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// graph6 decoding failure; `offset` is the byte position of the offending
/// character in the input record.
class MalformedInput : public Error {
 public:
  MalformedInput(std::size_t offset, const std::string& what)
      : Error(ErrorKind::malformed_input,
              what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace degenlab
