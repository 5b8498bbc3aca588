#include "degenlab/error.hpp"

namespace degenlab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_operand: return "invalid-operand";
    case ErrorKind::domain_error: return "domain-error";
    case ErrorKind::size_limit: return "size-limit";
    case ErrorKind::malformed_input: return "malformed-input";
    case ErrorKind::not_a_permutation: return "not-a-permutation";
    case ErrorKind::not_a_covering_sum: return "not-a-covering-sum";
    case ErrorKind::io_error: return "io-error";
    case ErrorKind::unknown_check: return "unknown-check";
  }
  return "?";
}

}  // namespace degenlab
