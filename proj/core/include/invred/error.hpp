#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace invred {

enum class ErrorCode {
  Shape,
  DivisionByZero,
  Domain,
  Singular,
  GroupTooLarge,
  Resource,
  Parse,
  // reduce_degree preconditions
  NotFixed,
  NotInvariant,
  VanishesAtPoint,
  Inhomogeneous,
  // a verified post-condition failed; indicates a bug, never bad input
  InternalConsistency,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace invred
