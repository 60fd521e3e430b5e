#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hecke {

enum class ErrorCode {
  Parse,
  Monotonicity,
  InvalidArgument,
  NotDominant,
  NotRegular,
  NotRestrictable,
  LengthMismatch,
  UnsupportedRegime,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the text grammar; position is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class MonotonicityError : public Error {
 public:
  MonotonicityError(const std::string& what, std::size_t part_index)
      : Error(ErrorCode::Monotonicity, what), part_index_(part_index) {}

  // 1-based index of the first part that exceeds its predecessor.
  std::size_t part_index() const noexcept { return part_index_; }

 private:
  std::size_t part_index_;
};

}  // namespace hecke
