#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pivots {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: unknown vertex, bad word, syntax errors, precondition
// violations on argument shape.
class InputError : public Error {
 public:
  using Error::Error;
};

// A well-formed request that the graph does not admit: pivot on a non-edge,
// local complementation at a loop-free vertex, singular principal pivot,
// support with zero determinant.
class NotApplicableError : public Error {
 public:
  explicit NotApplicableError(const std::string& what,
                              std::optional<std::size_t> op_index = std::nullopt)
      : Error(what), op_index_(op_index) {}

  // Position of the failing operation when raised from sequence application.
  std::optional<std::size_t> op_index() const noexcept { return op_index_; }

 private:
  std::optional<std::size_t> op_index_;
};

// Request exceeds a configured enumeration cap.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace pivots
