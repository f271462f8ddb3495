#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace solqsol {

// Thrown when a computation would exceed the configured order cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the group-spec parser; carries the offending input position.
class SpecParseError : public std::runtime_error {
 public:
  SpecParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace solqsol
