#pragma once

#include <stdexcept>
#include <string>

namespace ordeq {

/// Parse failure carrying the byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Evaluation failure, e.g. a variable without a binding.
class EvalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant. The CLI maps this to its own exit code.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace ordeq
