#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ffda {

// Malformed text input; pos is a byte offset into the offending string.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

// An operand does not carry enough certified coefficients for the request.
class PrecisionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (wrong characteristic, odd valuation,
// violated arithmetic side condition, ...).
class DomainError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed.  Signals a bug, never bad input.
class VerificationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ffda
