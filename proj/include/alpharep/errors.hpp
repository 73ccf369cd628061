#pragma once

#include <stdexcept>
#include <string>

namespace alpharep {

// Thrown when input violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A size bound (element iteration, lattice, Dixon) was exceeded.
class BoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed text input; carries the offending position when known.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t pos = npos)
      : std::runtime_error(pos == npos ? what
                                       : what + " at position " + std::to_string(pos)),
        pos_(pos) {}
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

// Exact arithmetic produced something that must not happen for
// consistent data, e.g. a non-integral inner product of two characters.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace alpharep
