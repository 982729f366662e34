#pragma once

#include <stdexcept>
#include <string>

namespace a1scroll {

/// Invalid argument to an operation (index out of range, non-unimodular matrix, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is well formed but lies outside the domain where a rule applies.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// degree() called on an element that is not homogeneous of top degree.
class DegreeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A decision procedure was called outside the family it decides.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Text syntax error. position() is the 0-based offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::string input, std::size_t position)
      : std::runtime_error(std::move(message)), input_(std::move(input)), position_(position) {}

  const std::string& input() const noexcept { return input_; }
  std::size_t position() const noexcept { return position_; }

  /// Message followed by the input and a caret under the offending position.
  std::string annotated() const {
    std::string out = std::string(what()) + " at position " + std::to_string(position_) + "\n  " + input_ + "\n  ";
    out.append(position_, ' ');
    out += '^';
    return out;
  }

 private:
  std::string input_;
  std::size_t position_;
};

}  // namespace a1scroll
