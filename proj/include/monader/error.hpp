#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monader {

// Root of every error raised by the library. The CLI maps subclasses to exit
// codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax error at offset " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownFunction : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class BadWeightLiteral : public Error {
 public:
  using Error::Error;
};

class SemiringMismatch : public Error {
 public:
  using Error::Error;
};

class SupportMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ImproperExpression : public Error {
 public:
  using Error::Error;
};

class WordTooLong : public Error {
 public:
  using Error::Error;
};

class TruncatedAutomaton : public Error {
 public:
  using Error::Error;
};

}  // namespace monader
