#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqc {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input text; line() is 1-based, 0 when not line-oriented.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : Error(line == 0 ? what
                          : "line " + std::to_string(line) + ": " + what),
          _line(line),
          _message(what) {}

    std::size_t line() const noexcept {
      return _line;
    }
    // The message without the line prefix.
    std::string const& message() const noexcept {
      return _message;
    }

   private:
    std::size_t _line;
    std::string _message;
  };

  // A file could not be opened or read.
  class FileError : public Error {
   public:
    using Error::Error;
  };

  // A structural invariant of a complex, word, window or gluing is violated.
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  // Two square corners carry the same (bottom, left) key.
  class DuplicateCornerError : public ValidationError {
   public:
    using ValidationError::ValidationError;
  };

  // A development needed a corner key that has no image.
  class DevelopmentError : public Error {
   public:
    using Error::Error;
  };

  // A search or development ran past its work budget.
  class BudgetExhausted : public Error {
   public:
    using Error::Error;
  };

}  // namespace sqc
