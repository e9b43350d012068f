#ifndef CENTRA_ERROR_HPP_
#define CENTRA_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace centra {

  // Bad arguments: degree mismatches, malformed specs, unknown ids.
  class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A configurable size limit was hit before a computation finished.
  class CapExceeded : public std::runtime_error {
   public:
    CapExceeded(std::string const& what, std::size_t cap, std::size_t reached)
        : std::runtime_error(what), _cap(cap), _reached(reached) {}

    std::size_t cap() const noexcept {
      return _cap;
    }
    std::size_t reached() const noexcept {
      return _reached;
    }

   private:
    std::size_t _cap;
    std::size_t _reached;
  };

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column "
                             + std::to_string(column) + ": " + msg),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace centra

#endif  // CENTRA_ERROR_HPP_
