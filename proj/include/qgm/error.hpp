#ifndef QGM_ERROR_HPP
#define QGM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qgm {

// Base error for all library failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A ground set is too large for subset enumeration.
class CapError : public Error {
 public:
  explicit CapError(const std::string& what) : Error(what) {}
};

// Input text could not be parsed; line is 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace qgm

#endif  // QGM_ERROR_HPP
