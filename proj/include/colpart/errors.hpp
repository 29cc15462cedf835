#ifndef COLPART_ERRORS_HPP_
#define COLPART_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace colpart {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word notation or input file. `position()` is 0-based.
class ParseError : public Error {
 public:
  ParseError(std::string const& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class RenderError : public Error {
 public:
  using Error::Error;
};

/// An operation was applied outside its domain, e.g. a contraction of two
/// points of equal color.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A length bound is violated (generator longer than the working bound, or
/// a bound beyond what the closure engine can pack).
class BoundError : public Error {
 public:
  using Error::Error;
};

/// A tensor or linear system would exceed the configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace colpart

#endif  // COLPART_ERRORS_HPP_
