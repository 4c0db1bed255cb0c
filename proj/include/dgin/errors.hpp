#ifndef DGIN_ERRORS_HPP
#define DGIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dgin {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text.  `position` is a 0-based offset into the input
/// when known, -1 otherwise.
class ParseError : public Error {
public:
  ParseError(const std::string& what, long position = -1)
      : Error(position >= 0 ? what + " (at offset " + std::to_string(position) + ")" : what),
        position_(position) {}
  long position() const { return position_; }

private:
  long position_;
};

/// Mismatched variable counts, degrees, cardinalities or ranks.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// The requested numeric data cannot be a Hilbert polynomial for the
/// given ambient dimension (failed decomposition, negative values,
/// Macaulay growth violation, ...).
class AdmissibilityError : public Error {
public:
  using Error::Error;
};

/// A configured budget or cap was exceeded before the computation finished.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// Monte-Carlo genericity certification failed after the retry cap.
class GenericityError : public Error {
public:
  using Error::Error;
};

/// Structurally valid input outside the supported domain of an operation
/// (e.g. a non-Borel ideal passed to a Borel-only routine).
class UnsupportedInputError : public Error {
public:
  using Error::Error;
};

/// Hilbert function values did not stabilize to a polynomial within the
/// inspected degree range.
class NotStabilizedError : public Error {
public:
  using Error::Error;
};

} // namespace dgin

#endif
