#pragma once

#include <stdexcept>
#include <string>

namespace locallip {

/// Invalid argument to a library operation (bad range, length mismatch, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A measurement geometry violates one of its constraints.
class GeometryError : public ParameterError {
 public:
  enum class Reason {
    NonPositive,
    ShiftCountDoesNotDivide,
    StrideNotBelowSupport,
    SupportTooLarge,
    OddLength,
  };

  GeometryError(Reason reason, const std::string& what)
      : ParameterError(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// A mask has a nonzero entry outside its declared support, or a generator
/// violates its bandlimit.
class SupportError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// A serialized container could not be read or parsed.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace locallip

namespace locallip {

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace locallip
