#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cob2 {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad field specification, mixed-field arithmetic, or division by zero.
class FieldError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Layers of a word do not chain, or a layer is empty.
class MalformedWord : public Error {
 public:
  using Error::Error;
};

class BoundaryMismatch : public Error {
 public:
  BoundaryMismatch(std::size_t left_target, std::size_t right_source)
      : Error("boundary mismatch: left word has " + std::to_string(left_target) +
              " output circles, right word has " + std::to_string(right_source) +
              " input circles"),
        left_target_(left_target),
        right_source_(right_source) {}

  std::size_t left_target() const noexcept { return left_target_; }
  std::size_t right_source() const noexcept { return right_source_; }

 private:
  std::size_t left_target_;
  std::size_t right_source_;
};

/// Signals a broken internal invariant. Reaching this is a bug.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON document or schema violation in an input file.
class FormatError : public Error {
 public:
  using Error::Error;
};

class InvalidGroupTable : public Error {
 public:
  using Error::Error;
};

class UnknownGroupName : public Error {
 public:
  explicit UnknownGroupName(const std::string& name)
      : Error("unknown group name '" + name + "'") {}
};

class NonAbelianGroup : public Error {
 public:
  using Error::Error;
};

/// The field characteristic divides the group order.
class BadCharacteristic : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

class DegeneratePairing : public Error {
 public:
  using Error::Error;
};

}  // namespace cob2
