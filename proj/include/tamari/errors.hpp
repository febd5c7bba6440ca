#pragma once

#include <stdexcept>
#include <string>

namespace tamari {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A diagram does not fit inside the staircase of the ambient lattice.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

/// Malformed value: bad step sequence, non-partition, unparsable text.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// A sequence of diagrams is not a saturated chain.
class ChainError : public Error {
 public:
  using Error::Error;
};

/// A tableau is not the image of a saturated chain.
class EncodingError : public Error {
 public:
  using Error::Error;
};

/// Input lies outside the domain of a map. `label()` is the offending
/// plus-full-set label when the violation is about one.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what, int label = 0)
      : Error(what), label_(label) {}
  int label() const noexcept { return label_; }

 private:
  int label_;
};

class NotInImageError : public Error {
 public:
  using Error::Error;
};

/// Required initial values are neither cached nor supplied.
class CacheMissError : public Error {
 public:
  using Error::Error;
};

}  // namespace tamari
