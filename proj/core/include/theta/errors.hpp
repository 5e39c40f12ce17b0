#pragma once

#include <stdexcept>
#include <string>

namespace theta {

/// Base for every error raised by the library. Falsified checks are never
/// errors; they come back as report entries.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects that must live on the same ambient space R^{n x k} do not.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A parameter is outside the declared domain of an operation (negative
/// rank, too many variables, malformed label, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested rank lies outside the range where labels can be identified.
class UnsupportedRank : public Error {
 public:
  using Error::Error;
};

/// The engine found highest-weight data it could not map to a unique O(n)
/// label. Reported instead of guessing.
class AmbiguousIdentification : public Error {
 public:
  using Error::Error;
};

/// An operator handed to a kernel computation does not shift degree uniformly.
class InhomogeneousOperator : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace theta
