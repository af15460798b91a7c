#pragma once

#include <stdexcept>
#include <string>

namespace comgrasp {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Rejected input: dimension mismatch, violated invariant, bad argument.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// A scene/record file could not be parsed. Carries a 1-based line number
/// (0 when the failure is not tied to a single line).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Design matrix rank < 3: the capture geometry cannot identify
/// (dr_x, dr_y, G_o). Raised by both solver routes.
class UnobservableError : public Error {
 public:
  using Error::Error;
};

/// Gradient descent could not decrease the objective for ten consecutive
/// attempts; usually the learning rate is far too large.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Least-squares weight estimate came out non-positive.
class NonphysicalWeightError : public Error {
 public:
  using Error::Error;
};

/// |r_33| of an eelink->object transform is too small for the planar
/// projection to be evaluated.
class SingularPoseError : public Error {
 public:
  using Error::Error;
};

/// A rendered mask contains no occupied pixel.
class EmptyMaskError : public Error {
 public:
  using Error::Error;
};

/// Top-down rectangle is nearly square; the rod direction is ambiguous.
class AmbiguousOrientationError : public Error {
 public:
  using Error::Error;
};

/// Side-camera view too occluded to measure the rod.
class ObservationUnavailableError : public Error {
 public:
  using Error::Error;
};

}  // namespace comgrasp
