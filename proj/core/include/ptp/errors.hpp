#pragma once

#include <stdexcept>
#include <string>

namespace ptp {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Evaluation point too close to a declared pole of the potential.
class PoleProximityError : public Error {
 public:
  using Error::Error;
};

/// A term evaluation produced NaN or Inf.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// Rotation of a non-integer power-of-ix term where the branch phase is
/// not determined by the term algebra alone.
class BranchAmbiguityError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class NotPTSymmetricError : public Error {
 public:
  using Error::Error;
};

/// Rotated potential of a PT-symmetric input failed the reality check;
/// indicates a branch or representation bug, not a physics outcome.
class RotatedNotRealError : public Error {
 public:
  using Error::Error;
};

class PoleOnContourError : public Error {
 public:
  using Error::Error;
};

class ContourTooCoarseError : public Error {
 public:
  using Error::Error;
};

class QRNoConvergenceError : public Error {
 public:
  QRNoConvergenceError(const std::string& msg, int stuck)
      : Error(msg), stuck_index(stuck) {}
  int stuck_index;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class SpectrumIncompleteError : public Error {
 public:
  using Error::Error;
};

class InverseIterationStallError : public Error {
 public:
  using Error::Error;
};

class GridMismatchError : public Error {
 public:
  using Error::Error;
};

class TooFewPointsError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace ptp
