#pragma once

#include <stdexcept>
#include <string>

namespace curvint {

/// Base of every numerical failure raised by the library.
class CurvintError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The chart differential dropped rank (or nearly so) at the evaluated point.
class DegenerateImmersion : public CurvintError {
 public:
  using CurvintError::CurvintError;
};

class FrameNotOrthonormal : public CurvintError {
 public:
  using CurvintError::CurvintError;
};

/// The tangential part of a field vanished.
class VanishingField : public CurvintError {
 public:
  using CurvintError::CurvintError;
};

class IndexOutOfRange : public CurvintError {
 public:
  using CurvintError::CurvintError;
};

/// The Gauss-map degree integral is not close to an integer.
class NonIntegerDegree : public CurvintError {
 public:
  NonIntegerDegree(const std::string& what, double raw)
      : CurvintError(what), raw_(raw) {}
  double raw() const { return raw_; }

 private:
  double raw_;
};

/// A point evaluation failed during quadrature; carries the offending point.
class PointEvaluationError : public CurvintError {
 public:
  PointEvaluationError(const std::string& what, int chart_index,
                       std::string point)
      : CurvintError(what), chart_index_(chart_index), point_(std::move(point)) {}
  int chart_index() const { return chart_index_; }
  const std::string& point() const { return point_; }

 private:
  int chart_index_;
  std::string point_;
};

/// Unknown catalog identifier or invalid user configuration.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace curvint
