#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace laguerre {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

class ParallelPoints : public Error {
 public:
  using Error::Error;
};

class PointOnCircle : public Error {
 public:
  using Error::Error;
};

class PointNotOnCircle : public Error {
 public:
  using Error::Error;
};

class SameCircle : public Error {
 public:
  using Error::Error;
};

class TangentPair : public Error {
 public:
  using Error::Error;
};

class NotALaguerrePlane : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class NotFixedPointFree : public Error {
 public:
  using Error::Error;
};

class NoDisjointPair : public Error {
 public:
  using Error::Error;
};

class ExhaustiveTooLarge : public Error {
 public:
  using Error::Error;
};

/// Zero or several members of a tangent pencil touch the target circle.
class NotUnique : public Error {
 public:
  NotUnique(std::size_t count, const std::string& what)
      : Error(what), count_(count) {}
  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

/// Raised when a construction that theory says is well defined is not:
/// two admissible auxiliary choices disagree, or no auxiliary choice exists.
/// The CLI maps this to exit code 3.
class WellDefinednessFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace laguerre
