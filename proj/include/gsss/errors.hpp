#pragma once

#include <stdexcept>
#include <string>

namespace gsss {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroVectorError : Error {
  ZeroVectorError() : Error("vector has zero (or denormal) norm") {}
};

struct InvalidDimensionError : Error {
  explicit InvalidDimensionError(int d)
      : Error("dimension must be >= 2, got " + std::to_string(d)) {}
};

struct DimensionMismatchError : Error {
  DimensionMismatchError(int a, int b)
      : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct OrthogonalityError : Error {
  explicit OrthogonalityError(double inner)
      : Error("geodesic base and tangent are not orthogonal (x.z = " +
              std::to_string(inner) + ")") {}
};

struct ZeroDensityError : Error {
  ZeroDensityError() : Error("target density vanishes at the current state") {}
};

struct RejectionBudgetError : Error {
  RejectionBudgetError() : Error("on-geodesic rejection budget exceeded") {}
};

struct SizeMismatchError : Error {
  SizeMismatchError(std::size_t a, std::size_t b)
      : Error("sample counts differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct TooLargeError : Error {
  explicit TooLargeError(std::size_t n)
      : Error("sample count " + std::to_string(n) + " exceeds the supported maximum") {}
};

struct OutOfRangeError : Error {
  using Error::Error;
};

struct InvalidAlphaError : Error {
  explicit InvalidAlphaError(double alpha)
      : Error("alpha must lie in (0, 2*pi), got " + std::to_string(alpha)) {}
};

struct ConstantSeriesError : Error {
  ConstantSeriesError() : Error("series is constant; autocorrelation undefined") {}
};

struct TooShortError : Error {
  explicit TooShortError(std::size_t n)
      : Error("series of length " + std::to_string(n) + " is too short") {}
};

struct InvalidRangeError : Error {
  using Error::Error;
};

/// Wraps a step failure inside run_chain with the iteration that failed.
struct ChainStepError : Error {
  ChainStepError(int iteration, const std::string& what)
      : Error("chain step failed at iteration " + std::to_string(iteration) + ": " + what),
        iteration(iteration) {}
  int iteration;
};

}  // namespace gsss
