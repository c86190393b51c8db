#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mltkd {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Constant (zero-variance) logit vector: nothing to standardize.
class DegenerateLogits : public Error {
 public:
  explicit DegenerateLogits(const std::string& what, std::ptrdiff_t sample_index = -1)
      : Error(what), sample_index_(sample_index) {}

  /// Index of the offending sample when raised from a batch op, -1 otherwise.
  std::ptrdiff_t sample_index() const noexcept { return sample_index_; }

 private:
  std::ptrdiff_t sample_index_;
};

/// Two vectors that must share a length do not.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// Argument of a truncated log expansion lies outside its radius of convergence.
class OutOfRadius : public Error {
 public:
  using Error::Error;
};

/// A Taylor partial sum of exp came out non-positive (odd order, very negative input).
class NonPositiveExpansion : public Error {
 public:
  using Error::Error;
};

/// Expansion order outside the supported range.
class InvalidOrder : public Error {
 public:
  using Error::Error;
};

/// Class label outside [0, K).
class LabelOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Tensor/batch shape does not match what the operation expects.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed model specification.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// Invalid argument values (non-positive temperature, bad dataset parameters, ...).
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// Text input (CSV, config file) that cannot be parsed; coordinates are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t row, std::size_t column = 0)
      : Error(what), row_(row), column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

/// Input file exists but holds no data rows.
class EmptyFile : public Error {
 public:
  using Error::Error;
};

/// Checkpoint or logits-cache file that does not match the current run.
class IncompatibleCheckpoint : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Run-config file with unknown keys, bad values, or missing sections.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace mltkd
