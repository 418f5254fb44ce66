#pragma once

#include <stdexcept>
#include <string>

namespace entlab {

/// Base class for everything this library throws on purpose.
/// `code()` is a stable machine-readable identifier used by the CLI
/// error stream and by tests.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Well-formed input carrying invalid values (negative mass, bad sums, ...).
/// The CLI maps these to exit status 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text or an unusable value syntax. Exit status 2.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("Parse", message) {}
};

/// Unreadable or unwritable files. Exit status 2.
class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("Io", message) {}
};

class NegativeEntryError : public ValidationError {
 public:
  explicit NegativeEntryError(const std::string& message)
      : ValidationError("NegativeEntry", message) {}
};

/// Entries do not sum to exactly 1. `excess()` is the exact signed
/// difference (sum - 1) rendered as a fraction string.
class MassMismatchError : public ValidationError {
 public:
  MassMismatchError(const std::string& message, std::string excess)
      : ValidationError("MassMismatch", message), excess_(std::move(excess)) {}

  const std::string& excess() const noexcept { return excess_; }

 private:
  std::string excess_;
};

class EmptyGridError : public ValidationError {
 public:
  explicit EmptyGridError(const std::string& message)
      : ValidationError("EmptyGrid", message) {}
};

/// Conditioning on (or weighting) a row whose total mass is zero.
class ZeroMarginalError : public ValidationError {
 public:
  explicit ZeroMarginalError(const std::string& message)
      : ValidationError("ZeroMarginal", message) {}
};

class LengthMismatchError : public ValidationError {
 public:
  explicit LengthMismatchError(const std::string& message)
      : ValidationError("LengthMismatch", message) {}
};

class ProbOutOfRangeError : public ValidationError {
 public:
  explicit ProbOutOfRangeError(const std::string& message)
      : ValidationError("ProbOutOfRange", message) {}
};

class StepInvalidError : public ValidationError {
 public:
  explicit StepInvalidError(const std::string& message)
      : ValidationError("StepInvalid", message) {}
};

class TooLargeError : public ValidationError {
 public:
  explicit TooLargeError(const std::string& message)
      : ValidationError("TooLarge", message) {}
};

class ImpossibleCiphertextError : public ValidationError {
 public:
  explicit ImpossibleCiphertextError(const std::string& message)
      : ValidationError("ImpossibleCiphertext", message) {}
};

class AlphabetTooSmallError : public ValidationError {
 public:
  explicit AlphabetTooSmallError(const std::string& message)
      : ValidationError("AlphabetTooSmall", message) {}
};

}  // namespace entlab
