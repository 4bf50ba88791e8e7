#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace constaclass {

enum class ErrorCode {
  kInvalidArgument,
  kParseError,
  kNotPrime,
  kFieldTooLarge,
  kLogOfZero,
  kFieldMismatch,
  kDivisionByZeroPoly,
  kZeroScale,
  kZeroPolynomial,
  kNotCoprimeToCharacteristic,
  kCoefficientNotInBaseField,
  kNotIsometric,
  kDegreeTooLarge,
  kEllEqualsCharacteristic,
  kEllNotPrime,
  kFieldNotThreeModFour,
  kTooManyCodes,
  kCodeTooLarge,
  kLengthTooLarge,
  kWitnessMismatch,
  kInternal,
};

std::string_view to_string(ErrorCode code);

/// Library-wide exception. Every failure raised by constaclass carries one of
/// the codes above so callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for the size/cap family.
  bool is_cap_exceeded() const noexcept {
    return code_ == ErrorCode::kFieldTooLarge || code_ == ErrorCode::kTooManyCodes ||
           code_ == ErrorCode::kCodeTooLarge || code_ == ErrorCode::kLengthTooLarge;
  }

 private:
  ErrorCode code_;
};

}  // namespace constaclass
