#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace grpwl {

enum class ErrorCode {
  kParse,
  kNotLatinSquare,
  kNoIdentity,
  kNotAssociative,
  kNotASubgroup,
  kTooLarge,
  kCapExceeded,
  kBudgetExceeded,
  kInvalidAction,
  kBadScalarOrder,
  kNotCoprime,
  kBadPrime,
  kDisconnected,
  kDegreeTooLow,
  kNotAbelian,
  kNotSemisimple,
  kNotGenerated,
  kIllegalMove,
  kStrategyStuck,
  kInvalidArgument,
};

const char* error_code_name(ErrorCode code);

// Every failure the library reports is an Error carrying a machine-readable
// code; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by validate_cayley when (ab)c != a(bc) for the stored triple.
class NotAssociativeError : public Error {
 public:
  NotAssociativeError(std::uint32_t a, std::uint32_t b, std::uint32_t c)
      : Error(ErrorCode::kNotAssociative,
              "(ab)c != a(bc) for (a,b,c) = (" + std::to_string(a) + "," +
                  std::to_string(b) + "," + std::to_string(c) + ")"),
        witness_{a, b, c} {}

  const std::array<std::uint32_t, 3>& witness() const noexcept { return witness_; }

 private:
  std::array<std::uint32_t, 3> witness_;
};

}  // namespace grpwl
