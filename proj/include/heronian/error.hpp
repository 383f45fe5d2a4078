#ifndef HERONIAN_ERROR_HPP
#define HERONIAN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace heronian {

enum class ErrorCode {
  ZeroDimension,
  AreaOutOfRange,
  SideTooShort,
  NonIntegerArea,
  InvalidPerimeter,
  NotAmicable,
  IndexTooSmall,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroDimension: return "ZeroDimension";
    case ErrorCode::AreaOutOfRange: return "AreaOutOfRange";
    case ErrorCode::SideTooShort: return "SideTooShort";
    case ErrorCode::NonIntegerArea: return "NonIntegerArea";
    case ErrorCode::InvalidPerimeter: return "InvalidPerimeter";
    case ErrorCode::NotAmicable: return "NotAmicable";
    case ErrorCode::IndexTooSmall: return "IndexTooSmall";
  }
  return "Unknown";
}

/// Raised for every domain violation in the library. The code is what tests
/// and the CLI dispatch on; the message is for humans.
class Error : public std::invalid_argument {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::invalid_argument(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace heronian

#endif  // HERONIAN_ERROR_HPP
