#ifndef DOPE_ERROR_HPP
#define DOPE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dope {

enum class ErrorCode {
  BothZero,
  ZeroPolynomial,
  DimensionMismatch,
  CarryOverflow,
  BudgetExceeded,
  DominanceViolated,
  ConditionViolated,
  OutOfDomain,
  NotSafe,
  NotSaturated,
  NotLimited,
  RetriesExhausted,
  IncompleteTable,
  InvalidInput,
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::CarryOverflow: return "CarryOverflow";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DominanceViolated: return "DominanceViolated";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NotSafe: return "NotSafe";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::NotLimited: return "NotLimited";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::IncompleteTable: return "IncompleteTable";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Every contract violation in the library is reported through this type.
/// what() reads "<CodeName>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dope

#endif  // DOPE_ERROR_HPP
