#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dpdeg {

enum class ErrorCode {
  LoopArc,
  VertexOutOfRange,
  LoopEdge,
  NotConnected,
  Not2Connected,
  ParseError,
  BadParameter,
  NoCRFound,
  PropertyRejected,
  FibreOverlap,
  ColorIdsNotDense,
  UnknownColor,
  FibreNotIndependent,
  NotAMatching,
  ArcWithoutBaseArc,
  EmptyList,
  MissingF,
  InvalidTransversal,
  NotStrictlyDegenerate,
  DisconnectedRemainder,
  NotABlock,
  SaturationImpossible,
  PartsSumMismatch,
  BadParity,
  BadOrder,
  FibreSizeMismatch,
  SupportNotZero,
  MatchingViolation,
  NotDegreeFeasible,
  EmptyFibre,
  BudgetExceeded,
  ScaleCapExceeded,
  NotCritical,
  NotListAssociated,
  PropertyNotEligible,
  InternalInvariant,
};

inline std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::LoopArc: return "LoopArc";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::Not2Connected: return "Not2Connected";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NoCRFound: return "NoCRFound";
    case ErrorCode::PropertyRejected: return "PropertyRejected";
    case ErrorCode::FibreOverlap: return "FibreOverlap";
    case ErrorCode::ColorIdsNotDense: return "ColorIdsNotDense";
    case ErrorCode::UnknownColor: return "UnknownColor";
    case ErrorCode::FibreNotIndependent: return "FibreNotIndependent";
    case ErrorCode::NotAMatching: return "NotAMatching";
    case ErrorCode::ArcWithoutBaseArc: return "ArcWithoutBaseArc";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::MissingF: return "MissingF";
    case ErrorCode::InvalidTransversal: return "InvalidTransversal";
    case ErrorCode::NotStrictlyDegenerate: return "NotStrictlyDegenerate";
    case ErrorCode::DisconnectedRemainder: return "DisconnectedRemainder";
    case ErrorCode::NotABlock: return "NotABlock";
    case ErrorCode::SaturationImpossible: return "SaturationImpossible";
    case ErrorCode::PartsSumMismatch: return "PartsSumMismatch";
    case ErrorCode::BadParity: return "BadParity";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::FibreSizeMismatch: return "FibreSizeMismatch";
    case ErrorCode::SupportNotZero: return "SupportNotZero";
    case ErrorCode::MatchingViolation: return "MatchingViolation";
    case ErrorCode::NotDegreeFeasible: return "NotDegreeFeasible";
    case ErrorCode::EmptyFibre: return "EmptyFibre";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ScaleCapExceeded: return "ScaleCapExceeded";
    case ErrorCode::NotCritical: return "NotCritical";
    case ErrorCode::NotListAssociated: return "NotListAssociated";
    case ErrorCode::PropertyNotEligible: return "PropertyNotEligible";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

/// Library error. `data` carries the offending ids where the code has any
/// (e.g. the base arc (u,v) for NotAMatching).
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string detail, std::vector<int> data = {})
      : std::runtime_error(format(code, data, detail)),
        code_(code),
        data_(std::move(data)),
        detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& data() const noexcept { return data_; }
  const std::string& detail() const noexcept { return detail_; }

  /// "<Code> <data...>", the stable form printed by the CLI.
  std::string brief() const {
    std::string s(to_string(code_));
    for (int d : data_) s += " " + std::to_string(d);
    return s;
  }

private:
  static std::string format(ErrorCode c, const std::vector<int>& data,
                            const std::string& detail) {
    std::string s(to_string(c));
    for (int d : data) s += " " + std::to_string(d);
    if (!detail.empty()) s += ": " + detail;
    return s;
  }

  ErrorCode code_;
  std::vector<int> data_;
  std::string detail_;
};

}  // namespace dpdeg
