#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wvg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 1-based player identifier, matching the bracket notation [q; w_1, ..., w_n].
class PlayerId {
 public:
  constexpr PlayerId() = default;
  constexpr explicit PlayerId(std::size_t one_based) : value_(one_based) {}

  constexpr std::size_t value() const { return value_; }
  /// Zero-based offset into weight and index vectors.
  constexpr std::size_t index() const { return value_ - 1; }

  constexpr auto operator<=>(const PlayerId&) const = default;

 private:
  std::size_t value_ = 0;
};

enum class ErrorCode {
  ZeroOrNegativeQuota,
  QuotaExceedsTotalWeight,
  NegativeWeight,
  EmptyPlayerList,
  InvalidPlayerId,
  DuplicatePlayer,
  TooManyPlayersForEnumeration,
  TableTooLarge,
  PartsDoNotSumToWeight,
  ZeroPart,
  TooFewParts,
  SingletonOrEmptyMerge,
  EmptyAnnexation,
  AnnexerInTargets,
  WeightTooSmallToSplit,
  ParameterOutOfRange,
  SyntaxError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroOrNegativeQuota: return "ZeroOrNegativeQuota";
    case ErrorCode::QuotaExceedsTotalWeight: return "QuotaExceedsTotalWeight";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::EmptyPlayerList: return "EmptyPlayerList";
    case ErrorCode::InvalidPlayerId: return "InvalidPlayerId";
    case ErrorCode::DuplicatePlayer: return "DuplicatePlayer";
    case ErrorCode::TooManyPlayersForEnumeration: return "TooManyPlayersForEnumeration";
    case ErrorCode::TableTooLarge: return "TableTooLarge";
    case ErrorCode::PartsDoNotSumToWeight: return "PartsDoNotSumToWeight";
    case ErrorCode::ZeroPart: return "ZeroPart";
    case ErrorCode::TooFewParts: return "TooFewParts";
    case ErrorCode::SingletonOrEmptyMerge: return "SingletonOrEmptyMerge";
    case ErrorCode::EmptyAnnexation: return "EmptyAnnexation";
    case ErrorCode::AnnexerInTargets: return "AnnexerInTargets";
    case ErrorCode::WeightTooSmallToSplit: return "WeightTooSmallToSplit";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

/// Domain error. Every contract violation in the library surfaces as one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        position_(position) {}

  ErrorCode code() const { return code_; }
  /// Character offset for SyntaxError, if known.
  std::optional<std::size_t> position() const { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

inline std::string to_string(PlayerId id) { return std::to_string(id.value()); }

}  // namespace wvg
