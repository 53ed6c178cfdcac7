#pragma once

// Named game families, PARTITION reduction instances and seeded random games.

#include <cstdint>
#include <optional>
#include <limits>
#include <random>
#include <string_view>
#include <vector>

#include "wvg/game.hpp"

namespace wvg {

/// A multiset of positive integers a_1..a_k.
class PartitionInstance {
 public:
  explicit PartitionInstance(std::vector<Integer> values) : values_(std::move(values)) {
    if (values_.empty()) throw Error(ErrorCode::ParameterOutOfRange, "partition instance needs k >= 1 values");
    for (const auto& a : values_) {
      if (a < 1) throw Error(ErrorCode::ParameterOutOfRange, "partition values must be >= 1, got " + a.str());
    }
  }

  const std::vector<Integer>& values() const { return values_; }
  Integer total() const {
    Integer s = 0;
    for (const auto& a : values_) s += a;
    return s;
  }

 private:
  std::vector<Integer> values_;
};

enum class ReductionVariant { Split, Merge, Annex, SSMerge };

constexpr std::string_view to_string(ReductionVariant v) {
  switch (v) {
    case ReductionVariant::Split: return "split";
    case ReductionVariant::Merge: return "merge";
    case ReductionVariant::Annex: return "annex";
    case ReductionVariant::SSMerge: return "ssmerge";
  }
  return "unknown";
}

/// The constructed game plus the manipulation it asks about. For Split the
/// focus player splits into (1,1); for Merge/SSMerge `focus_coalition` merges;
/// for Annex `focus_player` annexes `focus_coalition`.
struct ReductionOutput {
  WeightedVotingGame game;
  ReductionVariant variant;
  std::optional<PlayerId> focus_player;
  Coalition focus_coalition;
};

/// Weights 8*a_1..8*a_k followed by the small players of the variant
/// (one of weight 2 for Split, three units for Merge/SSMerge, two units for
/// Annex); quota 4*sum(a)+2.
inline ReductionOutput partition_reduction(const PartitionInstance& instance, ReductionVariant variant) {
  std::vector<Integer> weights;
  for (const auto& a : instance.values()) weights.push_back(8 * a);
  const Integer quota = 4 * instance.total() + 2;
  const std::size_t k = instance.values().size();
  switch (variant) {
    case ReductionVariant::Split:
      weights.push_back(2);
      return {WeightedVotingGame::make(quota, std::move(weights)), variant, PlayerId(k + 1), {}};
    case ReductionVariant::Merge:
    case ReductionVariant::SSMerge:
      weights.insert(weights.end(), {1, 1, 1});
      return {WeightedVotingGame::make(quota, std::move(weights)), variant, std::nullopt, Coalition({k + 2, k + 3})};
    case ReductionVariant::Annex:
      weights.insert(weights.end(), {1, 1});
      return {WeightedVotingGame::make(quota, std::move(weights)), variant, PlayerId(k + 2), Coalition({k + 1})};
  }
  throw Error(ErrorCode::ParameterOutOfRange, "unknown reduction variant");
}

/// [n; 2, 1, ..., 1] with n+1 players.
inline WeightedVotingGame tight_split_family(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::ParameterOutOfRange, "tight split family needs n >= 3");
  std::vector<Integer> weights(n + 1, 1);
  weights[0] = 2;
  return WeightedVotingGame::make(n, std::move(weights));
}

/// [3n/2; 2n, 1, ..., 1] with n players; player 1 is a dictator.
inline WeightedVotingGame dictator_family(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw Error(ErrorCode::ParameterOutOfRange, "dictator family needs even n >= 4");
  std::vector<Integer> weights(n, 1);
  weights[0] = 2 * n;
  return WeightedVotingGame::make(3 * n / 2, std::move(weights));
}

inline WeightedVotingGame unanimity_game(std::vector<Integer> weights) {
  if (weights.empty()) throw Error(ErrorCode::ParameterOutOfRange, "unanimity game needs at least one player");
  Integer total = 0;
  for (const auto& w : weights) {
    if (w < 1) throw Error(ErrorCode::ParameterOutOfRange, "unanimity weights must be >= 1, got " + w.str());
    total += w;
  }
  return WeightedVotingGame::make(std::move(total), std::move(weights));
}

namespace detail {

/// Uniform integer in [lo, hi] from raw mt19937_64 output by rejection.
/// std::uniform_int_distribution is implementation-defined, so it is not
/// used where seeds must reproduce across platforms.
inline std::uint64_t uniform_in(std::mt19937_64& engine, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return engine();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine();
  } while (x >= limit);
  return lo + x % range;
}

}  // namespace detail

/// Weights uniform in 1..max_weight, then a quota uniform in 1..sum(w)
/// (or floor(sum/2)+1..sum when proper_only). Draws come from std::mt19937_64
/// seeded with `seed`, so a seed yields the same game everywhere.
inline WeightedVotingGame random_game(std::size_t n, std::uint64_t max_weight, std::uint64_t seed,
                                      bool proper_only = false) {
  if (n < 1) throw Error(ErrorCode::ParameterOutOfRange, "random game needs n >= 1");
  if (max_weight < 1) throw Error(ErrorCode::ParameterOutOfRange, "max weight must be >= 1");
  if (max_weight > (std::numeric_limits<std::uint64_t>::max() >> 1) / n) {
    throw Error(ErrorCode::ParameterOutOfRange, "n * max_weight does not fit in 63 bits");
  }
  std::mt19937_64 engine(seed);
  std::vector<Integer> weights;
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto w = detail::uniform_in(engine, 1, max_weight);
    weights.emplace_back(w);
    total += w;
  }
  const std::uint64_t lo = proper_only ? total / 2 + 1 : 1;
  const std::uint64_t quota = detail::uniform_in(engine, lo, total);
  return WeightedVotingGame::make(quota, std::move(weights));
}

}  // namespace wvg
