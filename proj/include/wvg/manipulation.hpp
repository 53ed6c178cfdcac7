#pragma once

// False-name manipulations: a player splitting into several identities,
// players merging into a bloc, and a player annexing others.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "wvg/game.hpp"
#include "wvg/power_indices.hpp"

namespace wvg {

/// Player `player` hands its weight to sub-players with weights `parts`.
/// Canonical form: at least two parts, all positive, non-increasing.
struct SplitAction {
  PlayerId player;
  std::vector<Integer> parts;

  friend bool operator==(const SplitAction&, const SplitAction&) = default;
};

inline SplitAction make_split_action(PlayerId player, std::vector<Integer> parts) {
  if (parts.size() < 2) throw Error(ErrorCode::TooFewParts, "a split needs at least two parts");
  for (const auto& p : parts) {
    if (p <= 0) throw Error(ErrorCode::ZeroPart, "split parts must be positive, got " + p.str());
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return {player, std::move(parts)};
}

/// Voluntary merge of `members` (no annexer), or `annexer` taking over
/// `members`.
struct MergeAction {
  std::optional<PlayerId> annexer;
  Coalition members;

  friend bool operator==(const MergeAction&, const MergeAction&) = default;
};

using Action = std::variant<SplitAction, MergeAction>;

/// to_new[k]: ids in the new game that came from old player k+1.
/// to_old[k]: old ids that new player k+1 came from.
struct PlayerRemap {
  std::vector<std::vector<PlayerId>> to_new;
  std::vector<std::vector<PlayerId>> to_old;

  friend bool operator==(const PlayerRemap&, const PlayerRemap&) = default;
};

struct SplitOutcome {
  WeightedVotingGame game;
  std::vector<PlayerId> parts;  ///< ids of the sub-players in `game`
  PlayerRemap remap;
};

struct MergeOutcome {
  WeightedVotingGame game;
  PlayerId bloc;
  PlayerRemap remap;
};

/// Replaces the splitting player by its sub-players, in part order, at the
/// splitting player's position. The quota is unchanged.
inline SplitOutcome split_game(const WeightedVotingGame& game, const SplitAction& action) {
  require_player(game, action.player);
  if (action.parts.size() < 2) throw Error(ErrorCode::TooFewParts, "a split needs at least two parts");
  Integer total = 0;
  for (const auto& p : action.parts) {
    if (p <= 0) throw Error(ErrorCode::ZeroPart, "split parts must be positive, got " + p.str());
    total += p;
  }
  if (total != game.weight(action.player)) {
    throw Error(ErrorCode::PartsDoNotSumToWeight, "parts sum to " + total.str() + " but player " +
                                                      to_string(action.player) + " has weight " +
                                                      game.weight(action.player).str());
  }
  const std::size_t n = game.size();
  const std::size_t m = action.parts.size();
  std::vector<Integer> weights;
  weights.reserve(n + m - 1);
  PlayerRemap remap{std::vector<std::vector<PlayerId>>(n), {}};
  std::vector<PlayerId> parts;
  for (auto old : game.players()) {
    if (old == action.player) {
      for (const auto& p : action.parts) {
        weights.push_back(p);
        parts.emplace_back(weights.size());
        remap.to_new[old.index()].push_back(parts.back());
        remap.to_old.push_back({old});
      }
    } else {
      weights.push_back(game.weight(old));
      remap.to_new[old.index()].emplace_back(weights.size());
      remap.to_old.push_back({old});
    }
  }
  return {WeightedVotingGame::make(game.quota(), std::move(weights)), std::move(parts), std::move(remap)};
}

/// Replaces the members of `coalition` by one bloc carrying their total
/// weight, placed at the smallest member's position. The quota is unchanged.
inline MergeOutcome merge_game(const WeightedVotingGame& game, const Coalition& coalition) {
  require_coalition(game, coalition);
  if (coalition.size() < 2) {
    throw Error(ErrorCode::SingletonOrEmptyMerge, "a merge needs at least two players");
  }
  const PlayerId first = coalition.members().front();
  std::vector<Integer> weights;
  PlayerRemap remap{std::vector<std::vector<PlayerId>>(game.size()), {}};
  PlayerId bloc;
  for (auto old : game.players()) {
    if (old == first) {
      weights.push_back(coalition_weight(game, coalition));
      bloc = PlayerId(weights.size());
      remap.to_old.push_back(coalition.members());
    } else if (!coalition.contains(old)) {
      weights.push_back(game.weight(old));
      remap.to_new[old.index()].emplace_back(weights.size());
      remap.to_old.push_back({old});
    }
  }
  for (auto member : coalition.members()) remap.to_new[member.index()].push_back(bloc);
  return {WeightedVotingGame::make(game.quota(), std::move(weights)), bloc, std::move(remap)};
}

struct EvaluationOptions {
  Method method = Method::DynamicProgramming;
  std::size_t enumeration_limit = kDefaultEnumerationLimit;
};

/// Before/after payoffs of one manipulation. `beneficial` is strict: a
/// neutral outcome has delta 0 and is not beneficial.
struct ManipulationReport {
  Action action;
  IndexKind index_kind = IndexKind::BanzhafNormalized;
  WeightedVotingGame original;
  WeightedVotingGame result;
  Rational before;
  Rational after;
  Rational delta;
  bool beneficial = false;
  /// Probabilistic Banzhaf values compared across games with different
  /// player counts; reported, but not a standard payoff comparison.
  bool non_standard = false;
  PlayerRemap remap;
  PowerIndexVector original_values;
  PowerIndexVector result_values;
};

namespace detail {

inline ManipulationReport make_report(Action action, IndexKind kind, const WeightedVotingGame& original,
                                      WeightedVotingGame result, Rational before, Rational after,
                                      PlayerRemap remap, PowerIndexVector original_values,
                                      PowerIndexVector result_values) {
  Rational delta = after - before;
  const bool beneficial = delta > 0;
  return {std::move(action),     kind,
          original,              std::move(result),
          std::move(before),     std::move(after),
          std::move(delta),      beneficial,
          kind == IndexKind::BanzhafProbabilistic, std::move(remap),
          std::move(original_values), std::move(result_values)};
}

inline PowerIndexVector index_of(const WeightedVotingGame& game, IndexKind kind, const EvaluationOptions& opts) {
  return power_index(game, kind, opts.method, opts.enumeration_limit);
}

}  // namespace detail

/// Payoff of the splitting player before, and the summed payoff of its
/// sub-players after.
inline ManipulationReport evaluate_split(const WeightedVotingGame& game, const SplitAction& action, IndexKind kind,
                                         const EvaluationOptions& opts = {}) {
  auto split = split_game(game, action);
  auto original_values = detail::index_of(game, kind, opts);
  auto result_values = detail::index_of(split.game, kind, opts);
  Rational before = original_values[action.player];
  Rational after = result_values.sum_over(split.parts);
  return detail::make_report(action, kind, game, std::move(split.game), std::move(before), std::move(after),
                             std::move(split.remap), std::move(original_values), std::move(result_values));
}

/// All partitions of w into exactly `parts` positive addends, each
/// non-increasing, in decreasing lexicographic order. Empty when parts > w.
inline std::vector<std::vector<std::uint64_t>> enumerate_partitions(std::uint64_t w, std::uint64_t parts) {
  std::vector<std::vector<std::uint64_t>> out;
  if (parts == 0 || parts > w) return out;
  std::vector<std::uint64_t> prefix;
  prefix.reserve(parts);
  auto recurse = [&](auto&& self, std::uint64_t remaining, std::uint64_t left, std::uint64_t cap) -> void {
    if (left == 1) {
      if (remaining <= cap) {
        prefix.push_back(remaining);
        out.push_back(prefix);
        prefix.pop_back();
      }
      return;
    }
    const std::uint64_t hi = std::min(cap, remaining - (left - 1));
    const std::uint64_t lo = (remaining + left - 1) / left;
    for (std::uint64_t first = hi; first >= lo && first >= 1; --first) {
      prefix.push_back(first);
      self(self, remaining - first, left - 1, first);
      prefix.pop_back();
    }
  };
  recurse(recurse, w, parts, w);
  return out;
}

/// Searches every split of player i into 2..max_parts positive integer parts.
/// Returns nothing if no split strictly beats the current payoff, otherwise
/// the split with the largest payoff (first in enumeration order on ties).
inline std::optional<ManipulationReport> best_split(const WeightedVotingGame& game, PlayerId i,
                                                    std::size_t max_parts, IndexKind kind,
                                                    const EvaluationOptions& opts = {}) {
  require_player(game, i);
  if (max_parts < 2) throw Error(ErrorCode::ParameterOutOfRange, "max parts must be at least 2");
  const Integer& w = game.weight(i);
  if (w < 2) throw Error(ErrorCode::WeightTooSmallToSplit, "player " + to_string(i) + " has weight " + w.str());
  if (w > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::ParameterOutOfRange, "weight " + w.str() + " is too large to enumerate splits");
  }
  const auto weight = w.convert_to<std::uint64_t>();
  const auto original_values = detail::index_of(game, kind, opts);
  const Rational before = original_values[i];

  std::optional<ManipulationReport> best;
  for (std::uint64_t j = 2; j <= max_parts && j <= weight; ++j) {
    for (const auto& partition : enumerate_partitions(weight, j)) {
      SplitAction action{i, std::vector<Integer>(partition.begin(), partition.end())};
      auto split = split_game(game, action);
      auto result_values = detail::index_of(split.game, kind, opts);
      Rational after = result_values.sum_over(split.parts);
      if (after > before && (!best || after > best->after)) {
        best = detail::make_report(std::move(action), kind, game, std::move(split.game), before, std::move(after),
                                   std::move(split.remap), original_values, std::move(result_values));
      }
    }
  }
  return best;
}

/// Summed payoff of the members before, payoff of their bloc after.
inline ManipulationReport evaluate_merge(const WeightedVotingGame& game, const Coalition& members, IndexKind kind,
                                         const EvaluationOptions& opts = {}) {
  auto merged = merge_game(game, members);
  auto original_values = detail::index_of(game, kind, opts);
  auto result_values = detail::index_of(merged.game, kind, opts);
  Rational before = original_values.sum_over(members.members());
  Rational after = result_values[merged.bloc];
  return detail::make_report(MergeAction{std::nullopt, members}, kind, game, std::move(merged.game),
                             std::move(before), std::move(after), std::move(merged.remap),
                             std::move(original_values), std::move(result_values));
}

inline Coalition with_annexer(PlayerId annexer, const Coalition& annexed) {
  auto ids = annexed.members();
  ids.push_back(annexer);
  return Coalition(std::move(ids));
}

/// Payoff of the annexer before, payoff of the bloc it forms with the
/// annexed players after.
inline ManipulationReport evaluate_annexation(const WeightedVotingGame& game, PlayerId annexer,
                                              const Coalition& annexed, IndexKind kind,
                                              const EvaluationOptions& opts = {}) {
  require_player(game, annexer);
  require_coalition(game, annexed);
  if (annexed.empty()) throw Error(ErrorCode::EmptyAnnexation, "nothing to annex");
  if (annexed.contains(annexer)) {
    throw Error(ErrorCode::AnnexerInTargets, "player " + to_string(annexer) + " cannot annex itself");
  }
  auto merged = merge_game(game, with_annexer(annexer, annexed));
  auto original_values = detail::index_of(game, kind, opts);
  auto result_values = detail::index_of(merged.game, kind, opts);
  Rational before = original_values[annexer];
  Rational after = result_values[merged.bloc];
  return detail::make_report(MergeAction{annexer, annexed}, kind, game, std::move(merged.game), std::move(before),
                             std::move(after), std::move(merged.remap), std::move(original_values),
                             std::move(result_values));
}

/// (heavier, lighter) with w_heavier >= w_lighter where annexing the lighter
/// player pays the annexer strictly more than annexing the heavier one.
struct AnnexationWitness {
  PlayerId heavier;
  PlayerId lighter;
  Rational payoff_heavier;
  Rational payoff_lighter;
};

inline std::vector<AnnexationWitness> scan_annexation_nonmonotonicity(
    const WeightedVotingGame& game, PlayerId annexer, IndexKind kind = IndexKind::BanzhafNormalized,
    const EvaluationOptions& opts = {}) {
  require_player(game, annexer);
  std::vector<std::optional<Rational>> payoff(game.size());
  for (auto j : game.players()) {
    if (j == annexer) continue;
    auto merged = merge_game(game, Coalition({annexer, j}));
    payoff[j.index()] = detail::index_of(merged.game, kind, opts)[merged.bloc];
  }
  std::vector<AnnexationWitness> witnesses;
  for (auto j : game.players()) {
    if (j == annexer) continue;
    for (auto k : game.players()) {
      if (k == annexer || k == j) continue;
      if (game.weight(j) >= game.weight(k) && *payoff[k.index()] > *payoff[j.index()]) {
        witnesses.push_back({j, k, *payoff[j.index()], *payoff[k.index()]});
      }
    }
  }
  return witnesses;
}

/// Heuristic target for an annexer with a weight budget: a non-empty set of
/// positive-weight players within budget with the fewest members, then the
/// largest total weight, then the smallest ids. Since a single player is
/// always fewest, this is the heaviest affordable player; empty if none fits.
inline Coalition annexation_advisor(const WeightedVotingGame& game, PlayerId annexer, const Integer& budget) {
  require_player(game, annexer);
  if (budget < 0) throw Error(ErrorCode::ParameterOutOfRange, "budget must be non-negative");
  std::optional<PlayerId> pick;
  for (auto j : game.players()) {
    if (j == annexer) continue;
    const Integer& w = game.weight(j);
    if (w == 0 || w > budget) continue;
    if (!pick || w > game.weight(*pick)) pick = j;
  }
  return pick ? Coalition(std::vector<PlayerId>{*pick}) : Coalition();
}

/// Manipulations in a unanimity game with n players.
struct UnanimityVariant {
  enum class Kind { Split, Merge, Annex };
  Kind kind;
  /// Split: m extra identities (split into m+1). Merge/Annex: bloc size k.
  std::size_t size;

  static UnanimityVariant split(std::size_t m) { return {Kind::Split, m}; }
  static UnanimityVariant merge(std::size_t k) { return {Kind::Merge, k}; }
  static UnanimityVariant annex(std::size_t k) { return {Kind::Annex, k}; }
};

struct PayoffPair {
  Rational before;
  Rational after;
};

/// Closed forms, identical for Banzhaf and Shapley-Shubik: every player of a
/// unanimity game gets 1/n.
inline PayoffPair unanimity_payoffs(std::size_t n, UnanimityVariant variant) {
  if (n < 2) throw Error(ErrorCode::ParameterOutOfRange, "unanimity payoffs need n >= 2");
  const auto one_over = [](std::size_t d) { return Rational(1, d); };
  switch (variant.kind) {
    case UnanimityVariant::Kind::Split:
      if (variant.size < 1) throw Error(ErrorCode::ParameterOutOfRange, "split needs m >= 1");
      return {one_over(n), Rational(variant.size + 1, n + variant.size)};
    case UnanimityVariant::Kind::Merge:
    case UnanimityVariant::Kind::Annex: {
      if (variant.size < 2 || variant.size > n) {
        throw Error(ErrorCode::ParameterOutOfRange, "bloc size must be in 2..n");
      }
      Rational before = variant.kind == UnanimityVariant::Kind::Merge ? Rational(variant.size, n) : one_over(n);
      return {std::move(before), one_over(n - variant.size + 1)};
    }
  }
  throw Error(ErrorCode::ParameterOutOfRange, "unknown unanimity variant");
}

/// Two-way split of player i into (first, second), checked against the
/// swing-doubling identity and the factor-two Banzhaf bound.
struct SplitBoundCheck {
  Integer eta_before;      ///< eta_i(v)
  Integer eta_after;       ///< eta_i'(v') + eta_i''(v')
  Rational beta_before;
  Rational beta_after;
  bool eta_doubled = false;
  bool within_bound = false;
  bool others_gain = false;  ///< eta_x(v') >= eta_x(v) for every other x

  bool holds() const { return eta_doubled && within_bound && others_gain; }
};

inline SplitBoundCheck check_split_bound(const WeightedVotingGame& game, PlayerId i, Integer first, Integer second,
                                         Method method = Method::DynamicProgramming) {
  auto split = split_game(game, make_split_action(i, {std::move(first), std::move(second)}));
  const auto before = compute_banzhaf(game, method);
  const auto after = compute_banzhaf(split.game, method);
  SplitBoundCheck check;
  check.eta_before = before.counts[i];
  for (auto p : split.parts) check.eta_after += after.counts[p];
  check.beta_before = before.normalized[i];
  check.beta_after = after.normalized.sum_over(split.parts);
  check.eta_doubled = check.eta_after == 2 * check.eta_before;
  check.within_bound = check.beta_after <= 2 * check.beta_before;
  check.others_gain = true;
  for (auto x : game.players()) {
    if (x == i) continue;
    if (after.counts[split.remap.to_new[x.index()].front()] < before.counts[x]) check.others_gain = false;
  }
  return check;
}

/// Pair merge of i and j against (beta_i + beta_j)/2 <= beta_bloc <= 1.
struct MergeBoundCheck {
  Rational lower;
  Rational bloc;
  bool within_bounds = false;
  bool others_lose = false;  ///< eta_x(v') <= eta_x(v) for every x outside the pair

  bool holds() const { return within_bounds && others_lose; }
};

inline MergeBoundCheck check_merge_bound(const WeightedVotingGame& game, PlayerId i, PlayerId j,
                                         Method method = Method::DynamicProgramming) {
  auto merged = merge_game(game, Coalition(std::vector<PlayerId>{i, j}));
  const auto before = compute_banzhaf(game, method);
  const auto after = compute_banzhaf(merged.game, method);
  MergeBoundCheck check;
  check.lower = (before.normalized[i] + before.normalized[j]) / 2;
  check.bloc = after.normalized[merged.bloc];
  check.within_bounds = check.lower <= check.bloc && check.bloc <= 1;
  check.others_lose = true;
  for (auto x : game.players()) {
    if (x == i || x == j) continue;
    if (after.counts[merged.remap.to_new[x.index()].front()] > before.counts[x]) check.others_lose = false;
  }
  return check;
}

}  // namespace wvg
