#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "wvg/types.hpp"

namespace wvg {

/// A weighted voting game [q; w_1, ..., w_n]. A coalition wins iff its total
/// weight reaches the quota. Instances are immutable and always valid:
/// n >= 1, 1 <= q <= sum(w), every w_i >= 0. Weights need not be sorted.
class WeightedVotingGame {
 public:
  static WeightedVotingGame make(Integer quota, std::vector<Integer> weights) {
    if (weights.empty()) throw Error(ErrorCode::EmptyPlayerList, "a game needs at least one player");
    if (quota <= 0) throw Error(ErrorCode::ZeroOrNegativeQuota, "quota must be at least 1, got " + quota.str());
    Integer total = 0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      if (weights[k] < 0) {
        throw Error(ErrorCode::NegativeWeight,
                    "weight of player " + std::to_string(k + 1) + " is " + weights[k].str());
      }
      total += weights[k];
    }
    if (quota > total) {
      throw Error(ErrorCode::QuotaExceedsTotalWeight,
                  "quota " + quota.str() + " exceeds total weight " + total.str());
    }
    return WeightedVotingGame(std::move(quota), std::move(weights), std::move(total));
  }

  const Integer& quota() const { return quota_; }
  const std::vector<Integer>& weights() const { return weights_; }
  const Integer& weight(PlayerId i) const { return weights_.at(i.index()); }
  const Integer& total_weight() const { return total_; }
  std::size_t size() const { return weights_.size(); }

  bool contains(PlayerId i) const { return i.value() >= 1 && i.value() <= weights_.size(); }

  std::vector<PlayerId> players() const {
    std::vector<PlayerId> ids;
    ids.reserve(size());
    for (std::size_t k = 1; k <= size(); ++k) ids.emplace_back(k);
    return ids;
  }

  friend bool operator==(const WeightedVotingGame&, const WeightedVotingGame&) = default;

 private:
  WeightedVotingGame(Integer quota, std::vector<Integer> weights, Integer total)
      : quota_(std::move(quota)), weights_(std::move(weights)), total_(std::move(total)) {}

  Integer quota_;
  std::vector<Integer> weights_;
  Integer total_;
};

inline WeightedVotingGame new_game(Integer quota, std::vector<Integer> weights) {
  return WeightedVotingGame::make(std::move(quota), std::move(weights));
}

inline void require_player(const WeightedVotingGame& game, PlayerId i) {
  if (!game.contains(i)) {
    throw Error(ErrorCode::InvalidPlayerId,
                "player " + to_string(i) + " is outside 1.." + std::to_string(game.size()));
  }
}

/// A set of distinct players, kept sorted by id. Range checks against a
/// particular game happen where the coalition is used.
class Coalition {
 public:
  Coalition() = default;

  explicit Coalition(std::vector<PlayerId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    for (std::size_t k = 0; k < members_.size(); ++k) {
      if (members_[k].value() == 0) throw Error(ErrorCode::InvalidPlayerId, "player ids start at 1");
      if (k > 0 && members_[k] == members_[k - 1]) {
        throw Error(ErrorCode::DuplicatePlayer, "player " + to_string(members_[k]) + " listed twice");
      }
    }
  }

  Coalition(std::initializer_list<std::size_t> ids)
      : Coalition([&] {
          std::vector<PlayerId> v;
          for (auto id : ids) v.emplace_back(id);
          return v;
        }()) {}

  static Coalition grand(const WeightedVotingGame& game) { return Coalition(game.players()); }

  const std::vector<PlayerId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(PlayerId i) const { return std::binary_search(members_.begin(), members_.end(), i); }

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  std::vector<PlayerId> members_;
};

inline void require_coalition(const WeightedVotingGame& game, const Coalition& coalition) {
  for (auto i : coalition.members()) require_player(game, i);
}

inline Integer coalition_weight(const WeightedVotingGame& game, const Coalition& coalition) {
  require_coalition(game, coalition);
  Integer total = 0;
  for (auto i : coalition.members()) total += game.weight(i);
  return total;
}

inline bool is_winning(const WeightedVotingGame& game, const Coalition& coalition) {
  return coalition_weight(game, coalition) >= game.quota();
}

/// For a winning coalition: the members whose removal makes it lose.
/// For a losing coalition: the outsiders whose addition makes it win.
inline std::vector<PlayerId> critical_players(const WeightedVotingGame& game, const Coalition& coalition) {
  const Integer weight = coalition_weight(game, coalition);
  const Integer& q = game.quota();
  std::vector<PlayerId> critical;
  if (weight >= q) {
    for (auto i : coalition.members()) {
      if (weight - game.weight(i) < q) critical.push_back(i);
    }
  } else {
    for (auto i : game.players()) {
      if (!coalition.contains(i) && weight + game.weight(i) >= q) critical.push_back(i);
    }
  }
  return critical;
}

/// No two disjoint coalitions can both win.
inline bool is_proper(const WeightedVotingGame& game) { return 2 * game.quota() > game.total_weight(); }

inline bool is_unanimity(const WeightedVotingGame& game) { return game.quota() == game.total_weight(); }

inline bool is_dictator(const WeightedVotingGame& game, PlayerId i) {
  require_player(game, i);
  const Integer& w = game.weight(i);
  return w >= game.quota() && game.total_weight() - w < game.quota();
}

struct CanonicalForm {
  WeightedVotingGame game;
  /// permutation[k] is the original id of canonical player k+1.
  std::vector<PlayerId> permutation;
};

/// Stable sort of the players by non-increasing weight.
inline CanonicalForm canonicalize(const WeightedVotingGame& game) {
  std::vector<PlayerId> order = game.players();
  std::stable_sort(order.begin(), order.end(),
                   [&](PlayerId a, PlayerId b) { return game.weight(a) > game.weight(b); });
  std::vector<Integer> weights;
  weights.reserve(order.size());
  for (auto id : order) weights.push_back(game.weight(id));
  return {WeightedVotingGame::make(game.quota(), std::move(weights)), std::move(order)};
}

}  // namespace wvg
