#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "wvg/counting.hpp"
#include "wvg/game.hpp"

namespace wvg {

enum class Method { Enumeration, DynamicProgramming };

enum class IndexKind { BanzhafNormalized, BanzhafProbabilistic, ShapleyShubik };

constexpr std::string_view to_string(Method m) {
  return m == Method::Enumeration ? "enum" : "dp";
}

constexpr std::string_view to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::BanzhafNormalized: return "banzhaf";
    case IndexKind::BanzhafProbabilistic: return "banzhaf_probabilistic";
    case IndexKind::ShapleyShubik: return "shapley_shubik";
  }
  return "unknown";
}

inline constexpr std::size_t kDefaultEnumerationLimit = 26;
/// Coalitions are enumerated as 64-bit masks.
inline constexpr std::size_t kMaxEnumerationPlayers = 62;

/// eta[k] = number of coalitions for which player k+1 is critical.
struct CriticalityCounts {
  std::vector<Integer> eta;

  const Integer& operator[](PlayerId i) const { return eta.at(i.index()); }
  Integer total() const {
    Integer s = 0;
    for (const auto& e : eta) s += e;
    return s;
  }
  friend bool operator==(const CriticalityCounts&, const CriticalityCounts&) = default;
};

/// kappa[k] = sum over coalitions X where player k+1 is pivotal of
/// (|X|-1)!(n-|X|)!, i.e. the number of orderings in which it is pivotal.
struct ShapleyRawCounts {
  std::vector<Integer> kappa;

  const Integer& operator[](PlayerId i) const { return kappa.at(i.index()); }
  friend bool operator==(const ShapleyRawCounts&, const ShapleyRawCounts&) = default;
};

struct PowerIndexVector {
  IndexKind kind = IndexKind::BanzhafNormalized;
  std::vector<Rational> values;

  const Rational& operator[](PlayerId i) const { return values.at(i.index()); }
  Rational sum_over(const std::vector<PlayerId>& ids) const {
    Rational s = 0;
    for (auto i : ids) s += (*this)[i];
    return s;
  }
  friend bool operator==(const PowerIndexVector&, const PowerIndexVector&) = default;
};

struct BanzhafIndices {
  CriticalityCounts counts;
  PowerIndexVector normalized;
  PowerIndexVector probabilistic;
};

struct ShapleyIndices {
  ShapleyRawCounts counts;
  PowerIndexVector values;
};

namespace detail {

inline std::vector<Integer> factorials(std::size_t n) {
  std::vector<Integer> f(n + 1);
  f[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) f[k] = f[k - 1] * k;
  return f;
}

/// by_size[k][s]: winning coalitions of size s in which player k+1 is critical.
template <class Sum>
std::vector<std::vector<std::uint64_t>> enumerate_swings(const std::vector<Sum>& w, const Sum& quota) {
  const std::size_t n = w.size();
  std::vector<std::vector<std::uint64_t>> by_size(n, std::vector<std::uint64_t>(n + 1, 0));
  std::uint64_t mask = 0;
  Sum sum = 0;
  std::size_t members = 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  // Gray-code walk: each step toggles exactly one player.
  for (std::uint64_t step = 1; step < end; ++step) {
    const int flip = std::countr_zero(step);
    const std::uint64_t bit = std::uint64_t{1} << flip;
    if (mask & bit) {
      mask ^= bit;
      sum -= w[flip];
      --members;
    } else {
      mask |= bit;
      sum += w[flip];
      ++members;
    }
    if (sum < quota) continue;
    const Sum slack = sum - quota;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const int k = std::countr_zero(rest);
      if (w[k] > slack) ++by_size[k][members];
    }
  }
  return by_size;
}

inline std::vector<std::vector<std::uint64_t>> enumerate_swings(const WeightedVotingGame& game,
                                                                std::size_t limit) {
  const std::size_t n = game.size();
  if (n > limit || n > kMaxEnumerationPlayers) {
    throw Error(ErrorCode::TooManyPlayersForEnumeration,
                std::to_string(n) + " players exceeds the enumeration limit of " +
                    std::to_string(std::min(limit, kMaxEnumerationPlayers)));
  }
  // Clipping weights to the quota preserves every winning/critical relation.
  constexpr std::int64_t kNativeQuota = std::int64_t{1} << 40;
  if (game.quota() <= kNativeQuota) {
    const auto q = game.quota().convert_to<std::int64_t>();
    std::vector<std::int64_t> w;
    w.reserve(n);
    for (const auto& x : game.weights()) w.push_back(x >= q ? q : x.convert_to<std::int64_t>());
    return enumerate_swings<std::int64_t>(w, q);
  }
  return enumerate_swings<Integer>(game.weights(), game.quota());
}

template <class Count>
std::vector<Integer> eta_from_tables(const counting::TableWeights& tw) {
  using namespace counting;
  const auto all = subset_weight_counts<Count>(tw.weights, tw.cap);
  std::vector<Integer> eta(tw.weights.size());
  std::map<std::size_t, Integer> by_weight;  // equal weights share a table
  for (std::size_t k = 0; k < tw.weights.size(); ++k) {
    const std::size_t w = tw.weights[k];
    auto it = by_weight.find(w);
    if (it == by_weight.end()) {
      const auto without = remove_weight<Count>(all, w);
      const Count swings = window_sum<Count>(without, tw.cap - w, tw.cap);
      it = by_weight.emplace(w, to_integer(swings)).first;
    }
    eta[k] = it->second;
  }
  return eta;
}

template <class Count>
std::vector<Integer> kappa_from_tables(const counting::TableWeights& tw) {
  using namespace counting;
  const std::size_t n = tw.weights.size();
  const auto fact = factorials(n);
  const auto all = sized_subset_weight_counts<Count>(tw.weights, tw.cap);
  std::vector<Integer> kappa(n);
  std::map<std::size_t, Integer> by_weight;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t w = tw.weights[k];
    auto it = by_weight.find(w);
    if (it == by_weight.end()) {
      const auto without = remove_sized_weight<Count>(all, w);
      Integer total = 0;
      // A losing coalition of s others turns winning when the player joins
      // as member s+1: s!(n-s-1)! orderings each.
      for (std::size_t s = 0; s < without.rows(); ++s) {
        const Count swings = window_sum<Count>(without.row(s), tw.cap - w, tw.cap);
        if (swings != Count(0)) total += to_integer(swings) * fact[s] * fact[n - s - 1];
      }
      it = by_weight.emplace(w, std::move(total)).first;
    }
    kappa[k] = it->second;
  }
  return kappa;
}

}  // namespace detail

/// Swing counts by exhaustive iteration over all 2^n coalitions. This is the
/// reference the table-based engine is checked against.
inline CriticalityCounts eta_enum(const WeightedVotingGame& game, std::size_t limit = kDefaultEnumerationLimit) {
  const auto by_size = detail::enumerate_swings(game, limit);
  CriticalityCounts counts;
  for (const auto& row : by_size) {
    std::uint64_t total = 0;
    for (auto c : row) total += c;
    counts.eta.emplace_back(total);
  }
  return counts;
}

/// Swing counts from subset-weight tables: eta_i = sum of N_i(t) for
/// q - w_i <= t < q, with N_i deconvolved out of the table of all players.
inline CriticalityCounts eta_dp(const WeightedVotingGame& game) {
  const auto tw = counting::table_weights(game);
  return {counting::with_count_type(game.size(), [&]<class Count>(std::type_identity<Count>) {
    return detail::eta_from_tables<Count>(tw);
  })};
}

inline CriticalityCounts eta(const WeightedVotingGame& game, Method method,
                             std::size_t limit = kDefaultEnumerationLimit) {
  return method == Method::Enumeration ? eta_enum(game, limit) : eta_dp(game);
}

inline ShapleyRawCounts kappa_enum(const WeightedVotingGame& game, std::size_t limit = kDefaultEnumerationLimit) {
  const std::size_t n = game.size();
  const auto by_size = detail::enumerate_swings(game, limit);
  const auto fact = detail::factorials(n);
  ShapleyRawCounts counts;
  for (const auto& row : by_size) {
    Integer total = 0;
    for (std::size_t s = 1; s <= n; ++s) {
      if (row[s] != 0) total += Integer(row[s]) * fact[s - 1] * fact[n - s];
    }
    counts.kappa.push_back(std::move(total));
  }
  return counts;
}

inline ShapleyRawCounts kappa_dp(const WeightedVotingGame& game) {
  const auto tw = counting::table_weights(game);
  return {counting::with_count_type(game.size(), [&]<class Count>(std::type_identity<Count>) {
    return detail::kappa_from_tables<Count>(tw);
  })};
}

inline BanzhafIndices banzhaf_from_counts(CriticalityCounts counts) {
  const std::size_t n = counts.eta.size();
  const Integer total = counts.total();
  const Integer coalitions = Integer(1) << (n - 1);
  BanzhafIndices out{std::move(counts), {IndexKind::BanzhafNormalized, {}}, {IndexKind::BanzhafProbabilistic, {}}};
  for (const auto& e : out.counts.eta) {
    out.normalized.values.emplace_back(e, total);
    out.probabilistic.values.emplace_back(e, coalitions);
  }
  return out;
}

inline BanzhafIndices compute_banzhaf(const WeightedVotingGame& game, Method method = Method::DynamicProgramming,
                                      std::size_t limit = kDefaultEnumerationLimit) {
  return banzhaf_from_counts(eta(game, method, limit));
}

inline ShapleyIndices compute_shapley(const WeightedVotingGame& game, Method method = Method::DynamicProgramming,
                                      std::size_t limit = kDefaultEnumerationLimit) {
  ShapleyIndices out{method == Method::Enumeration ? kappa_enum(game, limit) : kappa_dp(game),
                     {IndexKind::ShapleyShubik, {}}};
  const Integer orderings = detail::factorials(game.size()).back();
  for (const auto& k : out.counts.kappa) out.values.values.emplace_back(k, orderings);
  return out;
}

/// One index vector of the requested kind.
inline PowerIndexVector power_index(const WeightedVotingGame& game, IndexKind kind,
                                    Method method = Method::DynamicProgramming,
                                    std::size_t limit = kDefaultEnumerationLimit) {
  switch (kind) {
    case IndexKind::BanzhafNormalized: return compute_banzhaf(game, method, limit).normalized;
    case IndexKind::BanzhafProbabilistic: return compute_banzhaf(game, method, limit).probabilistic;
    case IndexKind::ShapleyShubik: return compute_shapley(game, method, limit).values;
  }
  throw Error(ErrorCode::ParameterOutOfRange, "unknown index kind");
}

/// True iff the player is critical for no coalition. Counts directly on the
/// table of the other players, without the deconvolution path.
inline bool is_dummy(const WeightedVotingGame& game, PlayerId i) {
  require_player(game, i);
  const auto tw = counting::table_weights(game);
  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < tw.weights.size(); ++k) {
    if (k != i.index()) others.push_back(tw.weights[k]);
  }
  const std::size_t w = tw.weights[i.index()];
  return counting::with_count_type(game.size(), [&]<class Count>(std::type_identity<Count>) {
    const auto table = counting::subset_weight_counts<Count>(others, tw.cap);
    return counting::window_sum<Count>(table, tw.cap - w, tw.cap) == Count(0);
  });
}

}  // namespace wvg
