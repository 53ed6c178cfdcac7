#pragma once

// Pseudo-polynomial subset counting tables shared by the Banzhaf and
// Shapley-Shubik engines.
//
// A table covers weights 0..cap-1 only: every quantity the indices need is a
// count of coalitions that are still losing. Player weights are clipped to
// cap beforehand, which leaves every entry below cap unchanged.

#include <cstdint>
#include <limits>
#include <span>
#include <type_traits>
#include <vector>

#include "wvg/game.hpp"

namespace wvg::counting {

/// Largest quota the tables will index. Beyond this the tables stop being
/// pseudo-polynomial in any practical sense.
inline constexpr std::size_t kMaxTableQuota = std::size_t{1} << 32;

template <class Count>
Integer to_integer(const Count& c) {
  if constexpr (std::is_same_v<Count, Integer>) {
    return c;
#ifdef __SIZEOF_INT128__
  } else if constexpr (std::is_same_v<Count, unsigned __int128>) {
    Integer r = static_cast<std::uint64_t>(c >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(c);
    return r;
#endif
  } else {
    return Integer(c);
  }
}

/// Runs f with the narrowest count word that provably holds every subset
/// count of an n-player game (all counts are at most 2^n).
template <class F>
decltype(auto) with_count_type(std::size_t n, F&& f) {
  if (n <= 63) return f(std::type_identity<std::uint64_t>{});
#ifdef __SIZEOF_INT128__
  if (n <= 127) return f(std::type_identity<unsigned __int128>{});
#endif
  return f(std::type_identity<Integer>{});
}

struct TableWeights {
  std::size_t cap = 0;                ///< the quota
  std::vector<std::size_t> weights;   ///< min(w_i, quota)
};

inline TableWeights table_weights(const WeightedVotingGame& game) {
  if (game.quota() > kMaxTableQuota) {
    throw Error(ErrorCode::TableTooLarge, "quota " + game.quota().str() + " is too large for a counting table");
  }
  TableWeights tw;
  tw.cap = game.quota().convert_to<std::size_t>();
  tw.weights.reserve(game.size());
  for (const auto& w : game.weights()) {
    tw.weights.push_back(w >= game.quota() ? tw.cap : w.convert_to<std::size_t>());
  }
  return tw;
}

/// Folds one more player of weight w into table (0/1 knapsack step).
template <class Count>
void add_weight(std::vector<Count>& table, std::size_t w) {
  const std::size_t cap = table.size();
  if (w >= cap) return;
  for (std::size_t t = cap; t-- > w;) table[t] += table[t - w];
}

/// table[t] = number of subsets of weights with total exactly t, for t < cap.
template <class Count>
std::vector<Count> subset_weight_counts(std::span<const std::size_t> weights, std::size_t cap) {
  std::vector<Count> table(cap, Count(0));
  if (cap > 0) table[0] = Count(1);
  for (auto w : weights) add_weight(table, w);
  return table;
}

/// Inverse of add_weight: the table with one player of weight w taken out.
/// Uses N_without(t) = N(t) - N_without(t - w), ascending in t.
template <class Count>
std::vector<Count> remove_weight(std::span<const Count> table, std::size_t w) {
  const std::size_t cap = table.size();
  std::vector<Count> out(table.begin(), table.end());
  if (w >= cap) return out;
  if (w == 0) {
    for (auto& c : out) c /= 2;
    return out;
  }
  for (std::size_t t = w; t < cap; ++t) out[t] -= out[t - w];
  return out;
}

/// Sum of table[lo..hi).
template <class Count>
Count window_sum(std::span<const Count> table, std::size_t lo, std::size_t hi) {
  Count s(0);
  for (std::size_t t = lo; t < hi; ++t) s += table[t];
  return s;
}

/// Subset counts split by coalition size: at(s, t) = number of subsets with
/// s members and total weight exactly t (t < cap).
template <class Count>
class SizedTable {
 public:
  SizedTable(std::size_t rows, std::size_t cap) : rows_(rows), cap_(cap), data_(rows * cap, Count(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cap() const { return cap_; }
  Count& at(std::size_t s, std::size_t t) { return data_[s * cap_ + t]; }
  const Count& at(std::size_t s, std::size_t t) const { return data_[s * cap_ + t]; }
  std::span<const Count> row(std::size_t s) const { return {data_.data() + s * cap_, cap_}; }

  friend bool operator==(const SizedTable&, const SizedTable&) = default;

 private:
  std::size_t rows_;
  std::size_t cap_;
  std::vector<Count> data_;
};

template <class Count>
SizedTable<Count> sized_subset_weight_counts(std::span<const std::size_t> weights, std::size_t cap) {
  SizedTable<Count> table(weights.size() + 1, cap);
  if (cap == 0) return table;
  table.at(0, 0) = Count(1);
  std::size_t seen = 0;
  for (auto w : weights) {
    ++seen;
    if (w >= cap) continue;
    for (std::size_t s = seen; s >= 1; --s) {
      for (std::size_t t = cap; t-- > w;) table.at(s, t) += table.at(s - 1, t - w);
    }
  }
  return table;
}

/// Sized deconvolution: N_without(s, t) = N(s, t) - N_without(s-1, t-w),
/// ascending in s then t. Drops the last row (a subset avoiding the removed
/// player has at most rows-2 members).
template <class Count>
SizedTable<Count> remove_sized_weight(const SizedTable<Count>& table, std::size_t w) {
  const std::size_t rows = table.rows() - 1;
  const std::size_t cap = table.cap();
  SizedTable<Count> out(rows, cap);
  for (std::size_t s = 0; s < rows; ++s) {
    for (std::size_t t = 0; t < cap; ++t) {
      Count c = table.at(s, t);
      if (s > 0 && t >= w && w < cap) c -= out.at(s - 1, t - w);
      out.at(s, t) = c;
    }
  }
  return out;
}

}  // namespace wvg::counting
