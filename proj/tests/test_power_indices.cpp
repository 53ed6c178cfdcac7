#include <cstdlib>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "test_util.hpp"
#include "wvg/counting.hpp"
#include "wvg/instance_gen.hpp"
#include "wvg/power_indices.hpp"

namespace wvg {
namespace {

using testing::error_code;

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

std::vector<Rational> rats(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Rational> out;
  for (auto [n, d] : xs) out.emplace_back(n, d);
  return out;
}

TEST(EtaEnum, Examples) {
  EXPECT_EQ(eta_enum(new_game(5, {2, 2, 2})).eta, ints({1, 1, 1}));
  EXPECT_EQ(eta_enum(new_game(4, {2, 2, 1, 1})).eta, ints({4, 4, 2, 2}));
  EXPECT_EQ(eta_enum(new_game(10, {10, 1, 1})).eta, ints({4, 0, 0}));
}

TEST(EtaEnum, MatchesDefinitionOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_game(1 + seed % 11, 12, seed);
    EXPECT_EQ(eta_enum(g).eta, oracle::swing_counts(g)) << seed;
  }
}

TEST(EtaEnum, RespectsLimit) {
  const auto g = random_game(12, 5, 1);
  EXPECT_EQ(error_code([&] { eta_enum(g, 11); }), ErrorCode::TooManyPlayersForEnumeration);
  EXPECT_NO_THROW(eta_enum(g, 12));
  const auto big = random_game(27, 5, 1);
  EXPECT_EQ(error_code([&] { eta_enum(big); }), ErrorCode::TooManyPlayersForEnumeration);
}

TEST(EtaDp, Examples) {
  EXPECT_EQ(eta_dp(new_game(5, {2, 2, 2})).eta, ints({1, 1, 1}));
  const auto g = new_game(9, {3, 3, 2, 1, 1, 1});
  EXPECT_EQ(eta_dp(g), eta_enum(g));
  EXPECT_EQ(eta_dp(g).eta, ints({8, 8, 6, 2, 2, 2}));
}

TEST(EtaDp, AnnexationExampleBanzhaf) {
  const auto b = compute_banzhaf(new_game(13, {7, 6, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(b.normalized[PlayerId(1)], Rational(65, 134));
  EXPECT_LT(abs(b.normalized[PlayerId(1)] - Rational(48507, 100000)), Rational(5, 1000000));
}

TEST(EtaDp, ZeroWeightAndOversizedWeights) {
  const auto g = new_game(3, {0, 2, 5, 1, 0});
  EXPECT_EQ(eta_dp(g), eta_enum(g));
  EXPECT_EQ(eta_dp(g).eta[0], 0);
  const Integer huge = Integer(1) << 100;
  const auto h = new_game(huge, {huge, huge + 5, 3});
  EXPECT_EQ(eta_dp(new_game(7, {7, 12, 3})), eta_enum(new_game(7, {7, 12, 3})));
  EXPECT_EQ(error_code([&] { eta_dp(h); }), ErrorCode::TableTooLarge);
  EXPECT_EQ(eta_enum(h).eta, ints({2, 2, 0}));
}

TEST(EtaDp, CountWordsAgree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_game(3 + seed % 12, 30, seed);
    const auto tw = counting::table_weights(g);
    const auto narrow = detail::eta_from_tables<std::uint64_t>(tw);
    EXPECT_EQ(narrow, detail::eta_from_tables<Integer>(tw));
#ifdef __SIZEOF_INT128__
    EXPECT_EQ(narrow, detail::eta_from_tables<unsigned __int128>(tw));
#endif
    EXPECT_EQ(detail::kappa_from_tables<std::uint64_t>(tw), detail::kappa_from_tables<Integer>(tw));
  }
}

TEST(EtaDp, WideGamesUseArbitraryPrecisionCounts) {
  // 130 players is past the 128-bit count word.
  const auto g = new_game(65, std::vector<Integer>(130, 1));
  const auto eta = eta_dp(g);
  // A unit player swings exactly the coalitions of 64 others out of 129.
  Integer expected = 1;
  for (int k = 0; k < 64; ++k) expected = expected * (129 - k) / (k + 1);
  for (const auto& e : eta.eta) EXPECT_EQ(e, expected);
  EXPECT_GT(expected, Integer(1) << 120);
}

TEST(Deconvolution, MatchesRecomputationWithoutPlayer) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_game(2 + seed % 9, 25, seed);
    const auto tw = counting::table_weights(g);
    const auto all = counting::subset_weight_counts<Integer>(tw.weights, tw.cap);
    const auto sized = counting::sized_subset_weight_counts<Integer>(tw.weights, tw.cap);
    for (std::size_t k = 0; k < tw.weights.size(); ++k) {
      std::vector<std::size_t> others = tw.weights;
      others.erase(others.begin() + static_cast<long>(k));
      EXPECT_EQ(counting::remove_weight<Integer>(all, tw.weights[k]),
                counting::subset_weight_counts<Integer>(others, tw.cap));
      EXPECT_EQ(counting::remove_sized_weight<Integer>(sized, tw.weights[k]),
                counting::sized_subset_weight_counts<Integer>(others, tw.cap));
    }
  }
}

TEST(Deconvolution, ZeroWeightPlayer) {
  const std::vector<std::size_t> w{0, 3, 1};
  const std::vector<std::size_t> others{3, 1};
  const auto all = counting::subset_weight_counts<std::uint64_t>(w, 5);
  EXPECT_EQ(counting::remove_weight<std::uint64_t>(all, 0), counting::subset_weight_counts<std::uint64_t>(others, 5));
  const auto sized = counting::sized_subset_weight_counts<std::uint64_t>(w, 5);
  EXPECT_EQ(counting::remove_sized_weight<std::uint64_t>(sized, 0),
            counting::sized_subset_weight_counts<std::uint64_t>(others, 5));
}

TEST(ComputeBanzhaf, Examples) {
  EXPECT_EQ(compute_banzhaf(new_game(5, {2, 2, 1, 1})).normalized.values, rats({{3, 8}, {3, 8}, {1, 8}, {1, 8}}));
  EXPECT_EQ(compute_banzhaf(new_game(4, {2, 2, 1, 1})).normalized.values, rats({{1, 3}, {1, 3}, {1, 6}, {1, 6}}));
  const auto p = compute_banzhaf(new_game(5, {2, 2, 2}), Method::Enumeration).probabilistic;
  EXPECT_EQ(p.kind, IndexKind::BanzhafProbabilistic);
  EXPECT_EQ(p.values, rats({{1, 4}, {1, 4}, {1, 4}}));
}

TEST(ComputeShapley, Examples) {
  EXPECT_EQ(compute_shapley(new_game(4, {3, 2, 1})).values.values, rats({{2, 3}, {1, 6}, {1, 6}}));
  EXPECT_EQ(compute_shapley(new_game(6, {2, 2, 2})).values.values, rats({{1, 3}, {1, 3}, {1, 3}}));
  EXPECT_EQ(compute_shapley(new_game(10, {10, 1, 1}), Method::Enumeration).values.values, rats({{1, 1}, {0, 1}, {0, 1}}));
  EXPECT_EQ(compute_shapley(new_game(4, {3, 2, 1})).counts.kappa, ints({4, 1, 1}));
}

TEST(ComputeShapley, MatchesPermutationOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_game(1 + seed % 7, 9, seed);
    const auto expected = oracle::shapley_by_permutations(g);
    EXPECT_EQ(compute_shapley(g, Method::DynamicProgramming).values.values, expected) << seed;
    EXPECT_EQ(compute_shapley(g, Method::Enumeration).values.values, expected) << seed;
  }
}

TEST(IsDummy, Examples) {
  EXPECT_TRUE(is_dummy(new_game(10, {10, 1, 1}), PlayerId(2)));
  EXPECT_FALSE(is_dummy(new_game(5, {2, 2, 2}), PlayerId(1)));
  EXPECT_FALSE(is_dummy(new_game(10, {8, 8, 1, 1}), PlayerId(3)));
  EXPECT_EQ(eta_dp(new_game(10, {8, 8, 1, 1})).eta[2], 2);
  EXPECT_EQ(error_code([] { is_dummy(new_game(5, {2, 2, 2}), PlayerId(4)); }), ErrorCode::InvalidPlayerId);
}

class IndexProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(IndexProperties, HoldOnRandomGames) {
  const std::uint64_t seed = GetParam();
  const auto g = random_game(1 + seed % 14, 1 + seed % 40, seed);
  const auto bz = compute_banzhaf(g);
  const auto ss = compute_shapley(g);
  const std::size_t n = g.size();

  EXPECT_EQ(bz.counts, eta_enum(g));
  EXPECT_EQ(ss.counts, kappa_enum(g));

  Rational sum_bz = 0, sum_ss = 0;
  Integer sum_kappa = 0;
  for (std::size_t k = 0; k < n; ++k) {
    sum_bz += bz.normalized.values[k];
    sum_ss += ss.values.values[k];
    sum_kappa += ss.counts.kappa[k];
  }
  EXPECT_EQ(sum_bz, 1);
  EXPECT_EQ(sum_ss, 1);
  EXPECT_EQ(sum_kappa, detail::factorials(n).back());
  EXPECT_GE(bz.counts.total(), 1);

  for (auto i : g.players()) {
    EXPECT_EQ(bz.probabilistic[i], Rational(bz.counts[i], Integer(1) << (n - 1)));
    const bool dummy = is_dummy(g, i);
    EXPECT_EQ(dummy, bz.normalized[i] == 0);
    EXPECT_EQ(dummy, bz.probabilistic[i] == 0);
    EXPECT_EQ(dummy, ss.values[i] == 0);
    if (is_dictator(g, i)) {
      EXPECT_EQ(bz.normalized[i], 1);
      EXPECT_EQ(bz.probabilistic[i], 1);
      EXPECT_EQ(ss.values[i], 1);
    }
    for (auto j : g.players()) {
      if (g.weight(i) == g.weight(j)) {
        EXPECT_EQ(bz.normalized[i], bz.normalized[j]);
        EXPECT_EQ(ss.values[i], ss.values[j]);
      }
      if (g.weight(i) >= g.weight(j)) {
        EXPECT_GE(bz.counts[i], bz.counts[j]);
        EXPECT_GE(ss.counts[i], ss.counts[j]);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, IndexProperties, ::testing::Range<std::uint64_t>(0, 120));

}  // namespace
}  // namespace wvg
