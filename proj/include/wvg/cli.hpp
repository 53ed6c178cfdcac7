#pragma once

// Command-line front end. run_command takes the arguments after the program
// name and returns the process exit code: 0 success, 1 domain error,
// 2 usage error.

#include <chrono>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wvg/instance_gen.hpp"
#include "wvg/io.hpp"
#include "wvg/manipulation.hpp"
#include "wvg/power_indices.hpp"

namespace wvg::cli {

inline constexpr const char* kEnumLimitVariable = "WVG_ENUM_LIMIT";

/// Enumeration limit, overridable through WVG_ENUM_LIMIT.
inline std::size_t enumeration_limit_from_env() {
  const char* raw = std::getenv(kEnumLimitVariable);
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationLimit;
  const Integer value = parse_integer(raw);
  if (value < 1 || value > kMaxEnumerationPlayers) {
    throw Error(ErrorCode::ParameterOutOfRange, std::string(kEnumLimitVariable) + " must be in 1.." +
                                                    std::to_string(kMaxEnumerationPlayers));
  }
  return value.convert_to<std::size_t>();
}

inline IndexKind parse_index_kind(const std::string& name) {
  if (name == "bz" || name == "banzhaf") return IndexKind::BanzhafNormalized;
  if (name == "bzp" || name == "banzhaf-prob") return IndexKind::BanzhafProbabilistic;
  if (name == "ss" || name == "shapley") return IndexKind::ShapleyShubik;
  throw Error(ErrorCode::ParameterOutOfRange, "unknown index '" + name + "'");
}

inline Method parse_method(const std::string& name) {
  if (name == "enum") return Method::Enumeration;
  if (name == "dp") return Method::DynamicProgramming;
  throw Error(ErrorCode::ParameterOutOfRange, "unknown method '" + name + "'");
}

inline ReductionVariant parse_variant(const std::string& name) {
  if (name == "split") return ReductionVariant::Split;
  if (name == "merge") return ReductionVariant::Merge;
  if (name == "annex") return ReductionVariant::Annex;
  if (name == "ssmerge") return ReductionVariant::SSMerge;
  throw Error(ErrorCode::ParameterOutOfRange, "unknown reduction variant '" + name + "'");
}

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline const CLI::IsMember kFormatNames({"human", "json", "structured", "table", "tabular", "tsv"});

struct Common {
  std::string game;
  std::string format = "human";
  std::string method = "dp";
  std::string index = "bz";
  int digits = kDefaultDigits;
};

inline void add_game_options(CLI::App& sub, Common& c, bool with_index) {
  sub.add_option("--game", c.game, "game as \"[q;w1,...,wn]\" or a JSON object")->required();
  sub.add_option("--format", c.format, "human | json | table")->capture_default_str()->check(kFormatNames);
  sub.add_option("--method", c.method, "enum | dp")->capture_default_str()->check(CLI::IsMember({"enum", "dp"}));
  sub.add_option("--digits", c.digits, "significant digits of decimal approximations")->capture_default_str();
  if (with_index) {
    sub.add_option("--index", c.index, "bz | bzp | ss")
        ->capture_default_str()
        ->check(CLI::IsMember({"bz", "banzhaf", "bzp", "banzhaf-prob", "ss", "shapley"}));
  }
}

inline std::vector<Integer> to_integers(const std::vector<std::string>& xs) {
  std::vector<Integer> out;
  for (const auto& x : xs) out.push_back(parse_integer(x));
  return out;
}

inline Coalition to_coalition(const std::vector<std::size_t>& ids) {
  std::vector<PlayerId> members;
  for (auto id : ids) members.emplace_back(id);
  return Coalition(std::move(members));
}

inline std::string render_gen(const WeightedVotingGame& game, const std::optional<ReductionOutput>& reduction,
                              Format format) {
  if (format == Format::Structured) {
    Json j{{"game", game_to_json(game)}};
    if (reduction) {
      j["variant"] = to_string(reduction->variant);
      if (reduction->focus_player) j["focus_player"] = reduction->focus_player->value();
      Json members = Json::array();
      for (auto id : reduction->focus_coalition.members()) members.push_back(id.value());
      j["focus_coalition"] = std::move(members);
    }
    return j.dump(2) + "\n";
  }
  std::string out = render_game(game) + "\n";
  if (reduction) {
    out += "variant: " + std::string(to_string(reduction->variant)) + "\n";
    const std::string members = "{" + wvg::detail::join_ids(reduction->focus_coalition.members()) + "}";
    switch (reduction->variant) {
      case ReductionVariant::Split: out += "focus: player " + to_string(*reduction->focus_player) + " splits into (1,1)\n"; break;
      case ReductionVariant::Annex: out += "focus: player " + to_string(*reduction->focus_player) + " annexes " + members + "\n"; break;
      default: out += "focus: merge " + members + "\n"; break;
    }
  }
  return out;
}

}  // namespace detail

inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power indices and false-name manipulation analysis for weighted voting games", "wvg"};
  app.require_subcommand(1);

  detail::Common common;

  auto* index_cmd = app.add_subcommand("index", "Swing counts, Banzhaf and Shapley-Shubik indices");
  detail::add_game_options(*index_cmd, common, false);

  std::size_t player = 0;
  std::vector<std::string> parts;
  std::size_t max_parts = 0;
  auto* split_cmd = app.add_subcommand("split", "Evaluate a split, or search for the best one");
  detail::add_game_options(*split_cmd, common, true);
  split_cmd->add_option("--player", player, "splitting player (1-based)")->required();
  auto* parts_opt = split_cmd->add_option("--parts", parts, "sub-player weights, e.g. 1,1")->delimiter(',');
  auto* max_parts_opt = split_cmd->add_option("--max-parts", max_parts, "search splits into 2..k parts");
  parts_opt->excludes(max_parts_opt);

  std::vector<std::size_t> members;
  auto* merge_cmd = app.add_subcommand("merge", "Evaluate a voluntary merge into a bloc");
  detail::add_game_options(*merge_cmd, common, true);
  merge_cmd->add_option("--members", members, "merging players, e.g. 4,5")->delimiter(',')->required();

  std::vector<std::size_t> targets;
  std::string budget;
  auto* annex_cmd = app.add_subcommand("annex", "Evaluate an annexation, or suggest one within a weight budget");
  detail::add_game_options(*annex_cmd, common, true);
  annex_cmd->add_option("--player", player, "annexing player")->required();
  auto* targets_opt = annex_cmd->add_option("--targets", targets, "annexed players, e.g. 3")->delimiter(',');
  auto* budget_opt = annex_cmd->add_option("--budget", budget, "suggest targets with total weight <= budget");
  targets_opt->excludes(budget_opt);

  auto* paradox_cmd = app.add_subcommand("paradox", "Scan single-player annexations for non-monotonicity");
  detail::add_game_options(*paradox_cmd, common, true);
  paradox_cmd->add_option("--player", player, "annexing player")->required();

  std::string family;
  std::size_t n = 0;
  std::vector<std::string> values;
  std::string variant = "split";
  std::uint64_t max_weight = 10;
  std::uint64_t seed = 1;
  bool proper = false;
  std::string gen_format = "human";
  auto* gen_cmd = app.add_subcommand("gen", "Construct a named family, reduction instance or random game");
  gen_cmd->add_option("--family", family, "tight | dictator | unanimity | reduction | random")
      ->required()
      ->check(CLI::IsMember({"tight", "dictator", "unanimity", "reduction", "random"}));
  gen_cmd->add_option("--n", n, "player-count parameter");
  gen_cmd->add_option("--weights,--values", values, "unanimity weights or partition values")->delimiter(',');
  gen_cmd->add_option("--variant", variant, "split | merge | annex | ssmerge")
      ->capture_default_str()
      ->check(CLI::IsMember({"split", "merge", "annex", "ssmerge"}));
  gen_cmd->add_option("--max-weight", max_weight, "random weights are drawn from 1..max")->capture_default_str();
  gen_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  gen_cmd->add_flag("--proper", proper, "random quota above half the total weight");
  gen_cmd->add_option("--format", gen_format, "human | json")->capture_default_str()->check(detail::kFormatNames);

  std::vector<std::size_t> sizes{8, 12, 16, 20};
  std::size_t games_per_size = 3;
  std::uint64_t bench_max_weight = 50;
  auto* bench_cmd = app.add_subcommand("bench", "Time enumeration against the counting tables");
  bench_cmd->add_option("--sizes", sizes, "player counts")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--games", games_per_size, "random games per size")->capture_default_str();
  bench_cmd->add_option("--max-weight", bench_max_weight, "random weights are drawn from 1..max")->capture_default_str();
  bench_cmd->add_option("--seed", seed, "first seed")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::size_t limit = [] {
      try {
        return enumeration_limit_from_env();
      } catch (const Error& e) {
        throw detail::UsageError(std::string(kEnumLimitVariable) + ": " + e.what());
      }
    }();
    auto game = [&] { return parse_game(common.game); };
    const auto format = [&] { return parse_format(common.format); };
    const EvaluationOptions opts{parse_method(common.method), limit};

    if (*index_cmd) {
      out << render_report(analyze(game(), opts.method, limit), format(), common.digits);
    } else if (*split_cmd) {
      const auto g = game();
      const auto kind = parse_index_kind(common.index);
      if (!parts.empty()) {
        auto action = make_split_action(PlayerId(player), detail::to_integers(parts));
        out << render_report(evaluate_split(g, action, kind, opts), format(), common.digits);
      } else if (max_parts_opt->count() > 0) {
        const auto best = best_split(g, PlayerId(player), max_parts, kind, opts);
        if (best) {
          out << render_report(*best, format(), common.digits);
        } else {
          const Rational before = power_index(g, kind, opts.method, limit)[PlayerId(player)];
          if (format() == Format::Structured) {
            out << Json{{"beneficial", false}, {"before", rational_to_json(before)}, {"split", nullptr}}.dump(2) << "\n";
          } else {
            out << "verdict: no beneficial split into at most " << max_parts << " parts (before "
                << format_exact(before, common.digits) << ")\n";
          }
        }
      } else {
        throw detail::UsageError("split needs --parts or --max-parts");
      }
    } else if (*merge_cmd) {
      out << render_report(evaluate_merge(game(), detail::to_coalition(members), parse_index_kind(common.index), opts),
                           format(), common.digits);
    } else if (*annex_cmd) {
      const auto g = game();
      Coalition annexed;
      if (budget_opt->count() > 0) {
        annexed = annexation_advisor(g, PlayerId(player), parse_integer(budget));
        if (annexed.empty()) {
          out << "suggestion: none (no positive-weight player fits the budget)\n";
          return 0;
        }
        if (format() == Format::Human) {
          out << "suggestion: annex {" << wvg::detail::join_ids(annexed.members()) << "}\n";
        }
      } else if (targets_opt->count() > 0) {
        annexed = detail::to_coalition(targets);
      } else {
        throw detail::UsageError("annex needs --targets or --budget");
      }
      out << render_report(evaluate_annexation(g, PlayerId(player), annexed, parse_index_kind(common.index), opts),
                           format(), common.digits);
    } else if (*paradox_cmd) {
      const auto g = game();
      const auto witnesses =
          scan_annexation_nonmonotonicity(g, PlayerId(player), parse_index_kind(common.index), opts);
      out << render_witnesses(g, PlayerId(player), witnesses, format(), common.digits);
    } else if (*gen_cmd) {
      const auto fmt = parse_format(gen_format);
      std::optional<ReductionOutput> reduction;
      std::optional<WeightedVotingGame> g;
      if (family == "tight") {
        g = tight_split_family(n);
      } else if (family == "dictator") {
        g = dictator_family(n);
      } else if (family == "unanimity") {
        g = unanimity_game(detail::to_integers(values));
      } else if (family == "reduction") {
        reduction = partition_reduction(PartitionInstance(detail::to_integers(values)), parse_variant(variant));
        g = reduction->game;
      } else if (family == "random") {
        g = random_game(n, max_weight, seed, proper);
      } else {
        throw detail::UsageError("unknown family '" + family + "'");
      }
      out << detail::render_gen(*g, reduction, fmt);
    } else if (*bench_cmd) {
      using Clock = std::chrono::steady_clock;
      std::vector<std::vector<std::string>> rows{{"n", "games", "enum_ms", "dp_ms", "agree"}};
      for (auto size : sizes) {
        double enum_ms = 0, dp_ms = 0;
        bool enumerated = size <= limit, agree = true;
        for (std::size_t k = 0; k < games_per_size; ++k) {
          const auto g = random_game(size, bench_max_weight, seed + k);
          auto t0 = Clock::now();
          const auto dp = eta_dp(g);
          dp_ms += std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
          if (enumerated) {
            t0 = Clock::now();
            agree = agree && eta_enum(g, limit) == dp;
            enum_ms += std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
          }
        }
        auto ms = [](double x) {
          std::ostringstream s;
          s.setf(std::ios::fixed);
          s.precision(3);
          s << x;
          return s.str();
        };
        rows.push_back({std::to_string(size), std::to_string(games_per_size), enumerated ? ms(enum_ms) : "skipped",
                        ms(dp_ms), enumerated ? (agree ? "yes" : "NO") : "-"});
      }
      out << wvg::detail::align_columns(rows);
    }
    return 0;
  } catch (const detail::UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wvg::cli
