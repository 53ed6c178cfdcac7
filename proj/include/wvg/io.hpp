#pragma once

// Game text formats and report rendering.
//
// Bracket form:    [q; w1, w2, ..., wn]   (commas and/or whitespace between weights)
// Structured form: {"quota": 5, "weights": [2, 2, 2], "labels": ["a", "b", "c"]}
//                  Integers may be JSON numbers or decimal strings.

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "wvg/game.hpp"
#include "wvg/manipulation.hpp"
#include "wvg/power_indices.hpp"

namespace wvg {

using Json = nlohmann::json;

enum class Format { Human, Structured, Tabular };

inline Format parse_format(std::string_view name) {
  if (name == "human") return Format::Human;
  if (name == "json" || name == "structured") return Format::Structured;
  if (name == "table" || name == "tabular" || name == "tsv") return Format::Tabular;
  throw Error(ErrorCode::ParameterOutOfRange, "unknown format '" + std::string(name) + "'");
}

inline constexpr int kDefaultDigits = 6;

namespace detail {

inline Integer pow10(std::size_t k) {
  Integer p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= 10;
  return p;
}

inline Integer parse_integer(std::string_view text, std::size_t offset = 0) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
  if (pos == text.size()) throw Error(ErrorCode::SyntaxError, "expected an integer at position " + std::to_string(offset), offset);
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::SyntaxError,
                  "unexpected '" + std::string(1, c) + "' at position " + std::to_string(offset + pos),
                  offset + pos);
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace detail

/// Exact integer text of a decimal string, with optional sign.
inline Integer parse_integer(std::string_view text) { return detail::parse_integer(text); }

/// Decimal approximation with `significant` significant digits, rounding half
/// away from zero. Zero renders as "0".
inline std::string to_decimal(const Rational& value, int significant = kDefaultDigits) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (value == 0) return "0";
  if (significant < 1) significant = 1;
  const bool negative = value < 0;
  const Integer num = negative ? Integer(-numerator(value)) : Integer(numerator(value));
  const Integer den = denominator(value);

  // exponent e with 10^e <= |value| < 10^(e+1)
  long e = static_cast<long>(num.str().size()) - static_cast<long>(den.str().size());
  auto below_pow10 = [&](long k) {  // |value| < 10^k
    return k >= 0 ? num < den * detail::pow10(k) : num * detail::pow10(-k) < den;
  };
  while (below_pow10(e)) --e;
  while (!below_pow10(e + 1)) ++e;

  long shift = significant - 1 - e;  // |value| * 10^shift has `significant` integer digits
  Integer a = num, b = den;
  if (shift >= 0) a *= detail::pow10(shift); else b *= detail::pow10(-shift);
  Integer digits_value = (2 * a + b) / (2 * b);
  if (digits_value == detail::pow10(significant)) {
    digits_value /= 10;
    --shift;
  }
  std::string digits = digits_value.str();
  std::string out;
  if (shift <= 0) {
    out = digits + std::string(static_cast<std::size_t>(-shift), '0');
  } else if (static_cast<std::size_t>(shift) >= digits.size()) {
    out = "0." + std::string(shift - digits.size(), '0') + digits;
  } else {
    out = digits.substr(0, digits.size() - shift) + "." + digits.substr(digits.size() - shift);
  }
  return negative ? "-" + out : out;
}

/// "7/17", or "2" for integral values.
inline std::string format_rational(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

/// "7/17 (0.411765)".
inline std::string format_exact(const Rational& value, int digits = kDefaultDigits) {
  return format_rational(value) + " (" + to_decimal(value, digits) + ")";
}

inline Json rational_to_json(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return Json{{"num", numerator(value).str()}, {"den", denominator(value).str()}};
}

inline Rational rational_from_json(const Json& j) {
  return Rational(parse_integer(j.at("num").get<std::string>()), parse_integer(j.at("den").get<std::string>()));
}

struct GameDocument {
  WeightedVotingGame game;
  std::vector<std::string> labels;  ///< empty, or one per player
};

namespace detail {

class BracketParser {
 public:
  explicit BracketParser(std::string_view text) : text_(text) {}

  WeightedVotingGame parse() {
    skip_space();
    expect('[');
    Integer quota = integer();
    expect(';');
    std::vector<Integer> weights;
    skip_space();
    std::size_t last_end = pos_;
    while (peek() != ']') {
      if (!weights.empty()) {
        if (peek() == ',') {
          ++pos_;
        } else if (pos_ == last_end) {
          fail("expected ',' or ']'");
        }
      }
      weights.push_back(integer());
      last_end = pos_;
      skip_space();
    }
    expect(']');
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return WeightedVotingGame::make(std::move(quota), std::move(weights));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(pos_), pos_);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start || !std::isdigit(static_cast<unsigned char>(text_[pos_ - 1]))) {
      pos_ = start;
      fail("expected an integer");
    }
    return parse_integer(text_.substr(start, pos_ - start), start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Integer json_integer(const Json& j, const std::string& field) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  }
  throw Error(ErrorCode::SyntaxError, field + " must be an integer or a decimal string");
}

inline GameDocument parse_structured(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!doc.is_object() || !doc.contains("quota") || !doc.contains("weights") || !doc["weights"].is_array()) {
    throw Error(ErrorCode::SyntaxError, "expected an object with 'quota' and a 'weights' array");
  }
  std::vector<Integer> weights;
  for (const auto& w : doc["weights"]) weights.push_back(json_integer(w, "weight"));
  GameDocument out{WeightedVotingGame::make(json_integer(doc["quota"], "quota"), std::move(weights)), {}};
  if (doc.contains("labels")) {
    for (const auto& l : doc["labels"]) out.labels.push_back(l.get<std::string>());
    if (out.labels.size() != out.game.size()) {
      throw Error(ErrorCode::SyntaxError, "labels must name every player");
    }
  }
  return out;
}

}  // namespace detail

inline GameDocument parse_game_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return detail::parse_structured(text);
  return {detail::BracketParser(text).parse(), {}};
}

inline WeightedVotingGame parse_game(std::string_view text) { return parse_game_document(text).game; }

/// Compact bracket form, e.g. "[5;2,2,2]".
inline std::string render_game(const WeightedVotingGame& game) {
  std::string out = "[" + game.quota().str() + ";";
  for (std::size_t k = 0; k < game.size(); ++k) {
    if (k > 0) out += ",";
    out += game.weights()[k].str();
  }
  return out + "]";
}

inline Json game_to_json(const WeightedVotingGame& game) {
  Json weights = Json::array();
  for (const auto& w : game.weights()) weights.push_back(w.str());
  return Json{{"quota", game.quota().str()}, {"weights", std::move(weights)}};
}

inline std::string render_game_document(const GameDocument& doc) {
  Json j = game_to_json(doc.game);
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  return j.dump();
}

namespace detail {

/// Space-aligned columns; the last column is not padded.
inline std::string align_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) out += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += "\n";
  }
  return out;
}

inline std::string tab_rows(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += "\t";
      out += row[c];
    }
    out += "\n";
  }
  return out;
}

inline std::string join_ids(const std::vector<PlayerId>& ids, const char* sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k > 0) out += sep;
    out += to_string(ids[k]);
  }
  return out;
}

inline std::string join_integers(const std::vector<Integer>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k > 0) out += ",";
    out += xs[k].str();
  }
  return out;
}

}  // namespace detail

/// Everything `index` reports for one game.
struct IndexReport {
  WeightedVotingGame game;
  Method method;
  BanzhafIndices banzhaf;
  ShapleyIndices shapley;
};

inline IndexReport analyze(const WeightedVotingGame& game, Method method = Method::DynamicProgramming,
                           std::size_t enumeration_limit = kDefaultEnumerationLimit) {
  return {game, method, compute_banzhaf(game, method, enumeration_limit),
          compute_shapley(game, method, enumeration_limit)};
}

inline std::string render_report(const IndexReport& report, Format format, int digits = kDefaultDigits) {
  const auto& game = report.game;
  switch (format) {
    case Format::Human: {
      std::vector<std::vector<std::string>> rows{
          {"player", "weight", "eta", "banzhaf", "banzhaf_prob", "shapley"}};
      for (auto i : game.players()) {
        rows.push_back({to_string(i), game.weight(i).str(), report.banzhaf.counts[i].str(),
                        format_exact(report.banzhaf.normalized[i], digits),
                        format_exact(report.banzhaf.probabilistic[i], digits),
                        format_exact(report.shapley.values[i], digits)});
      }
      return "game " + render_game(game) + "  players " + std::to_string(game.size()) + "  method " +
             std::string(to_string(report.method)) + "\n" + detail::align_columns(rows);
    }
    case Format::Structured: {
      Json players = Json::array();
      for (auto i : game.players()) {
        players.push_back({{"id", i.value()},
                           {"weight", game.weight(i).str()},
                           {"eta", report.banzhaf.counts[i].str()},
                           {"kappa", report.shapley.counts[i].str()},
                           {"banzhaf", rational_to_json(report.banzhaf.normalized[i])},
                           {"banzhaf_probabilistic", rational_to_json(report.banzhaf.probabilistic[i])},
                           {"shapley_shubik", rational_to_json(report.shapley.values[i])}});
      }
      Json j{{"game", game_to_json(game)}, {"method", to_string(report.method)}, {"players", std::move(players)}};
      return j.dump(2) + "\n";
    }
    case Format::Tabular: {
      std::vector<std::vector<std::string>> rows{
          {"player", "weight", "eta", "banzhaf", "banzhaf_probabilistic", "kappa", "shapley_shubik"}};
      for (auto i : game.players()) {
        rows.push_back({to_string(i), game.weight(i).str(), report.banzhaf.counts[i].str(),
                        format_rational(report.banzhaf.normalized[i]),
                        format_rational(report.banzhaf.probabilistic[i]), report.shapley.counts[i].str(),
                        format_rational(report.shapley.values[i])});
      }
      return detail::tab_rows(rows);
    }
  }
  return {};
}

inline std::string describe_action(const Action& action) {
  if (const auto* split = std::get_if<SplitAction>(&action)) {
    return "split player " + to_string(split->player) + " into (" + detail::join_integers(split->parts) + ")";
  }
  const auto& merge = std::get<MergeAction>(action);
  if (merge.annexer) {
    return "player " + to_string(*merge.annexer) + " annexes {" + detail::join_ids(merge.members.members()) + "}";
  }
  return "merge {" + detail::join_ids(merge.members.members()) + "}";
}

inline std::string verdict(const ManipulationReport& report) {
  if (report.beneficial) return "beneficial";
  return report.delta == 0 ? "not beneficial (neutral)" : "not beneficial";
}

namespace detail {

/// Ids of the result game that the manipulating player(s) now control.
inline std::vector<PlayerId> manipulator_ids(const ManipulationReport& report) {
  if (const auto* split = std::get_if<SplitAction>(&report.action)) {
    return report.remap.to_new[split->player.index()];
  }
  const auto& merge = std::get<MergeAction>(report.action);
  return report.remap.to_new[merge.members.members().front().index()];
}

inline Json action_to_json(const Action& action) {
  if (const auto* split = std::get_if<SplitAction>(&action)) {
    Json parts = Json::array();
    for (const auto& p : split->parts) parts.push_back(p.str());
    return Json{{"type", "split"}, {"player", split->player.value()}, {"parts", std::move(parts)}};
  }
  const auto& merge = std::get<MergeAction>(action);
  Json members = Json::array();
  for (auto id : merge.members.members()) members.push_back(id.value());
  if (merge.annexer) return Json{{"type", "annex"}, {"player", merge.annexer->value()}, {"targets", std::move(members)}};
  return Json{{"type", "merge"}, {"members", std::move(members)}};
}

}  // namespace detail

inline std::string render_report(const ManipulationReport& report, Format format, int digits = kDefaultDigits) {
  const auto manipulators = detail::manipulator_ids(report);
  switch (format) {
    case Format::Human: {
      std::vector<std::vector<std::string>> rows{
          {"action:", describe_action(report.action)},
          {"index:", std::string(to_string(report.index_kind))},
          {"original:", render_game(report.original)},
          {"result:", render_game(report.result)},
          {"before:", format_exact(report.before, digits)},
          {"after:", format_exact(report.after, digits)},
          {"delta:", format_exact(report.delta, digits)},
          {"verdict:", verdict(report)},
      };
      std::string remap;
      for (std::size_t k = 0; k < report.remap.to_new.size(); ++k) {
        if (k > 0) remap += " ";
        remap += std::to_string(k + 1) + "->" + detail::join_ids(report.remap.to_new[k]);
      }
      rows.push_back({"remap:", remap});
      std::string out = detail::align_columns(rows);
      if (report.non_standard) {
        out += "note: probabilistic Banzhaf compared across games with different player counts\n";
      }
      return out;
    }
    case Format::Structured: {
      Json to_new = Json::array();
      for (const auto& ids : report.remap.to_new) {
        Json row = Json::array();
        for (auto id : ids) row.push_back(id.value());
        to_new.push_back(std::move(row));
      }
      Json values = Json::array();
      for (const auto& v : report.result_values.values) values.push_back(rational_to_json(v));
      Json j{{"action", detail::action_to_json(report.action)},
             {"index", to_string(report.index_kind)},
             {"original", game_to_json(report.original)},
             {"result", game_to_json(report.result)},
             {"before", rational_to_json(report.before)},
             {"after", rational_to_json(report.after)},
             {"delta", rational_to_json(report.delta)},
             {"beneficial", report.beneficial},
             {"non_standard", report.non_standard},
             {"remap", std::move(to_new)},
             {"result_values", std::move(values)}};
      return j.dump(2) + "\n";
    }
    case Format::Tabular: {
      std::vector<std::vector<std::string>> rows{{"player", "weight", "origin", "manipulator", "value"}};
      for (auto i : report.result.players()) {
        const bool mine = std::find(manipulators.begin(), manipulators.end(), i) != manipulators.end();
        rows.push_back({to_string(i), report.result.weight(i).str(), detail::join_ids(report.remap.to_old[i.index()]),
                        mine ? "yes" : "no", format_rational(report.result_values[i])});
      }
      return detail::tab_rows(rows);
    }
  }
  return {};
}

inline std::string render_witnesses(const WeightedVotingGame& game, PlayerId annexer,
                                    const std::vector<AnnexationWitness>& witnesses, Format format,
                                    int digits = kDefaultDigits) {
  switch (format) {
    case Format::Human: {
      std::string out = "game " + render_game(game) + "  annexer " + to_string(annexer) + "\n";
      if (witnesses.empty()) return out + "no annexation non-monotonicity found\n";
      std::vector<std::vector<std::string>> rows{{"heavier", "lighter", "annex heavier", "annex lighter"}};
      for (const auto& w : witnesses) {
        rows.push_back({to_string(w.heavier), to_string(w.lighter), format_exact(w.payoff_heavier, digits),
                        format_exact(w.payoff_lighter, digits)});
      }
      return out + detail::align_columns(rows);
    }
    case Format::Structured: {
      Json list = Json::array();
      for (const auto& w : witnesses) {
        list.push_back({{"heavier", w.heavier.value()},
                        {"lighter", w.lighter.value()},
                        {"payoff_heavier", rational_to_json(w.payoff_heavier)},
                        {"payoff_lighter", rational_to_json(w.payoff_lighter)}});
      }
      Json j{{"game", game_to_json(game)}, {"annexer", annexer.value()}, {"witnesses", std::move(list)}};
      return j.dump(2) + "\n";
    }
    case Format::Tabular: {
      std::vector<std::vector<std::string>> rows{{"heavier", "lighter", "payoff_heavier", "payoff_lighter"}};
      for (const auto& w : witnesses) {
        rows.push_back({to_string(w.heavier), to_string(w.lighter), format_rational(w.payoff_heavier),
                        format_rational(w.payoff_lighter)});
      }
      return detail::tab_rows(rows);
    }
  }
  return {};
}

}  // namespace wvg
