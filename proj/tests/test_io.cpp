#include <gtest/gtest.h>

#include "test_util.hpp"
#include "wvg/instance_gen.hpp"
#include "wvg/io.hpp"

namespace wvg {
namespace {

using testing::error_code;

std::size_t error_position(std::string_view text) {
  try {
    parse_game(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    return e.position().value_or(std::string::npos);
  }
  ADD_FAILURE() << "no error for " << text;
  return std::string::npos;
}

TEST(ParseGame, BracketForm) {
  EXPECT_EQ(parse_game("[5;2,2,2]"), new_game(5, {2, 2, 2}));
  EXPECT_EQ(parse_game("[13; 7, 6, 1,1,1,1,1,1]"), new_game(13, {7, 6, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(parse_game("  [ 9 ; 3 3 2 1 1 1 ]\n"), new_game(9, {3, 3, 2, 1, 1, 1}));
  EXPECT_EQ(parse_game("[1;0,1]"), new_game(1, {0, 1}));
  const std::string big = "340282366920938463463374607431768211457";
  EXPECT_EQ(parse_game("[" + big + ";" + big + "]").quota(), Integer(big));
}

TEST(ParseGame, DomainErrors) {
  EXPECT_EQ(error_code([] { parse_game("[0;1]"); }), ErrorCode::ZeroOrNegativeQuota);
  EXPECT_EQ(error_code([] { parse_game("[5;2,2]"); }), ErrorCode::QuotaExceedsTotalWeight);
  EXPECT_EQ(error_code([] { parse_game("[1;2,-1]"); }), ErrorCode::NegativeWeight);
  EXPECT_EQ(error_code([] { parse_game("[1;]"); }), ErrorCode::EmptyPlayerList);
}

TEST(ParseGame, SyntaxErrorsCarryPositions) {
  EXPECT_EQ(error_position("[5;2,x]"), 5u);
  EXPECT_EQ(error_position("5;2,2]"), 0u);
  EXPECT_EQ(error_position("[5,2,2]"), 2u);
  EXPECT_EQ(error_position("[5;2,2"), 6u);
  EXPECT_EQ(error_position("[5;2,,2]"), 5u);
  EXPECT_EQ(error_position("[5;2,2] x"), 8u);
  EXPECT_EQ(error_position(""), 0u);
}

TEST(ParseGame, StructuredForm) {
  EXPECT_EQ(parse_game(R"({"quota": 5, "weights": [2, 2, 2]})"), new_game(5, {2, 2, 2}));
  EXPECT_EQ(parse_game(R"({"quota": "13", "weights": ["7", 6, 1, 1, 1, 1, 1, 1]})"),
            new_game(13, {7, 6, 1, 1, 1, 1, 1, 1}));
  const auto doc = parse_game_document(R"({"quota": 2, "weights": [1, 1, 1], "labels": ["a", "b", "c"]})");
  EXPECT_EQ(doc.labels, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(error_code([] { parse_game(R"({"quota": 2, "weights": [1, 1], "labels": ["a"]})"); }),
            ErrorCode::SyntaxError);
  EXPECT_EQ(error_code([] { parse_game(R"({"quota": 2})"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(error_code([] { parse_game(R"({"quota": 2.5, "weights": [3]})"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(error_code([] { parse_game(R"({"quota": 2, "weights": [3)"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(error_code([] { parse_game(R"({"quota": 0, "weights": [3]})"); }), ErrorCode::ZeroOrNegativeQuota);
}

TEST(ParseGame, RoundTripsThroughBothForms) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = random_game(1 + seed % 20, 1 + seed * 37 % 1000, seed);
    EXPECT_EQ(parse_game(render_game(g)), g);
    EXPECT_EQ(parse_game(render_game_document({g, {}})), g);
  }
  const GameDocument labelled{new_game(2, {1, 1}), {"x", "y"}};
  const auto back = parse_game_document(render_game_document(labelled));
  EXPECT_EQ(back.game, labelled.game);
  EXPECT_EQ(back.labels, labelled.labels);
  EXPECT_EQ(render_game(new_game(5, {2, 2, 2})), "[5;2,2,2]");
}

TEST(Decimal, SignificantDigitsAndRounding) {
  EXPECT_EQ(to_decimal(Rational(7, 17)), "0.411765");
  EXPECT_EQ(to_decimal(Rational(1, 3)), "0.333333");
  EXPECT_EQ(to_decimal(Rational(2, 3)), "0.666667");
  EXPECT_EQ(to_decimal(Rational(65, 134), 5), "0.48507");
  EXPECT_EQ(to_decimal(Rational(11, 23), 5), "0.47826");
  EXPECT_EQ(to_decimal(Rational(2, 5)), "0.400000");
  EXPECT_EQ(to_decimal(Rational(1)), "1.00000");
  EXPECT_EQ(to_decimal(Rational(0)), "0");
  EXPECT_EQ(to_decimal(Rational(1, 8), 2), "0.13");    // half rounds away from zero
  EXPECT_EQ(to_decimal(Rational(-1, 8), 2), "-0.13");
  EXPECT_EQ(to_decimal(Rational(9999995, 10000000)), "1.00000");
  EXPECT_EQ(to_decimal(Rational(1, 1000000)), "0.00000100000");
  EXPECT_EQ(to_decimal(Rational(123456789), 3), "123000000");
}

TEST(Decimal, ExactFormatting) {
  EXPECT_EQ(format_exact(Rational(7, 17)), "7/17 (0.411765)");
  EXPECT_EQ(format_exact(Rational(1, 3)), "1/3 (0.333333)");
  EXPECT_EQ(format_rational(Rational(4, 2)), "2");
  EXPECT_EQ(format_rational(Rational(-21, 3082)), "-21/3082");
}

TEST(Decimal, RationalJsonIsLossless) {
  for (const Rational& r : {Rational(7, 17), Rational(0), Rational(-3, 4),
                           Rational(Integer(1) << 130, (Integer(1) << 131) - 1)}) {
    EXPECT_EQ(rational_from_json(Json::parse(rational_to_json(r).dump())), r);
  }
  EXPECT_EQ(rational_to_json(Rational(7, 17)).dump(), R"({"den":"17","num":"7"})");
}

TEST(RenderReport, IndexTabularRows) {
  const auto text = render_report(analyze(new_game(4, {2, 2, 1, 1})), Format::Tabular);
  EXPECT_EQ(text,
            "player\tweight\teta\tbanzhaf\tbanzhaf_probabilistic\tkappa\tshapley_shubik\n"
            "1\t2\t4\t1/3\t1/2\t8\t1/3\n"
            "2\t2\t4\t1/3\t1/2\t8\t1/3\n"
            "3\t1\t2\t1/6\t1/4\t4\t1/6\n"
            "4\t1\t2\t1/6\t1/4\t4\t1/6\n");
}

TEST(RenderReport, IndexHumanShowsExactAndDecimal) {
  const auto text = render_report(analyze(new_game(9, {5, 3, 1, 1, 1})), Format::Human);
  EXPECT_NE(text.find("7/17 (0.411765)"), std::string::npos);
  EXPECT_NE(text.find("[9;5,3,1,1,1]"), std::string::npos);
}

TEST(RenderReport, IndexStructuredReparsesExactly) {
  const auto g = new_game(13, {7, 6, 1, 1, 1, 1, 1, 1});
  const auto report = analyze(g);
  const auto j = Json::parse(render_report(report, Format::Structured));
  EXPECT_EQ(parse_game(j.at("game").dump()), g);
  ASSERT_EQ(j.at("players").size(), g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto& p = j.at("players")[k];
    EXPECT_EQ(p.at("id").get<std::size_t>(), k + 1);
    EXPECT_EQ(parse_integer(p.at("eta").get<std::string>()), report.banzhaf.counts.eta[k]);
    EXPECT_EQ(rational_from_json(p.at("banzhaf")), report.banzhaf.normalized.values[k]);
    EXPECT_EQ(rational_from_json(p.at("banzhaf_probabilistic")), report.banzhaf.probabilistic.values[k]);
    EXPECT_EQ(rational_from_json(p.at("shapley_shubik")), report.shapley.values.values[k]);
  }
}

TEST(RenderReport, ManipulationFormats) {
  const auto report = evaluate_annexation(new_game(13, {7, 6, 1, 1, 1, 1, 1, 1}), PlayerId(1), {3},
                                          IndexKind::BanzhafNormalized);
  const auto human = render_report(report, Format::Human, 5);
  EXPECT_NE(human.find("65/134 (0.48507)"), std::string::npos);
  EXPECT_NE(human.find("11/23 (0.47826)"), std::string::npos);
  EXPECT_NE(human.find("verdict:   not beneficial\n"), std::string::npos);

  const auto j = Json::parse(render_report(report, Format::Structured));
  EXPECT_EQ(rational_from_json(j.at("before")), Rational(65, 134));
  EXPECT_EQ(rational_from_json(j.at("after")), Rational(11, 23));
  EXPECT_EQ(rational_from_json(j.at("delta")), Rational(11, 23) - Rational(65, 134));
  EXPECT_FALSE(j.at("beneficial").get<bool>());
  EXPECT_EQ(parse_game(j.at("result").dump()), new_game(13, {8, 6, 1, 1, 1, 1, 1}));

  const auto table = render_report(report, Format::Tabular);
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 8);
}

TEST(RenderReport, VerdictWording) {
  const auto g = new_game(4, {2, 2, 2});
  const auto neutral = evaluate_split(g, make_split_action(PlayerId(3), {1, 1}), IndexKind::BanzhafNormalized);
  EXPECT_EQ(verdict(neutral), "not beneficial (neutral)");
  const auto good = evaluate_split(new_game(6, {2, 2, 2}), make_split_action(PlayerId(3), {1, 1}),
                                   IndexKind::BanzhafNormalized);
  EXPECT_EQ(verdict(good), "beneficial");
}

TEST(RenderReport, ByteDeterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_game(2 + seed % 8, 20, seed);
    for (auto f : {Format::Human, Format::Structured, Format::Tabular}) {
      EXPECT_EQ(render_report(analyze(g), f), render_report(analyze(g), f));
    }
  }
}

TEST(ParseFormat, Names) {
  EXPECT_EQ(parse_format("human"), Format::Human);
  EXPECT_EQ(parse_format("json"), Format::Structured);
  EXPECT_EQ(parse_format("tsv"), Format::Tabular);
  EXPECT_EQ(error_code([] { parse_format("xml"); }), ErrorCode::ParameterOutOfRange);
}

}  // namespace
}  // namespace wvg
