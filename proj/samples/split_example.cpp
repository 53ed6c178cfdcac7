// Splitting in the three-player game [q; 2, 2, 2] for q = 4, 5, 6, and an
// annexation that loses Banzhaf power.
#include <iostream>

#include "wvg/wvg.hpp"

int main() {
  using namespace wvg;
  for (int quota : {5, 4, 6}) {
    const auto game = new_game(quota, {2, 2, 2});
    const auto report =
        evaluate_split(game, make_split_action(PlayerId(3), {1, 1}), IndexKind::BanzhafNormalized);
    std::cout << render_game(game) << " -> " << render_game(report.result) << ": " << format_exact(report.before)
              << " -> " << format_exact(report.after) << ", " << verdict(report) << "\n";
  }

  const auto game = parse_game("[13; 7, 6, 1, 1, 1, 1, 1, 1]");
  const auto report = evaluate_annexation(game, PlayerId(1), Coalition{3}, IndexKind::BanzhafNormalized);
  std::cout << "\n" << render_report(report, Format::Human);
}
