#pragma once

#include "cfgflow/game.hpp"
#include "cfgflow/reduction.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cfgflow {

struct GameEntry {
  Profile profile;
  Rational worth;
};

struct CoalitionEntry {
  Coalition coalition;
  Rational worth;
};

struct Instance {
  int n = 0;
  std::vector<SetSystem> blocks;
  std::vector<GameEntry> game;
  std::vector<CoalitionEntry> coalition_game;
};

/// JSON document:
///   {"n": 5,
///    "blocks": [{"ground": [1,2,3], "feasible": [[], [1], [2,3], [1,2,3]]}, ...],
///    "game": [{"profile": [[1], []], "worth": "1/3"}, ...],
///    "coalition_game": [{"coalition": [1,2], "worth": "1"}, ...]}
/// "game" and "coalition_game" are optional.
///
/// Throws ParseError for malformed JSON and Error with a JSON-pointer path for
/// invalid content.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

ProductDigraph build_instance_product(const Instance& inst, std::size_t size_cap = kDefaultSizeCap);

/// Dense game over pd. Throws MissingWorth for unlisted profiles other than ∅_M.
Game resolve_game(const ProductDigraph& pd, const Instance& inst);
CoalitionGame coalition_worths(const Instance& inst);

}  // namespace cfgflow
