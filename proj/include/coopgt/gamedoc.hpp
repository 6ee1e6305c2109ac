#pragma once

// JSON game files and probability-profile specs used by the command-line
// tools.
//
// A game file is a UTF-8 JSON object with fields:
//   n       required,  integer player count, 1..26
//   name    optional,  string label
//   values  dense form: array of 2^n reals, index = coalition bitmask with
//           bit (i-1) = player i
//   mobius  sparse form: array of {"players": [1-based ids], "coeff": real}
// Exactly one of "values"/"mobius" must be present.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "coopgt/game.hpp"
#include "coopgt/weights.hpp"

namespace coopgt {

struct GameDocument {
  Game game;
  std::optional<std::string> name;
  bool from_mobius_rep = false;
};

GameDocument parse_game_document(const std::string& json_text);
GameDocument load_game_document(const std::filesystem::path& path);

// Serializes Möbius-style coefficients for masks of popcount <= max_order,
// mask-ascending, one entry per coalition including zeros.
std::string format_mobius_document(int n, const std::vector<double>& coeffs,
                                   int max_order,
                                   const std::optional<std::string>& name);

// Either a single probability (uniform profile) or n comma-separated values.
ProbabilityProfile parse_profile_spec(const std::string& spec, int n);

// 17-significant-digit decimal form; round-trips to the same binary64.
std::string format_real(double v);

}  // namespace coopgt
