#pragma once

// Self-check suite: replays the library's defining identities on a given game
// plus seeded random games and reports the worst observed error per identity.
// Errors are reported relative to max(1, ||f||_inf) of the game under test.

#include <cstdint>
#include <string>
#include <vector>

#include "coopgt/game.hpp"
#include "coopgt/weights.hpp"

namespace coopgt {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::skipped;
  double max_error = 0.0;  // NaN when skipped
  double tolerance = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  // Random games drawn at the input's player count, entries uniform in [-1,1].
  int random_games = 8;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

// Checks whose cost grows faster than n 2^n carry a player-count cap and are
// reported as skipped beyond it. Requires a strict profile.
VerifyReport run_verification(const Game& f, const ProbabilityProfile& p,
                              const VerifyOptions& options = {});

}  // namespace coopgt
