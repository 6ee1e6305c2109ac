#pragma once

// Structural diagnostics (null players, dummy coalitions) and normalized,
// correlation-style interaction measures.

#include "coopgt/game.hpp"
#include "coopgt/weights.hpp"

namespace coopgt {

// First two moments of f seen as a random variable on coalitions drawn from
// the product distribution.
struct GameStatistics {
  double mean = 0.0;      // E_w[f]
  double variance = 0.0;  // E_w[f^2] - E_w[f]^2, clamped at 0
  double stddev() const;
};

// True when player's marginal contribution vanishes in every coalition, i.e.
// the single-player derivative is the zero table (|.| <= 1e-12 scaled by
// max(1, ||f||_inf)).
bool is_null_player(const Game& f, int player);

// True when f splits additively across s and its complement. Detected through
// the Möbius support: no coefficient above tolerance (1e-10 scaled) may meet
// both s and N\s. A coalition and its complement are always dummy together.
bool is_dummy_coalition(const Game& f, Coalition s);

GameStatistics statistics(const Game& f, const ProbabilityProfile& p);

// Pearson correlation between f and the basis element v_s; lies in [-1,1] and
// is invariant under positive affine rescaling of f. Requires a nonempty s,
// a strict profile, and a non-constant game.
double normalized_index(const Game& f, const ProbabilityProfile& p, Coalition s);

// Coefficient of determination of the best degree-k approximation: the
// fraction of the variance of f captured by it, computed as the squared-
// correlation sum over coalitions of order 1..k. Nondecreasing in k, 0 at
// k = 0, 1 at k = n. Requires a strict profile and a non-constant game.
double r_squared(const Game& f, const ProbabilityProfile& p, int k);

}  // namespace coopgt
