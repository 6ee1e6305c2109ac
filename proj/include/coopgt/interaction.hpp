#pragma once

// Weighted Banzhaf interaction indexes and their classical relatives.
//
// For a profile p, the index of a coalition S is the expected discrete
// S-derivative of the game when coalitions form under the product
// distribution; equivalently sum_{T superset S} a(T) prod_{i in T\S} p_i in
// Möbius coordinates. The classical Banzhaf index is the profile-1/2 case,
// the Möbius transform itself is the profile-0 case.

#include <vector>

#include "coopgt/game.hpp"
#include "coopgt/weights.hpp"

namespace coopgt {

// Index values for every coalition under a fixed profile.
class InteractionTable {
 public:
  InteractionTable(ProbabilityProfile profile, std::vector<double> values);

  int n() const { return profile_.n(); }
  std::size_t size() const { return values_.size(); }
  const ProbabilityProfile& profile() const { return profile_; }
  double operator[](Mask m) const { return values_[m]; }
  double at(Coalition s) const;
  const std::vector<double>& values() const { return values_; }

  // Singleton entry for a 1-based player: the weighted Banzhaf power index.
  double power_index(int player) const;

 private:
  ProbabilityProfile profile_;
  std::vector<double> values_;
};

// All 2^n index values in O(n 2^n): Möbius transform of f followed by a
// per-dimension superset accumulation with factors p_i. Accepts boundary
// probabilities; at p = 0 the result is the Möbius transform itself.
InteractionTable weighted_banzhaf_all(const Game& f, const ProbabilityProfile& p);

// Single value as the expected S-derivative:
//   I(S) = sum_{T subset N\S} Pr(T subset C subset S+T) * (d_S f)(T).
// O(|S| 2^n + n 2^{n-|S|}); accepts boundary probabilities.
double weighted_banzhaf(const Game& f, const ProbabilityProfile& p, Coalition s);

// Classical Banzhaf interaction index, computed by its signed vertex sum
//   I(S) = 2^{-(n-|S|)} sum_T (-1)^{|S\T|} f(T);
// equals weighted_banzhaf at the uniform profile 1/2.
double banzhaf(const Game& f, Coalition s);

// Shapley interaction index: sum_{T superset S} a(T) / (|T|-|S|+1).
double shapley_interaction(const Game& f, Coalition s);
// Same with a precomputed Möbius transform (saves the O(n 2^n) transform per query).
double shapley_interaction(const MobiusTransform& a, Coalition s);

// Exact integral of p -> I_p(f,S) over the unit cube of profiles:
// sum_{T superset S} a(T) (1/2)^{|T\S|}. Agrees with banzhaf(f,s).
double banzhaf_center_of_mass(const Game& f, Coalition s);

// Pr(T subset C subset S+T) = prod_{i in T} p_i * prod_{i in (N\S)\T} (1-p_i).
// Requires T and S disjoint. These coefficients are nonnegative and sum to 1
// over T subset N\S.
double probabilistic_coefficient(const ProbabilityProfile& p, Coalition s, Coalition t);

// Recovers the Möbius transform from an index table:
//   a(S) = sum_{T superset S} I(T) prod_{i in T\S} (-p_i).
// Inverse of the map behind weighted_banzhaf_all.
MobiusTransform index_to_mobius(const InteractionTable& table);

// Re-expresses an index table under a new profile without touching the game:
//   I'(S) = sum_{T superset S} I(T) prod_{i in T\S} (p'_i - p_i).
InteractionTable reindex(const InteractionTable& table, const ProbabilityProfile& p_new);

}  // namespace coopgt
