#pragma once

// Product coalition-formation distributions: each player i joins a random
// coalition independently with probability p_i. The induced weight w(S) is the
// probability that exactly S forms, and <f,g> = sum_S w(S) f(S) g(S) is the
// matching inner product on games.

#include <vector>

#include "coopgt/game.hpp"

namespace coopgt {

// Probabilities within this margin of 0 or 1 are rejected by operations that
// divide by sqrt(p_i (1 - p_i)).
inline constexpr double kStrictMargin = 1e-12;

// Per-player membership probabilities p_i = Pr(C contains i), each in [0,1].
class ProbabilityProfile {
 public:
  explicit ProbabilityProfile(std::vector<double> p);
  static ProbabilityProfile uniform(int n, double p);

  int n() const { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_[i]; }  // 0-based player index
  const std::vector<double>& probs() const { return p_; }

  bool is_strict(double margin = kStrictMargin) const;
  // Throws ProfileError naming the first offending 1-based player.
  void require_strict(double margin = kStrictMargin) const;

  friend bool operator==(const ProbabilityProfile&, const ProbabilityProfile&) = default;

 private:
  std::vector<double> p_;
};

// Coalition-formation probabilities
//   w(S) = prod_{i in S} p_i * prod_{i not in S} (1 - p_i),
// nonnegative and summing to 1.
class WeightTable {
 public:
  WeightTable(int n, std::vector<double> w);

  int n() const { return n_; }
  std::size_t size() const { return w_.size(); }
  double operator[](Mask m) const { return w_[m]; }
  const std::vector<double>& values() const { return w_; }

 private:
  int n_;
  std::vector<double> w_;
};

// Materializes the full 2^n weight table by dimension-wise mixing.
WeightTable weights(const ProbabilityProfile& p);

// <f,g> = sum_S w(S) f(S) g(S); symmetric and bilinear.
double inner_product(const Game& f, const Game& g, const WeightTable& w);

// Orthonormal basis element evaluated at every vertex:
//   v_s(x) = prod_{i in s} (x_i - p_i) / sqrt(p_i (1 - p_i)).
// Strict profile only.
Game basis_v(int n, Coalition s, const ProbabilityProfile& p);

// All inner products <f, v_T> at once, indexed by the mask of T; one weighted
// dimension sweep, O(n 2^n). Strict profile only.
std::vector<double> basis_inner_products(const Game& f, const ProbabilityProfile& p);

}  // namespace coopgt
