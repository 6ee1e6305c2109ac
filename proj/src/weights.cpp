#include "coopgt/weights.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace coopgt {

namespace {

void check_same_n(int expected, int got, const char* what) {
  if (expected != got) {
    throw ProfileError(std::string(what) + " is sized for " + std::to_string(got) +
                       " players, expected " + std::to_string(expected));
  }
}

}  // namespace

ProbabilityProfile::ProbabilityProfile(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty() || p_.size() > static_cast<std::size_t>(kMaxPlayers)) {
    throw ProfileError("profile must list between 1 and " +
                       std::to_string(kMaxPlayers) + " probabilities");
  }
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!std::isfinite(p_[i]) || p_[i] < 0.0 || p_[i] > 1.0) {
      throw ProfileError("probability for player " + std::to_string(i + 1) +
                         " must lie in [0,1]");
    }
  }
}

ProbabilityProfile ProbabilityProfile::uniform(int n, double p) {
  if (n < 1 || n > kMaxPlayers) {
    throw ProfileError("profile must list between 1 and " +
                       std::to_string(kMaxPlayers) + " probabilities");
  }
  return ProbabilityProfile(std::vector<double>(static_cast<std::size_t>(n), p));
}

bool ProbabilityProfile::is_strict(double margin) const {
  for (double v : p_) {
    if (v <= margin || v >= 1.0 - margin) return false;
  }
  return true;
}

void ProbabilityProfile::require_strict(double margin) const {
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] <= margin || p_[i] >= 1.0 - margin) {
      throw ProfileError("probability for player " + std::to_string(i + 1) +
                         " must lie strictly inside (0,1)");
    }
  }
}

WeightTable::WeightTable(int n, std::vector<double> w) : n_(n), w_(std::move(w)) {
  if (n < 1 || n > kMaxPlayers || w_.size() != table_size(n)) {
    throw ValidationError("weight table must have length 2^n");
  }
}

WeightTable weights(const ProbabilityProfile& p) {
  const int n = p.n();
  std::vector<double> w(table_size(n), 0.0);
  w[0] = 1.0;
  // Double the populated prefix once per player.
  for (int i = 0; i < n; ++i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t m = 0; m < half; ++m) {
      w[m + half] = w[m] * p[i];
      w[m] *= 1.0 - p[i];
    }
  }
  return WeightTable(n, std::move(w));
}

double inner_product(const Game& f, const Game& g, const WeightTable& w) {
  check_same_n(f.n(), g.n(), "second game");
  check_same_n(f.n(), w.n(), "weight table");
  double acc = 0.0;
  for (Mask m = 0; m < f.size(); ++m) {
    acc += w[m] * f[m] * g[m];
  }
  return acc;
}

Game basis_v(int n, Coalition s, const ProbabilityProfile& p) {
  check_same_n(n, p.n(), "profile");
  if (s.mask > full_mask(n)) {
    throw ValidationError("coalition mask is out of range");
  }
  p.require_strict();
  std::vector<double> v(table_size(n), 0.0);
  v[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    const std::size_t half = std::size_t{1} << i;
    double lo = 1.0, hi = 1.0;
    if ((s.mask >> i) & 1u) {
      const double sigma = std::sqrt(p[i] * (1.0 - p[i]));
      lo = -p[i] / sigma;
      hi = (1.0 - p[i]) / sigma;
    }
    for (std::size_t m = 0; m < half; ++m) {
      v[m + half] = v[m] * hi;
      v[m] *= lo;
    }
  }
  return Game(n, std::move(v));
}

std::vector<double> basis_inner_products(const Game& f, const ProbabilityProfile& p) {
  check_same_n(f.n(), p.n(), "profile");
  p.require_strict();
  std::vector<double> t = f.values();
  const std::size_t size = t.size();
  for (int i = 0; i < f.n(); ++i) {
    const std::size_t bit = std::size_t{1} << i;
    const double pi = p[i];
    const double sigma = std::sqrt(pi * (1.0 - pi));
    // Per dimension: the bit-clear slot accumulates the weighted mean, the
    // bit-set slot the sigma-scaled difference.
    for (std::size_t m = 0; m < size; ++m) {
      if (m & bit) continue;
      const double g0 = t[m];
      const double g1 = t[m | bit];
      t[m] = (1.0 - pi) * g0 + pi * g1;
      t[m | bit] = sigma * (g1 - g0);
    }
  }
  return t;
}

}  // namespace coopgt
