#include "coopgt/game.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace coopgt {

namespace {

void check_player_count(int n) {
  if (n < 1 || n > kMaxPlayers) {
    throw ValidationError("player count must be between 1 and " +
                          std::to_string(kMaxPlayers) + ", got " + std::to_string(n));
  }
}

void check_table(int n, const std::vector<double>& table, const char* what) {
  if (table.size() != table_size(n)) {
    throw ValidationError(std::string(what) + " table must have length 2^n = " +
                          std::to_string(table_size(n)) + ", got " +
                          std::to_string(table.size()));
  }
  for (double v : table) {
    if (!std::isfinite(v)) {
      throw ValidationError(std::string(what) + " table contains a non-finite entry");
    }
  }
}

void check_mask(int n, Mask m, const char* what) {
  if (m > full_mask(n)) {
    throw ValidationError(std::string(what) + " mask " + std::to_string(m) +
                          " is out of range for " + std::to_string(n) + " players");
  }
}

}  // namespace

std::vector<int> Coalition::players() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  for (Mask rest = mask; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

Coalition Coalition::of_players(std::span<const int> players, int n) {
  check_player_count(n);
  Mask m = 0;
  for (int id : players) {
    if (id < 1 || id > n) {
      throw ValidationError("player id " + std::to_string(id) + " is outside 1.." +
                            std::to_string(n));
    }
    const Mask bit = Mask{1} << (id - 1);
    if (m & bit) {
      throw ValidationError("duplicate player id " + std::to_string(id));
    }
    m |= bit;
  }
  return Coalition{m};
}

Coalition Coalition::of_players(std::initializer_list<int> players, int n) {
  return of_players(std::span<const int>(players.begin(), players.size()), n);
}

Game::Game(int n) : n_(n) {
  check_player_count(n);
  values_.assign(table_size(n), 0.0);
}

Game::Game(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
  check_player_count(n);
  check_table(n, values_, "game");
}

double Game::at(Coalition s) const {
  check_mask(n_, s.mask, "coalition");
  return values_[s.mask];
}

double Game::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

MobiusTransform::MobiusTransform(int n) : n_(n) {
  check_player_count(n);
  coeffs_.assign(table_size(n), 0.0);
}

MobiusTransform::MobiusTransform(int n, std::vector<double> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  check_player_count(n);
  check_table(n, coeffs_, "coefficient");
}

double MobiusTransform::at(Coalition s) const {
  check_mask(n_, s.mask, "coalition");
  return coeffs_[s.mask];
}

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty() || coords_.size() > static_cast<std::size_t>(kMaxPlayers)) {
    throw ValidationError("point must have between 1 and " +
                          std::to_string(kMaxPlayers) + " coordinates");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!std::isfinite(coords_[i]) || coords_[i] < 0.0 || coords_[i] > 1.0) {
      throw ValidationError("coordinate " + std::to_string(i + 1) +
                            " must lie in [0,1]");
    }
  }
}

MobiusTransform mobius(const Game& f) {
  std::vector<double> a = f.values();
  const std::size_t size = a.size();
  for (int i = 0; i < f.n(); ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < size; ++m) {
      if (m & bit) a[m] -= a[m ^ bit];
    }
  }
  return MobiusTransform(f.n(), std::move(a));
}

Game from_mobius(const MobiusTransform& a) {
  std::vector<double> v = a.coeffs();
  const std::size_t size = v.size();
  for (int i = 0; i < a.n(); ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < size; ++m) {
      if (m & bit) v[m] += v[m ^ bit];
    }
  }
  return Game(a.n(), std::move(v));
}

Game s_difference(const Game& f, Coalition s) {
  check_mask(f.n(), s.mask, "coalition");
  Game out = f;
  for (int i = 0; i < f.n(); ++i) {
    if (!((s.mask >> i) & 1u)) continue;
    const Mask bit = Mask{1} << i;
    for (Mask m = 0; m < out.size(); ++m) {
      if (m & bit) continue;
      // Pairwise difference written to both halves: the result does not
      // depend on the bits of s.
      const double d = out[m | bit] - out[m];
      out[m] = d;
      out[m | bit] = d;
    }
  }
  return out;
}

double multilinear_eval(const Game& f, const Point& x) {
  if (x.n() != f.n()) {
    throw ValidationError("point has " + std::to_string(x.n()) +
                          " coordinates but the game has " + std::to_string(f.n()) +
                          " players");
  }
  // Interpolate one dimension at a time, folding the table in half.
  std::vector<double> acc = f.values();
  for (int i = f.n() - 1; i >= 0; --i) {
    const std::size_t half = std::size_t{1} << i;
    const double xi = x[i];
    for (std::size_t m = 0; m < half; ++m) {
      acc[m] = (1.0 - xi) * acc[m] + xi * acc[m + half];
    }
  }
  return acc[0];
}

Game unanimity(int n, Coalition s) {
  check_player_count(n);
  check_mask(n, s.mask, "coalition");
  Game g(n);
  for (Mask m = 0; m < g.size(); ++m) {
    g[m] = (m & s.mask) == s.mask ? 1.0 : 0.0;
  }
  return g;
}

}  // namespace coopgt
