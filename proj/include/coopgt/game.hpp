#pragma once

// Dense coalition-indexed games (pseudo-Boolean functions on {0,1}^n) and the
// subset transforms connecting the vertex table with its multilinear
// coefficients.
//
// Conventions: player i (1-based) maps to bit (i-1); a table of length 2^n is
// indexed by coalition bitmask, so entry m holds the value of the coalition
// {i : bit (i-1) of m is set}. Tables are binary64 and must stay finite.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace coopgt {

// Malformed data (tables, masks, documents).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Probability profile problems: wrong dimension or boundary values where an
// operation needs 0 < p_i < 1.
struct ProfileError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// File system failures.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Mask = std::uint32_t;

// Dense 2^n tables cap the player count; 26 players puts one table at 512 MiB.
inline constexpr int kMaxPlayers = 26;

inline std::size_t table_size(int n) { return std::size_t{1} << n; }

inline Mask full_mask(int n) {
  return static_cast<Mask>((std::uint64_t{1} << n) - 1);
}

// A set of players encoded as a bitmask.
struct Coalition {
  Mask mask = 0;

  int cardinality() const { return std::popcount(mask); }
  bool empty() const { return mask == 0; }
  bool contains(int player) const { return (mask >> (player - 1)) & 1u; }
  bool subset_of(Coalition other) const { return (mask & ~other.mask) == 0; }

  // Sorted 1-based player ids.
  std::vector<int> players() const;

  // Builds a coalition from 1-based ids; rejects ids outside 1..n and duplicates.
  static Coalition of_players(std::span<const int> players, int n);
  static Coalition of_players(std::initializer_list<int> players, int n);

  friend bool operator==(Coalition, Coalition) = default;
};

// A cooperative game / pseudo-Boolean function as its dense vertex table.
class Game {
 public:
  // Zero game on n players.
  explicit Game(int n);
  // Takes ownership of a full 2^n table indexed by coalition mask.
  Game(int n, std::vector<double> values);

  int n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  double operator[](Mask m) const { return values_[m]; }
  double& operator[](Mask m) { return values_[m]; }
  // Bounds-checked lookup.
  double at(Coalition s) const;
  const std::vector<double>& values() const { return values_; }

  // Largest absolute entry; used to scale zero-detection tolerances.
  double max_abs() const;

 private:
  int n_;
  std::vector<double> values_;
};

// Coefficients a(S) of the multilinear form f(x) = sum_S a(S) prod_{i in S} x_i.
class MobiusTransform {
 public:
  explicit MobiusTransform(int n);
  MobiusTransform(int n, std::vector<double> coeffs);

  int n() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }
  double operator[](Mask m) const { return coeffs_[m]; }
  double& operator[](Mask m) { return coeffs_[m]; }
  double at(Coalition s) const;
  const std::vector<double>& coeffs() const { return coeffs_; }

 private:
  int n_;
  std::vector<double> coeffs_;
};

// A point of the unit cube [0,1]^n; argument of the multilinear extension.
class Point {
 public:
  explicit Point(std::vector<double> coords);

  int n() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[i]; }
  const std::vector<double>& coords() const { return coords_; }

 private:
  std::vector<double> coords_;
};

// Multilinear coefficients of f: a(S) = sum_{T subset of S} (-1)^{|S|-|T|} f(T).
// Computed by in-place dimension sweeps in O(n 2^n), not the per-subset sum.
MobiusTransform mobius(const Game& f);

// Inverse of mobius (subset-sum/zeta transform): f(S) = sum_{T subset of S} a(T).
Game from_mobius(const MobiusTransform& a);

// Iterated discrete derivative with respect to the players in s, as a full
// table. The result satisfies (d_S f)(T) = (d_S f)(T \ s) for every T; for
// s = {} it is f itself.
Game s_difference(const Game& f, Coalition s);

// Value of the multilinear extension of f at x. Interpolates the table: at
// 0/1-valued x this reproduces the corresponding entry bit-exactly. O(2^n).
double multilinear_eval(const Game& f, const Point& x);

// Unanimity game u_s: worth 1 on supersets of s, 0 elsewhere.
Game unanimity(int n, Coalition s);

}  // namespace coopgt
