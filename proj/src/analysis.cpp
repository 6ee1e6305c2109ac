#include "coopgt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "coopgt/interaction.hpp"

namespace coopgt {

namespace {

double zero_tolerance(const Game& f, double base) {
  return base * std::max(1.0, f.max_abs());
}

void check_same_n(int expected, int got, const char* what) {
  if (expected != got) {
    throw ProfileError(std::string(what) + " is sized for " + std::to_string(got) +
                       " players, expected " + std::to_string(expected));
  }
}

void check_not_constant(const GameStatistics& st, const Game& f) {
  if (st.stddev() <= 1e-12 * std::max(1.0, f.max_abs())) {
    throw ValidationError("game is constant: normalized indexes are undefined");
  }
}

}  // namespace

double GameStatistics::stddev() const { return std::sqrt(variance); }

bool is_null_player(const Game& f, int player) {
  if (player < 1 || player > f.n()) {
    throw ValidationError("player id " + std::to_string(player) + " is outside 1.." +
                          std::to_string(f.n()));
  }
  const Game d = s_difference(f, Coalition{Mask{1} << (player - 1)});
  const double tol = zero_tolerance(f, 1e-12);
  for (Mask m = 0; m < d.size(); ++m) {
    if (std::abs(d[m]) > tol) return false;
  }
  return true;
}

bool is_dummy_coalition(const Game& f, Coalition s) {
  if (s.mask > full_mask(f.n())) {
    throw ValidationError("coalition mask is out of range");
  }
  const MobiusTransform a = mobius(f);
  const double tol = zero_tolerance(f, 1e-10);
  const Mask comp = full_mask(f.n()) & ~s.mask;
  for (Mask m = 0; m < a.size(); ++m) {
    if (std::abs(a[m]) <= tol) continue;
    if ((m & s.mask) && (m & comp)) return false;
  }
  return true;
}

GameStatistics statistics(const Game& f, const ProbabilityProfile& p) {
  check_same_n(f.n(), p.n(), "profile");
  const Point pt(p.probs());
  const double mean = multilinear_eval(f, pt);
  std::vector<double> sq(f.size());
  for (Mask m = 0; m < f.size(); ++m) sq[m] = f[m] * f[m];
  const double second = multilinear_eval(Game(f.n(), std::move(sq)), pt);
  return GameStatistics{mean, std::max(0.0, second - mean * mean)};
}

double normalized_index(const Game& f, const ProbabilityProfile& p, Coalition s) {
  check_same_n(f.n(), p.n(), "profile");
  if (s.mask > full_mask(f.n())) {
    throw ValidationError("coalition mask is out of range");
  }
  if (s.empty()) {
    throw ValidationError("normalized index is undefined for the empty coalition");
  }
  p.require_strict();
  const GameStatistics st = statistics(f, p);
  check_not_constant(st, f);
  double scale = 1.0;
  for (Mask rest = s.mask; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    scale *= std::sqrt(p[i] * (1.0 - p[i]));
  }
  return weighted_banzhaf(f, p, s) * scale / st.stddev();
}

double r_squared(const Game& f, const ProbabilityProfile& p, int k) {
  check_same_n(f.n(), p.n(), "profile");
  if (k < 0 || k > f.n()) {
    throw ValidationError("degree bound must lie in 0.." + std::to_string(f.n()));
  }
  const GameStatistics st = statistics(f, p);
  check_not_constant(st, f);
  const std::vector<double> ip = basis_inner_products(f, p);
  double acc = 0.0;
  for (Mask m = 0; m < ip.size(); ++m) {
    const int c = std::popcount(m);
    if (c >= 1 && c <= k) acc += ip[m] * ip[m];
  }
  return acc / st.variance;
}

}  // namespace coopgt
