#include "coopgt/interaction.hpp"

#include <bit>
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

void check_mask(int n, Mask m) {
  if (m > full_mask(n)) {
    throw ValidationError("coalition mask " + std::to_string(m) +
                          " is out of range for " + std::to_string(n) + " players");
  }
}

}  // namespace

InteractionTable::InteractionTable(ProbabilityProfile profile, std::vector<double> values)
    : profile_(std::move(profile)), values_(std::move(values)) {
  if (values_.size() != table_size(profile_.n())) {
    throw ValidationError("interaction table must have length 2^n");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw ValidationError("interaction table contains a non-finite entry");
    }
  }
}

double InteractionTable::at(Coalition s) const {
  check_mask(n(), s.mask);
  return values_[s.mask];
}

double InteractionTable::power_index(int player) const {
  if (player < 1 || player > n()) {
    throw ValidationError("player id " + std::to_string(player) + " is outside 1.." +
                          std::to_string(n()));
  }
  return values_[Mask{1} << (player - 1)];
}

InteractionTable weighted_banzhaf_all(const Game& f, const ProbabilityProfile& p) {
  check_same_n(f.n(), p.n(), "profile");
  std::vector<double> t = mobius(f).coeffs();
  // Superset accumulation per dimension: after processing player i the
  // bit-clear slots hold sums over whether i joins, weighted by p_i.
  for (int i = 0; i < f.n(); ++i) {
    const Mask bit = Mask{1} << i;
    const double pi = p[i];
    for (Mask m = 0; m < t.size(); ++m) {
      if (!(m & bit)) t[m] += pi * t[m | bit];
    }
  }
  return InteractionTable(p, std::move(t));
}

double weighted_banzhaf(const Game& f, const ProbabilityProfile& p, Coalition s) {
  check_same_n(f.n(), p.n(), "profile");
  check_mask(f.n(), s.mask);
  const Game diff = s_difference(f, s);
  const Mask comp = full_mask(f.n()) & ~s.mask;
  double acc = 0.0;
  for (Mask t = comp;; t = (t - 1) & comp) {
    // Pr(t subset C subset s+t)
    double coeff = 1.0;
    for (Mask rest = comp; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      coeff *= ((t >> i) & 1u) ? p[i] : 1.0 - p[i];
    }
    acc += coeff * diff[t];
    if (t == 0) break;
  }
  return acc;
}

double banzhaf(const Game& f, Coalition s) {
  check_mask(f.n(), s.mask);
  double acc = 0.0;
  for (Mask t = 0; t < f.size(); ++t) {
    acc += (std::popcount(s.mask & ~t) % 2 == 0) ? f[t] : -f[t];
  }
  return std::ldexp(acc, s.cardinality() - f.n());
}

double shapley_interaction(const MobiusTransform& a, Coalition s) {
  check_mask(a.n(), s.mask);
  const Mask comp = full_mask(a.n()) & ~s.mask;
  double acc = 0.0;
  for (Mask d = comp;; d = (d - 1) & comp) {
    acc += a[s.mask | d] / static_cast<double>(std::popcount(d) + 1);
    if (d == 0) break;
  }
  return acc;
}

double shapley_interaction(const Game& f, Coalition s) {
  return shapley_interaction(mobius(f), s);
}

double banzhaf_center_of_mass(const Game& f, Coalition s) {
  check_mask(f.n(), s.mask);
  const MobiusTransform a = mobius(f);
  const Mask comp = full_mask(f.n()) & ~s.mask;
  double acc = 0.0;
  for (Mask d = comp;; d = (d - 1) & comp) {
    acc += std::ldexp(a[s.mask | d], -std::popcount(d));
    if (d == 0) break;
  }
  return acc;
}

double probabilistic_coefficient(const ProbabilityProfile& p, Coalition s, Coalition t) {
  check_mask(p.n(), s.mask);
  check_mask(p.n(), t.mask);
  if (t.mask & s.mask) {
    throw ValidationError("coalition T must be disjoint from S");
  }
  const Mask comp = full_mask(p.n()) & ~s.mask;
  double coeff = 1.0;
  for (Mask rest = comp; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    coeff *= ((t.mask >> i) & 1u) ? p[i] : 1.0 - p[i];
  }
  return coeff;
}

MobiusTransform index_to_mobius(const InteractionTable& table) {
  std::vector<double> t = table.values();
  const ProbabilityProfile& p = table.profile();
  for (int i = 0; i < table.n(); ++i) {
    const Mask bit = Mask{1} << i;
    const double pi = p[i];
    for (Mask m = 0; m < t.size(); ++m) {
      if (!(m & bit)) t[m] -= pi * t[m | bit];
    }
  }
  return MobiusTransform(table.n(), std::move(t));
}

InteractionTable reindex(const InteractionTable& table, const ProbabilityProfile& p_new) {
  check_same_n(table.n(), p_new.n(), "new profile");
  std::vector<double> t = table.values();
  const ProbabilityProfile& p = table.profile();
  for (int i = 0; i < table.n(); ++i) {
    const Mask bit = Mask{1} << i;
    const double shift = p_new[i] - p[i];
    for (Mask m = 0; m < t.size(); ++m) {
      if (!(m & bit)) t[m] += shift * t[m | bit];
    }
  }
  return InteractionTable(p_new, std::move(t));
}

}  // namespace coopgt
