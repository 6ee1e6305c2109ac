#include "coopgt/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <utility>

#include "coopgt/analysis.hpp"
#include "coopgt/approximation.hpp"
#include "coopgt/interaction.hpp"
#include "coopgt/rng.hpp"

namespace coopgt {

namespace {

double scale_of(const Game& f) { return std::max(1.0, f.max_abs()); }

// Reference (slow) formulas the fast paths are checked against.

// Per-subset alternating sum, O(3^n) overall.
std::vector<double> naive_mobius(const Game& f) {
  std::vector<double> a(f.size(), 0.0);
  for (Mask s = 0; s < f.size(); ++s) {
    const int cs = std::popcount(s);
    double acc = 0.0;
    for (Mask t = s;; t = (t - 1) & s) {
      acc += ((cs - std::popcount(t)) % 2 == 0) ? f[t] : -f[t];
      if (t == 0) break;
    }
    a[s] = acc;
  }
  return a;
}

// Signed vertex sum: sum_T (-1)^{|S\T|} f(T) prod_{i in T\S} p_i prod_{i notin T+S} (1-p_i).
double index_signed_sum(const Game& f, const ProbabilityProfile& p, Mask s) {
  const Mask full = full_mask(f.n());
  double acc = 0.0;
  for (Mask t = 0; t < f.size(); ++t) {
    double term = (std::popcount(s & ~t) % 2 == 0) ? f[t] : -f[t];
    for (Mask rest = full & ~s; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      term *= ((t >> i) & 1u) ? p[i] : 1.0 - p[i];
    }
    acc += term;
  }
  return acc;
}

// Inner-product form: <f, v_s> / prod_{i in s} sqrt(p_i(1-p_i)), expanded as a
// plain weighted vertex sum.
double index_inner_product(const Game& f, const ProbabilityProfile& p, Mask s) {
  double acc = 0.0;
  for (Mask x = 0; x < f.size(); ++x) {
    double term = f[x];
    for (int i = 0; i < f.n(); ++i) {
      const bool member = (x >> i) & 1u;
      term *= member ? p[i] : 1.0 - p[i];
      if ((s >> i) & 1u) term *= (member ? 1.0 : 0.0) - p[i];
    }
    acc += term;
  }
  double denom = 1.0;
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    denom *= p[i] * (1.0 - p[i]);
  }
  return acc / denom;
}

// Expected S-derivative: sum_T w(T) (d_S f)(T) over all coalitions T.
double index_expected_difference(const Game& f, const ProbabilityProfile& p, Mask s) {
  const Game diff = s_difference(f, Coalition{s});
  double acc = 0.0;
  for (Mask t = 0; t < f.size(); ++t) {
    double w = 1.0;
    for (int i = 0; i < f.n(); ++i) {
      w *= ((t >> i) & 1u) ? p[i] : 1.0 - p[i];
    }
    acc += w * diff[t];
  }
  return acc;
}

// f rebuilt from its index table: f(x) = sum_T I(T) prod_{i in T} (x_i - p_i),
// evaluated at every vertex by a dimension sweep.
Game reconstruct_from_index(const InteractionTable& table) {
  std::vector<double> t = table.values();
  const ProbabilityProfile& p = table.profile();
  for (int i = 0; i < table.n(); ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask m = 0; m < t.size(); ++m) {
      if (m & bit) continue;
      const double g0 = t[m];
      const double g1 = t[m | bit];
      t[m] = g0 - p[i] * g1;
      t[m | bit] = g0 + (1.0 - p[i]) * g1;
    }
  }
  return Game(table.n(), std::move(t));
}

Game random_game(SplitMix64& rng, int n) {
  std::vector<double> v(table_size(n));
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  return Game(n, std::move(v));
}

ProbabilityProfile random_profile(SplitMix64& rng, int n) {
  std::vector<double> p(static_cast<std::size_t>(n));
  for (double& x : p) x = rng.uniform(0.05, 0.95);
  return ProbabilityProfile(std::move(p));
}

// Relabels players: the Möbius coefficient of T moves to the image of T.
Game permute_game(const Game& f, const std::vector<int>& perm) {
  const MobiusTransform a = mobius(f);
  std::vector<double> b(a.size(), 0.0);
  for (Mask t = 0; t < a.size(); ++t) {
    Mask image = 0;
    for (Mask rest = t; rest != 0; rest &= rest - 1) {
      image |= Mask{1} << perm[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    b[image] = a[t];
  }
  return from_mobius(MobiusTransform(f.n(), std::move(b)));
}

Mask permute_mask(Mask s, const std::vector<int>& perm) {
  Mask image = 0;
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    image |= Mask{1} << perm[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return image;
}

std::vector<Mask> sample_masks(SplitMix64& rng, int n, int cap_all, int samples) {
  std::vector<Mask> out;
  if (n <= cap_all) {
    out.resize(table_size(n));
    std::iota(out.begin(), out.end(), Mask{0});
  } else {
    out.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
      out.push_back(static_cast<Mask>(rng.next() & full_mask(n)));
    }
  }
  return out;
}

struct Case {
  Game game;
  ProbabilityProfile profile;
  ProbabilityProfile alt_profile;
};

class Runner {
 public:
  Runner(VerifyReport& report, int n) : report_(report), n_(n) {}

  // Runs `body` unless the player count exceeds `max_n`; `body` returns the
  // worst error already normalized by the per-game scale.
  void check(const std::string& id, double tolerance, int max_n,
             const std::function<double()>& body) {
    CheckResult r;
    r.id = id;
    r.tolerance = tolerance;
    if (n_ > max_n) {
      r.status = CheckStatus::skipped;
      r.max_error = std::numeric_limits<double>::quiet_NaN();
    } else {
      r.max_error = body();
      r.status = r.max_error <= tolerance ? CheckStatus::pass : CheckStatus::fail;
    }
    report_.checks.push_back(std::move(r));
  }

 private:
  VerifyReport& report_;
  int n_;
};

}  // namespace

bool VerifyReport::passed() const {
  for (const CheckResult& c : checks) {
    if (c.status == CheckStatus::fail) return false;
  }
  return true;
}

VerifyReport run_verification(const Game& f, const ProbabilityProfile& p,
                              const VerifyOptions& options) {
  if (p.n() != f.n()) {
    throw ProfileError("profile is sized for " + std::to_string(p.n()) +
                       " players, expected " + std::to_string(f.n()));
  }
  p.require_strict();
  const int n = f.n();
  const Mask full = full_mask(n);

  SplitMix64 rng(options.seed);
  std::vector<Case> cases;
  cases.push_back(Case{f, p, random_profile(rng, n)});
  for (int i = 0; i < options.random_games; ++i) {
    Game g = random_game(rng, n);
    ProbabilityProfile q = random_profile(rng, n);
    cases.push_back(Case{std::move(g), std::move(q), random_profile(rng, n)});
  }

  VerifyReport report;
  Runner run(report, n);

  run.check("mobius-roundtrip", 1e-10, kMaxPlayers, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const double scale = scale_of(c.game);
      const MobiusTransform a = mobius(c.game);
      const Game back = from_mobius(a);
      const MobiusTransform a2 = mobius(back);
      for (Mask m = 0; m < back.size(); ++m) {
        err = std::max(err, std::abs(back[m] - c.game[m]) / scale);
        err = std::max(err, std::abs(a2[m] - a[m]) / scale);
      }
    }
    return err;
  });

  run.check("mobius-naive-agreement", 1e-10, 10, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const double scale = scale_of(c.game);
      const MobiusTransform a = mobius(c.game);
      const std::vector<double> ref = naive_mobius(c.game);
      for (Mask m = 0; m < a.size(); ++m) {
        err = std::max(err, std::abs(a[m] - ref[m]) / scale);
      }
    }
    return err;
  });

  run.check("vertex-interpolation", 0.0, 20, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const std::vector<Mask> masks = sample_masks(rng, n, 8, 64);
      for (Mask m : masks) {
        std::vector<double> x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = (m >> i) & 1u;
        err = std::max(err, std::abs(multilinear_eval(c.game, Point(x)) - c.game[m]));
      }
    }
    return err;
  });

  run.check("difference-shift-invariance", 0.0, 8, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      for (Mask s = 1; s <= full; ++s) {
        const Game d = s_difference(c.game, Coalition{s});
        for (Mask t = 0; t < d.size(); ++t) {
          err = std::max(err, std::abs(d[t] - d[t & ~s]));
        }
      }
    }
    return err;
  });

  run.check("difference-commutation", 0.0, 12, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const Coalition ci{Mask{1} << (i - 1)};
          const Coalition cj{Mask{1} << (j - 1)};
          const Game ij = s_difference(s_difference(c.game, ci), cj);
          const Game ji = s_difference(s_difference(c.game, cj), ci);
          for (Mask m = 0; m < ij.size(); ++m) {
            err = std::max(err, std::abs(ij[m] - ji[m]));
          }
        }
      }
    }
    return err;
  });

  run.check("weight-normalization", 1e-12, 20, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const WeightTable w = weights(c.profile);
      double sum = 0.0;
      for (Mask m = 0; m < w.size(); ++m) sum += w[m];
      err = std::max(err, std::abs(sum - 1.0));
    }
    return err;
  });

  run.check("weight-marginals", 1e-12, 20, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const WeightTable w = weights(c.profile);
      for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (Mask m = 0; m < w.size(); ++m) {
          if ((m >> i) & 1u) sum += w[m];
        }
        err = std::max(err, std::abs(sum - c.profile[i]));
      }
    }
    return err;
  });

  run.check("basis-orthonormality", 1e-10, 8, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const WeightTable w = weights(c.profile);
      std::vector<Game> basis;
      basis.reserve(table_size(n));
      for (Mask s = 0; s <= full; ++s) basis.push_back(basis_v(n, Coalition{s}, c.profile));
      for (Mask s = 0; s <= full; ++s) {
        for (Mask t = s; t <= full; ++t) {
          const double ip = inner_product(basis[s], basis[t], w);
          err = std::max(err, std::abs(ip - (s == t ? 1.0 : 0.0)));
        }
      }
    }
    return err;
  });

  run.check("expectation-identity", 1e-10, 16, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const double scale = scale_of(c.game);
      const double mean = multilinear_eval(c.game, Point(c.profile.probs()));
      const double ip = inner_product(c.game, unanimity(n, Coalition{0}), weights(c.profile));
      const double tab = weighted_banzhaf_all(c.game, c.profile)[0];
      const double single = weighted_banzhaf(c.game, c.profile, Coalition{0});
      err = std::max(err, std::abs(mean - ip) / scale);
      err = std::max(err, std::abs(mean - tab) / scale);
      err = std::max(err, std::abs(mean - single) / scale);
    }
    return err;
  });

  run.check("index-four-form-agreement", 1e-9, 8, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const double scale = scale_of(c.game);
      const InteractionTable table = weighted_banzhaf_all(c.game, c.profile);
      for (Mask s : sample_masks(rng, n, 6, 25)) {
        const double forms[4] = {
            table[s],
            weighted_banzhaf(c.game, c.profile, Coalition{s}),
            index_signed_sum(c.game, c.profile, s),
            index_inner_product(c.game, c.profile, s),
        };
        const double diff_sum = index_expected_difference(c.game, c.profile, s);
        for (double v : forms) {
          err = std::max(err, std::abs(v - diff_sum) / scale);
          for (double u : forms) err = std::max(err, std::abs(v - u) / scale);
        }
      }
    }
    return err;
  });

  run.check("derivative-agreement", 1e-5, 12, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const double scale = scale_of(c.game);
      // Central differences of the multilinear extension; exact for any step
      // because the extension is affine in each coordinate.
      for (Mask s : sample_masks(rng, n, 3, 8)) {
        if (std::popcount(s) > 3) continue;
        bool usable = true;
        for (Mask rest = s; rest != 0; rest &= rest - 1) {
          const double pi = c.profile[std::countr_zero(rest)];
          if (pi < 0.01 || pi > 0.99) usable = false;
        }
        if (!usable) continue;
        std::vector<int> members;
        for (Mask rest = s; rest != 0; rest &= rest - 1) {
          members.push_back(std::countr_zero(rest));
        }
        const double h = 1e-3;
        double estimate = 0.0;
        const int corners = 1 << members.size();
        for (int corner = 0; corner < corners; ++corner) {
          std::vector<double> x = c.profile.probs();
          int sign = 1;
          for (std::size_t j = 0; j < members.size(); ++j) {
            if ((corner >> j) & 1) {
              x[static_cast<std::size_t>(members[j])] += h;
            } else {
              x[static_cast<std::size_t>(members[j])] -= h;
              sign = -sign;
            }
          }
          estimate += sign * multilinear_eval(c.game, Point(x));
        }
        for (std::size_t j = 0; j < members.size(); ++j) estimate /= 2.0 * h;
        const double exact = weighted_banzhaf(c.game, c.profile, Coalition{s});
        err = std::max(err, std::abs(estimate - exact) / scale);
      }
    }
    return err;
  });

  run.check("index-linearity", 1e-10, 20, [&] {
    double err = 0.0;
    for (std::size_t j = 0; j + 1 < cases.size(); ++j) {
      const Game& g1 = cases[j].game;
      const Game& g2 = cases[j + 1].game;
      const ProbabilityProfile& q = cases[j].profile;
      const double alpha = rng.uniform(-2.0, 2.0);
      const double beta = rng.uniform(-2.0, 2.0);
      std::vector<double> combo(g1.size());
      for (Mask m = 0; m < g1.size(); ++m) combo[m] = alpha * g1[m] + beta * g2[m];
      const Game g(n, std::move(combo));
      const double scale = scale_of(g);
      const InteractionTable lhs = weighted_banzhaf_all(g, q);
      const InteractionTable i1 = weighted_banzhaf_all(g1, q);
      const InteractionTable i2 = weighted_banzhaf_all(g2, q);
      for (Mask m = 0; m < lhs.size(); ++m) {
        err = std::max(err, std::abs(lhs[m] - (alpha * i1[m] + beta * i2[m])) / scale);
      }
    }
    return err;
  });

  run.check("index-monotonicity", 1e-12, 20, [&] {
    // Games with nonnegative Möbius coefficients have nonnegative
    // S-derivatives everywhere, so every index value must be nonnegative.
    double err = 0.0;
    for (const Case& c : cases) {
      std::vector<double> coeffs(table_size(n));
      for (double& x : coeffs) x = rng.uniform01();
      const Game g = from_mobius(MobiusTransform(n, std::move(coeffs)));
      const InteractionTable table = weighted_banzhaf_all(g, c.profile);
      for (Mask m = 0; m < table.size(); ++m) {
        err = std::max(err, std::max(0.0, -table[m]) / scale_of(g));
      }
    }
    return err;
  });

  run.check("index-symmetry", 1e-10, 10, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const double scale = scale_of(c.game);
      const ProbabilityProfile sym =
          ProbabilityProfile::uniform(n, rng.uniform(0.1, 0.9));
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      for (int i = n - 1; i > 0; --i) {
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[static_cast<std::size_t>(rng.uniform_int(0, i))]);
      }
      const Game pf = permute_game(c.game, perm);
      const InteractionTable base = weighted_banzhaf_all(c.game, sym);
      const InteractionTable permuted = weighted_banzhaf_all(pf, sym);
      for (Mask s = 0; s <= full; ++s) {
        err = std::max(err, std::abs(permuted[permute_mask(s, perm)] - base[s]) / scale);
      }
    }
    return err;
  });

  run.check("symmetry-witness", 1e-12, kMaxPlayers, [&] {
    if (n < 2) return 0.0;
    double err = 0.0;
    for (const Case& c : cases) {
      const int i = rng.uniform_int(1, n);
      int j = rng.uniform_int(1, n - 1);
      if (j >= i) ++j;
      const Coalition pair = Coalition::of_players({i, j}, n);
      const Game u = unanimity(n, pair);
      const double at_j =
          weighted_banzhaf(u, c.profile, Coalition::of_players({j}, n));
      const double at_i =
          weighted_banzhaf(u, c.profile, Coalition::of_players({i}, n));
      err = std::max(err, std::abs(at_j - c.profile[i - 1]));
      err = std::max(err, std::abs(at_i - c.profile[j - 1]));
    }
    return err;
  });

  run.check("null-player-zeroing", 1e-10, 16, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const int player = rng.uniform_int(1, n);
      const Mask bit = Mask{1} << (player - 1);
      MobiusTransform a = mobius(c.game);
      for (Mask m = 0; m < a.size(); ++m) {
        if (m & bit) a[m] = 0.0;
      }
      const Game g = from_mobius(a);
      if (!is_null_player(g, player)) return 1.0;
      const InteractionTable table = weighted_banzhaf_all(g, c.profile);
      for (Mask s = 0; s <= full; ++s) {
        if (s & bit) err = std::max(err, std::abs(table[s]) / scale_of(g));
      }
    }
    return err;
  });

  run.check("dummy-coalition-zeroing", 1e-10, 16, [&] {
    if (n < 2) return 0.0;
    double err = 0.0;
    for (const Case& c : cases) {
      const Mask s = static_cast<Mask>(rng.uniform_int(1, static_cast<int>(full) - 1));
      const Mask comp = full & ~s;
      MobiusTransform a = mobius(c.game);
      for (Mask m = 0; m < a.size(); ++m) {
        if ((m & s) && (m & comp)) a[m] = 0.0;
      }
      const Game g = from_mobius(a);
      if (!is_dummy_coalition(g, Coalition{s})) return 1.0;
      if (!is_dummy_coalition(g, Coalition{comp})) return 1.0;
      const InteractionTable table = weighted_banzhaf_all(g, c.profile);
      for (Mask k = 0; k <= full; ++k) {
        if ((k & s) && (k & comp)) err = std::max(err, std::abs(table[k]) / scale_of(g));
      }
    }
    return err;
  });

  run.check("dummy-defining-identity", 0.0, 6, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const double tol = 1e-10 * scale_of(c.game);
      for (Mask s = 0; s <= full; ++s) {
        const Mask comp = full & ~s;
        bool holds = true;
        for (Mask r = s; holds; r = (r - 1) & s) {
          for (Mask t = comp;; t = (t - 1) & comp) {
            if (std::abs(c.game[r | t] - c.game[r] - c.game[t] + c.game[0]) > tol) {
              holds = false;
              break;
            }
            if (t == 0) break;
          }
          if (r == 0) break;
        }
        if (holds != is_dummy_coalition(c.game, Coalition{s})) err = 1.0;
      }
    }
    return err;
  });

  run.check("interaction-bijection", 1e-9, 20, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const Game back = reconstruct_from_index(weighted_banzhaf_all(c.game, c.profile));
      for (Mask m = 0; m < back.size(); ++m) {
        err = std::max(err, std::abs(back[m] - c.game[m]) / scale_of(c.game));
      }
    }
    return err;
  });

  run.check("index-mobius-inversion", 1e-9, 20, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const MobiusTransform a = mobius(c.game);
      const MobiusTransform b =
          index_to_mobius(weighted_banzhaf_all(c.game, c.profile));
      for (Mask m = 0; m < a.size(); ++m) {
        err = std::max(err, std::abs(a[m] - b[m]) / scale_of(c.game));
      }
    }
    return err;
  });

  run.check("reindex-roundtrip", 1e-9, 20, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const InteractionTable table = weighted_banzhaf_all(c.game, c.profile);
      const InteractionTable back = reindex(reindex(table, c.alt_profile), c.profile);
      for (Mask m = 0; m < table.size(); ++m) {
        err = std::max(err, std::abs(back[m] - table[m]) / scale_of(c.game));
      }
    }
    return err;
  });

  run.check("reindex-recompute-agreement", 1e-9, 20, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const InteractionTable moved =
          reindex(weighted_banzhaf_all(c.game, c.profile), c.alt_profile);
      const InteractionTable direct = weighted_banzhaf_all(c.game, c.alt_profile);
      for (Mask m = 0; m < moved.size(); ++m) {
        err = std::max(err, std::abs(moved[m] - direct[m]) / scale_of(c.game));
      }
    }
    return err;
  });

  run.check("probabilistic-coefficients", 1e-12, 10, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const WeightTable w = weights(c.profile);
      for (Mask s = 0; s <= full; ++s) {
        const Mask comp = full & ~s;
        double prob_s = 1.0;
        for (Mask rest = s; rest != 0; rest &= rest - 1) {
          prob_s *= c.profile[std::countr_zero(rest)];
        }
        double sum = 0.0;
        for (Mask t = comp;; t = (t - 1) & comp) {
          const double coeff =
              probabilistic_coefficient(c.profile, Coalition{s}, Coalition{t});
          sum += coeff;
          // Conditional form: p_T^S * Pr(C contains S) = Pr(C = S+T).
          err = std::max(err, std::abs(coeff * prob_s - w[s | t]));
          if (t == 0) break;
        }
        err = std::max(err, std::abs(sum - 1.0));
      }
    }
    return err;
  });

  run.check("projection-orthogonality", 1e-9, 8, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const double scale = scale_of(c.game);
      const WeightTable w = weights(c.profile);
      for (int k = 0; k <= n; ++k) {
        const Game fk = to_game(best_approximation(c.game, c.profile, k));
        std::vector<double> resid(c.game.size());
        for (Mask m = 0; m < c.game.size(); ++m) resid[m] = c.game[m] - fk[m];
        const Game r(n, std::move(resid));
        for (Mask s = 0; s <= full; ++s) {
          if (std::popcount(s) > k) continue;
          err = std::max(
              err, std::abs(inner_product(r, basis_v(n, Coalition{s}, c.profile), w)) /
                       scale);
        }
      }
    }
    return err;
  });

  run.check("projection-index-preservation", 1e-9, 10, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const double scale = scale_of(c.game);
      const InteractionTable base = weighted_banzhaf_all(c.game, c.profile);
      for (int k = 0; k <= n; ++k) {
        const Game fk = to_game(best_approximation(c.game, c.profile, k));
        const InteractionTable approx = weighted_banzhaf_all(fk, c.profile);
        for (Mask s = 0; s <= full; ++s) {
          if (std::popcount(s) > k) continue;
          err = std::max(err, std::abs(approx[s] - base[s]) / scale);
        }
      }
    }
    return err;
  });

  run.check("projection-idempotence", 1e-10, 12, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const double scale = scale_of(c.game);
      for (int k = 0; k <= n; ++k) {
        const Approximation once = best_approximation(c.game, c.profile, k);
        const Approximation twice = best_approximation(to_game(once), c.profile, k);
        for (Mask m = 0; m <= full; ++m) {
          err = std::max(err, std::abs(once.coeffs()[m] - twice.coeffs()[m]) / scale);
        }
      }
    }
    return err;
  });

  run.check("approximation-route-agreement", 1e-9, 10, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const double scale = scale_of(c.game);
      const MobiusTransform a = mobius(c.game);
      for (int k = 0; k <= n; ++k) {
        const Approximation fast = best_approximation(c.game, c.profile, k);
        const Approximation closed = approximation_coeffs_via_mobius(a, c.profile, k);
        for (Mask m = 0; m <= full; ++m) {
          err = std::max(err, std::abs(fast.coeffs()[m] - closed.coeffs()[m]) / scale);
        }
      }
    }
    return err;
  });

  run.check("residual-pythagoras", 1e-9, 12, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const double scale = scale_of(c.game);
      const double scale2 = scale * scale;
      const std::vector<double> ip = basis_inner_products(c.game, c.profile);
      double norm2 = 0.0;
      for (double v : ip) norm2 += v * v;
      for (int k = 0; k <= n; ++k) {
        const Approximation approx = best_approximation(c.game, c.profile, k);
        const double resid = residual_norm(c.game, approx, c.profile);
        double captured = 0.0;
        for (Mask m = 0; m <= full; ++m) {
          if (std::popcount(m) <= k) captured += ip[m] * ip[m];
        }
        err = std::max(err, std::abs(resid * resid + captured - norm2) / scale2);
      }
    }
    return err;
  });

  run.check("residual-monotonicity", 1e-12, 12, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      double previous = std::numeric_limits<double>::infinity();
      for (int k = 0; k <= n; ++k) {
        const double resid =
            residual_norm(c.game, best_approximation(c.game, c.profile, k), c.profile);
        err = std::max(err, std::max(0.0, resid - previous) / scale_of(c.game));
        previous = resid;
      }
    }
    return err;
  });

  run.check("variance-decomposition", 1e-9, 12, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const double scale = scale_of(c.game);
      const double scale2 = scale * scale;
      const double total = statistics(c.game, c.profile).variance;
      for (int k = 0; k <= n; ++k) {
        const Approximation approx = best_approximation(c.game, c.profile, k);
        const double part = statistics(to_game(approx), c.profile).variance;
        const double resid = residual_norm(c.game, approx, c.profile);
        err = std::max(err, std::abs(part + resid * resid - total) / scale2);
      }
    }
    return err;
  });

  run.check("mean-preservation", 1e-10, 16, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const double mean = statistics(c.game, c.profile).mean;
      for (int k = 0; k <= n; ++k) {
        const double mk =
            statistics(to_game(best_approximation(c.game, c.profile, k)), c.profile).mean;
        err = std::max(err, std::abs(mk - mean) / scale_of(c.game));
      }
    }
    return err;
  });

  run.check("normalized-index-bounds", 1e-12, 10, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const GameStatistics st = statistics(c.game, c.profile);
      if (st.stddev() <= 1e-12 * scale_of(c.game)) continue;
      for (Mask s : sample_masks(rng, n, 8, 40)) {
        if (s == 0) continue;
        err = std::max(
            err, std::abs(normalized_index(c.game, c.profile, Coalition{s})) - 1.0);
      }
    }
    return std::max(0.0, err);
  });

  run.check("r-squared-consistency", 1e-9, 10, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const GameStatistics st = statistics(c.game, c.profile);
      if (st.stddev() <= 1e-12 * scale_of(c.game)) continue;
      double previous = 0.0;
      for (int k = 0; k <= n; ++k) {
        const double rk = r_squared(c.game, c.profile, k);
        const double ratio =
            statistics(to_game(best_approximation(c.game, c.profile, k)), c.profile)
                .variance /
            st.variance;
        err = std::max(err, std::abs(rk - ratio));
        err = std::max(err, std::max(0.0, previous - rk));
        err = std::max(err, std::max(0.0, -rk));
        err = std::max(err, std::max(0.0, rk - 1.0 - 1e-12));
        previous = rk;
      }
      err = std::max(err, std::abs(r_squared(c.game, c.profile, n) - 1.0));
      err = std::max(err, std::abs(r_squared(c.game, c.profile, 0)));
    }
    return err;
  });

  run.check("statistics-consistency", 1e-12, 16, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const double scale = scale_of(c.game);
      const GameStatistics st = statistics(c.game, c.profile);
      const double second =
          inner_product(c.game, c.game, weights(c.profile));
      err = std::max(err, std::abs(st.variance - (second - st.mean * st.mean)) /
                              (scale * scale));
      err = std::max(err, std::max(0.0, -st.variance));
    }
    return err;
  });

  run.check("center-of-mass-identity", 1e-12, 12, [&] {
    double err = 0.0;
    for (const Case& c : cases) {
      const double scale = scale_of(c.game);
      for (Mask s : sample_masks(rng, n, 8, 30)) {
        err = std::max(err, std::abs(banzhaf_center_of_mass(c.game, Coalition{s}) -
                                     banzhaf(c.game, Coalition{s})) /
                                scale);
      }
    }
    return err;
  });

  return report;
}

}  // namespace coopgt
