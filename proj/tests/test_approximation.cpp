#include <doctest.h>

#include <cmath>

#include "coopgt/analysis.hpp"
#include "coopgt/approximation.hpp"
#include "coopgt/interaction.hpp"
#include "coopgt/rng.hpp"
#include "oracles.hpp"

using namespace coopgt;

TEST_CASE("approximation argument checks") {
  const Game f = oracles::majority_game();
  const ProbabilityProfile p = ProbabilityProfile::uniform(3, 0.5);
  CHECK_THROWS_AS(best_approximation(f, p, -1), ValidationError);
  CHECK_THROWS_AS(best_approximation(f, p, 4), ValidationError);
  CHECK_THROWS_AS(best_approximation(f, ProbabilityProfile({0.0, 0.5, 0.5}), 1),
                  ProfileError);
  CHECK_THROWS_AS(best_approximation(f, ProbabilityProfile::uniform(2, 0.5), 1),
                  ProfileError);
  // the Möbius route accepts boundary profiles
  CHECK_NOTHROW(
      approximation_coeffs_via_mobius(mobius(f), ProbabilityProfile({0.0, 1.0, 0.5}), 1));
}

TEST_CASE("degree-n approximation is the Möbius transform and reproduces f") {
  SplitMix64 rng(31);
  for (int rep = 0; rep < 15; ++rep) {
    const int n = rng.uniform_int(1, 8);
    const Game f = oracles::random_game(rng, n);
    const ProbabilityProfile p = oracles::random_profile(rng, n);
    const Approximation full = best_approximation(f, p, n);
    CHECK(oracles::max_abs_diff(full.coeffs(), mobius(f).coeffs()) <= 1e-10);
    CHECK(oracles::max_abs_diff(to_game(full).values(), f.values()) <= 1e-10);
    for (Mask s = 0; s <= full_mask(n); ++s) {
      CHECK(evaluate(full, Coalition{s}) == doctest::Approx(f[s]).epsilon(1e-10));
    }
  }
}

TEST_CASE("degree-0 approximation is the weighted mean") {
  SplitMix64 rng(32);
  for (int rep = 0; rep < 15; ++rep) {
    const int n = rng.uniform_int(1, 8);
    const Game f = oracles::random_game(rng, n);
    const ProbabilityProfile p = oracles::random_profile(rng, n);
    const Approximation a0 = best_approximation(f, p, 0);
    const double mean = multilinear_eval(f, Point(p.probs()));
    CHECK(a0.coeffs()[0] == doctest::Approx(mean).epsilon(1e-12));
    for (Mask m = 1; m <= full_mask(n); ++m) CHECK(a0.coeffs()[m] == 0.0);
    for (Mask s = 0; s <= full_mask(n); ++s) {
      CHECK(evaluate(a0, Coalition{s}) == doctest::Approx(mean).epsilon(1e-12));
    }
  }
}

TEST_CASE("coefficients match the dense normal-equations solve") {
  SplitMix64 rng(33);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = rng.uniform_int(2, 6);
    const Game f = oracles::random_game(rng, n);
    const ProbabilityProfile p = oracles::random_profile(rng, n, 0.05, 0.95);
    for (int k = 0; k <= n; ++k) {
      const Approximation approx = best_approximation(f, p, k);
      const std::vector<double> ref = oracles::normal_equations_coeffs(f, p, k);
      CHECK(oracles::max_abs_diff(approx.coeffs(), ref) <= 1e-8);
    }
  }
}

TEST_CASE("majority game, uniform profile, degree 1: matches the dense oracle") {
  const Game f = oracles::majority_game();
  const ProbabilityProfile p = ProbabilityProfile::uniform(3, 0.5);
  const Approximation a1 = best_approximation(f, p, 1);
  const std::vector<double> ref = oracles::normal_equations_coeffs(f, p, 1);
  CHECK(oracles::max_abs_diff(a1.coeffs(), ref) <= 1e-12);
  for (Mask s = 0; s < 8; ++s) {
    const double expected = oracles::naive_zeta(ref)[s];
    CHECK(evaluate(a1, Coalition{s}) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("Möbius-route coefficients: reductions and agreement") {
  SplitMix64 rng(34);

  // k = n leaves the Möbius coefficients untouched
  for (int rep = 0; rep < 10; ++rep) {
    const int n = rng.uniform_int(1, 6);
    const Game f = oracles::random_game(rng, n);
    const MobiusTransform a = mobius(f);
    const ProbabilityProfile p = oracles::random_profile(rng, n, 0.0, 1.0);
    const Approximation full = approximation_coeffs_via_mobius(a, p, n);
    CHECK(oracles::max_abs_diff(full.coeffs(), a.coeffs()) == 0.0);
  }

  // agreement with the projection route on strict profiles
  for (int rep = 0; rep < 20; ++rep) {
    const int n = rng.uniform_int(1, 8);
    const Game f = oracles::random_game(rng, n);
    const ProbabilityProfile p = oracles::random_profile(rng, n);
    const MobiusTransform a = mobius(f);
    for (int k = 0; k <= n; ++k) {
      const Approximation fast = best_approximation(f, p, k);
      const Approximation closed = approximation_coeffs_via_mobius(a, p, k);
      CHECK(oracles::max_abs_diff(fast.coeffs(), closed.coeffs()) <= 1e-9);
    }
  }
}

TEST_CASE("uniform profile reduces to the half-power closed form") {
  // a_k(S) = a(S) + (-1)^{k-|S|} sum_{T sup S, |T|>k} C(|T|-|S|-1, k-|S|) (1/2)^{|T|-|S|} a(T)
  SplitMix64 rng(35);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = rng.uniform_int(1, 7);
    const Game f = oracles::random_game(rng, n);
    const MobiusTransform a = mobius(f);
    const ProbabilityProfile half = ProbabilityProfile::uniform(n, 0.5);
    for (int k = 0; k <= n; ++k) {
      const Approximation got = approximation_coeffs_via_mobius(a, half, k);
      for (Mask s = 0; s <= full_mask(n); ++s) {
        const int cs = Coalition{s}.cardinality();
        if (cs > k) {
          CHECK(got.coeffs()[s] == 0.0);
          continue;
        }
        double corr = 0.0;
        for (Mask t = 0; t <= full_mask(n); ++t) {
          if ((t & s) != s) continue;
          const int ct = Coalition{t}.cardinality();
          if (ct <= k) continue;
          corr += oracles::binomial(ct - cs - 1, k - cs) *
                  std::ldexp(a[t], -(ct - cs));
        }
        const double expected = a[s] + ((k - cs) % 2 == 0 ? corr : -corr);
        CHECK(got.coeffs()[s] == doctest::Approx(expected).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("projection characterization and index preservation") {
  SplitMix64 rng(36);
  for (int rep = 0; rep < 15; ++rep) {
    const int n = rng.uniform_int(2, 6);
    const Game f = oracles::random_game(rng, n);
    const ProbabilityProfile p = oracles::random_profile(rng, n, 0.05, 0.95);
    const WeightTable w = weights(p);
    const InteractionTable base = weighted_banzhaf_all(f, p);
    for (int k = 0; k <= n; ++k) {
      const Game fk = to_game(best_approximation(f, p, k));
      std::vector<double> resid(f.size());
      for (Mask m = 0; m < f.size(); ++m) resid[m] = f[m] - fk[m];
      const Game r(n, resid);
      const InteractionTable preserved = weighted_banzhaf_all(fk, p);
      for (Mask s = 0; s <= full_mask(n); ++s) {
        if (Coalition{s}.cardinality() > k) continue;
        CHECK(std::abs(inner_product(r, basis_v(n, Coalition{s}, p), w)) <= 1e-9);
        CHECK(std::abs(preserved[s] - base[s]) <= 1e-9);
      }
    }
  }
}

TEST_CASE("perturbing any coefficient strictly increases the weighted error") {
  SplitMix64 rng(37);
  for (int rep = 0; rep < 8; ++rep) {
    const int n = rng.uniform_int(2, 6);
    const Game f = oracles::random_game(rng, n);
    const ProbabilityProfile p = oracles::random_profile(rng, n, 0.05, 0.95);
    for (int k = 0; k <= n; ++k) {
      const Approximation approx = best_approximation(f, p, k);
      const double best = oracles::weighted_sse(f, p, approx.coeffs());
      for (Mask m = 0; m <= full_mask(n); ++m) {
        if (Coalition{m}.cardinality() > k) continue;
        for (double delta : {1e-3, -1e-3}) {
          std::vector<double> bumped = approx.coeffs();
          bumped[m] += delta;
          CHECK(oracles::weighted_sse(f, p, bumped) > best);
        }
      }
    }
  }
}

TEST_CASE("residual norm: exact cases and oracle agreement") {
  SplitMix64 rng(38);

  // k = n: zero residual
  for (int rep = 0; rep < 5; ++rep) {
    const int n = rng.uniform_int(1, 6);
    const Game f = oracles::random_game(rng, n);
    const ProbabilityProfile p = oracles::random_profile(rng, n);
    CHECK(residual_norm(f, best_approximation(f, p, n), p) <= 1e-9);
  }

  // f = v_S: residual jumps from 1 to 0 at k = |S|
  for (int rep = 0; rep < 5; ++rep) {
    const int n = rng.uniform_int(2, 6);
    const ProbabilityProfile p = oracles::random_profile(rng, n, 0.05, 0.95);
    const Mask s = static_cast<Mask>(rng.next() & full_mask(n));
    const Game vs = basis_v(n, Coalition{s}, p);
    const int cs = Coalition{s}.cardinality();
    for (int k = 0; k <= n; ++k) {
      const double r = residual_norm(vs, best_approximation(vs, p, k), p);
      if (k >= cs) {
        CHECK(r <= 1e-9);
      } else {
        CHECK(r == doctest::Approx(1.0).epsilon(1e-9));
      }
    }
  }

  // random games against the dense solve
  for (int rep = 0; rep < 10; ++rep) {
    const int n = rng.uniform_int(2, 6);
    const Game f = oracles::random_game(rng, n);
    const ProbabilityProfile p = oracles::random_profile(rng, n, 0.05, 0.95);
    for (int k = 0; k <= n; ++k) {
      const double got = residual_norm(f, best_approximation(f, p, k), p);
      const double expected =
          std::sqrt(oracles::weighted_sse(f, p, oracles::normal_equations_coeffs(f, p, k)));
      CHECK(got == doctest::Approx(expected).epsilon(1e-9));
    }
  }

  // mismatched profile is rejected
  const Game f = oracles::majority_game();
  const ProbabilityProfile p = ProbabilityProfile::uniform(3, 0.5);
  const Approximation approx = best_approximation(f, p, 1);
  CHECK_THROWS_AS(residual_norm(f, approx, ProbabilityProfile::uniform(3, 0.4)),
                  ProfileError);
}

TEST_CASE("residual norm is nonincreasing in k and idempotence holds") {
  SplitMix64 rng(39);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = rng.uniform_int(1, 7);
    const Game f = oracles::random_game(rng, n);
    const ProbabilityProfile p = oracles::random_profile(rng, n);
    double previous = 1e300;
    for (int k = 0; k <= n; ++k) {
      const Approximation approx = best_approximation(f, p, k);
      const double r = residual_norm(f, approx, p);
      CHECK(r <= previous + 1e-12);
      previous = r;

      const Approximation again = best_approximation(to_game(approx), p, k);
      CHECK(oracles::max_abs_diff(again.coeffs(), approx.coeffs()) <= 1e-10);
    }
  }
}
