#pragma once

// Test-side reference implementations. Everything here sticks to the defining
// formulas (per-subset sums, recursion, dense solves, quadrature) so the fast
// library paths are checked against independent arithmetic.

#include <bit>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "coopgt/game.hpp"
#include "coopgt/rng.hpp"
#include "coopgt/weights.hpp"

namespace oracles {

using coopgt::Coalition;
using coopgt::Game;
using coopgt::Mask;
using coopgt::ProbabilityProfile;

inline Game majority_game() { return Game(3, {0, 0, 0, 1, 0, 1, 1, 1}); }

inline Game random_game(coopgt::SplitMix64& rng, int n, double lo = -1.0,
                        double hi = 1.0) {
  std::vector<double> v(coopgt::table_size(n));
  for (double& x : v) x = rng.uniform(lo, hi);
  return Game(n, std::move(v));
}

inline ProbabilityProfile random_profile(coopgt::SplitMix64& rng, int n,
                                         double lo = 1e-3, double hi = 1.0 - 1e-3) {
  std::vector<double> p(static_cast<std::size_t>(n));
  for (double& x : p) x = rng.uniform(lo, hi);
  return ProbabilityProfile(std::move(p));
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double err = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    err = std::max(err, std::abs(a[i] - b[i]));
  }
  return err;
}

// a(S) = sum_{T subset S} (-1)^{|S|-|T|} f(T), one subset sum per S.
inline std::vector<double> naive_mobius(const Game& f) {
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

// f(S) = sum_{T subset S} a(T).
inline std::vector<double> naive_zeta(const std::vector<double>& a) {
  std::vector<double> f(a.size(), 0.0);
  for (Mask s = 0; s < a.size(); ++s) {
    for (Mask t = s;; t = (t - 1) & s) {
      f[s] += a[t];
      if (t == 0) break;
    }
  }
  return f;
}

// Recursive definition of the discrete derivative; peels the lowest player,
// so the dimension order differs from the library sweep.
inline Game naive_s_difference(const Game& f, Mask s) {
  if (s == 0) return f;
  const int i = std::countr_zero(s);
  const Game rest = naive_s_difference(f, s & (s - 1));
  Game out(f.n());
  const Mask bit = Mask{1} << i;
  for (Mask m = 0; m < out.size(); ++m) {
    out[m] = rest[m | bit] - rest[m & ~bit];
  }
  return out;
}

// Direct sum over vertices of f(S) prod x_i prod (1-x_i).
inline double naive_multilinear(const Game& f, const std::vector<double>& x) {
  double acc = 0.0;
  for (Mask s = 0; s < f.size(); ++s) {
    double term = f[s];
    for (int i = 0; i < f.n(); ++i) {
      term *= ((s >> i) & 1u) ? x[static_cast<std::size_t>(i)]
                              : 1.0 - x[static_cast<std::size_t>(i)];
    }
    acc += term;
  }
  return acc;
}

// w(S) as a plain per-mask product.
inline std::vector<double> naive_weights(const ProbabilityProfile& p) {
  std::vector<double> w(coopgt::table_size(p.n()));
  for (Mask s = 0; s < w.size(); ++s) {
    double acc = 1.0;
    for (int i = 0; i < p.n(); ++i) {
      acc *= ((s >> i) & 1u) ? p[i] : 1.0 - p[i];
    }
    w[s] = acc;
  }
  return w;
}

// Index forms used as cross-checks, each written from its defining sum.

// sum_T (-1)^{|S\T|} f(T) prod_{i in T\S} p_i prod_{i notin T+S} (1-p_i).
inline double index_signed_sum(const Game& f, const ProbabilityProfile& p, Mask s) {
  double acc = 0.0;
  for (Mask t = 0; t < f.size(); ++t) {
    double term = (std::popcount(s & ~t) % 2 == 0) ? f[t] : -f[t];
    for (int i = 0; i < f.n(); ++i) {
      if ((s >> i) & 1u) continue;
      term *= ((t >> i) & 1u) ? p[i] : 1.0 - p[i];
    }
    acc += term;
  }
  return acc;
}

// (1/prod_{i in S} p_i(1-p_i)) sum_x w(x) f(x) prod_{i in S}(x_i - p_i).
inline double index_inner_product(const Game& f, const ProbabilityProfile& p, Mask s) {
  const std::vector<double> w = naive_weights(p);
  double acc = 0.0;
  for (Mask x = 0; x < f.size(); ++x) {
    double term = w[x] * f[x];
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      term *= (((x >> i) & 1u) ? 1.0 : 0.0) - p[i];
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

// sum_T w(T) (d_S f)(T) with the recursive derivative.
inline double index_expected_difference(const Game& f, const ProbabilityProfile& p,
                                        Mask s) {
  const Game diff = naive_s_difference(f, s);
  const std::vector<double> w = naive_weights(p);
  double acc = 0.0;
  for (Mask t = 0; t < f.size(); ++t) acc += w[t] * diff[t];
  return acc;
}

// sum_{T superset S} a(T) prod_{i in T\S} p_i from the naive Möbius transform.
inline double index_mobius_sum(const Game& f, const ProbabilityProfile& p, Mask s) {
  const std::vector<double> a = naive_mobius(f);
  double acc = 0.0;
  for (Mask t = 0; t < f.size(); ++t) {
    if ((t & s) != s) continue;
    double term = a[t];
    for (Mask rest = t & ~s; rest != 0; rest &= rest - 1) {
      term *= p[std::countr_zero(rest)];
    }
    acc += term;
  }
  return acc;
}

// Dense weighted least squares over the monomial basis of degree <= k;
// returns a full-length coefficient table.
inline std::vector<double> normal_equations_coeffs(const Game& f,
                                                   const ProbabilityProfile& p, int k) {
  std::vector<Mask> cols;
  for (Mask m = 0; m < f.size(); ++m) {
    if (std::popcount(m) <= k) cols.push_back(m);
  }
  const auto d = static_cast<Eigen::Index>(cols.size());
  const std::vector<double> w = naive_weights(p);
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(d, d);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(d);
  for (Mask x = 0; x < f.size(); ++x) {
    for (Eigen::Index a = 0; a < d; ++a) {
      if ((cols[static_cast<std::size_t>(a)] & x) != cols[static_cast<std::size_t>(a)]) {
        continue;
      }
      rhs(a) += w[x] * f[x];
      for (Eigen::Index b = 0; b < d; ++b) {
        if ((cols[static_cast<std::size_t>(b)] & x) == cols[static_cast<std::size_t>(b)]) {
          gram(a, b) += w[x];
        }
      }
    }
  }
  const Eigen::VectorXd c = gram.ldlt().solve(rhs);
  std::vector<double> full(f.size(), 0.0);
  for (Eigen::Index i = 0; i < d; ++i) {
    full[cols[static_cast<std::size_t>(i)]] = c(i);
  }
  return full;
}

// Weighted squared distance between f and the polynomial with the given
// monomial coefficients.
inline double weighted_sse(const Game& f, const ProbabilityProfile& p,
                           const std::vector<double>& coeffs) {
  const std::vector<double> g = naive_zeta(coeffs);
  const std::vector<double> w = naive_weights(p);
  double acc = 0.0;
  for (Mask m = 0; m < f.size(); ++m) {
    const double diff = f[m] - g[m];
    acc += w[m] * diff * diff;
  }
  return acc;
}

// Gauss-Legendre nodes and weights on [0,1]; exact through degree 2m-1.
inline void gauss_legendre_01(int m, std::vector<double>& nodes,
                              std::vector<double>& wts) {
  nodes.assign(static_cast<std::size_t>(m), 0.0);
  wts.assign(static_cast<std::size_t>(m), 0.0);
  for (int i = 0; i < m; ++i) {
    double x = std::cos(3.14159265358979323846 * (i + 0.75) / (m + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= m; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      if (m == 1) dp = 1.0;
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(i)] = (x + 1.0) / 2.0;
    wts[static_cast<std::size_t>(i)] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return r;
}

}  // namespace oracles
