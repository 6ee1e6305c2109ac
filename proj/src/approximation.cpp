#include "coopgt/approximation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

namespace coopgt {

namespace {

void check_degree(int k, int n) {
  if (k < 0 || k > n) {
    throw ValidationError("degree bound must lie in 0.." + std::to_string(n) +
                          ", got " + std::to_string(k));
  }
}

void check_same_n(int expected, int got, const char* what) {
  if (expected != got) {
    throw ProfileError(std::string(what) + " is sized for " + std::to_string(got) +
                       " players, expected " + std::to_string(expected));
  }
}

// C(n, k) as binary64; exact for the sizes reachable here (n <= 26).
double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return r;
}

}  // namespace

Approximation::Approximation(int k, ProbabilityProfile profile, std::vector<double> coeffs)
    : k_(k), profile_(std::move(profile)), coeffs_(std::move(coeffs)) {
  check_degree(k_, profile_.n());
  if (coeffs_.size() != table_size(profile_.n())) {
    throw ValidationError("coefficient table must have length 2^n");
  }
  for (Mask m = 0; m < coeffs_.size(); ++m) {
    if (!std::isfinite(coeffs_[m])) {
      throw ValidationError("coefficient table contains a non-finite entry");
    }
    if (std::popcount(m) > k_ && coeffs_[m] != 0.0) {
      throw ValidationError("coefficients above degree k must be zero");
    }
  }
}

double Approximation::coeff(Coalition s) const {
  if (s.mask > full_mask(n())) {
    throw ValidationError("coalition mask is out of range");
  }
  return coeffs_[s.mask];
}

Approximation best_approximation(const Game& f, const ProbabilityProfile& p, int k) {
  check_same_n(f.n(), p.n(), "profile");
  check_degree(k, f.n());
  const int n = f.n();

  // <f, v_T> for all T, rescaled to index values <f,v_T>/prod sigma_i, with
  // everything above degree k dropped.
  std::vector<double> t = basis_inner_products(f, p);
  std::vector<double> inv_sigma(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    inv_sigma[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(p[i] * (1.0 - p[i]));
  }
  for (Mask m = 0; m < t.size(); ++m) {
    if (std::popcount(m) > k) {
      t[m] = 0.0;
      continue;
    }
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      t[m] *= inv_sigma[static_cast<std::size_t>(std::countr_zero(rest))];
    }
  }

  // Basis change to monomial coefficients: superset sweep with factors -p_i.
  // Entries above degree k stay exactly zero.
  for (int i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    const double pi = p[i];
    for (Mask m = 0; m < t.size(); ++m) {
      if (!(m & bit)) t[m] -= pi * t[m | bit];
    }
  }
  return Approximation(k, p, std::move(t));
}

Approximation approximation_coeffs_via_mobius(const MobiusTransform& a,
                                              const ProbabilityProfile& p, int k) {
  check_same_n(a.n(), p.n(), "profile");
  check_degree(k, a.n());
  const int n = a.n();

  // prodp[m] = prod over players in m of p_i.
  std::vector<double> prodp(table_size(n));
  prodp[0] = 1.0;
  for (Mask m = 1; m < prodp.size(); ++m) {
    prodp[m] = p[std::countr_zero(m)] * prodp[m & (m - 1)];
  }

  std::vector<double> out(table_size(n), 0.0);
  std::vector<double> by_extra(static_cast<std::size_t>(n) + 1);
  for (Mask s = 0; s < out.size(); ++s) {
    const int cs = std::popcount(s);
    if (cs > k) continue;
    const Mask comp = full_mask(n) & ~s;
    // by_extra[d]: sum over supersets adding exactly d players of p-product
    // times the Möbius coefficient.
    std::fill(by_extra.begin(), by_extra.begin() + (n - cs + 1), 0.0);
    for (Mask d = comp;; d = (d - 1) & comp) {
      by_extra[static_cast<std::size_t>(std::popcount(d))] += prodp[d] * a[s | d];
      if (d == 0) break;
    }
    double corr = 0.0;
    for (int d = k - cs + 1; d <= n - cs; ++d) {
      corr += binomial(d - 1, k - cs) * by_extra[static_cast<std::size_t>(d)];
    }
    out[s] = a[s] + ((k - cs) % 2 == 0 ? corr : -corr);
  }
  return Approximation(k, p, std::move(out));
}

double evaluate(const Approximation& approx, Coalition s) {
  if (s.mask > full_mask(approx.n())) {
    throw ValidationError("coalition mask is out of range");
  }
  double acc = 0.0;
  for (Mask t = s.mask;; t = (t - 1) & s.mask) {
    acc += approx.coeffs()[t];
    if (t == 0) break;
  }
  return acc;
}

Game to_game(const Approximation& approx) {
  return from_mobius(MobiusTransform(approx.n(), approx.coeffs()));
}

double residual_norm(const Game& f, const Approximation& approx,
                     const ProbabilityProfile& p) {
  check_same_n(f.n(), p.n(), "profile");
  check_same_n(f.n(), approx.n(), "approximation");
  if (!(p == approx.profile())) {
    throw ProfileError("profile differs from the one the approximation was built with");
  }
  const Game fk = to_game(approx);
  std::vector<double> sq(f.size());
  for (Mask m = 0; m < f.size(); ++m) {
    const double d = f[m] - fk[m];
    sq[m] = d * d;
  }
  const double mean_sq = multilinear_eval(Game(f.n(), std::move(sq)), Point(p.probs()));
  return std::sqrt(std::max(0.0, mean_sq));
}

}  // namespace coopgt
