#pragma once

// Best degree-k approximations of a game under the weighted least-squares
// distance induced by a product coalition distribution.

#include <vector>

#include "coopgt/game.hpp"
#include "coopgt/weights.hpp"

namespace coopgt {

// Monomial coefficients a_k(S) of the degree-k projection, stored as a full
// 2^n table whose entries above popcount k are identically zero.
class Approximation {
 public:
  Approximation(int k, ProbabilityProfile profile, std::vector<double> coeffs);

  int n() const { return profile_.n(); }
  int k() const { return k_; }
  const ProbabilityProfile& profile() const { return profile_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double coeff(Coalition s) const;

 private:
  int k_;
  ProbabilityProfile profile_;
  std::vector<double> coeffs_;
};

// Orthogonal projection of f onto the multilinear polynomials of degree at
// most k: the unique minimizer of sum_S w(S) (f(S) - g(S))^2. Computed from
// the orthonormal-basis inner products <f, v_T> and converted to monomial
// coefficients by a superset sweep with factors -p_i; O(n 2^n) throughout.
// Strict profile only.
Approximation best_approximation(const Game& f, const ProbabilityProfile& p, int k);

// The same coefficients from the Möbius transform alone:
//   a_k(S) = a(S) + (-1)^{k-|S|} sum_{T superset S, |T|>k}
//            C(|T|-|S|-1, k-|S|) * prod_{i in T\S} p_i * a(T).
// Polynomial in p, so boundary probabilities are accepted. O(3^n); intended
// for moderate n and as a second, independent route to the projection.
Approximation approximation_coeffs_via_mobius(const MobiusTransform& a,
                                              const ProbabilityProfile& p, int k);

// Value of the approximating polynomial at a vertex: sum_{T subset s} a_k(T).
double evaluate(const Approximation& approx, Coalition s);

// Full vertex table of the approximating polynomial.
Game to_game(const Approximation& approx);

// Weighted distance ||f - f_k||_w; p must equal the profile the approximation
// was built with.
double residual_norm(const Game& f, const Approximation& approx,
                     const ProbabilityProfile& p);

}  // namespace coopgt
