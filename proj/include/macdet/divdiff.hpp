// Divided differences on MultiPoly and the operators assembled from them:
// Lagrange/Sylvester symmetrizers, resultants, chi-operators, the q-shift
// Theta, the divided-difference scalar product, and the subset-sum forms of
// the Macdonald and creation operators.
//
// Operator words are read as products: {a, b, c} means d_a d_b d_c, so d_c
// acts first.

#pragma once

#include <vector>

#include "macdet/multipoly.hpp"
#include "macdet/symexp.hpp"

namespace macdet {

/// (f - sigma_i f) / (x_i - x_{i+1}); throws std::invalid_argument unless
/// 1 <= i < nvars, std::logic_error if the division is not exact.
MultiPoly divided_difference(const MultiPoly& f, int i);
MultiPoly divided_difference_word(const MultiPoly& f, const std::vector<int>& word);

/// (d_{m-1})(d_{m-2} d_{m-1}) .. (d_1 .. d_{m-1})
std::vector<int> longest_word(int m);
/// d_{(k|n-k)} = (d_{n-k} .. d_1) .. (d_{n-2} .. d_{k-1})(d_{n-1} .. d_k)
std::vector<int> sylvester_word(int k, int n);

MultiPoly sylvester_op(const MultiPoly& f, int k, int n);
MultiPoly lagrange_op(const MultiPoly& f, int n);
/// sum over k-subsets I of {1..n} of f(X_I, X_I^c) / R(X_I, X_I^c), for f
/// symmetric in x_1..x_k and in x_{k+1}..x_n.
MultiPoly subset_sum(const MultiPoly& f, int k, int n);

/// prod (x - y) over letters; letter coefficients act as plain multipliers.
/// Throws std::invalid_argument when a variable occurs in both alphabets.
MultiPoly resultant(const Alphabet& x, const Alphabet& y, int nvars);

/// Symmetric in x_first..x_last.
bool is_symmetric_range(const MultiPoly& f, int first, int last);

/// chi^{(k)}_{(1|n-k)} = d_{n-1} .. d_k R(x_k, X_k^c / t)
MultiPoly chi_slot(const MultiPoly& f, int k, int n);
/// chi_{(k|n-k)} = d_{(k|n-k)} R(X_k, X_k^c / t)
MultiPoly chi_block(const MultiPoly& f, int k, int n);
/// chi_{omega(k)} = d_{omega(k)} prod_{i<j<=k} (x_i - x_j / t)
MultiPoly chi_omega(const MultiPoly& f, int k);
/// k_t! = t^{-k(k-1)/2} (t)_k / (1-t)^k
QtRat t_factorial(int k);

/// x_l -> q x_l
MultiPoly theta_q(const MultiPoly& f, int l);
/// x_l -> t x_l
MultiPoly theta_t(const MultiPoly& f, int l);
/// Omega_k = sigma_1 .. sigma_{k-1} Theta_k
MultiPoly omega_shift(const MultiPoly& f, int k);

/// (-x_1)^{I_1} .. (-x_m)^{I_m}
MultiPoly xbar(const std::vector<int>& exps, int nvars);
/// e_{I_1}[0] e_{I_2}[X_1] .. e_{I_m}[X_{m-1}]
MultiPoly e_product(const std::vector<int>& idx, int nvars);

struct ScalarProduct {
  MultiPoly value;
  bool is_constant = false;
  QtRat constant() const { return value.constant_value(); }
};

/// <f, g> = d_omega(f g) over x_1..x_m.
ScalarProduct dd_scalar_product(const MultiPoly& f, const MultiPoly& g, int m);

/// M_k through the subset sum t^{k choose 2} sum_I R(tX_I, X_I^c)/R(X_I, X_I^c)
/// Theta_I, acting on x_1..x_n (further variables are scalars).  Throws
/// std::invalid_argument unless f is symmetric in x_1..x_n and 0 <= k <= n.
MultiPoly raw_macdonald_op(const MultiPoly& f, int k, int n);
/// M_k = t^{k choose 2} d_{(k|n-k)} R(tX_k, X_k^c) Theta_k .. Theta_1.
MultiPoly macdonald_op_dd(const MultiPoly& f, int k, int n);

/// B_k^{(n)} by the original subset-sum definition.
MultiPoly raw_creation_op(const MultiPoly& f, int k, int n);
/// B_k^{(n)} = (1/k_t!) chi_{(k|n-k)} chi_{omega(k)} x_1..x_k
/// (1 - t Omega_k) .. (1 - t^k Omega_k).
MultiPoly creation_op_chi(const MultiPoly& f, int k, int n);

}  // namespace macdet
