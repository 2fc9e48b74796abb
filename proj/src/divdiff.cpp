#include "macdet/divdiff.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace macdet {

namespace {

void check_range(int k, int n, int nvars) {
  if (n < 0 || n > nvars) throw std::invalid_argument("alphabet size exceeds the variable count");
  if (k < 0 || k > n) throw std::invalid_argument("operator index out of range");
}

MultiPoly linear(int nvars, int i, const QtRat& a, int j, const QtRat& b) {
  return MultiPoly::variable(nvars, i).scaled(a) - MultiPoly::variable(nvars, j).scaled(b);
}

// Vandermonde prod_{i<j<=n} (x_i - x_j).
MultiPoly vandermonde(int n, int nvars) {
  MultiPoly v = MultiPoly::constant(nvars, QtRat(1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) v *= linear(nvars, i, QtRat(1), j, QtRat(1));
  return v;
}

void k_subsets(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> sel(n, 0);
  std::fill(sel.end() - k, sel.end(), 1);
  do {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (sel[i]) subset.push_back(i + 1);
    fn(subset);
  } while (std::next_permutation(sel.begin(), sel.end()));
}

}  // namespace

MultiPoly divided_difference(const MultiPoly& f, int i) {
  if (i < 1 || i >= f.nvars()) throw std::invalid_argument("divided difference index out of range");
  const MultiPoly num = f - f.swapped(i, i + 1);
  if (num.is_zero()) return MultiPoly(f.nvars());
  return exact_divide(num, linear(f.nvars(), i, QtRat(1), i + 1, QtRat(1)));
}

MultiPoly divided_difference_word(const MultiPoly& f, const std::vector<int>& word) {
  MultiPoly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = divided_difference(g, *it);
  return g;
}

std::vector<int> longest_word(int m) {
  std::vector<int> w;
  for (int start = m - 1; start >= 1; --start)
    for (int i = start; i <= m - 1; ++i) w.push_back(i);
  return w;
}

std::vector<int> sylvester_word(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("sylvester_word: k out of range");
  std::vector<int> w;
  for (int r = 1; r <= k; ++r)
    for (int i = n - k + r - 1; i >= r; --i) w.push_back(i);
  return w;
}

MultiPoly sylvester_op(const MultiPoly& f, int k, int n) {
  check_range(k, n, f.nvars());
  return divided_difference_word(f, sylvester_word(k, n));
}

MultiPoly lagrange_op(const MultiPoly& f, int n) { return sylvester_op(f, 1, n); }

MultiPoly subset_sum(const MultiPoly& f, int k, int n) {
  check_range(k, n, f.nvars());
  const int nv = f.nvars();
  const MultiPoly v = vandermonde(n, nv);
  MultiPoly total(nv);
  k_subsets(n, k, [&](const std::vector<int>& subset) {
    const std::vector<int> comp = [&] {
      std::vector<int> c;
      for (int i = 1; i <= n; ++i)
        if (!std::binary_search(subset.begin(), subset.end(), i)) c.push_back(i);
      return c;
    }();
    std::vector<int> image(nv);
    std::iota(image.begin(), image.end(), 1);
    for (int j = 0; j < k; ++j) image[j] = subset[j];
    for (int j = 0; j < n - k; ++j) image[k + j] = comp[j];
    const MultiPoly r = resultant(Alphabet::of(subset), Alphabet::of(comp), nv);
    total += f.renamed(image) * exact_divide(v, r);
  });
  return exact_divide(total, v);
}

MultiPoly resultant(const Alphabet& x, const Alphabet& y, int nvars) {
  for (const auto& a : x.letters())
    for (const auto& b : y.letters())
      if (a.var == b.var) throw std::invalid_argument("resultant of overlapping alphabets");
  MultiPoly r = MultiPoly::constant(nvars, QtRat(1));
  for (const auto& a : x.letters())
    for (const auto& b : y.letters()) r *= linear(nvars, a.var, a.coeff, b.var, b.coeff);
  return r;
}

bool is_symmetric_range(const MultiPoly& f, int first, int last) {
  for (int i = first; i < last; ++i)
    if (!f.is_symmetric_in(i, i + 1)) return false;
  return true;
}

MultiPoly chi_slot(const MultiPoly& f, int k, int n) {
  check_range(k, n, f.nvars());
  if (k < 1) throw std::invalid_argument("chi_slot needs k >= 1");
  const QtRat tinv = QtRat::laurent_monomial(0, -1);
  const MultiPoly r = resultant(Alphabet::of({k}), Alphabet::complement_of_prefix(k, n).scaled(tinv), f.nvars());
  std::vector<int> word;
  for (int i = n - 1; i >= k; --i) word.push_back(i);
  return divided_difference_word(r * f, word);
}

MultiPoly chi_block(const MultiPoly& f, int k, int n) {
  check_range(k, n, f.nvars());
  std::vector<int> prefix(k);
  std::iota(prefix.begin(), prefix.end(), 1);
  const QtRat tinv = QtRat::laurent_monomial(0, -1);
  const MultiPoly r = resultant(Alphabet::of(prefix), Alphabet::complement_of_prefix(k, n).scaled(tinv), f.nvars());
  return sylvester_op(r * f, k, n);
}

MultiPoly chi_omega(const MultiPoly& f, int k) {
  check_range(k, k, f.nvars());
  const QtRat tinv = QtRat::laurent_monomial(0, -1);
  MultiPoly g = f;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) g *= linear(f.nvars(), i, QtRat(1), j, tinv);
  return divided_difference_word(g, longest_word(k));
}

QtRat t_factorial(int k) {
  QtRat r(1);
  QtRat term(1);
  QtRat acc(1);
  const QtRat tinv = QtRat::laurent_monomial(0, -1);
  for (int i = 2; i <= k; ++i) {
    term *= tinv;
    acc += term;
    r *= acc;
  }
  return r;
}

MultiPoly theta_q(const MultiPoly& f, int l) { return f.scale_variable(l, QtRat::q()); }
MultiPoly theta_t(const MultiPoly& f, int l) { return f.scale_variable(l, QtRat::t()); }

MultiPoly omega_shift(const MultiPoly& f, int k) {
  MultiPoly g = theta_q(f, k);
  for (int i = k - 1; i >= 1; --i) g = g.swapped(i, i + 1);
  return g;
}

MultiPoly xbar(const std::vector<int>& exps, int nvars) {
  MultiPoly::Exponent e(nvars, 0);
  int total = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    e[i] = exps[i];
    total += exps[i];
  }
  return MultiPoly::monomial(nvars, e, QtRat(total % 2 == 0 ? 1 : -1));
}

MultiPoly e_product(const std::vector<int>& idx, int nvars) {
  MultiPoly g = MultiPoly::constant(nvars, QtRat(1));
  for (std::size_t i = 0; i < idx.size() && !g.is_zero(); ++i) {
    std::vector<int> vars(i);
    std::iota(vars.begin(), vars.end(), 1);
    g *= elementary(idx[i], Alphabet::of(vars), nvars);
  }
  return g;
}

ScalarProduct dd_scalar_product(const MultiPoly& f, const MultiPoly& g, int m) {
  ScalarProduct sp;
  sp.value = divided_difference_word(f * g, longest_word(m));
  sp.is_constant = sp.value.is_constant();
  return sp;
}

namespace {

void require_symmetric(const MultiPoly& f, int n) {
  if (!is_symmetric_range(f, 1, n)) throw std::invalid_argument("operator expects a symmetric input");
}

MultiPoly theta_prefix(const MultiPoly& f, int k) {
  MultiPoly g = f;
  for (int i = 1; i <= k; ++i) g = theta_q(g, i);
  return g;
}

QtRat t_power(int e) { return QtRat::laurent_monomial(0, e); }

}  // namespace

MultiPoly raw_macdonald_op(const MultiPoly& f, int k, int n) {
  check_range(k, n, f.nvars());
  require_symmetric(f, n);
  if (k == 0) return f;
  std::vector<int> prefix(k);
  std::iota(prefix.begin(), prefix.end(), 1);
  const MultiPoly r = resultant(Alphabet::of(prefix).scaled(QtRat::t()), Alphabet::complement_of_prefix(k, n), f.nvars());
  return subset_sum(r * theta_prefix(f, k), k, n).scaled(t_power(k * (k - 1) / 2));
}

MultiPoly macdonald_op_dd(const MultiPoly& f, int k, int n) {
  check_range(k, n, f.nvars());
  std::vector<int> prefix(k);
  std::iota(prefix.begin(), prefix.end(), 1);
  const MultiPoly r = resultant(Alphabet::of(prefix).scaled(QtRat::t()), Alphabet::complement_of_prefix(k, n), f.nvars());
  return sylvester_op(r * theta_prefix(f, k), k, n).scaled(t_power(k * (k - 1) / 2));
}

MultiPoly raw_creation_op(const MultiPoly& f, int k, int n) {
  check_range(k, n, f.nvars());
  require_symmetric(f, n);
  const int nv = f.nvars();
  MultiPoly inner(nv);
  for (int l = 0; l <= k; ++l) {
    const QtRat c = QtRat(l % 2 == 0 ? 1 : -1) * t_power(l);
    inner += raw_macdonald_op(f, l, k).scaled(c);
  }
  std::vector<int> prefix(k);
  std::iota(prefix.begin(), prefix.end(), 1);
  MultiPoly xk = MultiPoly::constant(nv, QtRat(1));
  for (int i = 1; i <= k; ++i) xk *= MultiPoly::variable(nv, i);
  const QtRat tinv = QtRat::laurent_monomial(0, -1);
  const MultiPoly r = resultant(Alphabet::of(prefix), Alphabet::complement_of_prefix(k, n).scaled(tinv), nv);
  return subset_sum(xk * r * inner, k, n);
}

MultiPoly creation_op_chi(const MultiPoly& f, int k, int n) {
  check_range(k, n, f.nvars());
  require_symmetric(f, n);
  const int nv = f.nvars();
  MultiPoly g = f;
  for (int r = k; r >= 1; --r) g -= omega_shift(g, k).scaled(t_power(r));
  for (int i = 1; i <= k; ++i) g *= MultiPoly::variable(nv, i);
  return chi_block(chi_omega(g, k), k, n).scaled(t_factorial(k).inverse());
}

}  // namespace macdet
