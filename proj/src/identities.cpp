// The appendix identity suite: operator identities checked on random
// instances (or exhaustively where the instance space is small).

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>

#include "macdet/divdiff.hpp"
#include "macdet/symexp.hpp"
#include "macdet/verify.hpp"
#include "suite_util.hpp"

namespace macdet::verify {

namespace {

using Rng = std::mt19937_64;
using Matrix = std::vector<std::vector<MultiPoly>>;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

QtRat tpow(int e) { return QtRat::laurent_monomial(0, e); }

// Random polynomial in x_1..x_n (of nvars) with small integer coefficients.
MultiPoly random_poly(Rng& rng, int n, int nvars, int max_deg, int max_terms) {
  MultiPoly f(nvars);
  const int terms = uniform(rng, 1, max_terms);
  for (int i = 0; i < terms; ++i) {
    MultiPoly::Exponent e(nvars, 0);
    int budget = uniform(rng, 0, max_deg);
    while (budget-- > 0) ++e[uniform(rng, 0, n - 1)];
    f.add_term(e, QtRat(uniform(rng, -3, 3)));
  }
  return f;
}

// Symmetrization over S_k x S_{n-k}, giving an element of Sym(k|n-k).
MultiPoly symmetrize_blocks(const MultiPoly& f, int k, int n) {
  std::vector<int> a(k);
  std::iota(a.begin(), a.end(), 1);
  MultiPoly out(f.nvars());
  do {
    std::vector<int> b(n - k);
    std::iota(b.begin(), b.end(), k + 1);
    do {
      std::vector<int> image(f.nvars());
      std::iota(image.begin(), image.end(), 1);
      for (int i = 0; i < k; ++i) image[i] = a[i];
      for (int i = 0; i < n - k; ++i) image[k + i] = b[i];
      out += f.renamed(image);
    } while (std::next_permutation(b.begin(), b.end()));
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

QtRat random_scalar(Rng& rng) {
  switch (uniform(rng, 0, 4)) {
    case 0: return QtRat(1);
    case 1: return QtRat(-1);
    case 2: return QtRat::t();
    case 3: return QtRat::q();
    default: return QtRat(2);
  }
}

std::vector<int> range1(int k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

Alphabet prefix(int k) { return Alphabet::of(range1(k)); }

// X_k^t = X_k (t - 1)
Alphabet prefix_t(int k) { return prefix(k).scaled(QtRat::t() - QtRat(1)); }

std::vector<Partition> box_partitions(int rows, int cols) {
  std::vector<Partition> out;
  for (int w = 0; w <= rows * cols; ++w)
    for (const auto& p : partitions_of(w))
      if (p.length() <= rows && p[0] <= cols) out.push_back(p);
  return out;
}

std::string vec_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// --- Individual identities --------------------------------------------------

IdentityResult coxeter(Rng& rng, const SuiteOptions& opt) {
  Tally tally("coxeter relations");
  for (int it = 0; it < std::max(opt.instances, 500); ++it) {
    const int m = uniform(rng, 3, 4);
    const MultiPoly f = random_poly(rng, m, m, 4, 6);
    const int i = uniform(rng, 1, m - 2);
    const bool braid = divided_difference_word(f, {i, i + 1, i}) == divided_difference_word(f, {i + 1, i, i + 1});
    bool commute = true;
    if (m == 4) commute = divided_difference_word(f, {1, 3}) == divided_difference_word(f, {3, 1});
    tally.check(braid && commute, [&] { return "f=" + f.to_string(); });
  }
  return tally.result();
}

IdentityResult nilpotence(Rng& rng, const SuiteOptions& opt) {
  Tally tally("nilpotence and symmetric scalars");
  for (int it = 0; it < opt.instances; ++it) {
    const int m = uniform(rng, 2, 4);
    const int i = uniform(rng, 1, m - 1);
    const MultiPoly f = random_poly(rng, m, m, 4, 5);
    const MultiPoly g0 = random_poly(rng, m, m, 2, 3);
    const MultiPoly g = g0 + g0.swapped(i, i + 1);
    const bool ok = divided_difference_word(f, {i, i}).is_zero() &&
                    divided_difference(g * f, i) == g * divided_difference(f, i) && divided_difference(g, i).is_zero();
    tally.check(ok, [&] { return "i=" + std::to_string(i) + " f=" + f.to_string(); });
  }
  return tally.result();
}

IdentityResult lagrange(Rng& rng, const SuiteOptions& opt) {
  Tally tally("Lagrange operator summation");
  for (int it = 0; it < opt.instances; ++it) {
    const int n = uniform(rng, 2, 3);
    const MultiPoly f = symmetrize_blocks(random_poly(rng, n, n, 3, 3), 1, n);
    tally.check(lagrange_op(f, n) == subset_sum(f, 1, n), [&] { return "n=" + std::to_string(n) + " f=" + f.to_string(); });
  }
  return tally.result();
}

IdentityResult sylvester(Rng& rng, const SuiteOptions& opt) {
  Tally tally("Sylvester operator summation");
  for (int it = 0; it < opt.instances; ++it) {
    const int n = uniform(rng, 2, 4);
    const int k = uniform(rng, 1, std::min(2, n - 1));
    const MultiPoly f = symmetrize_blocks(random_poly(rng, n, n, 3, 2), k, n);
    tally.check(sylvester_op(f, k, n) == subset_sum(f, k, n),
                [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " f=" + f.to_string(); });
  }
  return tally.result();
}

IdentityResult chi_normalizations(const SuiteOptions&) {
  Tally tally("chi images of 1");
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= n; ++k) {
      QtRat expected(1);
      for (int i = 1; i <= n - k; ++i) expected += tpow(-i);
      const MultiPoly one = MultiPoly::constant(n, QtRat(1));
      tally.check(chi_slot(one, k, n) == MultiPoly::constant(n, expected),
                  [&] { return "slot n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
    // k_t! = t^{-k(k-1)/2} (t)_k / (1-t)^k
    QtRat tk(1);
    for (int i = 1; i <= n; ++i) tk *= QtRat(1) - tpow(i);
    const QtRat expected = tpow(-n * (n - 1) / 2) * tk / (QtRat(1) - QtRat::t()).pow(n);
    const MultiPoly one = MultiPoly::constant(n, QtRat(1));
    tally.check(chi_omega(one, n) == MultiPoly::constant(n, expected) && t_factorial(n) == expected,
                [&] { return "omega k=" + std::to_string(n); });
  }
  return tally.result();
}

IdentityResult chi_omega_images(Rng& rng, const SuiteOptions& opt) {
  Tally tally("chi_omega on Sym(l|k-l)");
  for (int it = 0; it < opt.instances; ++it) {
    const int k = uniform(rng, 2, 3);
    const int l = uniform(rng, 1, k - 1);
    const MultiPoly f = symmetrize_blocks(random_poly(rng, k, k, 3, 2), l, k);
    const MultiPoly lhs = chi_omega(f, k);
    const MultiPoly rhs = chi_block(f, l, k).scaled(t_factorial(l) * t_factorial(k - l));
    tally.check(lhs == rhs, [&] { return "k=" + std::to_string(k) + " l=" + std::to_string(l) + " f=" + f.to_string(); });
  }
  return tally.result();
}

IdentityResult chi_factorization(Rng& rng, const SuiteOptions& opt) {
  Tally tally("chi factorization");
  for (int it = 0; it < opt.instances; ++it) {
    const int n = uniform(rng, 2, 4);
    const int k = uniform(rng, 1, std::min(2, n));
    const MultiPoly f = random_poly(rng, n, n, 2, 2);
    MultiPoly lhs = f;
    for (int s = k - 1; s >= 1; --s) lhs = chi_slot(lhs, s, k);
    lhs = chi_block(lhs, k, n);
    MultiPoly rhs = f;
    for (int s = k; s >= 1; --s) rhs = chi_slot(rhs, s, n);
    tally.check(lhs == rhs, [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " f=" + f.to_string(); });
  }
  return tally.result();
}

IdentityResult chi_slot_identity(Rng& rng, const SuiteOptions& opt) {
  Tally tally("chi_slot on S_j[C + X_k^t]");
  for (int it = 0; it < opt.instances; ++it) {
    const int n = uniform(rng, 1, 3);
    const int k = uniform(rng, 1, std::min(2, n));
    const int j = uniform(rng, 0, std::min(3, opt.max_weight));
    const int nv = n + 1;
    const Alphabet c = Alphabet::of({n + 1}).scaled(random_scalar(rng));
    QtRat ck;
    for (int i = 1; i <= n - k; ++i) ck += tpow(-i);
    const MultiPoly lhs = chi_slot(complete(j, c + prefix_t(k), nv), k, n);
    const MultiPoly rhs = complete(j, c + prefix_t(k - 1), nv).scaled(ck) + complete(j, c + prefix_t(n), nv);
    tally.check(lhs == rhs, [&] {
      return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " j=" + std::to_string(j);
    });
  }
  return tally.result();
}

IdentityResult resultant_determinant(Rng& rng, const SuiteOptions& opt) {
  Tally tally("resultant times S_lambda[Y+X] as a determinant");
  for (int it = 0; it < opt.instances; ++it) {
    const int n = uniform(rng, 1, 3);
    const int k = uniform(rng, 1, std::min(2, n));
    std::vector<Partition> shapes;
    for (int w = 0; w <= std::min(3, opt.max_weight); ++w)
      for (const auto& p : partitions_of(w))
        if (p.length() <= n) shapes.push_back(p);
    const Partition lambda = shapes[uniform(rng, 0, static_cast<int>(shapes.size()) - 1)];
    const int nv = n + 1;
    const Alphabet y = Alphabet::of({n + 1}).scaled(random_scalar(rng));
    const Alphabet yx = y + Alphabet::full(n);
    const Alphabet yxk = y + prefix(k);
    const Alphabet yxc = y + Alphabet::complement_of_prefix(k, n);
    const MultiPoly lhs = resultant(prefix(k), Alphabet::complement_of_prefix(k, n), nv) * schur_of(lambda.padded(n), yx, nv);
    const int top = lambda[0] + n;
    const auto hk = complete_series(top, yxk, nv);
    const auto hc = complete_series(top, yxc, nv);
    Matrix m(n, std::vector<MultiPoly>(n, MultiPoly(nv)));
    for (int i = 1; i <= n; ++i) {
      const int alpha = lambda[i - 1] - i + 1;
      for (int j = 1; j <= n; ++j) {
        const int idx = j <= k ? alpha - k + n + j - 1 : alpha + k + (j - k) - 1;
        if (idx >= 0) m[i - 1][j - 1] = j <= k ? hk[idx] : hc[idx];
      }
    }
    tally.check(lhs == determinant(m, nv), [&] {
      return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " lambda=" + lambda.to_string();
    });
  }
  return tally.result();
}

// det |S_{v_i + c - i + shift_c}[alphabet_c]| with i, c from 1.
MultiPoly shifted_det(const std::vector<int>& v, const std::vector<int>& shift, const std::vector<Alphabet>& alph, int nv) {
  const int k = static_cast<int>(v.size());
  Matrix m(k, std::vector<MultiPoly>(k, MultiPoly(nv)));
  for (int i = 1; i <= k; ++i)
    for (int c = 1; c <= k; ++c) m[i - 1][c - 1] = complete(v[i - 1] + c - i + shift[c - 1], alph[c - 1], nv);
  return determinant(m, nv);
}

IdentityResult sylvester_on_products(Rng& rng, const SuiteOptions& opt) {
  Tally tally("Sylvester operator on S_alpha[A+tX_k] S_beta[B+X_k^c]");
  for (int it = 0; it < opt.instances; ++it) {
    const int n = uniform(rng, 2, 3);
    const int k = uniform(rng, 1, n - 1);
    const int nv = n + 2;
    const Alphabet a = Alphabet::of({n + 1});
    const Alphabet b = Alphabet::of({n + 2});
    std::vector<int> alpha(k);
    std::vector<int> beta(n - k);
    for (auto& x : alpha) x = uniform(rng, 0, 3);
    for (auto& x : beta) x = uniform(rng, 0, 2);
    const Alphabet x_all = Alphabet::full(n);
    const Alphabet at = a + prefix(k).scaled(QtRat::t());
    const Alphabet bc = b + Alphabet::complement_of_prefix(k, n);
    const MultiPoly lhs = sylvester_op(shifted_det(alpha, std::vector<int>(k, 0), std::vector<Alphabet>(k, at), nv) *
                                           shifted_det(beta, std::vector<int>(n - k, 0), std::vector<Alphabet>(n - k, bc), nv),
                                       k, n);
    MultiPoly rhs(nv);
    for (const auto& ip : box_partitions(k, n - k)) {
      const Composition i = ip.padded(k);
      const Composition ic = conjugate(ip).padded(n - k);
      std::vector<int> s1(k);
      for (int c = 1; c <= k; ++c) s1[c - 1] = -n + k + i[k - c];
      std::vector<int> s2(n - k);
      for (int c = 1; c <= n - k; ++c) s2[c - 1] = -ic[c - 1];
      const MultiPoly term = shifted_det(alpha, s1, std::vector<Alphabet>(k, a + x_all.scaled(QtRat::t())), nv) *
                             shifted_det(beta, s2, std::vector<Alphabet>(n - k, b + x_all), nv);
      const QtRat c = QtRat(ip.weight() % 2 == 0 ? 1 : -1) * tpow(k * (n - k) - ip.weight());
      rhs += term.scaled(c);
    }
    tally.check(lhs == rhs, [&] { return "n=" + std::to_string(n) + " alpha=" + vec_str(alpha) + " beta=" + vec_str(beta); });
  }
  return tally.result();
}

IdentityResult adjointness(const SuiteOptions&) {
  Tally tally("adjoint bases of Sym(k|n-k)");
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k < n; ++k) {
      const auto box = box_partitions(k, n - k);
      const Alphabet neg_c = -Alphabet::complement_of_prefix(k, n);
      for (const auto& ip : box)
        for (const auto& jp : box) {
          const MultiPoly val = sylvester_op(schur_of(ip.parts(), neg_c, n) * schur_of(jp.parts(), prefix(k), n), k, n);
          std::vector<int> comp(k);
          for (int r = 0; r < k; ++r) comp[r] = n - k - jp[k - 1 - r];
          const bool dual = Partition(comp) == ip;
          tally.check(val == MultiPoly::constant(n, QtRat(dual ? 1 : 0)), [&] {
            return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " I=" + ip.to_string() + " J=" + jp.to_string();
          });
        }
    }
  return tally.result();
}

IdentityResult newton(Rng& rng, const SuiteOptions& opt) {
  Tally tally("Newton interpolation determinant");
  for (int it = 0; it < opt.instances; ++it) {
    const int n = uniform(rng, 1, 3);
    std::vector<std::vector<int>> coeffs(n);
    for (auto& c : coeffs) {
      c.resize(4);
      for (auto& x : c) x = uniform(rng, -3, 3);
    }
    auto f_at = [&](int i, int var) {
      MultiPoly p(n);
      for (int d = 0; d < 4; ++d) {
        MultiPoly::Exponent e(n, 0);
        e[var - 1] = d;
        p.add_term(e, QtRat(coeffs[i][d]));
      }
      return p;
    };
    Matrix lhs_m(n, std::vector<MultiPoly>(n, MultiPoly(n)));
    Matrix rhs_m = lhs_m;
    for (int i = 0; i < n; ++i)
      for (int j = 1; j <= n; ++j) {
        std::vector<int> word;
        for (int w = j - 1; w >= 1; --w) word.push_back(w);
        lhs_m[i][j - 1] = divided_difference_word(f_at(i, 1), word);
        rhs_m[i][j - 1] = f_at(i, j);
      }
    MultiPoly delta = MultiPoly::constant(n, QtRat(1));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) delta *= MultiPoly::variable(n, j) - MultiPoly::variable(n, i);
    tally.check(determinant(lhs_m, n) * delta == determinant(rhs_m, n), [&] { return "n=" + std::to_string(n); });
  }
  return tally.result();
}

IdentityResult duality(const SuiteOptions&) {
  Tally tally("adjoint bases for the divided-difference scalar product");
  for (int m = 1; m <= 3; ++m) {
    std::vector<std::vector<int>> subs{{}};
    for (int i = 0; i < m; ++i) {
      std::vector<std::vector<int>> next;
      for (const auto& s : subs)
        for (int v = 0; v <= i; ++v) {
          auto t = s;
          t.push_back(v);
          next.push_back(t);
        }
      subs = std::move(next);
    }
    for (const auto& ii : subs)
      for (const auto& jj : subs) {
        std::vector<int> rj(m);
        for (int r = 0; r < m; ++r) rj[r] = r - jj[r];
        const auto sp = dd_scalar_product(xbar(ii, m), e_product(rj, m), m);
        tally.check(sp.is_constant && sp.constant() == QtRat(ii == jj ? 1 : 0),
                    [&] { return "I=" + vec_str(ii) + " J=" + vec_str(jj); });
      }
  }
  return tally.result();
}

IdentityResult macdonald_forms(Rng& rng, const SuiteOptions& opt) {
  Tally tally("Macdonald operator subset sum vs divided differences");
  for (int it = 0; it < opt.instances; ++it) {
    const int n = uniform(rng, 1, 3);
    const int k = uniform(rng, 0, n);
    const MultiPoly f = symmetrize_blocks(random_poly(rng, n, n, 3, 2), n, n);
    tally.check(raw_macdonald_op(f, k, n) == macdonald_op_dd(f, k, n),
                [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " f=" + f.to_string(); });
  }
  return tally.result();
}

IdentityResult theta_shift(const SuiteOptions& opt) {
  Tally tally("q-shift acts as a t-shift on X^{tq}");
  const QtRat q = QtRat::q();
  const QtRat t = QtRat::t();
  for (int n = 1; n <= 3; ++n)
    for (int j = 0; j <= std::min(4, opt.max_weight); ++j)
      for (int l = 1; l <= n; ++l) {
        const MultiPoly lhs = theta_q(realize_modified(SymExpansion::single(Basis::s_mod, Partition{j}), n), l);
        const Alphabet a = Alphabet::full(n).scaled((t - 1) / (q - 1)) + Alphabet::of({l}).scaled(t - 1);
        tally.check(lhs == complete(j, a, n), [&] { return "n=" + std::to_string(n) + " j=" + std::to_string(j); });
      }
  return tally.result();
}

IdentityResult creation_forms(const SuiteOptions& opt) {
  Tally tally("creation operator: subset sum vs chi factorization");
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= n; ++k)
      for (int w = 0; w <= std::min(2, opt.max_weight); ++w)
        for (const auto& lam : partitions_of(w)) {
          const MultiPoly f = realize_modified(SymExpansion::single(Basis::s_mod, lam), n);
          tally.check(raw_creation_op(f, k, n) == creation_op_chi(f, k, n), [&] {
            return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " lambda=" + lam.to_string();
          });
        }
  return tally.result();
}

IdentityResult f_determinant_shift(Rng& rng, const SuiteOptions& opt) {
  Tally tally("F-determinant shift");
  for (int it = 0; it < opt.instances; ++it) {
    const int k = uniform(rng, 1, 3);
    const int nv = k + 1;
    const Alphabet c = Alphabet::of({k + 1}).scaled(random_scalar(rng));
    const Alphabet cx = c + prefix(k);
    const Alphabet ctx = c + prefix(k).scaled(QtRat::t());
    std::vector<int> js(k);
    for (auto& j : js) j = uniform(rng, -1, std::min(3, opt.max_weight));
    int top = 0;
    for (int j : js) top = std::max(top, j + k);
    const auto h1 = complete_series(std::max(top, 0), cx, nv);
    const auto h2 = complete_series(std::max(top, 0), ctx, nv);
    auto F = [&](int j, int r) {
      if (j < 0) return MultiPoly(nv);
      return h1[j] - h2[j].scaled(tpow(r));
    };
    Matrix lhs(k, std::vector<MultiPoly>(k, MultiPoly(nv)));
    Matrix rhs = lhs;
    for (int i = 0; i < k; ++i)
      for (int col = 1; col <= k; ++col) {
        lhs[i][col - 1] = F(js[i] + col, k - col);
        rhs[i][col - 1] = F(js[i] + col - 1, k - col + 1);
      }
    MultiPoly xk = MultiPoly::constant(nv, QtRat(1));
    for (int i = 1; i <= k; ++i) xk *= MultiPoly::variable(nv, i);
    tally.check(determinant(lhs, nv) == xk * determinant(rhs, nv), [&] { return "k=" + std::to_string(k) + " j=" + vec_str(js); });
  }
  return tally.result();
}

// G_h(t^r, X_m) = S_h[Y+X] - t^r S_h[Y + X + X_m^t], X = x_1..x_l, Y = x_{l+1}.
class GFunctions {
 public:
  GFunctions(int l, int top, const QtRat& ycoeff) : l_(l), nv_(l + 1) {
    const Alphabet yx = Alphabet::of({l + 1}).scaled(ycoeff) + Alphabet::full(l);
    base_ = complete_series(top, yx, nv_);
    for (int m = 0; m <= l; ++m) shifted_.push_back(complete_series(top, yx + prefix_t(m), nv_));
  }
  int nvars() const { return nv_; }
  MultiPoly operator()(int h, int r, int m) const {
    if (h < 0) return MultiPoly(nv_);
    return base_[h] - shifted_[m][h].scaled(tpow(r));
  }

 private:
  int l_;
  int nv_;
  std::vector<MultiPoly> base_;
  std::vector<std::vector<MultiPoly>> shifted_;
};

IdentityResult g_determinant_extension(Rng& rng, const SuiteOptions& opt) {
  Tally tally("chi extension of G-determinants");
  for (int it = 0; it < opt.instances; ++it) {
    const int k = uniform(rng, 1, 2);
    const int l = uniform(rng, k, 3);
    std::vector<int> js(k);
    for (auto& j : js) j = uniform(rng, -1, std::min(2, opt.max_weight));
    int top = 0;
    for (int j : js) top = std::max(top, j + k);
    const GFunctions g(l, top, random_scalar(rng));
    const int nv = g.nvars();
    Matrix lhs(k, std::vector<MultiPoly>(k, MultiPoly(nv)));
    Matrix inner = lhs;
    for (int i = 0; i < k; ++i)
      for (int col = 1; col <= k; ++col) {
        lhs[i][col - 1] = g(js[i] + col, k - col, l);
        inner[i][col - 1] = g(js[i] + col, k - col, k - col + 1);
      }
    MultiPoly rhs = determinant(inner, nv);
    for (int s = k; s >= 1; --s) rhs = chi_slot(rhs, s, l);
    tally.check(determinant(lhs, nv) == rhs,
                [&] { return "k=" + std::to_string(k) + " l=" + std::to_string(l) + " j=" + vec_str(js); });
  }
  return tally.result();
}

IdentityResult g_recursion(Rng& rng, const SuiteOptions& opt) {
  Tally tally("G-function recursion");
  for (int it = 0; it < opt.instances; ++it) {
    const int l = uniform(rng, 1, 3);
    const int k = uniform(rng, 1, l);
    const int j = uniform(rng, 0, std::min(3, opt.max_weight));
    const int r = uniform(rng, 0, 2);
    const GFunctions g(l, j, random_scalar(rng));
    QtRat ck;
    for (int i = 1; i <= l - k; ++i) ck += tpow(-i);
    const MultiPoly rhs = chi_slot(g(j, r, k), k, l) - g(j, r, k - 1).scaled(ck);
    tally.check(g(j, r, l) == rhs, [&] {
      return "l=" + std::to_string(l) + " k=" + std::to_string(k) + " j=" + std::to_string(j) + " r=" + std::to_string(r);
    });
  }
  return tally.result();
}

}  // namespace

SuiteReport appendix_suite(const SuiteOptions& opt) {
  SuiteReport report;
  report.suite = "appendix";
  report.seed = opt.seed;
  report.max_weight = opt.max_weight;
  Rng rng(opt.seed);
  const std::vector<std::pair<std::string, std::function<IdentityResult()>>> identities = {
      {"coxeter relations", [&] { return coxeter(rng, opt); }},
      {"nilpotence and symmetric scalars", [&] { return nilpotence(rng, opt); }},
      {"Lagrange operator summation", [&] { return lagrange(rng, opt); }},
      {"Sylvester operator summation", [&] { return sylvester(rng, opt); }},
      {"chi images of 1", [&] { return chi_normalizations(opt); }},
      {"chi_omega on Sym(l|k-l)", [&] { return chi_omega_images(rng, opt); }},
      {"chi factorization", [&] { return chi_factorization(rng, opt); }},
      {"chi_slot on S_j[C + X_k^t]", [&] { return chi_slot_identity(rng, opt); }},
      {"resultant times S_lambda[Y+X] as a determinant", [&] { return resultant_determinant(rng, opt); }},
      {"Sylvester operator on S_alpha[A+tX_k] S_beta[B+X_k^c]", [&] { return sylvester_on_products(rng, opt); }},
      {"adjoint bases of Sym(k|n-k)", [&] { return adjointness(opt); }},
      {"Newton interpolation determinant", [&] { return newton(rng, opt); }},
      {"adjoint bases for the divided-difference scalar product", [&] { return duality(opt); }},
      {"Macdonald operator subset sum vs divided differences", [&] { return macdonald_forms(rng, opt); }},
      {"q-shift acts as a t-shift on X^{tq}", [&] { return theta_shift(opt); }},
      {"creation operator: subset sum vs chi factorization", [&] { return creation_forms(opt); }},
      {"F-determinant shift", [&] { return f_determinant_shift(rng, opt); }},
      {"chi extension of G-determinants", [&] { return g_determinant_extension(rng, opt); }},
      {"G-function recursion", [&] { return g_recursion(rng, opt); }},
  };
  for (const auto& [label, fn] : identities) report.results.push_back(run_timed(label, fn));
  return report;
}

}  // namespace macdet::verify
