#include "macdet/oracle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace macdet::oracle {

namespace {

using Vec = std::vector<QtRat>;

// Number of ways to pour the parts of rho into bins of sizes mu: the
// coefficient of m_mu in p_rho.
long pour_count(const std::vector<int>& rho, std::size_t i, std::vector<int>& room) {
  if (i == rho.size()) return 1;
  long total = 0;
  for (auto& r : room) {
    if (r < rho[i]) continue;
    r -= rho[i];
    total += pour_count(rho, i + 1, room);
    r += rho[i];
  }
  return total;
}

struct Basis {
  std::vector<Partition> parts;
  std::vector<QtRat> norms;  // <p_rho, p_rho>
  std::vector<Vec> m_in_p;   // m_mu as a p-vector
  std::vector<Vec> p_coords; // P_lambda as a p-vector
  std::vector<Vec> m_coords; // P_lambda as an m-vector
};

Vec solve_inverse_column(const std::vector<std::vector<mpq_class>>& a, std::size_t col) {
  // Column col of a^{-1} by Gauss-Jordan on [a | e_col].
  const std::size_t n = a.size();
  auto m = a;
  std::vector<mpq_class> rhs(n, 0);
  rhs[col] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    std::swap(rhs[piv], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
      rhs[r] -= f * rhs[c];
    }
  }
  Vec out(n);
  for (std::size_t r = 0; r < n; ++r) out[r] = QtRat(mpq_class(rhs[r] / m[r][r]));
  return out;
}

QtRat dot(const Basis& b, const Vec& x, const Vec& y) {
  QtRat s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i] * b.norms[i];
  return s;
}

std::unique_ptr<Basis> build(int w) {
  auto b = std::make_unique<Basis>();
  b->parts = partitions_of(w);
  const std::size_t n = b->parts.size();
  // p2m[rho][mu]
  std::vector<std::vector<mpq_class>> p2m(n, std::vector<mpq_class>(n, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<int> room = b->parts[c].parts();
      p2m[r][c] = pour_count(b->parts[r].parts(), 0, room);
    }
  // m_mu = sum_rho x_rho p_rho solves sum_rho x_rho p2m[rho][nu] = delta_{mu nu}.
  std::vector<std::vector<mpq_class>> tr(n, std::vector<mpq_class>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) tr[c][r] = p2m[r][c];
  for (std::size_t mu = 0; mu < n; ++mu) b->m_in_p.push_back(solve_inverse_column(tr, mu));
  for (const auto& rho : b->parts) b->norms.push_back(power_sum_product(rho, rho));

  // Gram-Schmidt in lexicographic order, a linear extension of dominance.
  std::vector<QtRat> pnorm;
  for (std::size_t l = 0; l < n; ++l) {
    Vec p = b->m_in_p[l];
    Vec m(n);
    m[l] = QtRat(1);
    for (std::size_t k = 0; k < l; ++k) {
      const QtRat c = dot(*b, b->m_in_p[l], b->p_coords[k]) / pnorm[k];
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (!b->p_coords[k][i].is_zero()) p[i] -= c * b->p_coords[k][i];
        if (!b->m_coords[k][i].is_zero()) m[i] -= c * b->m_coords[k][i];
      }
    }
    pnorm.push_back(dot(*b, p, p));
    b->p_coords.push_back(std::move(p));
    b->m_coords.push_back(std::move(m));
  }
  return b;
}

const Basis& basis(int w) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Basis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[w];
  if (!slot) slot = build(w);
  return *slot;
}

QtPoly hook_product(const Partition& lambda) {
  const Partition lc = conjugate(lambda);
  QtPoly c(1);
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      const int arm = lambda[i] - j - 1;
      const int leg = lc[j] - i - 1;
      c *= QtPoly(1) - QtPoly::monomial(1, arm, leg + 1);
    }
  return c;
}

}  // namespace

QtRat power_sum_product(const Partition& a, const Partition& b) {
  if (!(a == b)) return QtRat();
  QtRat v(z_lambda(a));
  for (int part : a.parts())
    v *= QtRat(QtPoly(1) - QtPoly::monomial(1, part, 0), QtPoly(1) - QtPoly::monomial(1, 0, part));
  return v;
}

QtRat inner_product(const SymExpansion& f, const SymExpansion& g) {
  if (f.weight() != g.weight()) return QtRat();
  const Basis& b = basis(f.weight());
  auto to_p = [&](const SymExpansion& e) {
    Vec v(b.parts.size());
    for (const auto& [mu, c] : e.terms()) {
      const auto idx = static_cast<std::size_t>(std::lower_bound(b.parts.begin(), b.parts.end(), mu) - b.parts.begin());
      if (e.basis() == macdet::Basis::p) v[idx] += c;
      else if (e.basis() == macdet::Basis::m)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b.m_in_p[idx][i];
      else throw std::invalid_argument("oracle inner product takes m or p expansions");
    }
    return v;
  };
  return dot(b, to_p(f), to_p(g));
}

SymExpansion gram_schmidt_P(const Partition& lambda) {
  const Basis& b = basis(lambda.weight());
  const auto idx = static_cast<std::size_t>(std::lower_bound(b.parts.begin(), b.parts.end(), lambda) - b.parts.begin());
  SymExpansion out(macdet::Basis::m, lambda.weight());
  for (std::size_t i = 0; i < b.parts.size(); ++i) out.add_term(b.parts[i], b.m_coords[idx][i]);
  return out;
}

SymExpansion gram_schmidt_J(const Partition& lambda) { return gram_schmidt_P(lambda).scaled(QtRat(hook_product(lambda))); }

MultiPoly realize_monomials(const SymExpansion& f_m, int n) {
  if (f_m.basis() != macdet::Basis::m) throw std::invalid_argument("realize_monomials expects the m basis");
  MultiPoly out(n);
  for (const auto& [mu, c] : f_m.terms()) {
    if (mu.length() > n) continue;
    for (const auto& alpha : distinct_permutations(mu.parts(), n)) out.add_term(alpha, c);
  }
  return out;
}

}  // namespace macdet::oracle
