#include <doctest.h>

#include <functional>
#include <numeric>

#include "gen.hpp"
#include "macdet/symexp.hpp"

using macdet::Alphabet;
using macdet::Basis;
using macdet::Composition;
using macdet::MultiPoly;
using macdet::Partition;
using macdet::QtPoly;
using macdet::QtRat;
using macdet::SymExpansion;

namespace {

int perm_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

// Column reading of the Jacobi-Trudi determinant: alpha_j = mu_{pi(j)} - pi(j) + j.
std::map<Composition, int> jt_expansion(const Partition& mu, int n) {
  std::map<Composition, int> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Composition alpha(n);
    bool ok = true;
    for (int j = 0; j < n; ++j) {
      alpha[j] = mu[perm[j]] - perm[j] + j;
      ok = ok && alpha[j] >= 0;
    }
    if (ok) out[alpha] += perm_sign(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// det(h_{alpha_i - i + j}) expanded directly in the h basis.
SymExpansion jt_determinant(const std::vector<int>& alpha) {
  const int n = static_cast<int>(alpha.size());
  const int w = std::accumulate(alpha.begin(), alpha.end(), 0);
  SymExpansion out(Basis::h, w);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> parts;
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      const int idx = alpha[i] - i + perm[i];
      if (idx < 0) ok = false;
      else if (idx > 0) parts.push_back(idx);
    }
    if (!ok) continue;
    std::sort(parts.begin(), parts.end(), std::greater<>());
    out.add_term(Partition(parts), QtRat(perm_sign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Sum over semistandard tableaux of skew shape lambda/mu with entries <= n.
MultiPoly ssyt_sum(const Partition& lambda, const Partition& mu, int n) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = mu[i]; j < lambda[i]; ++j) cells.emplace_back(i, j);
  std::map<std::pair<int, int>, int> filling;
  MultiPoly out(n);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      MultiPoly::Exponent e(n, 0);
      for (const auto& [cell, v] : filling) ++e[v - 1];
      out.add_term(e, QtRat(1));
      return;
    }
    const auto [i, j] = cells[k];
    int lo = 1;
    if (auto it = filling.find({i, j - 1}); it != filling.end()) lo = std::max(lo, it->second);
    if (auto it = filling.find({i - 1, j}); it != filling.end()) lo = std::max(lo, it->second + 1);
    for (int v = lo; v <= n; ++v) {
      filling[{i, j}] = v;
      rec(k + 1);
    }
    filling.erase({i, j});
  };
  rec(0);
  return out;
}

MultiPoly x(int n, int i) { return MultiPoly::variable(n, i); }

}  // namespace

TEST_CASE("ordered expansion examples") {
  const std::map<Composition, int> expected{{{3, 1, 1}, 1}, {{0, 4, 1}, -1}, {{0, 0, 5}, 1}, {{3, 0, 2}, -1}};
  CHECK(macdet::ordered_expansion(Partition{3, 1, 1}, 3) == expected);
  CHECK(macdet::ordered_expansion(Partition{2}, 2) == std::map<Composition, int>{{{2, 0}, 1}});
  CHECK(macdet::ordered_expansion(Partition{1, 1}, 2) == std::map<Composition, int>{{{1, 1}, 1}, {{0, 2}, -1}});
  CHECK_THROWS_AS(macdet::ordered_expansion(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("ordered expansion agrees with the Jacobi-Trudi permutation expansion") {
  for (int w = 0; w <= 6; ++w)
    for (const auto& mu : macdet::partitions_of(w))
      for (int n = mu.length(); n <= std::min(mu.length() + 2, 6); ++n)
        REQUIRE(macdet::ordered_expansion(mu, n) == jt_expansion(mu, n));
}

TEST_CASE("ordered expansion is consistent with convert_basis") {
  for (int w = 0; w <= 6; ++w) {
    for (const auto& mu : macdet::partitions_of(w)) {
      for (int n = mu.length(); n <= mu.length() + 1; ++n) {
        SymExpansion f(Basis::h, w);
        for (const auto& [alpha, sign] : macdet::ordered_expansion(mu, n))
          f.add_term(macdet::sorted_partition(alpha), QtRat(sign));
        REQUIRE(f == convert_basis(SymExpansion::single(Basis::s, mu), Basis::h));
      }
    }
  }
}

TEST_CASE("straighten examples") {
  auto st = macdet::straighten({0, 4, 1});
  CHECK(st.sign == -1);
  CHECK(st.shape == Partition{3, 1, 1});
  st = macdet::straighten({2, 1});
  CHECK(st.sign == 1);
  CHECK(st.shape == Partition{2, 1});
  CHECK(macdet::straighten({1, 2}).sign == 0);
  CHECK(jt_determinant({1, 2}).is_zero());
}

TEST_CASE("straighten matches determinant row sorting on random compositions") {
  for (int iter = 0; iter < 1000; ++iter) {
    const int len = gen::uniform(1, 4);
    std::vector<int> alpha(len, 0);
    int budget = gen::uniform(0, 8);
    while (budget-- > 0) ++alpha[gen::uniform(0, len - 1)];
    const auto st = macdet::straighten(alpha);
    const SymExpansion det = jt_determinant(alpha);
    if (st.sign == 0) {
      REQUIRE(det.is_zero());
    } else {
      REQUIRE(det == convert_basis(SymExpansion::single(Basis::s, st.shape), Basis::h).scaled(QtRat(st.sign)));
      REQUIRE(macdet::epsilon(st.shape, alpha) == st.sign);
    }
  }
}

TEST_CASE("convert_basis examples") {
  SymExpansion expected(Basis::h, 2);
  expected.add_term(Partition{1, 1}, QtRat(1));
  expected.add_term(Partition{2}, QtRat(-1));
  CHECK(convert_basis(SymExpansion::single(Basis::s, {1, 1}), Basis::h) == expected);
  CHECK(convert_basis(SymExpansion::single(Basis::m, {1}), Basis::s) == SymExpansion::single(Basis::s, {1}));
  SymExpansion h2(Basis::m, 2);
  h2.add_term(Partition{2}, QtRat(1));
  h2.add_term(Partition{1, 1}, QtRat(1));
  CHECK(convert_basis(SymExpansion::single(Basis::h, {2}), Basis::m) == h2);
  CHECK_THROWS_AS(convert_basis(SymExpansion::single(Basis::s, {1}), Basis::s_mod), std::invalid_argument);
}

TEST_CASE("convert_basis round trips") {
  const std::vector<std::pair<Basis, Basis>> paths{
      {Basis::s, Basis::h}, {Basis::m, Basis::s}, {Basis::p, Basis::h}, {Basis::m, Basis::p}, {Basis::s_mod, Basis::h_mod}};
  for (int w = 0; w <= 6; ++w)
    for (const auto& lam : macdet::partitions_of(w))
      for (const auto& [a, b] : paths) {
        const SymExpansion f = SymExpansion::single(a, lam, QtRat(QtPoly(1) - QtPoly::q()));
        REQUIRE(convert_basis(convert_basis(f, b), a) == f);
      }
}

TEST_CASE("skew Schur functions") {
  CHECK(skew_schur(Partition{2, 1}, Partition{2, 1}) == SymExpansion::single(Basis::h, Partition{}));
  CHECK(skew_schur(Partition{1}, Partition{1}) == SymExpansion::single(Basis::h, Partition{}));
  CHECK(skew_schur(Partition{2, 1}, Partition{1}) == SymExpansion::single(Basis::h, Partition{1, 1}));
  CHECK(skew_schur(Partition{2}, Partition{1, 1}).is_zero());
  for (int w = 1; w <= 5; ++w)
    for (const auto& lam : macdet::partitions_of(w))
      for (int v = 0; v < w; ++v)
        for (const auto& mu : macdet::partitions_of(v)) {
          const int n = 3;
          const SymExpansion f = skew_schur(lam, mu);
          bool contained = true;
          for (int i = 0; i < mu.length(); ++i) contained = contained && mu[i] <= lam[i];
          if (!contained) {
            REQUIRE(f.is_zero());
            continue;
          }
          REQUIRE(realize_in_variables(f, n) == ssyt_sum(lam, mu, n));
        }
}

TEST_CASE("realize_in_variables examples") {
  CHECK(realize_in_variables(SymExpansion::single(Basis::s, {1}), 2) == x(2, 1) + x(2, 2));
  CHECK(realize_in_variables(SymExpansion::single(Basis::m, {1, 1}), 1).is_zero());
  CHECK(realize_in_variables(SymExpansion::single(Basis::h, {2}), 2) ==
        x(2, 1) * x(2, 1) + x(2, 1) * x(2, 2) + x(2, 2) * x(2, 2));
}

TEST_CASE("realized Schur functions equal tableau sums") {
  for (int w = 0; w <= 5; ++w)
    for (const auto& lam : macdet::partitions_of(w))
      for (int n = 1; n <= 4; ++n)
        REQUIRE(realize_in_variables(SymExpansion::single(Basis::s, lam), n) == ssyt_sum(lam, Partition{}, n));
}

TEST_CASE("monomial coefficients of realizations reproduce the m expansion") {
  for (int w = 1; w <= 5; ++w)
    for (const auto& lam : macdet::partitions_of(w))
      for (int n = 2; n <= 4; ++n) {
        const SymExpansion f = SymExpansion::single(Basis::h, lam, QtRat(QtPoly::t()));
        const SymExpansion as_m = convert_basis(f, Basis::m);
        SymExpansion truncated(Basis::m, w);
        for (const auto& [mu, c] : as_m.terms())
          if (mu.length() <= n) truncated.add_term(mu, c);
        REQUIRE(macdet::monomial_coefficients(realize_in_variables(f, n), w) == truncated);
      }
}

TEST_CASE("realize_modified examples") {
  const QtRat q = QtRat::q();
  const QtRat t = QtRat::t();
  CHECK(realize_modified(SymExpansion::single(Basis::s_mod, {1}), 1) == x(1, 1).scaled((t - 1) / (q - 1)));
  CHECK(realize_modified(SymExpansion::single(Basis::s_mod, {}), 3) == MultiPoly::constant(3, QtRat(1)));
  const QtRat p1 = (t - 1) / (q - 1);
  const QtRat p2 = (t * t - 1) / (q * q - 1);
  const QtRat h2 = (p1 * p1 + p2) / QtRat(2);
  CHECK(realize_modified(SymExpansion::single(Basis::s_mod, {2}), 1) == (x(1, 1) * x(1, 1)).scaled(h2));
}

TEST_CASE("modified realization agrees with the plethystic alphabet") {
  const QtRat q = QtRat::q();
  const QtRat t = QtRat::t();
  const int n = 2;
  const Alphabet a = Alphabet::full(n).scaled((t - 1) / (q - 1));
  for (int w = 0; w <= 4; ++w)
    for (const auto& lam : macdet::partitions_of(w)) {
      const MultiPoly lhs = realize_modified(SymExpansion::single(Basis::s_mod, lam), n);
      REQUIRE(lhs == macdet::schur_of(lam.parts(), a, n));
    }
}

TEST_CASE("alphabet addition law") {
  const std::vector<QtRat> scalars{QtRat(1), QtRat(-1), QtRat::t(), QtRat::laurent_monomial(0, -1),
                                   (QtRat::t() - 1) / (QtRat::q() - 1)};
  for (int iter = 0; iter < 40; ++iter) {
    const int na = gen::uniform(1, 3);
    const int nb = gen::uniform(1, 3);
    const int n = na + nb;
    std::vector<macdet::Letter> la;
    std::vector<macdet::Letter> lb;
    for (int i = 1; i <= na; ++i) la.push_back({i, scalars[gen::uniform(0, 4)]});
    for (int i = na + 1; i <= n; ++i) lb.push_back({i, scalars[gen::uniform(0, 4)]});
    const Alphabet a(la);
    const Alphabet b(lb);
    const int k = gen::uniform(0, 5);
    const auto ha = macdet::complete_series(k, a, n);
    const auto hb = macdet::complete_series(k, b, n);
    MultiPoly rhs(n);
    for (int j = 0; j <= k; ++j) rhs += ha[j] * hb[k - j];
    REQUIRE(macdet::complete(k, a + b, n) == rhs);
  }
}

TEST_CASE("elementary functions of a plain alphabet") {
  const int n = 3;
  const Alphabet a = Alphabet::full(n);
  CHECK(macdet::elementary(2, a, n) == x(n, 1) * x(n, 2) + x(n, 1) * x(n, 3) + x(n, 2) * x(n, 3));
  CHECK(macdet::elementary(4, a, n).is_zero());
}

TEST_CASE("json round trip") {
  SymExpansion f(Basis::s_mod, 3);
  f.add_term(Partition{2, 1}, QtRat(QtPoly(1) - QtPoly::q(), QtPoly(1) + QtPoly::t()));
  f.add_term(Partition{3}, QtRat(-7));
  CHECK(SymExpansion::from_json(f.to_json()) == f);
  CHECK(SymExpansion::from_json(nlohmann::json::parse(f.to_json().dump())) == f);
  CHECK(SymExpansion::single(Basis::m, {1}, QtRat(QtPoly(1) - QtPoly::t())).to_text() == "(1-t)·m[1]");
  CHECK(SymExpansion::single(Basis::s_mod, {}).to_text() == "1");
}
