#include <doctest.h>

#include <stdexcept>

#include "macdet/oracle.hpp"

using macdet::Basis;
using macdet::MultiPoly;
using macdet::Partition;
using macdet::QtPoly;
using macdet::QtRat;
using macdet::SymExpansion;
namespace oracle = macdet::oracle;

namespace {

QtPoly P(const char* s) { return QtPoly::parse(s); }

SymExpansion p(const Partition& l) { return SymExpansion::single(Basis::p, l); }

}  // namespace

TEST_CASE("power-sum scalar product") {
  CHECK(oracle::power_sum_product(Partition{1}, Partition{1}) == QtRat(P("1-q"), P("1-t")));
  CHECK(oracle::power_sum_product(Partition{2}, Partition{1, 1}).is_zero());
  CHECK(oracle::power_sum_product(Partition{1, 1}, Partition{1, 1}) ==
        QtRat(P("1-q").pow(2).scaled(2), P("1-t").pow(2)));
  CHECK(oracle::inner_product(p({2}), p({1, 1})).is_zero());
  CHECK(oracle::inner_product(p({2}), p({2})) == QtRat(P("1-q^2").scaled(2), P("1-t^2")));
  CHECK_THROWS_AS(oracle::inner_product(SymExpansion::single(Basis::s, Partition{1}), p({1})), std::invalid_argument);
}

TEST_CASE("scalar product reduces to the Hall product at q = t") {
  // m_{11} = (p_1^2 - p_2)/2, so <m_11, m_11> = (2 a^2 + 2 b)/4 with a = (1-q)/(1-t), b = (1-q^2)/(1-t^2).
  const SymExpansion m11 = SymExpansion::single(Basis::m, Partition{1, 1});
  const QtRat a(P("1-q"), P("1-t"));
  const QtRat b(P("1-q^2"), P("1-t^2"));
  CHECK(oracle::inner_product(m11, m11) == (a * a + b) * QtRat(mpq_class(1, 2)));
}

TEST_CASE("small oracle values") {
  CHECK(oracle::gram_schmidt_J(Partition{1}) == SymExpansion::single(Basis::m, Partition{1}, QtRat(P("1-t"))));
  // P_2 = m_2 + (1+q)(1-t)/(1-qt) m_11.
  SymExpansion j2(Basis::m, 2);
  j2.add_term(Partition{2}, QtRat(P("1-t") * P("1-q*t")));
  j2.add_term(Partition{1, 1}, QtRat(P("1+q") * P("1-t").pow(2)));
  CHECK(oracle::gram_schmidt_J(Partition{2}) == j2);
  // P_{1^n} = m_{1^n}.
  CHECK(oracle::gram_schmidt_P(Partition{1, 1, 1}) == SymExpansion::single(Basis::m, Partition{1, 1, 1}));
}

TEST_CASE("oracle family is orthogonal, monic and integral") {
  for (int w = 1; w <= 5; ++w) {
    const auto parts = macdet::partitions_of(w);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const SymExpansion pi = oracle::gram_schmidt_P(parts[i]);
      CHECK(pi.coefficient(parts[i]) == QtRat(1));
      for (const auto& [mu, c] : pi.terms()) CHECK(macdet::dominates(parts[i], mu));
      for (std::size_t j = 0; j < i; ++j) CHECK(oracle::inner_product(pi, oracle::gram_schmidt_P(parts[j])).is_zero());
      const SymExpansion ji = oracle::gram_schmidt_J(parts[i]);
      for (const auto& [mu, c] : ji.terms()) CHECK(c.is_polynomial());
    }
  }
}

TEST_CASE("oracle at q = t is a multiple of the Schur function") {
  for (int w = 1; w <= 5; ++w)
    for (const auto& l : macdet::partitions_of(w)) {
      const SymExpansion j = oracle::gram_schmidt_J(l).map_coefficients(
          [](const QtRat& c) { return QtRat(c.num().with_t_equal_q(), c.den().with_t_equal_q()); });
      const QtRat lead = j.coefficient(l);
      CHECK(j == macdet::convert_basis(SymExpansion::single(Basis::s, l), Basis::m).scaled(lead));
    }
}

TEST_CASE("monomial realization") {
  const MultiPoly r = oracle::realize_monomials(SymExpansion::single(Basis::m, Partition{2, 1}), 3);
  CHECK(r.size() == 6);
  CHECK(r.coefficient({0, 2, 1}) == QtRat(1));
  CHECK(oracle::realize_monomials(SymExpansion::single(Basis::m, Partition{1, 1, 1}), 2).is_zero());
  CHECK(r == macdet::realize_in_variables(SymExpansion::single(Basis::m, Partition{2, 1}), 3));
}
