#include <doctest.h>

#include <stdexcept>

#include "gen.hpp"
#include "macdet/divdiff.hpp"
#include "macdet/verify.hpp"

using macdet::Alphabet;
using macdet::Basis;
using macdet::MultiPoly;
using macdet::Partition;
using macdet::QtRat;
using macdet::SymExpansion;

namespace {

MultiPoly x(int n, int i) { return MultiPoly::variable(n, i); }
MultiPoly c(int n, const QtRat& v) { return MultiPoly::constant(n, v); }
QtRat tinv() { return QtRat::laurent_monomial(0, -1); }

}  // namespace

TEST_CASE("divided differences on small monomials") {
  CHECK(macdet::divided_difference(x(2, 1), 1) == c(2, 1));
  CHECK(macdet::divided_difference(x(2, 1) * x(2, 2), 1).is_zero());
  CHECK(macdet::divided_difference(x(2, 1) * x(2, 1), 1) == x(2, 1) + x(2, 2));
  CHECK(macdet::divided_difference_word(x(2, 1), macdet::longest_word(2)) == c(2, 1));
  CHECK_THROWS_AS(macdet::divided_difference(x(2, 1), 2), std::invalid_argument);
  CHECK_THROWS_AS(macdet::divided_difference(x(2, 1), 0), std::invalid_argument);
}

TEST_CASE("braid relation and nilpotence on random cubics") {
  for (int it = 0; it < 50; ++it) {
    const MultiPoly f = gen::multi_poly(3, 3, 5, false);
    CHECK(macdet::divided_difference_word(f, {1, 2, 1}) == macdet::divided_difference_word(f, {2, 1, 2}));
    CHECK(macdet::divided_difference_word(f, {2, 2}).is_zero());
  }
}

TEST_CASE("words") {
  CHECK(macdet::longest_word(3) == std::vector<int>{2, 1, 2});
  CHECK(macdet::sylvester_word(1, 3) == std::vector<int>{2, 1});
  CHECK(macdet::sylvester_word(2, 3) == std::vector<int>{1, 2});
  CHECK(macdet::sylvester_word(2, 4) == std::vector<int>{2, 1, 3, 2});
}

TEST_CASE("resultants") {
  CHECK(macdet::resultant(Alphabet::of({1}), Alphabet::of({2}), 2) == x(2, 1) - x(2, 2));
  CHECK(macdet::resultant(Alphabet::of({1}), Alphabet::of({2}).scaled(tinv()), 2) == x(2, 1) - x(2, 2).scaled(tinv()));
  CHECK(macdet::resultant(Alphabet::of({1, 2}), Alphabet::complement_of_prefix(2, 3), 3) ==
        (x(3, 1) - x(3, 3)) * (x(3, 2) - x(3, 3)));
  CHECK_THROWS_AS(macdet::resultant(Alphabet::of({1, 2}), Alphabet::of({2}), 2), std::invalid_argument);
}

TEST_CASE("chi operators on 1") {
  CHECK(macdet::chi_omega(c(2, 1), 2) == c(2, QtRat(1) + tinv()));
  CHECK(macdet::t_factorial(2) == QtRat(1) + tinv());
  CHECK(macdet::chi_slot(c(3, 1), 3, 3) == c(3, 1));
  CHECK(macdet::chi_slot(c(3, 1), 1, 3) == c(3, QtRat(1) + tinv() + tinv() * tinv()));
  CHECK_THROWS_AS(macdet::chi_slot(c(3, 1), 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(macdet::chi_block(c(3, 1), 2, 4), std::invalid_argument);
}

TEST_CASE("chi_block reproduces the adjointness table for k=1, n=2") {
  // S_I[-x_2] S_J[x_1] with I, J in {0, 1}; Sylvester summation as the oracle.
  const MultiPoly s[2][2] = {{c(2, 1), -x(2, 2)}, {c(2, 1), x(2, 1)}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const MultiPoly f = s[0][i] * s[1][j];
      CHECK(macdet::sylvester_op(f, 1, 2) == macdet::subset_sum(f, 1, 2));
      CHECK(macdet::sylvester_op(f, 1, 2) == c(2, i == 1 - j ? 1 : 0));
    }
}

TEST_CASE("theta substitutions") {
  CHECK(macdet::theta_q(x(2, 1) + x(2, 2), 1) == x(2, 1).scaled(QtRat::q()) + x(2, 2));
  CHECK(macdet::theta_q(c(2, 5), 1) == c(2, 5));
  CHECK(macdet::theta_t(x(2, 1) * x(2, 1), 1) == (x(2, 1) * x(2, 1)).scaled(QtRat::t().pow(2)));
}

TEST_CASE("scalar product duality") {
  const auto sp = macdet::dd_scalar_product(macdet::xbar({0, 1}, 2), macdet::e_product({0, 0}, 2), 2);
  CHECK(sp.is_constant);
  CHECK(sp.constant() == QtRat(1));
  const auto nc = macdet::dd_scalar_product(x(2, 1) * x(2, 1), c(2, 1), 2);
  CHECK_FALSE(nc.is_constant);
}

TEST_CASE("Macdonald operator subset sum") {
  CHECK(macdet::raw_macdonald_op(c(2, 1), 1, 2) == c(2, QtRat::t() + 1));
  CHECK(macdet::macdonald_op_dd(c(2, 1), 1, 2) == c(2, QtRat::t() + 1));
  CHECK_THROWS_AS(macdet::raw_macdonald_op(x(2, 1), 1, 2), std::invalid_argument);
  const MultiPoly f = x(2, 1) * x(2, 1) + x(2, 2) * x(2, 2);
  CHECK(macdet::raw_macdonald_op(f.scaled(QtRat::q()), 1, 2) == macdet::raw_macdonald_op(f, 1, 2).scaled(QtRat::q()));
}

TEST_CASE("M_1 on S_52[X^tq] in two variables") {
  const QtRat q = QtRat::q();
  const QtRat t = QtRat::t();
  const MultiPoly lhs = macdet::raw_macdonald_op(macdet::realize_modified(SymExpansion::single(Basis::s_mod, {5, 2}), 2), 1, 2);
  SymExpansion rhs(Basis::h_mod, 7);
  rhs.add_term({5, 2}, t * q.pow(5) + q.pow(2));
  rhs.add_term({6, 1}, -(t * q + q.pow(6)));
  CHECK(lhs == macdet::realize_modified(rhs, 2));
}

TEST_CASE("creation operator") {
  for (int k = 1; k <= 2; ++k) CHECK(macdet::raw_creation_op(MultiPoly(2), k, 2).is_zero());
  // B_1 on 1 in one variable gives (1-q) S_1[X^tq].
  const MultiPoly expected = macdet::realize_modified(SymExpansion::single(Basis::s_mod, {1}, QtRat(1) - QtRat::q()), 1);
  CHECK(macdet::raw_creation_op(c(1, 1), 1, 1) == expected);
  CHECK(macdet::creation_op_chi(c(1, 1), 1, 1) == expected);
  CHECK_THROWS_AS(macdet::raw_creation_op(x(2, 1), 1, 2), std::invalid_argument);
}

TEST_CASE("appendix identity suite") {
  macdet::verify::SuiteOptions opt;
  opt.seed = 7;
  const auto report = macdet::verify::appendix_suite(opt);
  for (const auto& r : report.results) {
    INFO(r.name << ": " << r.counterexample);
    CHECK(r.passed());
    CHECK(r.instances >= 1);
  }
}
