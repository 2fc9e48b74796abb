#include <algorithm>
#include <string>

#include "macdet/macdonald.hpp"
#include "macdet/oracle.hpp"
#include "macdet/verify.hpp"
#include "suite_util.hpp"

namespace macdet::verify {

namespace {

std::vector<Partition> up_to(int max_weight, int min_weight = 1) {
  std::vector<Partition> out;
  for (int w = min_weight; w <= max_weight; ++w)
    for (auto& p : partitions_of(w)) out.push_back(std::move(p));
  return out;
}

std::string at(const Partition& lambda) { return "lambda=(" + lambda.to_string() + ")"; }

bool all_polynomial(const SymExpansion& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& kv) { return kv.second.is_polynomial(); });
}

QtRat with_t_equal_q(const QtRat& c) {
  const QtPoly den = c.den().with_t_equal_q();
  if (den.is_zero()) throw std::domain_error("denominator vanishes at t = q");
  return QtRat(c.num().with_t_equal_q(), den);
}

SymExpansion report_to(Basis b, const SymExpansion& f) { return f.basis() == b ? f : convert_basis(f, b); }

IdentityResult eigen_relation(const SuiteOptions& opt) {
  Tally tally("M_1 J_lambda = [|lambda|] J_lambda");
  for (const auto& lambda : up_to(opt.max_weight)) {
    tally.attempt(
        [&] {
          const int n = lambda.length();
          const SymExpansion j = jpoly_modified_schur(lambda);
          const SymExpansion lhs = macdonald_op_apply(j, 1, n);
          const SymExpansion rhs = convert_basis(j, Basis::h_mod).scaled(QtRat(bracket(lambda.parts(), n)));
          return lhs == rhs;
        },
        [&] { return at(lambda); });
  }
  return tally.result();
}

IdentityResult triangularity(const SuiteOptions& opt) {
  Tally tally("M_1 on S_mu[X^tq] is triangular with diagonal [|mu|]");
  for (const auto& mu : up_to(std::min(opt.max_weight, 5))) {
    tally.attempt(
        [&] {
          const int n = mu.length();
          const SymExpansion image = report_to(Basis::s_mod, macdonald_op_action(mu, 1, n));
          for (const auto& [nu, c] : image.terms())
            if (!dominates(nu, mu)) return false;
          return image.coefficient(mu) == QtRat(bracket(mu.parts(), n));
        },
        [&] { return "mu=(" + mu.to_string() + ")"; });
  }
  return tally.result();
}

IdentityResult distinct_eigenvalues(const SuiteOptions& opt) {
  Tally tally("v_lambda and u_lambda are nonzero");
  for (const auto& lambda : up_to(opt.max_weight + 1))
    tally.attempt([&] { return !v_lambda(lambda).is_zero() && !u_lambda(lambda).is_zero(); }, [&] { return at(lambda); });
  return tally.result();
}

template <class Pred>
IdentityResult per_partition(const std::string& name, int max_weight, Pred pred) {
  Tally tally(name);
  for (const auto& lambda : up_to(max_weight)) tally.attempt([&] { return pred(lambda); }, [&] { return at(lambda); });
  return tally.result();
}

}  // namespace

SuiteReport eigen_suite(const SuiteOptions& opt) {
  SuiteReport report{"eigen", opt.seed, opt.max_weight, {}};
  report.results.push_back(run_timed("eigen relation", [&] { return eigen_relation(opt); }));
  report.results.push_back(run_timed("triangular action", [&] { return triangularity(opt); }));
  report.results.push_back(run_timed("distinct eigenvalues", [&] { return distinct_eigenvalues(opt); }));
  return report;
}

SuiteReport cross_suite(const SuiteOptions& opt) {
  SuiteReport report{"cross", opt.seed, opt.max_weight, {}};
  const int w = opt.max_weight;
  auto add = [&](const std::string& name, auto pred) {
    report.results.push_back(run_timed(name, [&] { return per_partition(name, w, pred); }));
  };
  add("creation recursion equals the modified Schur determinant",
      [](const Partition& l) { return jpoly_via_creation(l) == jpoly_modified_schur(l); });
  add("Schur determinant equals the omega dual", [](const Partition& l) { return jpoly_schur_direct(l) == jpoly_schur(l); });
  add("monomial determinant equals the converted Schur expansion",
      [](const Partition& l) { return jpoly_monomial(l) == convert_basis(jpoly_schur(l), Basis::m); });
  add("realizations agree in |lambda| variables", [](const Partition& l) {
    const int n = l.weight();
    const MultiPoly a = realize_modified(jpoly_modified_schur(l), n);
    return a == realize_in_variables(jpoly_schur(l), n) && a == realize_in_variables(jpoly_monomial(l), n);
  });
  add("serial and parallel kernels agree", [](const Partition& l) {
    return jpoly_modified_schur(l, Kernel::serial) == jpoly_modified_schur(l, Kernel::parallel) &&
           jpoly_monomial(l, Kernel::serial) == jpoly_monomial(l, Kernel::parallel);
  });
  add("monomial coefficients are polynomials", [](const Partition& l) { return all_polynomial(jpoly_monomial(l)); });
  add("leading coefficients", [](const Partition& l) {
    const QtRat c(c_lambda(l));
    return jpoly_modified_schur(l).coefficient(l) == QtRat(c_lambda(conjugate(l), VarOrder::tq)) &&
           jpoly_schur(l).coefficient(l) == c && jpoly_monomial(l).coefficient(l) == c;
  });
  return report;
}

SuiteReport oracle_suite(const SuiteOptions& opt) {
  SuiteReport report{"oracle", opt.seed, opt.max_weight, {}};
  const int w = opt.max_weight;
  auto add = [&](const std::string& name, int max_weight, auto pred) {
    report.results.push_back(run_timed(name, [&] { return per_partition(name, max_weight, pred); }));
  };
  add("all constructions equal the oracle", w, [](const Partition& l) {
    const int n = l.weight();
    const MultiPoly ref = oracle::realize_monomials(oracle::gram_schmidt_J(l), n);
    return realize_modified(jpoly_modified_schur(l), n) == ref && realize_in_variables(jpoly_schur(l), n) == ref &&
           realize_in_variables(jpoly_monomial(l), n) == ref && realize_modified(jpoly_via_creation(l), n) == ref;
  });
  add("oracle P family is orthogonal", w, [](const Partition& l) {
    const SymExpansion p = oracle::gram_schmidt_P(l);
    for (const auto& mu : partitions_of(l.weight()))
      if (mu < l && !oracle::inner_product(p, oracle::gram_schmidt_P(mu)).is_zero()) return false;
    return true;
  });
  add("oracle coefficients are polynomials", w, [](const Partition& l) { return all_polynomial(oracle::gram_schmidt_J(l)); });
  add("q = t specialization", std::min(w, 5), [](const Partition& l) {
    const QtRat c(c_lambda(l).with_t_equal_q());
    const SymExpansion s = jpoly_schur(l).map_coefficients(with_t_equal_q);
    const SymExpansion o = oracle::gram_schmidt_J(l).map_coefficients(with_t_equal_q);
    const SymExpansion schur = SymExpansion::single(Basis::s, l, c);
    return s == schur && o == convert_basis(schur, Basis::m);
  });
  return report;
}

}  // namespace macdet::verify
