// Independent reference for J_lambda: Gram-Schmidt on the monomial basis for
// the (q,t) scalar product <p_a, p_b> = delta_{ab} z_a prod (1-q^{a_i})/(1-t^{a_i}).
// Uses its own m <-> p transition and normalization, nothing from the
// determinantal constructions.

#pragma once

#include "macdet/multipoly.hpp"
#include "macdet/partcomb.hpp"
#include "macdet/qt_rat.hpp"
#include "macdet/symexp.hpp"

namespace macdet::oracle {

/// <p_a, p_b>_{q,t}.
QtRat power_sum_product(const Partition& a, const Partition& b);
/// <f, g>_{q,t} for expansions in the m or p basis.
QtRat inner_product(const SymExpansion& f, const SymExpansion& g);

/// Monic P_lambda in the m basis.
SymExpansion gram_schmidt_P(const Partition& lambda);
/// J_lambda = c_lambda(q, t) P_lambda in the m basis.
SymExpansion gram_schmidt_J(const Partition& lambda);

/// sum_mu c_mu m_mu(x_1, .., x_n), expanded monomial by monomial.
MultiPoly realize_monomials(const SymExpansion& f_m, int n);

}  // namespace macdet::oracle
