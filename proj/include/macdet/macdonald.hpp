// Eigenvalue brackets, matrix entries and the determinantal constructions of
// the integral form Macdonald polynomials J_lambda(X; q, t).

#pragma once

#include <string>
#include <vector>

#include "macdet/partcomb.hpp"
#include "macdet/qt_poly.hpp"
#include "macdet/symexp.hpp"

namespace macdet {

/// qt: sum q^{alpha_i} t^{n-i};  tq: sum t^{alpha_i} q^{n-i}.
enum class VarOrder { qt, tq };

/// [|alpha|] with alpha padded to n; throws std::invalid_argument if
/// alpha is longer than n or has a negative part.
QtPoly bracket(const Composition& alpha, int n, VarOrder order = VarOrder::qt);

/// [lambda]_{mu nu} = sum over distinct permutations alpha of nu of
/// eps(mu, alpha) ([|lambda|] - [|alpha|]).  n < 0 means n = l(lambda).
QtPoly entry(const Partition& lambda, const Partition& mu, const Partition& nu, int n = -1,
             VarOrder order = VarOrder::qt);

/// prod over cells (1 - q^{arm} t^{leg+1}); tq swaps the variables.
QtPoly c_lambda(const Partition& lambda, VarOrder order = VarOrder::qt);
/// prod_{mu > lambda} ([|lambda|] - [|mu|]), n = l(lambda) by default.
QtPoly v_lambda(const Partition& lambda, int n = -1);
/// prod_{mu < lambda} ([|lambda'|] - [|mu'|]), n = l(lambda') by default.
QtPoly u_lambda(const Partition& lambda, int n = -1);

/// One signed shorthand term c * [alpha] = c ([|lambda|] - [|alpha|]).
struct EntryTerm {
  long coeff = 0;
  Composition alpha;
};

struct EntryMatrix {
  Partition lambda;
  /// Basis of the symbol row: s-mod, s or m.
  Basis basis = Basis::s_mod;
  /// Brackets of the numeric rows are in this order.
  VarOrder order = VarOrder::qt;
  std::vector<Partition> columns;
  std::vector<Partition> rows;
  /// entries[r][c] for the numeric rows.
  std::vector<std::vector<QtPoly>> entries;
  std::vector<std::vector<std::vector<EntryTerm>>> shorthand;

  /// Plain-text grid of the shorthand (rows labelled by their partition).
  std::string to_text() const;
};

/// Columns mu >= lambda (lambda first), rows nu > lambda, entries
/// [lambda]_{mu nu}(q, t) with n = l(lambda).
EntryMatrix entry_matrix(const Partition& lambda);
/// Columns mu <= lambda, rows nu < lambda, entries [lambda']_{mu' nu'}(t, q).
EntryMatrix schur_entry_matrix(const Partition& lambda);
/// Columns m_mu, mu <= lambda, rows nu < lambda, entries <m_mu>_{lambda' nu'}.
EntryMatrix monomial_entry_matrix(const Partition& lambda);

enum class Kernel { serial, parallel };

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
QtPoly bareiss_determinant(std::vector<std::vector<QtPoly>> a, Kernel kernel = Kernel::parallel);
/// Cofactors (-1)^j det(block without column j) of an m x (m+1) block, i.e.
/// the coefficients of the symbol row in the bordered determinant.
std::vector<QtPoly> symbol_row_cofactors(const std::vector<std::vector<QtPoly>>& block, Kernel kernel = Kernel::parallel);

/// M_k S_lambda[X^{tq}] in n variables as an h-mod expansion.  Throws
/// std::invalid_argument unless l(lambda) <= n and 1 <= k <= n.
SymExpansion macdonald_op_action(const Partition& lambda, int k, int n);
/// M_k applied by linearity to an s-mod expansion; result in h-mod.
SymExpansion macdonald_op_apply(const SymExpansion& f, int k, int n);

SymExpansion jpoly_modified_schur(const Partition& lambda, Kernel kernel = Kernel::parallel);
/// Schur expansion through omega_{q,t} applied to jpoly_modified_schur(lambda').
SymExpansion jpoly_schur(const Partition& lambda);
/// Schur expansion from the bordered determinant with entries [lambda']_{mu' nu'}(t, q).
SymExpansion jpoly_schur_direct(const Partition& lambda, Kernel kernel = Kernel::parallel);

/// <f>_{lambda nu} = sum_alpha <xbar^{rho - alpha'}, f> ([|lambda|]_{t,q} - [|alpha|]_{t,q})
/// with alpha over the distinct permutations of nu in n = l(lambda) parts.
QtRat monomial_bracket(const SymExpansion& f, const Partition& lambda, const Partition& nu, int n = -1);
/// The coefficients <xbar^{rho - alpha'}, f> of the shorthand terms [alpha].
std::map<Composition, QtRat> bracket_coefficients(const SymExpansion& f, const Partition& nu, int n);

SymExpansion jpoly_monomial(const Partition& lambda, Kernel kernel = Kernel::parallel);

/// B_k applied by linearity to an s-mod expansion; every component must have
/// length <= k.
SymExpansion creation_step(const SymExpansion& f, int k);
/// B_{lambda'_1} .. B_{lambda'_{lambda_1}} 1, the last factor acting first.
SymExpansion jpoly_via_creation(const Partition& lambda);

/// Bordered determinant in LaTeX, entries in the [alpha] shorthand.
std::string to_latex(const EntryMatrix& m);

}  // namespace macdet
