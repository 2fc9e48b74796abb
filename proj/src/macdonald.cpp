#include "macdet/macdonald.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace macdet {

namespace {

QtPoly qt_monomial(int dq, int dt) { return QtPoly::monomial(1, dq, dt); }

int default_length(const Partition& lambda, int n) { return n < 0 ? lambda.length() : n; }

void check_same_weight(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) throw std::invalid_argument("partitions of different weights");
}

std::vector<EntryTerm> entry_terms(const Partition& mu, const Partition& nu, int n) {
  std::vector<EntryTerm> out;
  if (mu.length() > n || nu.length() > n) return out;
  for (const auto& [alpha, e] : ordered_expansion(mu, n))
    if (sorted_partition(alpha) == nu) out.push_back({e, alpha});
  return out;
}

QtPoly evaluate_terms(const std::vector<EntryTerm>& terms, const Partition& lambda, int n, VarOrder order) {
  const QtPoly top = bracket(lambda.padded(n), n, order);
  QtPoly sum;
  for (const auto& term : terms) sum += (top - bracket(term.alpha, n, order)).scaled(mpz_class(term.coeff));
  return sum;
}

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

std::vector<Partition> without_first(const std::vector<Partition>& v) { return {v.begin() + 1, v.end()}; }

long as_integer(const QtRat& c) {
  if (!c.is_constant() || !c.den().is_one() || !c.num().constant_term().fits_slong_p())
    throw std::logic_error("expected an integer coefficient");
  return c.num().constant_term().get_si();
}

SymExpansion bordered_expansion(const EntryMatrix& m, const QtRat& scale, Kernel kernel) {
  const auto cof = symbol_row_cofactors(m.entries, kernel);
  SymExpansion out(m.basis, m.lambda.weight());
  for (std::size_t j = 0; j < m.columns.size(); ++j) out.add_term(m.columns[j], scale * QtRat(cof[j]));
  return out;
}

std::string shorthand_text(const std::vector<EntryTerm>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const long c = terms[i].coeff;
    if (c < 0) s += "-";
    else if (i > 0) s += "+";
    if (std::labs(c) != 1) s += std::to_string(std::labs(c));
    s += "[";
    for (std::size_t k = 0; k < terms[i].alpha.size(); ++k) s += (k ? "," : "") + std::to_string(terms[i].alpha[k]);
    s += "]";
  }
  return s;
}

std::string symbol_text(Basis b, const Partition& mu, bool latex) {
  const std::string idx = mu.to_string();
  if (!latex) return std::string(b == Basis::m ? "m" : "S") + "[" + idx + "]";
  switch (b) {
    case Basis::s_mod: return "S_{" + idx + "}[X^{tq}]";
    case Basis::m: return "m_{" + idx + "}[X]";
    default: return "S_{" + idx + "}[X]";
  }
}

}  // namespace

QtPoly bracket(const Composition& alpha, int n, VarOrder order) {
  if (static_cast<int>(alpha.size()) > n) throw std::invalid_argument("composition longer than the alphabet");
  QtPoly sum;
  for (int i = 1; i <= n; ++i) {
    const int a = i <= static_cast<int>(alpha.size()) ? alpha[i - 1] : 0;
    if (a < 0) throw std::invalid_argument("negative part in bracket");
    sum += order == VarOrder::qt ? qt_monomial(a, n - i) : qt_monomial(n - i, a);
  }
  return sum;
}

QtPoly entry(const Partition& lambda, const Partition& mu, const Partition& nu, int n, VarOrder order) {
  check_same_weight(lambda, mu);
  check_same_weight(lambda, nu);
  n = default_length(lambda, n);
  if (mu.length() > n || nu.length() > n) throw std::invalid_argument("partition longer than the alphabet");
  return evaluate_terms(entry_terms(mu, nu, n), lambda, n, order);
}

QtPoly c_lambda(const Partition& lambda, VarOrder order) {
  QtPoly c(1);
  for (const auto& cell : arm_leg_cells(lambda))
    c *= QtPoly(1) - (order == VarOrder::qt ? qt_monomial(cell.arm, cell.leg + 1) : qt_monomial(cell.leg + 1, cell.arm));
  return c;
}

QtPoly v_lambda(const Partition& lambda, int n) {
  n = default_length(lambda, n);
  const QtPoly top = bracket(lambda.padded(n), n);
  QtPoly v(1);
  for (const auto& mu : without_first(dominance_upset(lambda))) v *= top - bracket(mu.padded(n), n);
  return v;
}

QtPoly u_lambda(const Partition& lambda, int n) {
  const Partition lc = conjugate(lambda);
  n = default_length(lc, n);
  const QtPoly top = bracket(lc.padded(n), n);
  QtPoly u(1);
  for (const auto& mu : without_first(dominance_downset(lambda))) u *= top - bracket(conjugate(mu).padded(n), n);
  return u;
}

std::string EntryMatrix::to_text() const {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{""};
  for (const auto& mu : columns) head.push_back(symbol_text(basis, mu, false));
  cells.push_back(head);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::string> line{"(" + rows[r].to_string() + ")"};
    for (const auto& terms : shorthand[r]) line.push_back(shorthand_text(terms));
    cells.push_back(line);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  std::ostringstream out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c] << std::string(width[c] - line[c].size(), ' ');
      if (c + 1 < line.size()) out << "  ";
    }
    out << "\n";
  }
  return out.str();
}

EntryMatrix entry_matrix(const Partition& lambda) {
  EntryMatrix m;
  m.lambda = lambda;
  m.basis = Basis::s_mod;
  m.order = VarOrder::qt;
  m.columns = dominance_upset(lambda);
  m.rows = without_first(m.columns);
  const int n = lambda.length();
  for (const auto& nu : m.rows) {
    std::vector<QtPoly> vals;
    std::vector<std::vector<EntryTerm>> terms;
    for (const auto& mu : m.columns) {
      terms.push_back(entry_terms(mu, nu, n));
      vals.push_back(evaluate_terms(terms.back(), lambda, n, m.order));
    }
    m.entries.push_back(std::move(vals));
    m.shorthand.push_back(std::move(terms));
  }
  return m;
}

EntryMatrix schur_entry_matrix(const Partition& lambda) {
  EntryMatrix m;
  m.lambda = lambda;
  m.basis = Basis::s;
  m.order = VarOrder::tq;
  m.columns = dominance_downset(lambda);
  m.rows = without_first(m.columns);
  const Partition lc = conjugate(lambda);
  const int n = lc.length();
  for (const auto& nu : m.rows) {
    std::vector<QtPoly> vals;
    std::vector<std::vector<EntryTerm>> terms;
    for (const auto& mu : m.columns) {
      terms.push_back(entry_terms(conjugate(mu), conjugate(nu), n));
      vals.push_back(evaluate_terms(terms.back(), lc, n, m.order));
    }
    m.entries.push_back(std::move(vals));
    m.shorthand.push_back(std::move(terms));
  }
  return m;
}

std::map<Composition, QtRat> bracket_coefficients(const SymExpansion& f, const Partition& nu, int n) {
  if (is_modified(f.basis())) throw std::invalid_argument("bracket coefficients need a plain basis");
  if (f.weight() != nu.weight()) throw std::invalid_argument("weight mismatch in monomial bracket");
  std::map<Composition, QtRat> out;
  const SymExpansion fs = convert_basis(f, Basis::s);
  const auto perms = distinct_permutations(nu.parts(), n);
  for (const auto& [kappa, c] : fs.terms()) {
    const Partition kc = conjugate(kappa);
    const int len = std::max(n, kc.length());
    for (const auto& alpha : perms) {
      Composition padded = alpha;
      padded.resize(len, 0);
      const int e = epsilon(kc, padded);
      if (e != 0) out[alpha] += c * QtRat(e);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

QtRat monomial_bracket(const SymExpansion& f, const Partition& lambda, const Partition& nu, int n) {
  check_same_weight(lambda, nu);
  n = default_length(lambda, n);
  if (f.is_zero()) return QtRat();
  const QtPoly top = bracket(lambda.padded(n), n, VarOrder::tq);
  QtRat sum;
  for (const auto& [alpha, c] : bracket_coefficients(f, nu, n)) sum += c * QtRat(top - bracket(alpha, n, VarOrder::tq));
  return sum;
}

EntryMatrix monomial_entry_matrix(const Partition& lambda) {
  EntryMatrix m;
  m.lambda = lambda;
  m.basis = Basis::m;
  m.order = VarOrder::tq;
  m.columns = dominance_downset(lambda);
  m.rows = without_first(m.columns);
  const Partition lc = conjugate(lambda);
  const int n = lc.length();
  for (const auto& nu : m.rows) {
    std::vector<QtPoly> vals;
    std::vector<std::vector<EntryTerm>> terms;
    for (const auto& mu : m.columns) {
      std::vector<EntryTerm> row;
      for (const auto& [alpha, c] : bracket_coefficients(SymExpansion::single(Basis::m, mu), conjugate(nu), n))
        row.push_back({as_integer(c), alpha});
      // Largest composition first, as in the usual display.
      std::reverse(row.begin(), row.end());
      vals.push_back(evaluate_terms(row, lc, n, m.order));
      terms.push_back(std::move(row));
    }
    m.entries.push_back(std::move(vals));
    m.shorthand.push_back(std::move(terms));
  }
  return m;
}

namespace {

// Fraction-free elimination of the first `pivots` columns of a, with row
// pivoting.  Afterwards a is upper echelon, a[k][j] (j >= k) being the minor
// on rows 0..k and columns 0..k-1, j of the row-permuted input.  Returns the
// sign of the row permutation, or 0 if some pivot column vanishes.
int bareiss_eliminate(std::vector<std::vector<QtPoly>>& a, std::size_t pivots, Kernel kernel) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  int sign = 1;
  QtPoly prev(1);
  for (std::size_t k = 0; k < pivots; ++k) {
    std::size_t pivot = rows;
    for (std::size_t r = k; r < rows; ++r)
      if (!a[r][k].is_zero() && (pivot == rows || a[r][k].size() < a[pivot][k].size())) pivot = r;
    if (pivot == rows) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    const long first = static_cast<long>(k + 1);
    const long last = static_cast<long>(rows);
    auto update = [&](long i) {
      auto& row = a[i];
      for (std::size_t j = k + 1; j < cols; ++j) {
        QtPoly v = row[j] * a[k][k];
        if (!row[k].is_zero() && !a[k][j].is_zero()) v -= row[k] * a[k][j];
        row[j] = prev.is_one() ? std::move(v) : exact_div(v, prev);
      }
      row[k] = QtPoly();
    };
    if (kernel == Kernel::serial) {
      for (long i = first; i < last; ++i) update(i);
    } else {
      std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
      for (long i = first; i < last; ++i) {
        try {
          update(i);
        } catch (...) {
#pragma omp critical
          error = std::current_exception();
        }
      }
      if (error) std::rethrow_exception(error);
    }
    prev = a[k][k];
  }
  return sign;
}

std::vector<QtPoly> drop_column(const std::vector<QtPoly>& row, std::size_t j) {
  std::vector<QtPoly> out;
  for (std::size_t c = 0; c < row.size(); ++c)
    if (c != j) out.push_back(row[c]);
  return out;
}

}  // namespace

QtPoly bareiss_determinant(std::vector<std::vector<QtPoly>> a, Kernel kernel) {
  const std::size_t m = a.size();
  for (const auto& row : a)
    if (row.size() != m) throw std::invalid_argument("determinant of a non-square matrix");
  if (m == 0) return QtPoly(1);
  const int sign = bareiss_eliminate(a, m, kernel);
  if (sign == 0) return QtPoly();
  return sign > 0 ? a[m - 1][m - 1] : -a[m - 1][m - 1];
}

std::vector<QtPoly> symbol_row_cofactors(const std::vector<std::vector<QtPoly>>& block, Kernel kernel) {
  const std::size_t m = block.size();
  for (const auto& row : block)
    if (row.size() != m + 1) throw std::invalid_argument("cofactor block must be m x (m+1)");
  std::vector<QtPoly> c(m + 1);
  if (m == 0) {
    c[0] = QtPoly(1);
    return c;
  }
  auto u = block;
  const int sign = bareiss_eliminate(u, m, kernel);
  if (sign != 0 && !u[m - 1][m - 1].is_zero()) {
    // The cofactor vector spans the kernel of u; fix its last entry and
    // back-substitute.
    c[m] = (m % 2 == 0) == (sign > 0) ? u[m - 1][m - 1] : -u[m - 1][m - 1];
    for (std::size_t i = m; i-- > 0;) {
      QtPoly acc;
      for (std::size_t j = i + 1; j <= m; ++j)
        if (!u[i][j].is_zero() && !c[j].is_zero()) acc += u[i][j] * c[j];
      c[i] = acc.is_zero() ? QtPoly() : -exact_div(acc, u[i][i]);
    }
    return c;
  }
  // The first m columns are singular: fall back to the individual minors.
  for (std::size_t j = 0; j <= m; ++j) {
    std::vector<std::vector<QtPoly>> sub;
    for (const auto& row : block) sub.push_back(drop_column(row, j));
    const QtPoly d = bareiss_determinant(std::move(sub), kernel);
    c[j] = j % 2 == 0 ? d : -d;
  }
  return c;
}

SymExpansion macdonald_op_action(const Partition& lambda, int k, int n) {
  if (lambda.length() > n) throw std::invalid_argument("partition longer than the alphabet");
  if (k < 1 || k > n) throw std::invalid_argument("Macdonald operator index out of range");
  SymExpansion out(Basis::h_mod, lambda.weight());
  for (const auto& [alpha, e] : ordered_expansion(lambda, n)) {
    // e_k of the letters q^{alpha_j} t^{n-j}: the choices of k shifted columns.
    std::vector<QtPoly> ek(k + 1);
    ek[0] = QtPoly(1);
    for (int j = 1; j <= n; ++j) {
      const QtPoly letter = qt_monomial(alpha[j - 1], n - j);
      for (int d = std::min(j, k); d >= 1; --d) ek[d] += ek[d - 1] * letter;
    }
    out.add_term(sorted_partition(alpha), QtRat(ek[k].scaled(mpz_class(e))));
  }
  return out;
}

SymExpansion macdonald_op_apply(const SymExpansion& f, int k, int n) {
  const SymExpansion fs = convert_basis(f, Basis::s_mod);
  SymExpansion out(Basis::h_mod, f.weight());
  for (const auto& [mu, c] : fs.terms()) out += macdonald_op_action(mu, k, n).scaled(c);
  return out;
}

SymExpansion jpoly_modified_schur(const Partition& lambda, Kernel kernel) {
  const QtRat scale = QtRat(c_lambda(conjugate(lambda), VarOrder::tq)) / QtRat(v_lambda(lambda));
  return bordered_expansion(entry_matrix(lambda), scale, kernel);
}

SymExpansion jpoly_schur(const Partition& lambda) {
  const SymExpansion dual = jpoly_modified_schur(conjugate(lambda));
  SymExpansion out(Basis::s, lambda.weight());
  for (const auto& [mu, c] : dual.terms()) out.add_term(conjugate(mu), c.swap_qt());
  const QtRat lead = out.coefficient(lambda);
  const QtRat target(c_lambda(lambda));
  return lead == target ? out : out.scaled(target / lead);
}

SymExpansion jpoly_schur_direct(const Partition& lambda, Kernel kernel) {
  const QtRat scale = QtRat(c_lambda(lambda)) / QtRat(u_lambda(lambda).swap_qt());
  return bordered_expansion(schur_entry_matrix(lambda), scale, kernel);
}

SymExpansion jpoly_monomial(const Partition& lambda, Kernel kernel) {
  const QtRat scale = QtRat(c_lambda(lambda)) / QtRat(u_lambda(lambda).swap_qt());
  return bordered_expansion(monomial_entry_matrix(lambda), scale, kernel);
}

SymExpansion creation_step(const SymExpansion& f, int k) {
  if (k < 1) throw std::invalid_argument("creation operator index must be positive");
  const SymExpansion fs = convert_basis(f, Basis::s_mod);
  SymExpansion raw(Basis::h_mod, f.weight() + k);
  std::vector<int> sigma(k);
  for (const auto& [lambda, c] : fs.terms()) {
    if (lambda.length() > k) throw std::invalid_argument("creation operator needs l(lambda) <= k");
    const Composition lam = lambda.padded(k);
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      Composition parts(k);
      QtPoly coeff(permutation_sign(sigma));
      bool vanishes = false;
      for (int i = 1; i <= k && !vanishes; ++i) {
        const int j = sigma[i - 1];
        const int fij = lam[i - 1] + j - i + 1;
        if (fij < 0) vanishes = true;
        else {
          parts[i - 1] = fij;
          coeff *= QtPoly(1) - qt_monomial(fij, k - j);
        }
      }
      if (vanishes || coeff.is_zero()) continue;
      raw.add_term(sorted_partition(parts), c * QtRat(coeff));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return convert_basis(raw, Basis::s_mod);
}

SymExpansion jpoly_via_creation(const Partition& lambda) {
  SymExpansion j = SymExpansion::single(Basis::s_mod, Partition{});
  const Partition lc = conjugate(lambda);
  for (int col = lambda[0]; col >= 1; --col) j = creation_step(j, lc[col - 1]);
  return j;
}

std::string to_latex(const EntryMatrix& m) {
  std::ostringstream out;
  out << "\\left|\\begin{matrix}\n";
  for (std::size_t c = 0; c < m.columns.size(); ++c) out << (c ? " & " : "") << symbol_text(m.basis, m.columns[c], true);
  out << " \\\\\n";
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    for (std::size_t c = 0; c < m.columns.size(); ++c) out << (c ? " & " : "") << shorthand_text(m.shorthand[r][c]);
    out << (r + 1 < m.rows.size() ? " \\\\\n" : "\n");
  }
  out << "\\end{matrix}\\right|";
  return out.str();
}

}  // namespace macdet
