// Homogeneous symmetric functions as single-basis expansions.

#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "macdet/multipoly.hpp"
#include "macdet/partcomb.hpp"
#include "macdet/qt_rat.hpp"

namespace macdet {

/// s_mod / h_mod are S_lambda[X^{tq}] and products of S_j[X^{tq}].
enum class Basis { m, h, s, p, s_mod, h_mod };

std::string_view basis_tag(Basis b);
/// Accepts "m", "h", "s", "p", "s-mod", "h-mod"; throws std::invalid_argument.
Basis parse_basis(std::string_view tag);
bool is_modified(Basis b);

class SymExpansion {
 public:
  using TermMap = std::map<Partition, QtRat>;

  SymExpansion(Basis basis, int weight) : basis_(basis), weight_(weight) {}
  static SymExpansion single(Basis basis, const Partition& lambda, const QtRat& c = QtRat(1));

  Basis basis() const { return basis_; }
  int weight() const { return weight_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QtRat coefficient(const Partition& lambda) const;

  /// Throws std::invalid_argument on a weight mismatch.
  void add_term(const Partition& lambda, const QtRat& c);

  SymExpansion& operator+=(const SymExpansion& o);
  SymExpansion& operator-=(const SymExpansion& o);
  friend SymExpansion operator+(SymExpansion a, const SymExpansion& b) { return a += b; }
  friend SymExpansion operator-(SymExpansion a, const SymExpansion& b) { return a -= b; }
  friend bool operator==(const SymExpansion& a, const SymExpansion& b) {
    return a.basis_ == b.basis_ && a.weight_ == b.weight_ && a.terms_ == b.terms_;
  }

  SymExpansion scaled(const QtRat& c) const;
  /// Same coefficients under another tag (used by the omega and modified/plain
  /// relabellings).
  SymExpansion retagged(Basis b) const;
  SymExpansion map_coefficients(const std::function<QtRat(const QtRat&)>& fn) const;

  /// "(1-t)·m[1] + ..."; a weight-0 expansion renders as its coefficient.
  std::string to_text() const;
  nlohmann::json to_json() const;
  static SymExpansion from_json(const nlohmann::json& j);

 private:
  void check_compatible(const SymExpansion& o) const;

  Basis basis_;
  int weight_;
  TermMap terms_;
};

/// Signed Jacobi-Trudi expansion s_mu = sum eps(mu, alpha) h^alpha over
/// alpha in N^n, generated by the moves
/// (.., a_i, a_{i+1}, ..) -> -(.., a_{i+1} - 1, a_i + 1, ..).
std::map<Composition, int> ordered_expansion(const Partition& mu, int n);
/// eps(mu, alpha) for a composition of length n = alpha.size().
int epsilon(const Partition& mu, const Composition& alpha);

struct Straightened {
  int sign = 0;  // 0 means the determinant vanishes
  Partition shape;
};

/// det(h_{alpha_i - i + j}) = sign * s_shape.  Entries may be negative.
Straightened straighten(const std::vector<int>& alpha);

/// Exact re-expansion within {m, h, s, p} or within {s-mod, h-mod}.
SymExpansion convert_basis(const SymExpansion& f, Basis target);

/// Skew Schur function s_{lambda/mu} in the h basis.
SymExpansion skew_schur(const Partition& lambda, const Partition& mu);

/// f(x_1, .., x_n) through the power-sum expansion.
MultiPoly realize_in_variables(const SymExpansion& f, int n);
/// f[X^{tq}] with X = x_1 + .. + x_n.
MultiPoly realize_modified(const SymExpansion& f, int n);

/// Reads the coefficients of the monomials x^lambda (lambda a partition) of a
/// symmetric polynomial as an m-basis expansion of weight w.
SymExpansion monomial_coefficients(const MultiPoly& f, int w);

// ---------------------------------------------------------------------------
// Plethystic alphabets.

/// coeff * x_var, where coeff is a scalar of the lambda-ring
/// (p_k[c x] = c(q^k, t^k) x^k).
struct Letter {
  int var = 0;  // 1-based
  QtRat coeff = QtRat(1);
};

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// x_1 + .. + x_n
  static Alphabet full(int n);
  /// x_i for i in vars (1-based)
  static Alphabet of(const std::vector<int>& vars);
  /// x_{k+1} + .. + x_n
  static Alphabet complement_of_prefix(int k, int n);
  static Alphabet complement(const std::vector<int>& vars, int n);

  const std::vector<Letter>& letters() const { return letters_; }
  Alphabet operator+(const Alphabet& o) const;
  Alphabet operator-() const { return scaled(QtRat(-1)); }
  Alphabet operator-(const Alphabet& o) const { return *this + (-o); }
  /// c * A
  Alphabet scaled(const QtRat& c) const;

 private:
  std::vector<Letter> letters_;
};

MultiPoly power_sum(int k, const Alphabet& a, int nvars);
/// h_0[A], .., h_jmax[A]
std::vector<MultiPoly> complete_series(int jmax, const Alphabet& a, int nvars);
/// S_j[A]; zero for j < 0.
MultiPoly complete(int j, const Alphabet& a, int nvars);
/// Lambda_j[A] = (-1)^j S_j[-A].
MultiPoly elementary(int j, const Alphabet& a, int nvars);
/// det |S_{v_i + j - i}[A]|, the Jacobi-Trudi determinant for any integer vector.
MultiPoly schur_of(const std::vector<int>& v, const Alphabet& a, int nvars);

}  // namespace macdet
