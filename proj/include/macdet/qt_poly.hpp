// Sparse bivariate polynomials in q and t over arbitrary-precision integers.
//
// Terms are kept sorted ascending in graded lexicographic order with q
// before t: first by total degree, then by q-degree.  The leading term is
// therefore the last stored term.  No stored coefficient is zero, so two
// polynomials are equal iff their term vectors are equal.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace macdet {

struct QtTerm {
  int dq = 0;
  int dt = 0;
  mpz_class coeff;

  friend bool operator==(const QtTerm& a, const QtTerm& b) {
    return a.dq == b.dq && a.dt == b.dt && a.coeff == b.coeff;
  }
};

/// Graded-lex comparison of exponent pairs (q before t).
inline bool grlex_less(int aq, int at, int bq, int bt) {
  const int da = aq + at;
  const int db = bq + bt;
  if (da != db) return da < db;
  return aq < bq;
}

class QtPoly {
 public:
  QtPoly() = default;
  QtPoly(long c);  // NOLINT(google-explicit-constructor)
  QtPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)

  static QtPoly monomial(const mpz_class& c, int dq, int dt);
  static QtPoly q() { return monomial(1, 1, 0); }
  static QtPoly t() { return monomial(1, 0, 1); }
  /// Builds from unsorted terms; merges duplicates and drops zeros.
  static QtPoly from_terms(std::vector<QtTerm> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Constant term value (0 if absent).
  mpz_class constant_term() const;

  int deg_q() const;
  int deg_t() const;
  int total_degree() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<QtTerm>& terms() const { return terms_; }
  const QtTerm& leading_term() const { return terms_.back(); }
  int sign() const { return terms_.empty() ? 0 : sgn(terms_.back().coeff); }

  QtPoly operator-() const;
  QtPoly& operator+=(const QtPoly& o);
  QtPoly& operator-=(const QtPoly& o);
  QtPoly& operator*=(const QtPoly& o);
  friend QtPoly operator+(QtPoly a, const QtPoly& b) { return a += b; }
  friend QtPoly operator-(QtPoly a, const QtPoly& b) { return a -= b; }
  friend QtPoly operator*(const QtPoly& a, const QtPoly& b);
  friend bool operator==(const QtPoly& a, const QtPoly& b) { return a.terms_ == b.terms_; }

  QtPoly pow(unsigned e) const;
  QtPoly scaled(const mpz_class& c) const;
  /// Divides every coefficient by c; throws std::domain_error if inexact.
  QtPoly divided_by_integer(const mpz_class& c) const;

  /// q <-> t.
  QtPoly swap_qt() const;
  /// q -> q^k, t -> t^k (the power-sum action on coefficients).
  QtPoly adams(int k) const;
  /// t -> q.
  QtPoly with_t_equal_q() const;
  mpz_class evaluate(const mpz_class& q, const mpz_class& t) const;

  /// Canonical text, ascending graded-lex order, e.g. "1-q-t+q*t".
  std::string to_string() const;
  /// Parses the canonical text (also accepts spaces and any term order).
  static QtPoly parse(std::string_view text);

 private:
  std::vector<QtTerm> terms_;
};

/// Exact quotient a / b; throws std::domain_error if b does not divide a.
QtPoly exact_div(const QtPoly& a, const QtPoly& b);
/// Quotient if b divides a exactly.
bool try_exact_div(const QtPoly& a, const QtPoly& b, QtPoly& quotient);

/// Greatest common divisor over Z[q,t], with positive graded-lex leading
/// coefficient.  Throws std::invalid_argument when both inputs are zero.
QtPoly qt_gcd(const QtPoly& a, const QtPoly& b);

/// Integer content (gcd of coefficients), non-negative.
mpz_class content(const QtPoly& a);

}  // namespace macdet
