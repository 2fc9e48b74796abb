// Rational functions in q and t: the fraction field of QtPoly.
//
// Values are always fully reduced (gcd of numerator and denominator is a
// unit) and the denominator has a positive graded-lex leading coefficient,
// so equality is structural.

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "macdet/qt_poly.hpp"

namespace macdet {

class QtRat {
 public:
  QtRat() : den_(1) {}
  QtRat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QtRat(const mpz_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QtRat(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  QtRat(QtPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// num / den, reduced; throws std::domain_error for a zero denominator.
  QtRat(QtPoly num, QtPoly den);

  static QtRat q() { return QtRat(QtPoly::q()); }
  static QtRat t() { return QtRat(QtPoly::t()); }
  /// q^a t^b with possibly negative exponents.
  static QtRat laurent_monomial(int a, int b);

  const QtPoly& num() const { return num_; }
  const QtPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  QtRat operator-() const;
  QtRat& operator+=(const QtRat& o);
  QtRat& operator-=(const QtRat& o);
  QtRat& operator*=(const QtRat& o);
  QtRat& operator/=(const QtRat& o);
  friend QtRat operator+(QtRat a, const QtRat& b) { return a += b; }
  friend QtRat operator-(QtRat a, const QtRat& b) { return a -= b; }
  friend QtRat operator*(QtRat a, const QtRat& b) { return a *= b; }
  friend QtRat operator/(QtRat a, const QtRat& b) { return a /= b; }
  friend bool operator==(const QtRat& a, const QtRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  QtRat inverse() const;
  QtRat pow(int e) const;
  QtRat swap_qt() const;
  QtRat adams(int k) const;
  /// t -> q; throws std::domain_error if the denominator vanishes.
  QtRat with_t_equal_q() const;

  /// Cross-multiplication equality test (independent of canonical form).
  static bool cross_equal(const QtRat& a, const QtRat& b);

  /// "num" or "(num)/(den)".
  std::string to_string() const;
  static QtRat parse(std::string_view num, std::string_view den);

 private:
  struct Reduced {};
  QtRat(QtPoly num, QtPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  QtPoly num_;
  QtPoly den_;
};

}  // namespace macdet
