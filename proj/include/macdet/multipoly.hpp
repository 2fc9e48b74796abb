// Sparse polynomials in x_1..x_m with QtRat coefficients.
//
// Variable indices in this API are 1-based, matching x_1..x_m.

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "macdet/qt_rat.hpp"

namespace macdet {

class MultiPoly {
 public:
  using Exponent = std::vector<int>;
  using TermMap = std::map<Exponent, QtRat>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const QtRat& c);
  static MultiPoly variable(int nvars, int i);
  static MultiPoly monomial(int nvars, Exponent e, const QtRat& c = QtRat(1));

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  QtRat constant_value() const;
  QtRat coefficient(const Exponent& e) const;
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  int total_degree() const;
  int degree_in(int i) const;

  void add_term(const Exponent& e, const QtRat& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly scaled(const QtRat& c) const;
  MultiPoly pow(unsigned e) const;

  /// sigma: exchange x_i and x_j.
  MultiPoly swapped(int i, int j) const;
  /// x_k -> x_{image[k-1]} for every k.
  MultiPoly renamed(const std::vector<int>& image) const;
  /// x_i -> c * x_i.
  MultiPoly scale_variable(int i, const QtRat& c) const;
  /// Same polynomial viewed in n variables; throws if a dropped variable occurs.
  MultiPoly with_nvars(int n) const;
  MultiPoly map_coefficients(const std::function<QtRat(const QtRat&)>& fn) const;

  bool is_symmetric_in(int i, int j) const { return swapped(i, j) == *this; }
  bool all_coefficients_polynomial() const;

  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;

  int nvars_ = 0;
  TermMap terms_;
};

/// Exact quotient f / g by lexicographic division; throws std::logic_error
/// when the division leaves a remainder.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);

/// Determinant by permutation expansion (small matrices).
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m, int nvars);

}  // namespace macdet
