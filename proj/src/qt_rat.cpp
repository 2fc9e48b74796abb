#include "macdet/qt_rat.hpp"

#include <stdexcept>
#include <utility>

namespace macdet {

QtRat::QtRat(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}

QtRat::QtRat(QtPoly num, QtPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QtRat with zero denominator");
  canonicalize();
}

QtRat QtRat::laurent_monomial(int a, int b) {
  QtPoly num = QtPoly::monomial(1, a > 0 ? a : 0, b > 0 ? b : 0);
  QtPoly den = QtPoly::monomial(1, a < 0 ? -a : 0, b < 0 ? -b : 0);
  return QtRat(std::move(num), std::move(den), Reduced{});
}

void QtRat::canonicalize() {
  if (num_.is_zero()) {
    den_ = QtPoly(1);
    return;
  }
  if (!den_.is_one()) {
    QtPoly g = qt_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QtRat QtRat::operator-() const { return QtRat(-num_, den_, Reduced{}); }

QtRat& QtRat::operator+=(const QtRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  // Henrici: only the common factor of the denominators can cancel.
  const QtPoly g = qt_gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  } else {
    const QtPoly d1 = exact_div(den_, g);
    const QtPoly d2 = exact_div(o.den_, g);
    num_ = num_ * d2 + o.num_ * d1;
    den_ = d1 * o.den_;
    if (num_.is_zero()) {
      den_ = QtPoly(1);
      return *this;
    }
    const QtPoly g2 = qt_gcd(num_, g);
    if (!g2.is_one()) {
      num_ = exact_div(num_, g2);
      den_ = exact_div(den_, g2);
    }
  }
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

QtRat& QtRat::operator-=(const QtRat& o) { return *this += -o; }

QtRat& QtRat::operator*=(const QtRat& o) {
  if (is_zero() || o.is_zero()) return *this = QtRat();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Both operands are reduced, so cancelling across is enough.
  QtPoly g1 = o.den_.is_one() ? QtPoly(1) : qt_gcd(num_, o.den_);
  QtPoly g2 = den_.is_one() ? QtPoly(1) : qt_gcd(o.num_, den_);
  QtPoly n1 = g1.is_one() ? num_ : exact_div(num_, g1);
  QtPoly d2 = g1.is_one() ? o.den_ : exact_div(o.den_, g1);
  QtPoly n2 = g2.is_one() ? o.num_ : exact_div(o.num_, g2);
  QtPoly d1 = g2.is_one() ? den_ : exact_div(den_, g2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

QtRat& QtRat::operator/=(const QtRat& o) {
  if (o.is_zero()) throw std::domain_error("QtRat division by zero");
  return *this *= o.inverse();
}

QtRat QtRat::inverse() const {
  if (is_zero()) throw std::domain_error("QtRat division by zero");
  QtRat r(den_, num_, Reduced{});
  if (r.den_.sign() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

QtRat QtRat::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return QtRat(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Reduced{});
}

QtRat QtRat::swap_qt() const { return QtRat(num_.swap_qt(), den_.swap_qt()); }

QtRat QtRat::adams(int k) const { return QtRat(num_.adams(k), den_.adams(k)); }

QtRat QtRat::with_t_equal_q() const {
  QtPoly d = den_.with_t_equal_q();
  if (d.is_zero()) throw std::domain_error("denominator vanishes at t=q");
  return QtRat(num_.with_t_equal_q(), std::move(d));
}

bool QtRat::cross_equal(const QtRat& a, const QtRat& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

std::string QtRat::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const QtPoly& p) {
    const std::string s = p.to_string();
    return p.size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

QtRat QtRat::parse(std::string_view num, std::string_view den) { return QtRat(QtPoly::parse(num), QtPoly::parse(den)); }

}  // namespace macdet
