#include "macdet/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "macdet/partcomb.hpp"

namespace macdet {

MultiPoly MultiPoly::constant(int nvars, const QtRat& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
  Exponent e(nvars, 0);
  e[i - 1] = 1;
  return monomial(nvars, std::move(e));
}

MultiPoly MultiPoly::monomial(int nvars, Exponent e, const QtRat& c) {
  if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("exponent length mismatch");
  MultiPoly p(nvars);
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

QtRat MultiPoly::constant_value() const { return coefficient(Exponent(nvars_, 0)); }

QtRat MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QtRat() : it->second;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int MultiPoly::degree_in(int i) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i - 1]);
  return d;
}

void MultiPoly::add_term(const Exponent& e, const QtRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly variable count mismatch");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.nvars_);
  MultiPoly::Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(const QtRat& c) const {
  MultiPoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, x * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(nvars_, QtRat(1));
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e != 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::swapped(int i, int j) const {
  if (i < 1 || j < 1 || i > nvars_ || j > nvars_) throw std::invalid_argument("variable index out of range");
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f[i - 1], f[j - 1]);
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

MultiPoly MultiPoly::renamed(const std::vector<int>& image) const {
  if (static_cast<int>(image.size()) != nvars_) throw std::invalid_argument("renaming length mismatch");
  MultiPoly r(nvars_);
  Exponent f(nvars_);
  for (const auto& [e, c] : terms_) {
    std::fill(f.begin(), f.end(), 0);
    for (int k = 0; k < nvars_; ++k) {
      if (image[k] < 1 || image[k] > nvars_) throw std::invalid_argument("renaming index out of range");
      f[image[k] - 1] += e[k];
    }
    r.add_term(f, c);
  }
  return r;
}

MultiPoly MultiPoly::scale_variable(int i, const QtRat& c) const {
  if (i < 1 || i > nvars_) throw std::invalid_argument("variable index out of range");
  MultiPoly r(nvars_);
  for (const auto& [e, x] : terms_) r.add_term(e, x * c.pow(e[i - 1]));
  return r;
}

MultiPoly MultiPoly::with_nvars(int n) const {
  MultiPoly r(n);
  for (const auto& [e, c] : terms_) {
    Exponent f(n, 0);
    for (int k = 0; k < nvars_; ++k) {
      if (k >= n) {
        if (e[k] != 0) throw std::invalid_argument("with_nvars would drop a used variable");
      } else {
        f[k] = e[k];
      }
    }
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

MultiPoly MultiPoly::map_coefficients(const std::function<QtRat(const QtRat&)>& fn) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
  return r;
}

bool MultiPoly::all_coefficients_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_polynomial(); });
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) s += " + ";
    first = false;
    s += "(" + it->second.to_string() + ")";
    for (int k = 0; k < nvars_; ++k) {
      if (it->first[k] == 0) continue;
      s += "*x" + std::to_string(k + 1);
      if (it->first[k] > 1) s += "^" + std::to_string(it->first[k]);
    }
  }
  return s;
}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("MultiPoly variable count mismatch");
  if (g.is_zero()) throw std::domain_error("division by zero MultiPoly");
  const int n = f.nvars();
  const auto& [glead_e, glead_c] = *g.terms().rbegin();
  MultiPoly rem = f;
  MultiPoly quo(n);
  MultiPoly::Exponent qe(n);
  while (!rem.is_zero()) {
    const auto [re, rc] = *rem.terms().rbegin();
    for (int k = 0; k < n; ++k) {
      qe[k] = re[k] - glead_e[k];
      if (qe[k] < 0) throw std::logic_error("exact_divide: nonzero remainder");
    }
    const QtRat c = rc / glead_c;
    quo.add_term(qe, c);
    MultiPoly::Exponent e(n);
    for (const auto& [ge, gc] : g.terms()) {
      for (int k = 0; k < n; ++k) e[k] = ge[k] + qe[k];
      rem.add_term(e, -(gc * c));
    }
  }
  return quo;
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m, int nvars) {
  const std::size_t k = m.size();
  if (k == 0) return MultiPoly::constant(nvars, QtRat(1));
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly total(nvars);
  do {
    std::vector<int> images(perm.begin(), perm.end());
    std::vector<int> neg(k);
    for (std::size_t i = 0; i < k; ++i) neg[i] = -perm[i];
    const int sign = sort_sign(neg);
    MultiPoly prod = MultiPoly::constant(nvars, QtRat(sign));
    for (std::size_t i = 0; i < k && !prod.is_zero(); ++i) prod *= m[i][perm[i]];
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace macdet
