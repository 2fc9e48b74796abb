#include "macdet/qt_poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace macdet {

namespace {

bool term_less(const QtTerm& a, const QtTerm& b) { return grlex_less(a.dq, a.dt, b.dq, b.dt); }

// Dense univariate polynomials in t over Z, index = degree, no trailing zeros.
using UPoly = std::vector<mpz_class>;
// Polynomials in q whose coefficients are UPoly, index = q-degree.
using BPoly = std::vector<UPoly>;

void u_trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

mpz_class u_content(const UPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  u_trim(r);
  return r;
}

void u_divexact_int(UPoly& a, const mpz_class& c) {
  for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

// Exact division in Z[t]; returns false if b does not divide a.
bool u_exact_div(UPoly a, const UPoly& b, UPoly& quo) {
  quo.clear();
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  const std::size_t nb = b.size() - 1;
  quo.assign(a.size() - nb, 0);
  for (std::size_t k = a.size(); k-- > nb;) {
    if (a[k] == 0) continue;
    if (!mpz_divisible_p(a[k].get_mpz_t(), b[nb].get_mpz_t())) return false;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), a[k].get_mpz_t(), b[nb].get_mpz_t());
    const std::size_t shift = k - nb;
    for (std::size_t j = 0; j <= nb; ++j) {
      mpz_submul(a[shift + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
    quo[shift] = c;
  }
  for (const auto& x : a)
    if (x != 0) return false;
  u_trim(quo);
  return true;
}

UPoly u_prem(UPoly a, const UPoly& b) {
  const std::size_t nb = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() > nb) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - 1 - nb;
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j <= nb; ++j) {
      mpz_submul(a[shift + j].get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
    }
    u_trim(a);
  }
  return a;
}

void u_make_primitive(UPoly& a) {
  if (a.empty()) return;
  mpz_class c = u_content(a);
  if (a.back() < 0) c = -c;
  if (c != 1) u_divexact_int(a, c);
}

UPoly u_gcd_prs(UPoly a, UPoly b) {
  if (a.empty() && b.empty()) return {};
  if (a.empty()) std::swap(a, b);
  if (b.empty()) {
    if (a.back() < 0)
      for (auto& x : a) x = -x;
    return a;
  }
  mpz_class ca = u_content(a);
  mpz_class cb = u_content(b);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  u_make_primitive(a);
  u_make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (b.size() > 1) {
    UPoly r = u_prem(a, b);
    a = std::move(b);
    b = std::move(r);
    u_make_primitive(b);
  }
  UPoly g = b.empty() ? a : UPoly{1};
  u_make_primitive(g);
  for (auto& x : g) x *= c;
  return g;
}

mpz_class u_eval(const UPoly& a, const mpz_class& x) {
  mpz_class v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

mpz_class u_norm(const UPoly& a) {
  mpz_class m = 0;
  for (const auto& c : a)
    if (abs(c) > m) m = abs(c);
  return m;
}

// Digits of v in base x with symmetric residues.
UPoly xi_digits(mpz_class v, const mpz_class& x) {
  UPoly d;
  const mpz_class half = x / 2;
  mpz_class r;
  while (v != 0) {
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), x.get_mpz_t());
    if (r > half) r -= x;
    d.push_back(r);
    v -= r;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), x.get_mpz_t());
  }
  return d;
}

mpz_class heu_start(const mpz_class& nf, const mpz_class& ng, const mpz_class& lf, const mpz_class& lg) {
  const mpz_class b = 2 * std::min(nf, ng) + 29;
  const mpz_class root = 99 * sqrt(b);
  const mpz_class bound = std::min(b, root);
  const mpz_class rf = nf / abs(lf);
  const mpz_class rg = ng / abs(lg);
  const mpz_class alt = 2 * std::min(rf, rg) + 2;
  return std::max(bound, alt);
}

mpz_class heu_next(const mpz_class& x) {
  const mpz_class r = sqrt(x);
  const mpz_class rr = sqrt(r);
  return 73794 * x * rr / 27011;
}

// Heuristic gcd of primitive polynomials: gcd of integer images, lifted
// back and verified by division.
bool u_heu_gcd(const UPoly& f, const UPoly& g, UPoly& h) {
  const mpz_class nf = u_norm(f);
  const mpz_class ng = u_norm(g);
  mpz_class x = heu_start(nf, ng, f.back(), g.back());
  UPoly quo;
  for (int attempt = 0; attempt < 6; ++attempt, x = heu_next(x)) {
    const mpz_class ff = u_eval(f, x);
    const mpz_class gg = u_eval(g, x);
    if (ff == 0 || gg == 0) continue;
    mpz_class hh;
    mpz_gcd(hh.get_mpz_t(), ff.get_mpz_t(), gg.get_mpz_t());
    h = xi_digits(hh, x);
    u_make_primitive(h);
    if (h.empty()) continue;
    if (u_exact_div(f, h, quo) && u_exact_div(g, h, quo)) return true;
  }
  return false;
}

UPoly u_gcd(UPoly a, UPoly b) {
  if (a.empty() || b.empty() || a.size() == 1 || b.size() == 1) return u_gcd_prs(std::move(a), std::move(b));
  mpz_class ca = u_content(a);
  mpz_class cb = u_content(b);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  u_make_primitive(a);
  u_make_primitive(b);
  UPoly h;
  if (!u_heu_gcd(a, b, h)) h = u_gcd_prs(a, b);
  for (auto& x : h) x *= c;
  return h;
}

void b_trim(BPoly& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

BPoly to_bpoly(const QtPoly& p) {
  BPoly r(p.deg_q() + 1);
  if (p.is_zero()) return {};
  for (const auto& term : p.terms()) {
    auto& row = r[term.dq];
    if (row.size() <= static_cast<std::size_t>(term.dt)) row.resize(term.dt + 1);
    row[term.dt] = term.coeff;
  }
  for (auto& row : r) u_trim(row);
  return r;
}

QtPoly from_bpoly(const BPoly& b) {
  std::vector<QtTerm> terms;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].size(); ++j)
      if (b[i][j] != 0) terms.push_back({static_cast<int>(i), static_cast<int>(j), b[i][j]});
  return QtPoly::from_terms(std::move(terms));
}

UPoly b_content(const BPoly& a) {
  UPoly g;
  for (const auto& c : a) {
    if (c.empty()) continue;
    g = g.empty() ? c : u_gcd(g, c);
    if (g.size() == 1 && (g[0] == 1 || g[0] == -1)) break;
  }
  return g;
}

void b_make_primitive(BPoly& a) {
  if (a.empty()) return;
  UPoly c = b_content(a);
  if (c.size() == 1 && c[0] == 1) return;
  for (auto& x : a) {
    if (x.empty()) continue;
    UPoly quo;
    if (!u_exact_div(x, c, quo)) throw std::logic_error("content does not divide coefficient");
    x = std::move(quo);
  }
}

BPoly b_prem(BPoly a, const BPoly& b) {
  const std::size_t nb = b.size() - 1;
  const UPoly& lb = b.back();
  while (!a.empty() && a.size() > nb) {
    const UPoly la = a.back();
    const std::size_t shift = a.size() - 1 - nb;
    for (auto& x : a) x = u_mul(x, lb);
    for (std::size_t j = 0; j <= nb; ++j) {
      UPoly prod = u_mul(la, b[j]);
      UPoly& dst = a[shift + j];
      if (dst.size() < prod.size()) dst.resize(prod.size());
      for (std::size_t k = 0; k < prod.size(); ++k) dst[k] -= prod[k];
      u_trim(dst);
    }
    b_trim(a);
  }
  return a;
}

}  // namespace

QtPoly::QtPoly(long c) {
  if (c != 0) terms_.push_back({0, 0, mpz_class(c)});
}

QtPoly::QtPoly(const mpz_class& c) {
  if (c != 0) terms_.push_back({0, 0, c});
}

QtPoly QtPoly::monomial(const mpz_class& c, int dq, int dt) {
  if (dq < 0 || dt < 0) throw std::invalid_argument("negative exponent in QtPoly");
  QtPoly p;
  if (c != 0) p.terms_.push_back({dq, dt, c});
  return p;
}

QtPoly QtPoly::from_terms(std::vector<QtTerm> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  QtPoly p;
  for (auto& term : terms) {
    if (term.dq < 0 || term.dt < 0) throw std::invalid_argument("negative exponent in QtPoly");
    if (!p.terms_.empty() && p.terms_.back().dq == term.dq && p.terms_.back().dt == term.dt) {
      p.terms_.back().coeff += term.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (term.coeff != 0) {
      p.terms_.push_back(std::move(term));
    }
  }
  return p;
}

bool QtPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].dq == 0 && terms_[0].dt == 0);
}

bool QtPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].dq == 0 && terms_[0].dt == 0 && terms_[0].coeff == 1;
}

mpz_class QtPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].dq == 0 && terms_[0].dt == 0) return terms_[0].coeff;
  return 0;
}

int QtPoly::deg_q() const {
  int d = 0;
  for (const auto& term : terms_) d = std::max(d, term.dq);
  return d;
}

int QtPoly::deg_t() const {
  int d = 0;
  for (const auto& term : terms_) d = std::max(d, term.dt);
  return d;
}

int QtPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.back().dq + terms_.back().dt;
}

QtPoly QtPoly::operator-() const {
  QtPoly r = *this;
  for (auto& term : r.terms_) term.coeff = -term.coeff;
  return r;
}

namespace {

template <bool Subtract>
std::vector<QtTerm> merge_terms(const std::vector<QtTerm>& a, const std::vector<QtTerm>& b) {
  std::vector<QtTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && term_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_less(b[j], a[i])) {
      out.push_back(b[j++]);
      if constexpr (Subtract) out.back().coeff = -out.back().coeff;
    } else {
      mpz_class c;
      if constexpr (Subtract) c = a[i].coeff - b[j].coeff; else c = a[i].coeff + b[j].coeff;
      if (c != 0) out.push_back({a[i].dq, a[i].dt, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

QtPoly& QtPoly::operator+=(const QtPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms<false>(terms_, o.terms_);
  return *this;
}

QtPoly& QtPoly::operator-=(const QtPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms<true>(terms_, o.terms_);
  return *this;
}

QtPoly operator*(const QtPoly& a, const QtPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  const int rq = a.deg_q() + b.deg_q() + 1;
  const int rt = a.deg_t() + b.deg_t() + 1;
  const std::size_t products = a.size() * b.size();
  const std::size_t grid = static_cast<std::size_t>(rq) * static_cast<std::size_t>(rt);
  if (products >= grid / 2 && grid <= (1u << 22)) {
    std::vector<mpz_class> acc(grid);
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_)
        mpz_addmul(acc[(x.dq + y.dq) * rt + (x.dt + y.dt)].get_mpz_t(), x.coeff.get_mpz_t(),
                   y.coeff.get_mpz_t());
    QtPoly r;
    // Walk the grid in ascending graded-lex order.
    for (int d = 0; d <= rq + rt - 2; ++d) {
      for (int i = std::max(0, d - (rt - 1)); i <= std::min(d, rq - 1); ++i) {
        auto& c = acc[i * rt + (d - i)];
        if (c != 0) r.terms_.push_back({i, d - i, std::move(c)});
      }
    }
    return r;
  }
  std::vector<QtTerm> raw;
  raw.reserve(products);
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) raw.push_back({x.dq + y.dq, x.dt + y.dt, x.coeff * y.coeff});
  return QtPoly::from_terms(std::move(raw));
}

QtPoly& QtPoly::operator*=(const QtPoly& o) {
  *this = *this * o;
  return *this;
}

QtPoly QtPoly::pow(unsigned e) const {
  QtPoly result(1);
  QtPoly base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e != 0) base *= base;
  }
  return result;
}

QtPoly QtPoly::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  QtPoly r = *this;
  for (auto& term : r.terms_) term.coeff *= c;
  return r;
}

QtPoly QtPoly::divided_by_integer(const mpz_class& c) const {
  if (c == 0) throw std::domain_error("division by zero");
  QtPoly r = *this;
  for (auto& term : r.terms_) {
    if (!mpz_divisible_p(term.coeff.get_mpz_t(), c.get_mpz_t()))
      throw std::domain_error("inexact integer division of QtPoly");
    mpz_divexact(term.coeff.get_mpz_t(), term.coeff.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

QtPoly QtPoly::swap_qt() const {
  std::vector<QtTerm> terms;
  terms.reserve(terms_.size());
  for (const auto& term : terms_) terms.push_back({term.dt, term.dq, term.coeff});
  return from_terms(std::move(terms));
}

QtPoly QtPoly::adams(int k) const {
  if (k == 1) return *this;
  QtPoly r = *this;
  for (auto& term : r.terms_) {
    term.dq *= k;
    term.dt *= k;
  }
  return r;
}

QtPoly QtPoly::with_t_equal_q() const {
  std::vector<QtTerm> terms;
  terms.reserve(terms_.size());
  for (const auto& term : terms_) terms.push_back({term.dq + term.dt, 0, term.coeff});
  return from_terms(std::move(terms));
}

mpz_class QtPoly::evaluate(const mpz_class& q, const mpz_class& t) const {
  mpz_class sum = 0;
  for (const auto& term : terms_) {
    mpz_class qp;
    mpz_class tp;
    mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), term.dq);
    mpz_pow_ui(tp.get_mpz_t(), t.get_mpz_t(), term.dt);
    sum += term.coeff * qp * tp;
  }
  return sum;
}

std::string QtPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : terms_) {
    const bool negative = term.coeff < 0;
    mpz_class mag = abs(term.coeff);
    if (negative) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    const bool is_const = term.dq == 0 && term.dt == 0;
    bool need_star = false;
    if (mag != 1 || is_const) {
      out += mag.get_str();
      need_star = true;
    }
    auto emit = [&](char var, int e) {
      if (e == 0) return;
      if (need_star) out += "*";
      out += var;
      if (e > 1) out += "^" + std::to_string(e);
      need_star = true;
    };
    emit('q', term.dq);
    emit('t', term.dt);
  }
  return out;
}

QtPoly QtPoly::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  std::vector<QtTerm> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("malformed polynomial text: " + s);
    mpz_class coeff = 1;
    int dq = 0;
    int dt = 0;
    std::size_t i = 0;
    while (i < term.size()) {
      std::size_t j = term.find('*', i);
      if (j == std::string::npos) j = term.size();
      const std::string factor = term.substr(i, j - i);
      if (factor.empty()) throw std::invalid_argument("malformed polynomial text: " + s);
      if (factor[0] == 'q' || factor[0] == 't') {
        int e = 1;
        if (factor.size() > 1) {
          if (factor[1] != '^' || factor.size() < 3) throw std::invalid_argument("malformed exponent: " + factor);
          e = std::stoi(factor.substr(2));
        }
        (factor[0] == 'q' ? dq : dt) += e;
      } else {
        for (char c : factor)
          if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("malformed coefficient: " + factor);
        coeff *= mpz_class(factor);
      }
      i = j + 1;
    }
    terms.push_back({dq, dt, coeff * sign});
    pos = end;
  }
  return from_terms(std::move(terms));
}

bool try_exact_div(const QtPoly& a, const QtPoly& b, QtPoly& quotient) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  quotient = QtPoly();
  if (a.is_zero()) return true;
  if (b.is_one()) {
    quotient = a;
    return true;
  }
  if (b.is_constant()) {
    const mpz_class c = b.constant_term();
    for (const auto& term : a.terms())
      if (!mpz_divisible_p(term.coeff.get_mpz_t(), c.get_mpz_t())) return false;
    quotient = a.divided_by_integer(c);
    return true;
  }
  const int aq = a.deg_q();
  const int at = a.deg_t();
  const int bq_max = b.deg_q();
  const int bt_max = b.deg_t();
  if (bq_max > aq || bt_max > at) return false;
  const QtTerm& lead = b.leading_term();
  const int width = at + 1;
  std::vector<mpz_class> rem(static_cast<std::size_t>(aq + 1) * width);
  for (const auto& term : a.terms()) rem[term.dq * width + term.dt] = term.coeff;
  std::vector<QtTerm> quo;
  mpz_class c;
  for (int d = aq + at; d >= 0; --d) {
    for (int i = std::min(d, aq); i >= std::max(0, d - at); --i) {
      mpz_class& r = rem[i * width + (d - i)];
      if (r == 0) continue;
      const int mq = i - lead.dq;
      const int mt = d - i - lead.dt;
      if (mq < 0 || mt < 0 || mq > aq - bq_max || mt > at - bt_max) return false;
      if (!mpz_divisible_p(r.get_mpz_t(), lead.coeff.get_mpz_t())) return false;
      mpz_divexact(c.get_mpz_t(), r.get_mpz_t(), lead.coeff.get_mpz_t());
      for (const auto& bt : b.terms()) {
        mpz_submul(rem[(mq + bt.dq) * width + (mt + bt.dt)].get_mpz_t(), c.get_mpz_t(), bt.coeff.get_mpz_t());
      }
      quo.push_back({mq, mt, c});
    }
  }
  std::reverse(quo.begin(), quo.end());
  quotient = QtPoly::from_terms(std::move(quo));
  return true;
}

QtPoly exact_div(const QtPoly& a, const QtPoly& b) {
  QtPoly quotient;
  if (!try_exact_div(a, b, quotient)) throw std::domain_error("inexact QtPoly division");
  return quotient;
}

mpz_class content(const QtPoly& a) {
  mpz_class g = 0;
  for (const auto& term : a.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

mpz_class qt_norm(const QtPoly& p) {
  mpz_class m = 0;
  for (const auto& term : p.terms())
    if (abs(term.coeff) > m) m = abs(term.coeff);
  return m;
}

// p at t = x, as a polynomial in q.
UPoly eval_t(const QtPoly& p, const mpz_class& x) {
  std::vector<mpz_class> xp(p.deg_t() + 1);
  xp[0] = 1;
  for (std::size_t i = 1; i < xp.size(); ++i) xp[i] = xp[i - 1] * x;
  UPoly r(p.deg_q() + 1);
  for (const auto& term : p.terms()) mpz_addmul(r[term.dq].get_mpz_t(), term.coeff.get_mpz_t(), xp[term.dt].get_mpz_t());
  u_trim(r);
  return r;
}

bool qt_heu_gcd(const QtPoly& f, const QtPoly& g, QtPoly& h) {
  mpz_class x = heu_start(qt_norm(f), qt_norm(g), f.leading_term().coeff, g.leading_term().coeff);
  QtPoly quo;
  for (int attempt = 0; attempt < 6; ++attempt, x = heu_next(x)) {
    const UPoly ff = eval_t(f, x);
    const UPoly gg = eval_t(g, x);
    if (ff.empty() || gg.empty()) continue;
    const UPoly hh = u_gcd(ff, gg);
    std::vector<QtTerm> terms;
    for (std::size_t i = 0; i < hh.size(); ++i) {
      const UPoly digits = xi_digits(hh[i], x);
      for (std::size_t j = 0; j < digits.size(); ++j)
        if (digits[j] != 0) terms.push_back({static_cast<int>(i), static_cast<int>(j), digits[j]});
    }
    if (terms.empty()) continue;
    h = QtPoly::from_terms(std::move(terms));
    const mpz_class c = content(h);
    if (c != 1) h = h.divided_by_integer(c);
    if (try_exact_div(f, h, quo) && try_exact_div(g, h, quo)) return true;
  }
  return false;
}

}  // namespace

QtPoly qt_gcd(const QtPoly& a, const QtPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("qt_gcd of two zero polynomials");
  auto normalize = [](QtPoly g) { return g.sign() < 0 ? -g : g; };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  if (a.is_constant() || b.is_constant()) {
    mpz_class ca = content(a);
    mpz_class cb = content(b);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return QtPoly(g);
  }
  if (a == b) return normalize(a);
  {
    mpz_class ca = content(a);
    mpz_class cb = content(b);
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    QtPoly h;
    if (qt_heu_gcd(a.divided_by_integer(ca), b.divided_by_integer(cb), h)) return normalize(h.scaled(c));
  }

  BPoly pa = to_bpoly(a);
  BPoly pb = to_bpoly(b);
  UPoly ca = b_content(pa);
  UPoly cb = b_content(pb);
  UPoly cont = u_gcd(ca, cb);
  b_make_primitive(pa);
  b_make_primitive(pb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (pb.size() > 1) {
    BPoly r = b_prem(pa, pb);
    pa = std::move(pb);
    pb = std::move(r);
    b_make_primitive(pb);
  }
  BPoly g = pb.empty() ? pa : BPoly{UPoly{1}};
  b_make_primitive(g);
  for (auto& x : g) x = u_mul(x, cont);
  return normalize(from_bpoly(g));
}

}  // namespace macdet
