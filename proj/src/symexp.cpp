#include "macdet/symexp.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace macdet {

std::string_view basis_tag(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::h: return "h";
    case Basis::s: return "s";
    case Basis::p: return "p";
    case Basis::s_mod: return "s-mod";
    case Basis::h_mod: return "h-mod";
  }
  return "?";
}

Basis parse_basis(std::string_view tag) {
  for (Basis b : {Basis::m, Basis::h, Basis::s, Basis::p, Basis::s_mod, Basis::h_mod})
    if (basis_tag(b) == tag) return b;
  throw std::invalid_argument("unknown basis tag '" + std::string(tag) + "'");
}

bool is_modified(Basis b) { return b == Basis::s_mod || b == Basis::h_mod; }

// --- SymExpansion ----------------------------------------------------------

SymExpansion SymExpansion::single(Basis basis, const Partition& lambda, const QtRat& c) {
  SymExpansion f(basis, lambda.weight());
  f.add_term(lambda, c);
  return f;
}

QtRat SymExpansion::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? QtRat() : it->second;
}

void SymExpansion::add_term(const Partition& lambda, const QtRat& c) {
  if (lambda.weight() != weight_) throw std::invalid_argument("SymExpansion term of wrong weight");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SymExpansion::check_compatible(const SymExpansion& o) const {
  if (basis_ != o.basis_) throw std::invalid_argument("mixed-basis SymExpansion arithmetic");
  if (weight_ != o.weight_) throw std::invalid_argument("SymExpansion weights differ");
}

SymExpansion& SymExpansion::operator+=(const SymExpansion& o) {
  check_compatible(o);
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

SymExpansion& SymExpansion::operator-=(const SymExpansion& o) {
  check_compatible(o);
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

SymExpansion SymExpansion::scaled(const QtRat& c) const {
  SymExpansion r(basis_, weight_);
  if (c.is_zero()) return r;
  for (const auto& [p, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), p, x * c);
  return r;
}

SymExpansion SymExpansion::retagged(Basis b) const {
  SymExpansion r = *this;
  r.basis_ = b;
  return r;
}

SymExpansion SymExpansion::map_coefficients(const std::function<QtRat(const QtRat&)>& fn) const {
  SymExpansion r(basis_, weight_);
  for (const auto& [p, c] : terms_) r.add_term(p, fn(c));
  return r;
}

std::string SymExpansion::to_text() const {
  if (terms_.empty()) return "0";
  if (weight_ == 0) return terms_.begin()->second.to_string();
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != QtRat(1)) out += "(" + c.to_string() + ")·";
    out += std::string(basis_tag(basis_)) + "[" + p.to_string() + "]";
  }
  return out;
}

nlohmann::json SymExpansion::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : terms_) {
    terms.push_back({{"partition", p.parts()}, {"coeff_num", c.num().to_string()}, {"coeff_den", c.den().to_string()}});
  }
  return {{"basis", basis_tag(basis_)}, {"weight", weight_}, {"terms", std::move(terms)}};
}

SymExpansion SymExpansion::from_json(const nlohmann::json& j) {
  SymExpansion f(parse_basis(j.at("basis").get<std::string>()), j.at("weight").get<int>());
  for (const auto& term : j.at("terms")) {
    Partition p(term.at("partition").get<std::vector<int>>());
    f.add_term(p, QtRat::parse(term.at("coeff_num").get<std::string>(), term.at("coeff_den").get<std::string>()));
  }
  return f;
}

// --- Jacobi-Trudi combinatorics ----------------------------------------------

std::map<Composition, int> ordered_expansion(const Partition& mu, int n) {
  if (mu.length() > n) throw std::invalid_argument("ordered_expansion: partition longer than n");
  static std::mutex mutex;
  static std::map<std::pair<std::vector<int>, int>, std::map<Composition, int>> cache;
  const auto key = std::make_pair(mu.parts(), n);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::map<Composition, int> seen;
  std::deque<Composition> queue;
  const Composition start = mu.padded(n);
  seen.emplace(start, 1);
  queue.push_back(start);
  while (!queue.empty()) {
    Composition a = std::move(queue.front());
    queue.pop_front();
    const int sign = seen.at(a);
    for (int i = 0; i + 1 < n; ++i) {
      Composition b = a;
      b[i] = a[i + 1] - 1;
      b[i + 1] = a[i] + 1;
      if (seen.emplace(b, -sign).second) queue.push_back(std::move(b));
    }
  }
  std::map<Composition, int> out;
  for (const auto& [v, s] : seen)
    if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; })) out.emplace(v, s);
  std::lock_guard lock(mutex);
  cache.emplace(key, out);
  return out;
}

Straightened straighten(const std::vector<int>& alpha) {
  const int n = static_cast<int>(alpha.size());
  std::vector<int> beta(n);
  for (int j = 0; j < n; ++j) beta[j] = alpha[j] - j;
  const int sign = sort_sign(beta);
  if (sign == 0) return {};
  std::sort(beta.begin(), beta.end(), std::greater<>());
  std::vector<int> parts(n);
  for (int i = 0; i < n; ++i) {
    parts[i] = beta[i] + i;
    if (parts[i] < 0) return {};
  }
  return {sign, Partition(std::move(parts))};
}

int epsilon(const Partition& mu, const Composition& alpha) {
  const Straightened st = straighten(alpha);
  return st.sign != 0 && st.shape == mu ? st.sign : 0;
}

// --- Transition tables -----------------------------------------------------

namespace {

using QMat = std::vector<std::vector<mpq_class>>;

struct WeightTables {
  std::vector<Partition> parts;
  std::map<Partition, int> index;
  QMat s2h, h2s, s2m, m2s, h2p, p2h;
};

QMat invert(QMat a) {
  const std::size_t n = a.size();
  QMat inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular transition matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const mpq_class d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

void horizontal_strips(const Partition& lambda, int r, std::vector<Partition>& out) {
  const int len = lambda.length();
  std::vector<int> nu(len + 1, 0);
  std::function<void(int, int)> rec = [&](int row, int remaining) {
    if (row == len + 1) {
      if (remaining == 0) out.emplace_back(nu);
      return;
    }
    const int lo = lambda[row];
    const int hi = row == 0 ? lo + remaining : std::min(lambda[row - 1], lo + remaining);
    for (int v = lo; v <= hi; ++v) {
      nu[row] = v;
      rec(row + 1, remaining - (v - lo));
    }
  };
  rec(0, r);
}

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> v(a.parts());
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

std::unique_ptr<WeightTables> build_tables(int w) {
  auto tb = std::make_unique<WeightTables>();
  tb->parts = partitions_of(w);
  const std::size_t n = tb->parts.size();
  for (std::size_t i = 0; i < n; ++i) tb->index.emplace(tb->parts[i], static_cast<int>(i));
  const auto zero = [n] { return QMat(n, std::vector<mpq_class>(n, 0)); };

  tb->s2h = zero();
  for (std::size_t i = 0; i < n; ++i) {
    const Partition& lam = tb->parts[i];
    for (const auto& [alpha, sign] : ordered_expansion(lam, lam.length()))
      tb->s2h[i][tb->index.at(sorted_partition(alpha))] += sign;
  }

  tb->h2s = zero();
  for (std::size_t i = 0; i < n; ++i) {
    std::map<Partition, long> cur{{Partition(), 1}};
    for (int part : tb->parts[i].parts()) {
      std::map<Partition, long> next;
      for (const auto& [lam, c] : cur) {
        std::vector<Partition> strips;
        horizontal_strips(lam, part, strips);
        for (const auto& nu : strips) next[nu] += c;
      }
      cur = std::move(next);
    }
    for (const auto& [lam, c] : cur) tb->h2s[i][tb->index.at(lam)] += c;
  }

  // h_mu = sum_lambda K_{lambda mu} s_lambda and s_lambda = sum_mu K_{lambda mu} m_mu.
  tb->s2m = zero();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tb->s2m[j][i] = tb->h2s[i][j];
  tb->m2s = invert(tb->s2m);

  // h_r = sum_{rho |- r} p_rho / z_rho, multiplied out over the parts.
  std::vector<std::map<Partition, mpq_class>> hr(w + 1);
  for (int r = 0; r <= w; ++r)
    for (const auto& rho : partitions_of(r)) hr[r][rho] = mpq_class(1, 1) / mpq_class(z_lambda(rho));
  tb->h2p = zero();
  for (std::size_t i = 0; i < n; ++i) {
    std::map<Partition, mpq_class> cur{{Partition(), mpq_class(1)}};
    for (int part : tb->parts[i].parts()) {
      std::map<Partition, mpq_class> next;
      for (const auto& [a, ca] : cur)
        for (const auto& [b, cb] : hr[part]) next[merge_parts(a, b)] += ca * cb;
      cur = std::move(next);
    }
    for (const auto& [rho, c] : cur) tb->h2p[i][tb->index.at(rho)] += c;
  }
  tb->p2h = invert(tb->h2p);
  return tb;
}

const WeightTables& tables(int w) {
  if (w < 0) throw std::invalid_argument("negative weight");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<WeightTables>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[w];
  if (!slot) slot = build_tables(w);
  return *slot;
}

SymExpansion apply_table(const SymExpansion& f, const WeightTables& tb, const QMat& mat, Basis target) {
  std::vector<QtRat> acc(tb.parts.size());
  for (const auto& [lam, c] : f.terms()) {
    const auto& row = mat[tb.index.at(lam)];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) acc[j] += c * QtRat(row[j]);
  }
  SymExpansion out(target, f.weight());
  for (std::size_t j = 0; j < acc.size(); ++j) out.add_term(tb.parts[j], acc[j]);
  return out;
}

int plain_rank(Basis b) {
  switch (b) {
    case Basis::m: return 0;
    case Basis::s: return 1;
    case Basis::h: return 2;
    case Basis::p: return 3;
    default: return -1;
  }
}

}  // namespace

SymExpansion convert_basis(const SymExpansion& f, Basis target) {
  if (f.basis() == target) return f;
  const WeightTables& tb = tables(f.weight());
  if (is_modified(f.basis()) || is_modified(target)) {
    if (!is_modified(f.basis()) || !is_modified(target))
      throw std::invalid_argument("convert_basis cannot cross the modified/plain boundary; use realize_modified");
    return f.basis() == Basis::s_mod ? apply_table(f, tb, tb.s2h, Basis::h_mod) : apply_table(f, tb, tb.h2s, Basis::s_mod);
  }
  static const Basis chain[] = {Basis::m, Basis::s, Basis::h, Basis::p};
  SymExpansion cur = f;
  while (cur.basis() != target) {
    const int from = plain_rank(cur.basis());
    const int to = from < plain_rank(target) ? from + 1 : from - 1;
    const QMat* mat = nullptr;
    if (from == 0) mat = &tb.m2s;
    else if (from == 1) mat = to == 0 ? &tb.s2m : &tb.s2h;
    else if (from == 2) mat = to == 1 ? &tb.h2s : &tb.h2p;
    else mat = &tb.p2h;
    cur = apply_table(cur, tb, *mat, chain[to]);
  }
  return cur;
}

SymExpansion skew_schur(const Partition& lambda, const Partition& mu) {
  const int w = lambda.weight() - mu.weight();
  bool contained = mu.length() <= lambda.length();
  for (int i = 0; contained && i < mu.length(); ++i) contained = mu[i] <= lambda[i];
  if (!contained) return SymExpansion(Basis::h, std::max(w, 0));
  const int n = lambda.length();
  SymExpansion out(Basis::h, w);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> parts;
    bool vanish = false;
    for (int i = 0; i < n && !vanish; ++i) {
      const int idx = lambda[i] - mu[perm[i]] - i + perm[i];
      if (idx < 0) vanish = true;
      else if (idx > 0) parts.push_back(idx);
    }
    if (vanish) continue;
    std::vector<int> neg(n);
    for (int i = 0; i < n; ++i) neg[i] = -perm[i];
    std::sort(parts.begin(), parts.end(), std::greater<>());
    out.add_term(Partition(std::move(parts)), QtRat(sort_sign(neg)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// --- Realization -------------------------------------------------------------

namespace {

MultiPoly realize_power_sums(const SymExpansion& f_p, int n) {
  std::vector<MultiPoly> pk(f_p.weight() + 1, MultiPoly(n));
  for (int k = 1; k <= f_p.weight(); ++k)
    for (int i = 1; i <= n; ++i) {
      MultiPoly::Exponent e(n, 0);
      e[i - 1] = k;
      pk[k].add_term(e, QtRat(1));
    }
  MultiPoly out(n);
  for (const auto& [rho, c] : f_p.terms()) {
    MultiPoly term = MultiPoly::constant(n, c);
    for (int part : rho.parts()) term *= pk[part];
    out += term;
  }
  return out;
}

}  // namespace

MultiPoly realize_in_variables(const SymExpansion& f, int n) {
  if (is_modified(f.basis())) throw std::invalid_argument("realize_in_variables expects a plain basis");
  return realize_power_sums(convert_basis(f, Basis::p), n);
}

MultiPoly realize_modified(const SymExpansion& f, int n) {
  if (!is_modified(f.basis())) throw std::invalid_argument("realize_modified expects s-mod or h-mod");
  const SymExpansion as_h = convert_basis(f, Basis::h_mod).retagged(Basis::h);
  SymExpansion as_p = convert_basis(as_h, Basis::p);
  std::vector<QtRat> factor(f.weight() + 1);
  for (int k = 1; k <= f.weight(); ++k)
    factor[k] = QtRat(QtPoly::monomial(1, 0, k) - QtPoly(1), QtPoly::monomial(1, k, 0) - QtPoly(1));
  SymExpansion scaled(Basis::p, f.weight());
  for (const auto& [rho, c] : as_p.terms()) {
    QtRat x = c;
    for (int part : rho.parts()) x *= factor[part];
    scaled.add_term(rho, x);
  }
  return realize_power_sums(scaled, n);
}

SymExpansion monomial_coefficients(const MultiPoly& f, int w) {
  SymExpansion out(Basis::m, w);
  for (const auto& lam : partitions_of(w)) {
    if (lam.length() > f.nvars()) continue;
    out.add_term(lam, f.coefficient(lam.padded(f.nvars())));
  }
  return out;
}

// --- Alphabets ---------------------------------------------------------------

Alphabet Alphabet::full(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return of(v);
}

Alphabet Alphabet::of(const std::vector<int>& vars) {
  std::vector<Letter> letters;
  for (int v : vars) letters.push_back({v, QtRat(1)});
  return Alphabet(std::move(letters));
}

Alphabet Alphabet::complement_of_prefix(int k, int n) {
  std::vector<int> v;
  for (int i = k + 1; i <= n; ++i) v.push_back(i);
  return of(v);
}

Alphabet Alphabet::complement(const std::vector<int>& vars, int n) {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i)
    if (std::find(vars.begin(), vars.end(), i) == vars.end()) v.push_back(i);
  return of(v);
}

Alphabet Alphabet::operator+(const Alphabet& o) const {
  std::vector<Letter> letters = letters_;
  letters.insert(letters.end(), o.letters_.begin(), o.letters_.end());
  return Alphabet(std::move(letters));
}

Alphabet Alphabet::scaled(const QtRat& c) const {
  std::vector<Letter> letters = letters_;
  for (auto& l : letters) l.coeff *= c;
  return Alphabet(std::move(letters));
}

MultiPoly power_sum(int k, const Alphabet& a, int nvars) {
  MultiPoly out(nvars);
  for (const auto& l : a.letters()) {
    if (l.var < 1 || l.var > nvars) throw std::invalid_argument("alphabet letter outside the variable range");
    MultiPoly::Exponent e(nvars, 0);
    e[l.var - 1] = k;
    out.add_term(e, l.coeff.adams(k));
  }
  return out;
}

std::vector<MultiPoly> complete_series(int jmax, const Alphabet& a, int nvars) {
  std::vector<MultiPoly> h;
  h.push_back(MultiPoly::constant(nvars, QtRat(1)));
  std::vector<MultiPoly> p(jmax + 1, MultiPoly(nvars));
  for (int k = 1; k <= jmax; ++k) p[k] = power_sum(k, a, nvars);
  for (int j = 1; j <= jmax; ++j) {
    MultiPoly acc(nvars);
    for (int i = 1; i <= j; ++i) acc += p[i] * h[j - i];
    h.push_back(acc.scaled(QtRat(mpq_class(1, j))));
  }
  return h;
}

MultiPoly complete(int j, const Alphabet& a, int nvars) {
  if (j < 0) return MultiPoly(nvars);
  return complete_series(j, a, nvars)[j];
}

MultiPoly elementary(int j, const Alphabet& a, int nvars) {
  if (j < 0) return MultiPoly(nvars);
  MultiPoly h = complete(j, -a, nvars);
  return j % 2 == 0 ? h : -h;
}

MultiPoly schur_of(const std::vector<int>& v, const Alphabet& a, int nvars) {
  const int k = static_cast<int>(v.size());
  int top = 0;
  for (int i = 0; i < k; ++i) top = std::max(top, v[i] + k - 1 - i);
  const auto h = complete_series(top, a, nvars);
  std::vector<std::vector<MultiPoly>> m(k, std::vector<MultiPoly>(k, MultiPoly(nvars)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int idx = v[i] + j - i;
      if (idx >= 0) m[i][j] = h[idx];
    }
  return determinant(m, nvars);
}

}  // namespace macdet
