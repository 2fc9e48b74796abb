#include "macdet/partcomb.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace macdet {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition with negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Partition::padded(int n) const {
  if (length() > n) throw std::invalid_argument("partition longer than requested length");
  Composition c(parts_);
  c.resize(n, 0);
  return c;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    for (char c : cur)
      if (c < '0' || c > '9') throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    if (cur.size() > 6) throw std::invalid_argument("partition part too large");
    parts.push_back(std::stoi(cur));
    cur.clear();
  };
  std::string trimmed;
  for (char c : text)
    if (c != ' ') trimmed += c;
  if (trimmed.empty()) return Partition();
  for (char c : trimmed) {
    if (c == ',') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(lambda.empty() ? 0 : lambda[0], 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[j];
  return Partition(std::move(out));
}

Dominance dominance_compare(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) throw std::invalid_argument("dominance_compare: unequal weights");
  if (a == b) return Dominance::equal;
  bool a_le = true;
  bool b_le = true;
  int sa = 0;
  int sb = 0;
  const int len = std::max(a.length(), b.length());
  for (int i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) a_le = false;
    if (sb > sa) b_le = false;
  }
  if (a_le) return Dominance::less;
  if (b_le) return Dominance::greater;
  return Dominance::incomparable;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return false;
  const Dominance d = dominance_compare(a, b);
  return d == Dominance::greater || d == Dominance::equal;
}

std::vector<Partition> partitions_of(int w) {
  if (w < 0) throw std::invalid_argument("negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(w, w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> dominance_upset(const Partition& lambda) {
  std::vector<Partition> out;
  for (auto& mu : partitions_of(lambda.weight()))
    if (dominates(mu, lambda)) out.push_back(std::move(mu));
  return out;
}

std::vector<Partition> dominance_downset(const Partition& lambda) {
  std::vector<Partition> out;
  auto all = partitions_of(lambda.weight());
  for (auto it = all.rbegin(); it != all.rend(); ++it)
    if (dominates(lambda, *it)) out.push_back(*it);
  return out;
}

std::vector<Composition> distinct_permutations(const std::vector<int>& v, int n) {
  Composition c;
  for (int x : v) {
    if (x < 0) throw std::invalid_argument("negative entry in composition");
    if (x > 0) c.push_back(x);
  }
  if (static_cast<int>(c.size()) > n) throw std::invalid_argument("more positive entries than slots");
  c.resize(n, 0);
  std::sort(c.begin(), c.end());
  std::vector<Composition> out;
  do {
    out.push_back(c);
  } while (std::next_permutation(c.begin(), c.end()));
  return out;
}

std::vector<CellStat> arm_leg_cells(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  std::vector<CellStat> out;
  out.reserve(lambda.weight());
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) out.push_back({i, j, lambda[i] - j - 1, conj[j] - i - 1});
  return out;
}

mpz_class z_lambda(const Partition& lambda) {
  mpz_class z = 1;
  const auto& p = lambda.parts();
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    const unsigned long mult = j - i;
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), mult);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p[i]), mult);
    z *= f * pw;
    i = j;
  }
  return z;
}

Partition sorted_partition(const Composition& alpha) {
  std::vector<int> v(alpha);
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

int sort_sign(std::vector<int> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
      if (v[j] == v[j + 1]) return 0;
      if (v[j] < v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1]) return 0;
  return sign;
}

}  // namespace macdet
