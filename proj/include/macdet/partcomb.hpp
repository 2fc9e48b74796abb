// Partitions, compositions, dominance order and diagram statistics.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace macdet {

/// A vector of non-negative integers with explicit length.
using Composition = std::vector<int>;

class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are non-negative and weakly
  /// decreasing.  Trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based); zero beyond the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  /// Zero-padded copy of length n; throws std::invalid_argument if length() > n.
  Composition padded(int n) const;

  /// Lexicographic on the part lists.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

  /// "2,2,1"; the empty partition renders as "0".
  std::string to_string() const;
  /// Accepts "2,2,1", "0" or "" (empty).  Throws std::invalid_argument.
  static Partition parse(std::string_view text);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

Partition conjugate(const Partition& lambda);

enum class Dominance { less, equal, greater, incomparable };

/// Throws std::invalid_argument when the weights differ.
Dominance dominance_compare(const Partition& a, const Partition& b);
/// a >= b in dominance order (false for different weights).
bool dominates(const Partition& a, const Partition& b);

/// All partitions of w in ascending lexicographic order (a linear extension
/// of dominance).
std::vector<Partition> partitions_of(int w);

/// {mu : mu >= lambda}, ascending lexicographic, lambda first.
std::vector<Partition> dominance_upset(const Partition& lambda);
/// {mu : mu <= lambda}, descending lexicographic, lambda first.
std::vector<Partition> dominance_downset(const Partition& lambda);

/// All distinct rearrangements of v padded to length n, in ascending
/// lexicographic order.  Throws std::invalid_argument if v has more than n
/// positive entries.
std::vector<Composition> distinct_permutations(const std::vector<int>& v, int n);

struct CellStat {
  int row = 0;  // 0-based, bottom row first
  int col = 0;
  int arm = 0;  // cells strictly east in the same row
  int leg = 0;  // cells strictly north in the same column
};

std::vector<CellStat> arm_leg_cells(const Partition& lambda);

/// z_lambda = prod_i i^{m_i} m_i!.
mpz_class z_lambda(const Partition& lambda);

/// Partition obtained by sorting a composition decreasingly (zeros dropped).
Partition sorted_partition(const Composition& alpha);

/// Sign of the permutation sorting v into strictly decreasing order, or 0
/// when v has repeated entries.
int sort_sign(std::vector<int> v);

}  // namespace macdet
