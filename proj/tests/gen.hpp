// Small seeded generators for property tests.

#pragma once

#include <random>
#include <vector>

#include "macdet/multipoly.hpp"
#include "macdet/partcomb.hpp"
#include "macdet/qt_poly.hpp"

namespace gen {

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20240611);
  return r;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline macdet::QtPoly qt_poly(int max_terms = 4, int max_deg = 3, int max_coeff = 5) {
  macdet::QtPoly p;
  const int n = uniform(0, max_terms);
  for (int i = 0; i < n; ++i)
    p += macdet::QtPoly::monomial(uniform(-max_coeff, max_coeff), uniform(0, max_deg), uniform(0, max_deg));
  return p;
}

inline macdet::QtPoly nonzero_qt_poly(int max_terms = 4, int max_deg = 3, int max_coeff = 5) {
  for (;;) {
    macdet::QtPoly p = qt_poly(max_terms, max_deg, max_coeff);
    if (!p.is_zero()) return p;
  }
}

inline macdet::QtRat qt_rat() { return macdet::QtRat(qt_poly(3, 2, 3), nonzero_qt_poly(3, 2, 3)); }

inline macdet::MultiPoly multi_poly(int nvars, int max_deg, int max_terms = 5, bool rational = false) {
  macdet::MultiPoly f(nvars);
  const int n = uniform(1, max_terms);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(nvars, 0);
    int budget = uniform(0, max_deg);
    while (budget-- > 0) ++e[uniform(0, nvars - 1)];
    macdet::QtRat c = rational ? qt_rat() : macdet::QtRat(uniform(-4, 4));
    f.add_term(e, c);
  }
  return f;
}

inline macdet::Partition partition(int max_weight, int min_weight = 0) {
  const int w = uniform(min_weight, max_weight);
  auto all = macdet::partitions_of(w);
  return all[uniform(0, static_cast<int>(all.size()) - 1)];
}

}  // namespace gen
