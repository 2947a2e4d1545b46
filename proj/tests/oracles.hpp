// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GS_TESTS_ORACLES_HPP_
#define GS_TESTS_ORACLES_HPP_

// Independent reference implementations used only by the test suite. These
// deliberately avoid the library's code paths: straight loops over subsets,
// membership-in-a-basis independence, and the raw defining formulas.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "gs/matroid.hpp"
#include "gs/rational.hpp"
#include "gs/subset.hpp"
#include "gs/valuation.hpp"

namespace gs::oracle {

// Rank by definition: the largest subset of s contained in some basis.
inline int brute_rank(const std::vector<Subset>& bases, Subset s) {
  int best = 0;
  for (std::uint32_t t = 0; t <= s.bits(); ++t) {
    if (!Subset(t).subset_of(s)) continue;
    for (Subset b : bases) {
      if (Subset(t).subset_of(b)) {
        best = std::max(best, Subset(t).size());
        break;
      }
    }
  }
  return best;
}

// Second derivative straight from its defining formula.
inline Rational brute_d2(const Valuation& v, int i, int j, Subset s) {
  Subset si = s.with(i), sj = s.with(j), sij = s.with(i).with(j);
  return v[sij] - v[si] - v[sj] + v[s];
}

// Substitutes by the raw ordered-triple definition plus pairwise
// nonpositivity; no sharing with check_gs.
inline bool brute_gs(const Valuation& v) {
  const int n = v.n();
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    Subset s(m);
    for (int i = 1; i <= n; ++i) {
      if (s.contains(i)) continue;
      for (int j = 1; j <= n; ++j) {
        if (j == i || s.contains(j)) continue;
        if (brute_d2(v, i, j, s) > 0) return false;
        for (int k = 1; k <= n; ++k) {
          if (k == i || k == j || s.contains(k)) continue;
          Rational lhs = brute_d2(v, i, j, s);
          Rational rhs =
              std::max(brute_d2(v, i, k, s), brute_d2(v, j, k, s));
          if (lhs > rhs) return false;
        }
      }
    }
  }
  return true;
}

inline bool brute_submodular(const Valuation& v) {
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    Subset s(m);
    for (int i = 1; i <= v.n(); ++i) {
      for (int j = i + 1; j <= v.n(); ++j) {
        if (s.contains(i) || s.contains(j)) continue;
        if (brute_d2(v, i, j, s) > 0) return false;
      }
    }
  }
  return true;
}

// Direct independence-system enumeration of all matroids on [n] (n <= 4):
// families that contain the empty set, are downward closed, and satisfy the
// independent-set exchange axiom. Returned as sorted basis families
// (maximum-cardinality members).
inline std::set<std::vector<Subset>> independence_system_matroids(int n) {
  const int subsets = 1 << n;
  std::set<std::vector<Subset>> out;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << subsets); ++pick) {
    if (!(pick & 1)) continue;  // must contain the empty set
    auto member = [&](std::uint32_t s) { return (pick >> s) & 1; };
    bool down = true;
    for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(subsets) && down;
         ++s) {
      if (!member(s)) continue;
      for (int i = 1; i <= n && down; ++i) {
        if (Subset(s).contains(i) && !member(Subset(s).without(i).bits())) {
          down = false;
        }
      }
    }
    if (!down) continue;
    bool exchange = true;
    for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(subsets) && exchange;
         ++s) {
      if (!member(s)) continue;
      for (std::uint32_t t = 0; t < static_cast<std::uint32_t>(subsets); ++t) {
        if (!member(t) || Subset(s).size() >= Subset(t).size()) continue;
        bool extends = false;
        for (int i = 1; i <= n; ++i) {
          if (Subset(t).contains(i) && !Subset(s).contains(i) &&
              member(Subset(s).with(i).bits())) {
            extends = true;
            break;
          }
        }
        if (!extends) {
          exchange = false;
          break;
        }
      }
    }
    if (!exchange) continue;
    int top = 0;
    for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(subsets); ++s) {
      if (member(s)) top = std::max(top, Subset(s).size());
    }
    std::vector<Subset> bases;
    for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(subsets); ++s) {
      if (member(s) && Subset(s).size() == top) bases.push_back(Subset(s));
    }
    out.insert(bases);
  }
  return out;
}

// Deterministic small rationals for property tests.
inline Rational random_rational(std::mt19937_64& rng, long lo, long hi,
                                long max_den) {
  long num = lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  long den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(max_den));
  return Rational(num, den);
}

inline PriceVector random_prices(std::mt19937_64& rng, int n) {
  PriceVector p = PriceVector::zero(n);
  for (int i = 0; i < n; ++i) p.p[i] = random_rational(rng, -6, 6, 3);
  return p;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
  }
  return perm;
}

}  // namespace gs::oracle

#endif  // GS_TESTS_ORACLES_HPP_
