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

#ifndef GS_MATROID_HPP_
#define GS_MATROID_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gs/rational.hpp"
#include "gs/subset.hpp"
#include "gs/substitutes.hpp"
#include "gs/valuation.hpp"

namespace gs {

// A matroid given by its basis family. Loops are implicit (elements in no
// basis). Bases are kept sorted by mask.
struct Matroid {
  int n = 0;
  int rank = 0;
  std::vector<Subset> bases;
};

struct WeightedMatroid {
  Matroid matroid;
  std::vector<Rational> weights;  // nonnegative, one per element
};

// Basis exchange: for all A, B in the family and x in A \ B there is
// y in B \ A with (A \ x) u y in the family. Throws on mixed cardinalities
// or an empty family.
inline bool check_basis_exchange(int n, const std::vector<Subset>& family) {
  if (family.empty()) {
    throw std::invalid_argument("basis family must be nonempty");
  }
  int card = family.front().size();
  for (Subset b : family) {
    if (b.size() != card || !b.subset_of(Subset::full(n))) {
      throw std::invalid_argument("basis family must have equal-cardinality members over [n]");
    }
  }
  std::set<Subset> members(family.begin(), family.end());
  for (Subset a : members) {
    for (Subset b : members) {
      for (int x : (a - b).items()) {
        bool found = false;
        for (int y : (b - a).items()) {
          if (members.count(a.without(x).with(y))) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

inline Matroid make_matroid(int n, std::vector<Subset> bases) {
  if (!check_basis_exchange(n, bases)) {
    throw std::invalid_argument("basis family fails the exchange property");
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return Matroid{n, bases.front().size(), std::move(bases)};
}

inline Matroid uniform_matroid(int n, int rank) {
  std::vector<Subset> bases;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (Subset(m).size() == rank) bases.push_back(Subset(m));
  }
  return make_matroid(n, std::move(bases));
}

namespace detail {

// indep[S] = 1 iff S is contained in some basis.
inline std::vector<char> independence_table(const Matroid& m) {
  std::vector<char> indep(std::size_t{1} << m.n, 0);
  for (Subset b : m.bases) {
    std::uint32_t sub = b.bits();
    while (true) {
      indep[sub] = 1;
      if (sub == 0) break;
      sub = (sub - 1) & b.bits();
    }
  }
  return indep;
}

}  // namespace detail

// r(S) = size of the largest independent subset of S.
inline Valuation rank_function(const Matroid& m) {
  std::vector<char> indep = detail::independence_table(m);
  std::vector<int> r(indep.size(), 0);
  for (std::uint32_t s = 1; s < indep.size(); ++s) {
    if (indep[s]) {
      r[s] = Subset(s).size();
      continue;
    }
    int best = 0;
    for (int i = 1; i <= m.n; ++i) {
      if (Subset(s).contains(i)) {
        best = std::max(best, r[Subset(s).without(i).bits()]);
      }
    }
    r[s] = best;
  }
  Valuation v(m.n);
  for (std::uint32_t s = 0; s < indep.size(); ++s) {
    v.set(Subset(s), Rational(r[s]));
  }
  return v;
}

// r(S) - sum_{i in S} r(i); marginals land in {-1, 0}.
inline Valuation normalized_rank(const Matroid& m) {
  return normalize(rank_function(m)).first;
}

// True iff v(empty) = 0, every first marginal is 0 or 1, and v passes the
// substitutes test. Exactly the rank functions of matroids.
inline bool is_matroid_rank_valuation(const Valuation& v) {
  if (v[Subset()] != 0) return false;
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    Subset s(m);
    for (int i = 1; i <= v.n(); ++i) {
      if (s.contains(i)) continue;
      Rational step = d1(v, i, s);
      if (step != 0 && step != 1) return false;
    }
  }
  return v.n() == 0 || check_gs(v).gs();
}

struct MatroidCatalog {
  int n = 0;
  std::vector<Matroid> entries;
  // Filled by isomorphism_classes: entry -> class id, plus one canonical
  // labeled representative (lexicographically minimal basis list) per class.
  std::vector<int> iso_class;
  std::vector<std::vector<Subset>> canonical_forms;
};

// Every matroid on [n], enumerated per rank over all nonempty families of
// r-subsets and filtered by basis exchange. Deterministic: entries sorted by
// (rank, basis list). n <= 5 is the designed range; n = 6 works but is slow.
inline MatroidCatalog enumerate_matroids(int n) {
  if (n < 0 || n > 6) {
    throw std::invalid_argument("matroid enumeration supports 0 <= n <= 6");
  }
  MatroidCatalog catalog;
  catalog.n = n;
  for (int rank = 0; rank <= n; ++rank) {
    std::vector<Subset> rsubs;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      if (Subset(m).size() == rank) rsubs.push_back(Subset(m));
    }
    const std::size_t k = rsubs.size();
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << k); ++pick) {
      std::vector<Subset> family;
      for (std::size_t i = 0; i < k; ++i) {
        if ((pick >> i) & 1) family.push_back(rsubs[i]);
      }
      if (check_basis_exchange(n, family)) {
        catalog.entries.push_back(Matroid{n, rank, std::move(family)});
      }
    }
  }
  std::sort(catalog.entries.begin(), catalog.entries.end(),
            [](const Matroid& a, const Matroid& b) {
              if (a.rank != b.rank) return a.rank < b.rank;
              return a.bases < b.bases;
            });
  return catalog;
}

namespace detail {

inline std::vector<Subset> permuted_basis_list(const std::vector<Subset>& bases,
                                               const std::vector<int>& perm) {
  std::vector<Subset> out;
  out.reserve(bases.size());
  for (Subset b : bases) {
    Subset img;
    for (int i : b.items()) img = img.with(perm[i - 1]);
    out.push_back(img);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Subset> canonical_basis_list(int n,
                                                const std::vector<Subset>& bases) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Subset> best = permuted_basis_list(bases, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<Subset> img = permuted_basis_list(bases, perm);
    if (img < best) best = img;
  }
  return best;
}

}  // namespace detail

// Partitions the catalog under item relabeling; fills iso_class and
// canonical_forms and returns the class count.
inline int isomorphism_classes(MatroidCatalog& catalog) {
  std::map<std::vector<Subset>, int> classes;
  catalog.iso_class.assign(catalog.entries.size(), -1);
  catalog.canonical_forms.clear();
  for (std::size_t e = 0; e < catalog.entries.size(); ++e) {
    std::vector<Subset> canon =
        detail::canonical_basis_list(catalog.n, catalog.entries[e].bases);
    auto [it, inserted] =
        classes.emplace(canon, static_cast<int>(catalog.canonical_forms.size()));
    if (inserted) catalog.canonical_forms.push_back(canon);
    catalog.iso_class[e] = it->second;
  }
  return static_cast<int>(catalog.canonical_forms.size());
}

// The distinct nonzero normalized rank valuations of all matroids on [n], in
// catalog order of first appearance. Distinct matroids can normalize to the
// same vector (loops and coloops are invisible after normalization), so this
// is strictly smaller than the catalog.
inline std::vector<Valuation> normalized_rank_generators(int n) {
  MatroidCatalog catalog = enumerate_matroids(n);
  std::vector<Valuation> out;
  std::set<std::vector<Rational>> seen;
  const Valuation zero(n);
  for (const Matroid& m : catalog.entries) {
    Valuation v = normalized_rank(m);
    if (v == zero) continue;
    std::vector<Rational> key;
    key.reserve(v.table_size());
    for (std::uint32_t s = 0; s < v.table_size(); ++s) key.push_back(v[Subset(s)]);
    if (seen.insert(std::move(key)).second) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace gs

#endif  // GS_MATROID_HPP_
