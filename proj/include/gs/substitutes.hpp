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

#ifndef GS_SUBSTITUTES_HPP_
#define GS_SUBSTITUTES_HPP_

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gs/rational.hpp"
#include "gs/subset.hpp"
#include "gs/valuation.hpp"

namespace gs {

enum class ViolationKind { kTripleInequality, kNonpositivity };

// One failed condition of the substitutes test. For kTripleInequality the
// witness is d2(i,j,S) = lhs > rhs = max(d2(i,k,S), d2(j,k,S)); for
// kNonpositivity it is d2(i,j,S) = lhs > 0 and k is 0.
struct GSViolation {
  Subset S;
  int i = 0, j = 0, k = 0;
  Rational lhs, rhs;
  ViolationKind kind = ViolationKind::kTripleInequality;
};

struct GsReport {
  std::vector<GSViolation> violations;
  long triple_instances = 0;  // number of (S, {i,j,k}) pairs examined

  bool gs() const { return violations.empty(); }
};

namespace detail {

// The triple condition in its quantified form: each of the three second
// derivatives is at most the max of the other two.
inline bool triple_ok_max_form(const Rational& dij, const Rational& dik,
                               const Rational& djk) {
  return dij <= std::max(dik, djk) && dik <= std::max(dij, djk) &&
         djk <= std::max(dij, dik);
}

// Same condition phrased on the negated symbols D = -d2: the minimum of the
// three D values is attained at least twice.
inline bool triple_ok_min_twice(const Rational& dij, const Rational& dik,
                                const Rational& djk) {
  const Rational a = -dij, b = -dik, c = -djk;
  const Rational low = std::min({a, b, c});
  int hits = (a == low) + (b == low) + (c == low);
  return hits >= 2;
}

}  // namespace detail

// Substitutes test: d2(i,j,S) <= max(d2(i,k,S), d2(j,k,S)) <= 0 for every S
// and all i,j,k outside S. Nonpositivity is checked for every pair (so the
// test subsumes submodularity even where no third item exists), the triple
// inequality once per unordered triple. Violations come out in subset order,
// pairs before triples.
inline GsReport check_gs(const Valuation& v) {
  if (v.n() < 1) throw std::invalid_argument("check_gs requires n >= 1");
  GsReport report;
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    Subset s(m);
    std::vector<int> out;
    for (int i = 1; i <= v.n(); ++i) {
      if (!s.contains(i)) out.push_back(i);
    }
    for (std::size_t a = 0; a < out.size(); ++a) {
      for (std::size_t b = a + 1; b < out.size(); ++b) {
        Rational dij = d2(v, out[a], out[b], s);
        if (dij > 0) {
          report.violations.push_back({s, out[a], out[b], 0, dij, Rational(0),
                                       ViolationKind::kNonpositivity});
        }
      }
    }
    for (std::size_t a = 0; a < out.size(); ++a) {
      for (std::size_t b = a + 1; b < out.size(); ++b) {
        for (std::size_t c = b + 1; c < out.size(); ++c) {
          int i = out[a], j = out[b], k = out[c];
          ++report.triple_instances;
          Rational dij = d2(v, i, j, s);
          Rational dik = d2(v, i, k, s);
          Rational djk = d2(v, j, k, s);
          bool ok = detail::triple_ok_max_form(dij, dik, djk);
          if (ok != detail::triple_ok_min_twice(dij, dik, djk)) {
            throw std::logic_error("gs triple phrasings disagree");
          }
          if (ok) continue;
          // At most one of the three orderings can fail; report it.
          if (dij > std::max(dik, djk)) {
            report.violations.push_back({s, i, j, k, dij, std::max(dik, djk),
                                         ViolationKind::kTripleInequality});
          } else if (dik > std::max(dij, djk)) {
            report.violations.push_back({s, i, k, j, dik, std::max(dij, djk),
                                         ViolationKind::kTripleInequality});
          } else {
            report.violations.push_back({s, j, k, i, djk, std::max(dij, dik),
                                         ViolationKind::kTripleInequality});
          }
        }
      }
    }
  }
  return report;
}

inline bool is_gross_substitutes(const Valuation& v) {
  return check_gs(v).gs();
}

// d2 <= 0 everywhere.
inline bool check_submodular(const Valuation& v) {
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    Subset s(m);
    for (int i = 1; i <= v.n(); ++i) {
      if (s.contains(i)) continue;
      for (int j = i + 1; j <= v.n(); ++j) {
        if (s.contains(j)) continue;
        if (d2(v, i, j, s) > 0) return false;
      }
    }
  }
  return true;
}

// v_p(S) = v(S) - sum_{i in S} p_i
inline Valuation priced(const Valuation& v, const PriceVector& p) {
  if (p.n() != v.n()) throw std::invalid_argument("priced dimension mismatch");
  Valuation out(v.n());
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    Subset s(m);
    out.set(s, v[s] - p.total(s));
  }
  return out;
}

struct DemandResult {
  Rational max_value;
  std::vector<Subset> demanded;  // every argmax bundle, ascending mask order
};

// D(v; p): exhaustive argmax of v_p over all bundles, all ties reported.
inline DemandResult demand(const Valuation& v, const PriceVector& p) {
  Valuation vp = priced(v, p);
  DemandResult result;
  result.max_value = vp[Subset()];
  for (std::uint32_t m = 0; m < vp.table_size(); ++m) {
    const Rational& x = vp[Subset(m)];
    if (x > result.max_value) result.max_value = x;
  }
  for (std::uint32_t m = 0; m < vp.table_size(); ++m) {
    if (vp[Subset(m)] == result.max_value) result.demanded.push_back(Subset(m));
  }
  return result;
}

// Greedy for v_p: start empty, repeatedly add the item with largest marginal
// (ties broken toward the smallest index) while that marginal is strictly
// positive.
inline Subset greedy(const Valuation& v, const PriceVector& p) {
  Valuation vp = priced(v, p);
  Subset s;
  while (true) {
    int best = 0;
    Rational best_gain;
    for (int i = 1; i <= v.n(); ++i) {
      if (s.contains(i)) continue;
      Rational gain = vp[s.with(i)] - vp[s];
      if (best == 0 || gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    if (best == 0 || best_gain <= 0) return s;
    s = s.with(best);
  }
}

// True iff every bundle that is locally optimal for v_p under single-add,
// single-drop and swap moves attains the global maximum of v_p.
inline bool check_local_global(const Valuation& v, const PriceVector& p) {
  Valuation vp = priced(v, p);
  Rational best = vp[Subset()];
  for (std::uint32_t m = 0; m < vp.table_size(); ++m) {
    best = std::max(best, vp[Subset(m)]);
  }
  for (std::uint32_t m = 0; m < vp.table_size(); ++m) {
    Subset s(m);
    const Rational& here = vp[s];
    if (here == best) continue;
    bool local_max = true;
    for (int i = 1; i <= v.n() && local_max; ++i) {
      if (!s.contains(i) && vp[s.with(i)] > here) local_max = false;
    }
    for (int j = 1; j <= v.n() && local_max; ++j) {
      if (s.contains(j) && vp[s.without(j)] > here) local_max = false;
    }
    for (int i = 1; i <= v.n() && local_max; ++i) {
      if (s.contains(i)) continue;
      for (int j = 1; j <= v.n() && local_max; ++j) {
        if (!s.contains(j)) continue;
        if (vp[s.with(i).without(j)] > here) local_max = false;
      }
    }
    if (local_max) return false;  // local optimum below the global maximum
  }
  return true;
}

}  // namespace gs

#endif  // GS_SUBSTITUTES_HPP_
