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

#ifndef GS_CONE_HPP_
#define GS_CONE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gs/matroid.hpp"
#include "gs/rational.hpp"
#include "gs/subset.hpp"
#include "gs/substitutes.hpp"
#include "gs/valuation.hpp"

namespace gs {

// A finitely generated cone of normalized valuations.
struct ConeSpec {
  int n = 0;
  std::vector<std::pair<std::string, Valuation>> generators;
};

// Nonnegative coefficients over a generator list; zero coefficients omitted.
struct Decomposition {
  std::vector<std::pair<int, Rational>> coefficients;  // (generator index, alpha)
};

// y with <y, g> >= 0 for every generator and <y, target> < 0 — a proof that
// the target lies outside the cone. Stored valuation-shaped.
struct FarkasCertificate {
  Valuation y;
};

// Exactly one of the two, both verified before being returned by decompose.
class DecompositionResult {
 public:
  explicit DecompositionResult(Decomposition d) : value_(std::move(d)) {}
  explicit DecompositionResult(FarkasCertificate c) : value_(std::move(c)) {}

  bool feasible() const { return std::holds_alternative<Decomposition>(value_); }
  const Decomposition& decomposition() const { return std::get<Decomposition>(value_); }
  const FarkasCertificate& certificate() const {
    return std::get<FarkasCertificate>(value_);
  }

 private:
  std::variant<Decomposition, FarkasCertificate> value_;
};

namespace detail {

// Phase-1 simplex over { x >= 0 : A x = b } in exact rationals with Bland's
// anti-cycling rule. On infeasibility, `dual` carries y with y^T A <= 0 and
// <y, b> > 0 read off the artificial columns of the final tableau.
struct Phase1Result {
  bool feasible = false;
  std::vector<Rational> primal;  // per column, when feasible
  std::vector<Rational> dual;    // per row, when infeasible
  long pivots = 0;
};

inline Phase1Result phase1_simplex(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  constexpr long kPivotLimit = 200000;

  std::vector<int> flipped(rows, 1);
  for (std::size_t r = 0; r < rows; ++r) {
    if (b[r] < 0) {
      flipped[r] = -1;
      b[r] = -b[r];
      for (auto& x : a[r]) x = -x;
    }
  }

  // tableau columns: [original | artificial]; basis starts artificial
  const std::size_t width = cols + rows;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) t[r][c] = a[r][c];
    t[r][cols + r] = 1;
  }
  // reduced costs for objective min sum(artificials)
  std::vector<Rational> z(width);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) z[c] -= t[r][c];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = cols + r;

  Phase1Result result;
  while (true) {
    std::size_t enter = width;
    for (std::size_t c = 0; c < width; ++c) {
      if (z[c] < 0) {
        enter = c;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = b[r] / t[r][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == rows) {
      throw std::logic_error("phase-1 objective unbounded");  // cannot happen
    }
    if (++result.pivots > kPivotLimit) {
      throw std::runtime_error("simplex pivot limit exceeded");
    }

    Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    b[leave] /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rational factor = t[r][enter];
      for (std::size_t c = 0; c < width; ++c) t[r][c] -= factor * t[leave][c];
      b[r] -= factor * b[leave];
    }
    if (z[enter] != 0) {
      Rational factor = z[enter];
      for (std::size_t c = 0; c < width; ++c) z[c] -= factor * t[leave][c];
    }
    basis[leave] = enter;
  }

  Rational objective = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] >= cols) objective += b[r];
  }
  if (objective == 0) {
    result.feasible = true;
    result.primal.assign(cols, Rational(0));
    for (std::size_t r = 0; r < rows; ++r) {
      if (basis[r] < cols) result.primal[basis[r]] = b[r];
    }
  } else {
    // Simplex multipliers pi_r = 1 - zbar(artificial r); undo the row flips.
    result.feasible = false;
    result.dual.assign(rows, Rational(0));
    for (std::size_t r = 0; r < rows; ++r) {
      result.dual[r] = flipped[r] * (Rational(1) - z[cols + r]);
    }
  }
  return result;
}

// Scales a rational vector to coprime integers, preserving direction.
inline void scale_to_integer_gcd1(std::vector<Rational>& values) {
  Integer lcm = 1;
  for (const Rational& q : values) {
    lcm = boost::multiprecision::lcm(lcm, denominator(q));
  }
  Integer g = 0;
  for (const Rational& q : values) {
    Integer scaled = numerator(q) * (lcm / denominator(q));
    g = boost::multiprecision::gcd(g, scaled);
  }
  if (g == 0) return;  // all-zero vector
  for (Rational& q : values) {
    q = q * Rational(lcm) / Rational(g);
  }
}

}  // namespace detail

// Exact check of the two certificate conditions, independent of how y was
// produced.
inline bool verify_certificate(const FarkasCertificate& cert,
                               const Valuation& target, const ConeSpec& cone) {
  if (cert.y.n() != target.n() || target.n() != cone.n) {
    throw std::invalid_argument("verify_certificate: dimension mismatch");
  }
  if (inner_product(cert.y, target) >= 0) return false;
  for (const auto& [name, g] : cone.generators) {
    if (inner_product(cert.y, g) < 0) return false;
  }
  return true;
}

// Decides exactly whether target = sum alpha_i g_i with alpha >= 0 has a
// solution. Returns verified nonnegative coefficients when it does and a
// verified Farkas certificate (scaled to coprime integer entries) when it
// does not. The equality system runs over all 2^n coordinates.
inline DecompositionResult decompose(const Valuation& target, const ConeSpec& cone) {
  if (target.n() != cone.n) {
    throw std::invalid_argument("decompose: dimension mismatch");
  }
  if (!is_normalized(target)) {
    throw std::invalid_argument("decompose: target must be normalized");
  }
  const std::size_t rows = target.table_size();
  const std::size_t cols = cone.generators.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  std::vector<Rational> b(rows);
  for (std::uint32_t r = 0; r < rows; ++r) {
    b[r] = target[Subset(r)];
    for (std::size_t c = 0; c < cols; ++c) {
      a[r][c] = cone.generators[c].second[Subset(r)];
    }
  }

  detail::Phase1Result lp = detail::phase1_simplex(a, b);
  if (lp.feasible) {
    Decomposition d;
    Valuation sum(target.n());
    for (std::size_t c = 0; c < cols; ++c) {
      if (lp.primal[c] == 0) continue;
      if (lp.primal[c] < 0) throw std::logic_error("negative simplex solution");
      d.coefficients.emplace_back(static_cast<int>(c), lp.primal[c]);
      sum = sum + lp.primal[c] * cone.generators[c].second;
    }
    if (!(sum == target)) {
      throw std::logic_error("decomposition failed exact verification");
    }
    return DecompositionResult(std::move(d));
  }

  // lp.dual has y^T G <= 0 and <y, target> > 0; flip for the certificate form.
  for (Rational& q : lp.dual) q = -q;
  detail::scale_to_integer_gcd1(lp.dual);
  FarkasCertificate cert{Valuation(target.n(), std::move(lp.dual))};
  if (!verify_certificate(cert, target, cone)) {
    throw std::logic_error("farkas certificate failed exact verification");
  }
  return DecompositionResult(std::move(cert));
}

// Max-weight independent subset value: v(S) is the weight of the heaviest
// independent subset of S, computed greedily (which is exact on matroids).
inline Valuation weighted_rank_valuation(const WeightedMatroid& wm) {
  const Matroid& m = wm.matroid;
  if (static_cast<int>(wm.weights.size()) != m.n) {
    throw std::invalid_argument("weighted matroid: weight count mismatch");
  }
  for (const Rational& w : wm.weights) {
    if (w < 0) throw std::invalid_argument("weighted matroid: negative weight");
  }
  std::vector<char> indep = detail::independence_table(m);
  std::vector<int> order(m.n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return wm.weights[x - 1] > wm.weights[y - 1];
  });
  Valuation v(m.n);
  for (std::uint32_t mask = 0; mask < v.table_size(); ++mask) {
    Subset s(mask);
    Subset chosen;
    Rational total = 0;
    for (int i : order) {
      if (!s.contains(i)) continue;
      if (indep[chosen.with(i).bits()]) {
        chosen = chosen.with(i);
        total += wm.weights[i - 1];
      }
    }
    v.set(s, total);
  }
  return v;
}

// Result of peeling a weighted rank function into unweighted rank functions
// of restrictions to weight prefixes.
struct WeightedRankDecomposition {
  ConeSpec restrictions;   // rank function of M restricted to the j heaviest
  Decomposition coeffs;    // coefficient w_(j) - w_(j+1) on restriction j
};

// Writes the weighted rank as sum_j (w_(j) - w_(j+1)) r_j where w_(1) >= ...
// >= w_(n) are the sorted weights and r_j is the rank of the matroid
// restricted to the j heaviest elements (zero-gap terms dropped).
inline WeightedRankDecomposition weighted_rank_decompose(const WeightedMatroid& wm) {
  const Matroid& m = wm.matroid;
  if (static_cast<int>(wm.weights.size()) != m.n) {
    throw std::invalid_argument("weighted matroid: weight count mismatch");
  }
  for (const Rational& w : wm.weights) {
    if (w < 0) throw std::invalid_argument("weighted matroid: negative weight");
  }
  std::vector<int> order(m.n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return wm.weights[x - 1] > wm.weights[y - 1];
  });

  Valuation rank = rank_function(m);
  WeightedRankDecomposition out;
  out.restrictions.n = m.n;
  Subset prefix;
  for (int j = 1; j <= m.n; ++j) {
    prefix = prefix.with(order[j - 1]);
    Valuation rj(m.n);
    for (std::uint32_t mask = 0; mask < rj.table_size(); ++mask) {
      rj.set(Subset(mask), rank[Subset(mask) & prefix]);
    }
    out.restrictions.generators.emplace_back(
        "restriction" + format_subset(prefix), std::move(rj));
    Rational gap = wm.weights[order[j - 1] - 1] -
                   (j < m.n ? wm.weights[order[j] - 1] : Rational(0));
    if (gap != 0) out.coeffs.coefficients.emplace_back(j - 1, gap);
  }
  return out;
}

// The cone of all normalized matroid rank valuations on [n], deduplicated as
// vectors. Generator names carry the catalog index of the first matroid
// realizing each vector.
inline ConeSpec matroid_cone(int n) {
  ConeSpec cone;
  cone.n = n;
  std::vector<Valuation> gens = normalized_rank_generators(n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    cone.generators.emplace_back("m" + std::to_string(i), std::move(gens[i]));
  }
  return cone;
}

namespace detail {

// Building blocks for the small-n generator catalogs, as normalized
// valuations. Items are named a,b,c,d = 1,2,3,4 throughout.

// Normalized rank of the uniform matroid of the given rank.
inline Valuation normalized_uniform(int n, int rank) {
  Valuation v(n);
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    v.set(Subset(m), Rational(std::min(Subset(m).size(), rank) - Subset(m).size()));
  }
  return v;
}

// -1 on supersets of `core`, 0 elsewhere: a parallel pair or a triangle plus
// coloops, depending on |core|.
inline Valuation normalized_circuit(int n, Subset core) {
  Valuation v(n);
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    v.set(Subset(m), Rational(core.subset_of(Subset(m)) ? -1 : 0));
  }
  return v;
}

// -max(|S n E| - 1, 0): one parallel class E, coloops elsewhere.
inline Valuation normalized_parallel_class(int n, Subset parallel) {
  Valuation v(n);
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    v.set(Subset(m), Rational(-std::max((Subset(m) & parallel).size() - 1, 0)));
  }
  return v;
}

// Rank-2 graphic matroid on 4 elements: parallel pair {3,4} in series with
// the path {1,2} (circuits {3,4}, {1,2,3}, {1,2,4}).
inline Valuation normalized_theta_12_34() {
  Valuation v(4);
  v.set(Subset::of({3, 4}), Rational(-1));
  for (std::uint32_t m = 0; m < 16; ++m) {
    if (Subset(m).size() == 3) v.set(Subset(m), Rational(-1));
  }
  v.set(Subset::full(4), Rational(-2));
  return v;
}

}  // namespace detail

// Generators of the normalized substitutes cone on two items.
inline ConeSpec g2_generators() {
  ConeSpec cone;
  cone.n = 2;
  cone.generators.emplace_back("u2_1", detail::normalized_uniform(2, 1));
  return cone;
}

// Generators of one (empty-set-tree) cone of normalized substitutes on three
// items; the other cones are its item relabelings.
inline ConeSpec g3_generators() {
  ConeSpec cone;
  cone.n = 3;
  cone.generators.emplace_back("u3_1", detail::normalized_uniform(3, 1));
  cone.generators.emplace_back("u3_2", detail::normalized_uniform(3, 2));
  cone.generators.emplace_back("par12", detail::normalized_circuit(3, Subset::of({1, 2})));
  return cone;
}

// The six cone cases for four items, one per shape of the empty-set tree and
// singleton-tree labeling. Every other cone is an item relabeling of one of
// these.
enum class G4Case { kShallow, kDeep1, kDeep2, kDeep3a, kDeep3b, kDeep3c };

inline const std::vector<G4Case>& g4_cases() {
  static const std::vector<G4Case> cases = {G4Case::kShallow, G4Case::kDeep1,
                                            G4Case::kDeep2,   G4Case::kDeep3a,
                                            G4Case::kDeep3b,  G4Case::kDeep3c};
  return cases;
}

inline const char* g4_case_name(G4Case c) {
  switch (c) {
    case G4Case::kShallow: return "shallow";
    case G4Case::kDeep1: return "deep1";
    case G4Case::kDeep2: return "deep2";
    case G4Case::kDeep3a: return "deep3a";
    case G4Case::kDeep3b: return "deep3b";
    case G4Case::kDeep3c: return "deep3c";
  }
  throw std::invalid_argument("unknown g4 case");
}

inline G4Case parse_g4_case(std::string_view name) {
  for (G4Case c : g4_cases()) {
    if (name == g4_case_name(c)) return c;
  }
  throw std::invalid_argument("unknown g4 case: '" + std::string(name) + "'");
}

inline ConeSpec g4_generators(G4Case c) {
  using detail::normalized_circuit;
  using detail::normalized_parallel_class;
  using detail::normalized_uniform;
  ConeSpec cone;
  cone.n = 4;
  auto add = [&cone](const char* name, Valuation v) {
    cone.generators.emplace_back(name, std::move(v));
  };
  add("u4_1", normalized_uniform(4, 1));
  switch (c) {
    case G4Case::kShallow:
      add("par12", normalized_circuit(4, Subset::of({1, 2})));
      add("theta_12_34", detail::normalized_theta_12_34());
      add("u4_2", normalized_uniform(4, 2));
      add("tri124", normalized_circuit(4, Subset::of({1, 2, 4})));
      break;
    case G4Case::kDeep1:
      add("p3_234", normalized_parallel_class(4, Subset::of({2, 3, 4})));
      add("par34", normalized_circuit(4, Subset::of({3, 4})));
      add("u4_2", normalized_uniform(4, 2));
      add("tri234", normalized_circuit(4, Subset::of({2, 3, 4})));
      break;
    case G4Case::kDeep2:
      add("p3_234", normalized_parallel_class(4, Subset::of({2, 3, 4})));
      add("par34", normalized_circuit(4, Subset::of({3, 4})));
      add("u4_2", normalized_uniform(4, 2));
      add("tri134", normalized_circuit(4, Subset::of({1, 3, 4})));
      break;
    case G4Case::kDeep3a:
      add("p3_234", normalized_parallel_class(4, Subset::of({2, 3, 4})));
      add("theta_12_34", detail::normalized_theta_12_34());
      add("u4_2", normalized_uniform(4, 2));
      add("tri124", normalized_circuit(4, Subset::of({1, 2, 4})));
      break;
    case G4Case::kDeep3b:
      add("p3_234", normalized_parallel_class(4, Subset::of({2, 3, 4})));
      add("theta_12_34", detail::normalized_theta_12_34());
      add("u4_2", normalized_uniform(4, 2));
      add("tri123", normalized_circuit(4, Subset::of({1, 2, 3})));
      break;
    case G4Case::kDeep3c:
      add("p3_234", normalized_parallel_class(4, Subset::of({2, 3, 4})));
      add("theta_12_34", detail::normalized_theta_12_34());
      add("u4_2", normalized_uniform(4, 2));
      add("par34", normalized_circuit(4, Subset::of({3, 4})));
      break;
  }
  add("u4_3", normalized_uniform(4, 3));
  return cone;
}

// Evaluates the closed-form valuation of a cone case at a coefficient vector,
// ordered as the case's generator list. Used to cross-check the generator
// tables: the generator sum must reproduce these values exactly.
inline Valuation g4_closed_form(G4Case c, const std::vector<Rational>& coeff) {
  if (coeff.size() != 6) {
    throw std::invalid_argument("g4 closed form takes 6 coefficients");
  }
  const Rational& x = coeff[0];
  const Rational& w = coeff[3];
  const Rational& t = coeff[5];
  Valuation v(4);
  const Subset ab = Subset::of({1, 2}), ac = Subset::of({1, 3}),
               ad = Subset::of({1, 4}), bc = Subset::of({2, 3}),
               bd = Subset::of({2, 4}), cd = Subset::of({3, 4});
  const Subset abc = Subset::of({1, 2, 3}), abd = Subset::of({1, 2, 4}),
               acd = Subset::of({1, 3, 4}), bcd = Subset::of({2, 3, 4});
  if (c == G4Case::kShallow) {
    const Rational &y = coeff[1], &z = coeff[2], &q = coeff[4];
    v.set(ab, -(x + y));
    v.set(cd, -(x + z));
    for (Subset p : {ac, ad, bc, bd}) v.set(p, -x);
    v.set(abc, -2 * x - y - w - z);
    v.set(abd, -2 * x - y - w - z - q);
    v.set(acd, -2 * x - w - z);
    v.set(bcd, -2 * x - w - z);
    v.set(Subset::full(4), -3 * x - y - 2 * z - 2 * w - q - t);
    return v;
  }
  const Rational& y = coeff[1];
  Rational z, w1, w2, w3, w4, vabcd;
  switch (c) {
    case G4Case::kDeep1: {
      const Rational &zz = coeff[2], &q = coeff[4];
      z = zz; w1 = w2 = w3 = w; w4 = w + q;
      vabcd = -3 * x - 2 * y - 2 * w - z - q - t;
      break;
    }
    case G4Case::kDeep2: {
      const Rational &zz = coeff[2], &q = coeff[4];
      z = zz; w1 = w2 = w4 = w; w3 = w + q;
      vabcd = -3 * x - 2 * y - 2 * w - z - q - t;
      break;
    }
    case G4Case::kDeep3a: {
      const Rational &zz = coeff[2], &q = coeff[4];
      z = zz; w1 = w + z; w2 = w + z + q; w3 = w4 = w;
      vabcd = -3 * x - 2 * y - 2 * w - 2 * z - q - t;
      break;
    }
    case G4Case::kDeep3b: {
      const Rational &zz = coeff[2], &q = coeff[4];
      z = zz; w1 = w + z + q; w2 = w + z; w3 = w4 = w;
      vabcd = -3 * x - 2 * y - 2 * w - 2 * z - q - t;
      break;
    }
    case G4Case::kDeep3c: {
      const Rational &q = coeff[2], &s = coeff[4];
      z = q + s; w1 = w2 = w + q; w3 = w4 = w;
      vabcd = -3 * x - 2 * y - 2 * w - 2 * q - s - t;
      break;
    }
    default:
      throw std::invalid_argument("unknown g4 case");
  }
  for (Subset p : {ab, ac, ad}) v.set(p, -x);
  for (Subset p : {bc, bd}) v.set(p, -(x + y));
  v.set(cd, -(x + y + z));
  v.set(abc, -2 * x - y - w1);
  v.set(abd, -2 * x - y - w2);
  v.set(acd, -2 * x - y - z - w3);
  v.set(bcd, -2 * x - 2 * y - z - w4);
  v.set(Subset::full(4), vabcd);
  return v;
}

// Deterministic sampler over the substitutes cones for n in {2,3,4}: a
// uniformly random case and item relabeling, then small nonnegative rational
// coefficients (numerator 0..5 over denominator 1..3) on that case's
// generators. Every output is re-checked to pass the substitutes test.
inline std::vector<Valuation> sample_gs(int n, std::uint64_t seed, int count) {
  if (n < 2 || n > 4) {
    throw std::invalid_argument("sample_gs supports n in {2, 3, 4}");
  }
  std::mt19937_64 rng(seed);
  std::vector<Valuation> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    ConeSpec cone;
    if (n == 2) {
      cone = g2_generators();
    } else if (n == 3) {
      cone = g3_generators();
    } else {
      cone = g4_generators(g4_cases()[rng() % g4_cases().size()]);
    }
    Valuation v(n);
    for (const auto& [name, g] : cone.generators) {
      long num = static_cast<long>(rng() % 6);
      long den = static_cast<long>(1 + rng() % 3);
      v = v + Rational(num, den) * g;
    }
    // random relabeling (Fisher-Yates on raw rng values keeps this
    // reproducible across platforms)
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = n - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng() % (i + 1)]);
    }
    v = permute_items(v, perm);
    if (!check_gs(v).gs()) {
      throw std::logic_error("sampled valuation failed the substitutes test");
    }
    out.push_back(std::move(v));
  }
  return out;
}

// v(S | T) <= w(S | T) for all S, T: every marginal of v is dominated by the
// corresponding marginal of w.
inline bool is_strong_quotient(const Valuation& v, const Valuation& w) {
  if (v.n() != w.n()) {
    throw std::invalid_argument("is_strong_quotient: dimension mismatch");
  }
  for (std::uint32_t a = 0; a < v.table_size(); ++a) {
    for (std::uint32_t b = 0; b < v.table_size(); ++b) {
      if (marginal(v, Subset(a), Subset(b)) > marginal(w, Subset(a), Subset(b))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace gs

#endif  // GS_CONE_HPP_
