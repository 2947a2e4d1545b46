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

#ifndef GS_VALUATION_HPP_
#define GS_VALUATION_HPP_

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gs/rational.hpp"
#include "gs/subset.hpp"

namespace gs {

// A set function v : 2^[n] -> Q stored densely, indexed by subset bitmask.
// Operations never mutate their inputs; treat constructed values as immutable.
class Valuation {
 public:
  explicit Valuation(int n) : n_(check_n(n)), values_(std::size_t{1} << n) {}
  Valuation(int n, std::vector<Rational> values)
      : n_(check_n(n)), values_(std::move(values)) {
    if (values_.size() != (std::size_t{1} << n_)) {
      throw std::invalid_argument("valuation table must have 2^n entries");
    }
  }

  int n() const { return n_; }
  std::size_t table_size() const { return values_.size(); }

  const Rational& value(Subset s) const {
    check_mask(s);
    return values_[s.bits()];
  }
  const Rational& operator[](Subset s) const { return value(s); }

  void set(Subset s, Rational v) {
    check_mask(s);
    values_[s.bits()] = std::move(v);
  }

  bool valid_mask(Subset s) const { return s.bits() < values_.size(); }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  static int check_n(int n) {
    if (n < 0 || n > kMaxItems) {
      throw std::invalid_argument("item count must be in [0, 16]");
    }
    return n;
  }
  void check_mask(Subset s) const {
    if (!valid_mask(s)) {
      throw std::invalid_argument("subset " + format_subset(s) +
                                  " out of range for n=" + std::to_string(n_));
    }
  }

  int n_;
  std::vector<Rational> values_;
};

struct PriceVector {
  std::vector<Rational> p;  // one price per item, p[i-1] for item i

  static PriceVector zero(int n) { return PriceVector{std::vector<Rational>(n)}; }
  int n() const { return static_cast<int>(p.size()); }
  Rational total(Subset s) const {
    Rational sum = 0;
    for (int i : s.items()) sum += p[i - 1];
    return sum;
  }
};

// tilde v(S) = v(S) + sum_{i in S} p_i + c
struct AffineTransform {
  PriceVector p;
  Rational c;
};

// v(S | T) = v(S u T) - v(T)
inline Rational marginal(const Valuation& v, Subset s, Subset t) {
  return v[s | t] - v[t];
}

// First discrete derivative v(S u i) - v(S); requires i not in S.
inline Rational d1(const Valuation& v, int i, Subset s) {
  if (i < 1 || i > v.n() || s.contains(i)) {
    throw std::invalid_argument("d1: item " + std::to_string(i) +
                                " invalid for S=" + format_subset(s));
  }
  return v[s.with(i)] - v[s];
}

// Second discrete derivative, symmetric in (i, j); requires i != j, both
// outside S.
inline Rational d2(const Valuation& v, int i, int j, Subset s) {
  if (i == j || i < 1 || j < 1 || i > v.n() || j > v.n() || s.contains(i) ||
      s.contains(j)) {
    throw std::invalid_argument("d2: items (" + std::to_string(i) + "," +
                                std::to_string(j) +
                                ") invalid for S=" + format_subset(s));
  }
  return v[s.with(i).with(j)] - v[s.with(i)] - v[s.with(j)] + v[s];
}

inline Valuation apply_affine(const Valuation& v, const AffineTransform& t) {
  if (t.p.n() != v.n()) {
    throw std::invalid_argument("affine transform dimension mismatch");
  }
  Valuation out(v.n());
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    Subset s(m);
    out.set(s, v[s] + t.p.total(s) + t.c);
  }
  return out;
}

// Splits v into (v0, t) with v0 zero on the empty set and all singletons and
// apply_affine(v0, t) == v. Already-normalized input yields the identity
// transform.
inline std::pair<Valuation, AffineTransform> normalize(const Valuation& v) {
  AffineTransform t{PriceVector::zero(v.n()), v[Subset()]};
  for (int i = 1; i <= v.n(); ++i) {
    t.p.p[i - 1] = v[Subset().with(i)] - t.c;
  }
  Valuation v0(v.n());
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    Subset s(m);
    v0.set(s, v[s] - t.p.total(s) - t.c);
  }
  return {std::move(v0), std::move(t)};
}

inline bool is_normalized(const Valuation& v) {
  if (v[Subset()] != 0) return false;
  for (int i = 1; i <= v.n(); ++i) {
    if (v[Subset().with(i)] != 0) return false;
  }
  return true;
}

// <a, b> = sum_S a(S) b(S)
inline Rational inner_product(const Valuation& a, const Valuation& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("inner_product dimension mismatch");
  }
  Rational sum = 0;
  for (std::uint32_t m = 0; m < a.table_size(); ++m) {
    sum += a[Subset(m)] * b[Subset(m)];
  }
  return sum;
}

// w(T) = v(union of the blocks selected by T). The blocks must be disjoint
// and cover [n]; the result lives on k = |partition| items, block j -> item j.
inline Valuation item_grouping(const Valuation& v,
                               const std::vector<Subset>& partition) {
  Subset seen;
  for (Subset block : partition) {
    if (block.intersects(seen) || !block.subset_of(Subset::full(v.n()))) {
      throw std::invalid_argument("item_grouping: blocks must be disjoint");
    }
    seen = seen | block;
  }
  if (seen != Subset::full(v.n())) {
    throw std::invalid_argument("item_grouping: blocks must cover the ground set");
  }
  int k = static_cast<int>(partition.size());
  Valuation out(k);
  for (std::uint32_t m = 0; m < out.table_size(); ++m) {
    Subset t(m);
    Subset u;
    for (int j = 1; j <= k; ++j) {
      if (t.contains(j)) u = u | partition[j - 1];
    }
    out.set(t, v[u]);
  }
  return out;
}

// Relabels items: item i becomes perm[i-1]. perm must be a permutation of [n].
inline Valuation permute_items(const Valuation& v, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != v.n()) {
    throw std::invalid_argument("permutation size mismatch");
  }
  Subset check;
  for (int x : perm) {
    if (x < 1 || x > v.n() || check.contains(x)) {
      throw std::invalid_argument("not a permutation of [n]");
    }
    check = check.with(x);
  }
  Valuation out(v.n());
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    Subset s(m);
    Subset img;
    for (int i : s.items()) img = img.with(perm[i - 1]);
    out.set(img, v[s]);
  }
  return out;
}

inline Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("valuation sum dimension mismatch");
  Valuation out(a.n());
  for (std::uint32_t m = 0; m < a.table_size(); ++m) {
    out.set(Subset(m), a[Subset(m)] + b[Subset(m)]);
  }
  return out;
}

inline Valuation operator*(const Rational& c, const Valuation& v) {
  Valuation out(v.n());
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    out.set(Subset(m), c * v[Subset(m)]);
  }
  return out;
}

}  // namespace gs

#endif  // GS_VALUATION_HPP_
