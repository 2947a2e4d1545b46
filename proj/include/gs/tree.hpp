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

#ifndef GS_TREE_HPP_
#define GS_TREE_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gs/rational.hpp"
#include "gs/subset.hpp"
#include "gs/substitutes.hpp"
#include "gs/valuation.hpp"

namespace gs {

// All second-derivative symbols D^S_ij = -d2(v, i, j, S), keyed by the
// conditioning set and an unordered pair outside it.
class DeltaTensor {
 public:
  explicit DeltaTensor(int n)
      : n_(n), data_(n >= 2 ? (std::size_t{1} << n) * pair_count(n) : 0) {
    if (n < 0 || n > kMaxItems) {
      throw std::invalid_argument("item count must be in [0, 16]");
    }
  }

  int n() const { return n_; }

  const Rational& at(Subset s, int i, int j) const {
    return data_[slot(s, i, j)];
  }
  void set(Subset s, int i, int j, Rational value) {
    data_[slot(s, i, j)] = std::move(value);
  }

  static int pair_count(int n) { return n * (n - 1) / 2; }

 private:
  std::size_t slot(Subset s, int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n_ || i == j || s.contains(i) || s.contains(j) ||
        !s.subset_of(Subset::full(n_))) {
      throw std::invalid_argument("delta tensor key (" + format_subset(s) +
                                  ", " + std::to_string(i) + "," +
                                  std::to_string(j) + ") invalid");
    }
    // pairs (i, j), i < j, in lexicographic order
    int pair = (i - 1) * n_ - (i - 1) * i / 2 + (j - i - 1);
    return std::size_t{s.bits()} * pair_count(n_) + pair;
  }

  int n_;
  std::vector<Rational> data_;
};

inline DeltaTensor delta_tensor(const Valuation& v) {
  DeltaTensor t(v.n());
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    Subset s(m);
    for (int i = 1; i <= v.n(); ++i) {
      if (s.contains(i)) continue;
      for (int j = i + 1; j <= v.n(); ++j) {
        if (s.contains(j)) continue;
        t.set(s, i, j, -d2(v, i, j, s));
      }
    }
  }
  return t;
}

// Raised when a tensor slice fails the substitutes triangle property (or goes
// negative) at the named conditioning set and triple.
class NotGrossSubstitutesError : public std::runtime_error {
 public:
  NotGrossSubstitutesError(Subset s, int i, int j, int k)
      : std::runtime_error("not gross substitutes at S=" + format_subset(s) +
                           ", items {" + std::to_string(i) + "," +
                           std::to_string(j) + "," + std::to_string(k) + "}"),
        S(s),
        i(i),
        j(j),
        k(k) {}
  Subset S;
  int i, j, k;
};

// Minimal substitution tree for one conditioning set, stored as the laminar
// family of internal-node leaf sets with their labels. Leaves are implicit;
// the root is the full leaf set. Along any root-to-node path labels strictly
// increase, and the label of the smallest node containing a leaf pair equals
// the tensor entry for that pair.
struct LabeledTree {
  Subset ground;
  std::vector<std::pair<Subset, Rational>> nodes;  // size >= 2 each, root first

  const Rational& lca_label(int i, int j) const {
    const Rational* best = nullptr;
    int best_size = 0;
    for (const auto& [node, label] : nodes) {
      if (node.contains(i) && node.contains(j)) {
        if (best == nullptr || node.size() < best_size) {
          best = &label;
          best_size = node.size();
        }
      }
    }
    if (best == nullptr) throw std::invalid_argument("items not in tree");
    return *best;
  }
};

// Unlabeled minimal laminar families, one per conditioning set with at least
// two leaves.
struct TreeStructure {
  int n = 0;
  std::map<Subset, std::vector<Subset>> trees;
};

struct LaminarCheckResult {
  bool laminar = true;
  std::optional<std::pair<Subset, Subset>> witness;  // a crossing pair
};

inline LaminarCheckResult is_laminar(int /*n*/, const std::vector<Subset>& family) {
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      Subset x = family[a], y = family[b];
      if (!x.intersects(y) || x.subset_of(y) || y.subset_of(x)) continue;
      return {false, std::make_pair(x, y)};
    }
  }
  return {true, std::nullopt};
}

// Builds the unique minimal labeled tree over the leaves [n] \ S: the root
// label is the minimum pair value, children are the connected components of
// the graph joining pairs that exceed it, and the construction recurses on
// components of size >= 2. Requires at least two leaves; validates
// nonnegativity and the min-attained-twice triangle property first and throws
// NotGrossSubstitutesError on failure.
inline LabeledTree extract_tree(const DeltaTensor& d, Subset s) {
  const int n = d.n();
  Subset ground = s.complement_in(n);
  std::vector<int> leaves = ground.items();
  if (leaves.size() < 2) {
    throw std::invalid_argument("extract_tree requires at least two leaves");
  }
  for (std::size_t a = 0; a < leaves.size(); ++a) {
    for (std::size_t b = a + 1; b < leaves.size(); ++b) {
      if (d.at(s, leaves[a], leaves[b]) < 0) {
        throw NotGrossSubstitutesError(s, leaves[a], leaves[b], 0);
      }
      for (std::size_t c = b + 1; c < leaves.size(); ++c) {
        const Rational& x = d.at(s, leaves[a], leaves[b]);
        const Rational& y = d.at(s, leaves[a], leaves[c]);
        const Rational& z = d.at(s, leaves[b], leaves[c]);
        const Rational low = std::min({x, y, z});
        if ((x == low) + (y == low) + (z == low) < 2) {
          throw NotGrossSubstitutesError(s, leaves[a], leaves[b], leaves[c]);
        }
      }
    }
  }

  LabeledTree tree;
  tree.ground = ground;
  std::vector<std::vector<int>> stack = {leaves};
  while (!stack.empty()) {
    std::vector<int> group = std::move(stack.back());
    stack.pop_back();
    Rational low = d.at(s, group[0], group[1]);
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        low = std::min(low, d.at(s, group[a], group[b]));
      }
    }
    Subset node;
    for (int i : group) node = node.with(i);
    tree.nodes.emplace_back(node, low);

    // components of the "strictly above the root label" graph
    std::map<int, std::vector<int>> adj;
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        if (d.at(s, group[a], group[b]) > low) {
          adj[group[a]].push_back(group[b]);
          adj[group[b]].push_back(group[a]);
        }
      }
    }
    Subset seen;
    for (int start : group) {
      if (seen.contains(start)) continue;
      std::vector<int> comp, frontier = {start};
      while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        if (seen.contains(x)) continue;
        seen = seen.with(x);
        comp.push_back(x);
        for (int y : adj[x]) {
          if (!seen.contains(y)) frontier.push_back(y);
        }
      }
      std::sort(comp.begin(), comp.end());
      if (comp.size() >= 2) stack.push_back(std::move(comp));
    }
  }
  std::sort(tree.nodes.begin(), tree.nodes.end(),
            [](const auto& a, const auto& b) {
              if (a.first.size() != b.first.size()) {
                return a.first.size() > b.first.size();
              }
              return a.first < b.first;
            });
  return tree;
}

namespace detail {

inline void require_gs(const Valuation& v, const char* who) {
  GsReport report = check_gs(v);
  if (report.gs()) return;
  const GSViolation& w = report.violations.front();
  throw NotGrossSubstitutesError(w.S, w.i, w.j, w.k);
  (void)who;
}

}  // namespace detail

// The minimal laminar families of v for every conditioning set with >= 2
// leaves. Throws NotGrossSubstitutesError if v is not a substitutes valuation.
inline TreeStructure tree_structure(const Valuation& v) {
  detail::require_gs(v, "tree_structure");
  DeltaTensor d = delta_tensor(v);
  TreeStructure ts;
  ts.n = v.n();
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    Subset s(m);
    if (s.complement_in(v.n()).size() < 2) continue;
    LabeledTree t = extract_tree(d, s);
    std::vector<Subset> family;
    family.reserve(t.nodes.size());
    for (const auto& [node, label] : t.nodes) family.push_back(node);
    ts.trees.emplace(s, std::move(family));
  }
  return ts;
}

// Raised when two substitutes valuations do not share a tree structure; the
// witness is the conditioning set and a crossing pair of internal nodes.
class NotConcordantError : public std::runtime_error {
 public:
  NotConcordantError(Subset s, Subset x, Subset y)
      : std::runtime_error("not tree-concordant at S=" + format_subset(s) +
                           ": " + format_subset(x) + " crosses " +
                           format_subset(y)),
        S(s),
        x(x),
        y(y) {}
  Subset S, x, y;
};

namespace detail {

// Looks for a conditioning set where the union of the two minimal laminar
// families crosses.
inline std::optional<NotConcordantError> concordance_witness(
    const TreeStructure& a, const TreeStructure& b) {
  for (const auto& [s, fam_a] : a.trees) {
    std::vector<Subset> merged = fam_a;
    const std::vector<Subset>& fam_b = b.trees.at(s);
    merged.insert(merged.end(), fam_b.begin(), fam_b.end());
    LaminarCheckResult r = is_laminar(a.n, merged);
    if (!r.laminar) {
      return NotConcordantError(s, r.witness->first, r.witness->second);
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Two substitutes valuations are tree-concordant iff for every conditioning
// set the union of their minimal laminar families is laminar. Throws
// NotGrossSubstitutesError on non-substitutes input.
inline bool concordant(const Valuation& u, const Valuation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("concordant: dimension mismatch");
  TreeStructure tu = tree_structure(u);
  TreeStructure tv = tree_structure(v);
  return !detail::concordance_witness(tu, tv).has_value();
}

// alpha*u + beta*v for concordant substitutes valuations; the result is again
// a substitutes valuation (re-checked before returning). Throws
// NotConcordantError with a crossing witness otherwise.
inline Valuation concordant_sum(const Valuation& u, const Valuation& v,
                                const Rational& alpha, const Rational& beta) {
  if (u.n() != v.n()) throw std::invalid_argument("concordant_sum: dimension mismatch");
  if (alpha < 0 || beta < 0) {
    throw std::invalid_argument("concordant_sum: coefficients must be nonnegative");
  }
  TreeStructure tu = tree_structure(u);
  TreeStructure tv = tree_structure(v);
  if (auto witness = detail::concordance_witness(tu, tv)) throw *witness;
  Valuation sum = alpha * u + beta * v;
  if (!check_gs(sum).gs()) {
    throw std::logic_error("concordant sum failed the substitutes test");
  }
  return sum;
}

// The triple identities making a tensor the second-derivative table of an
// actual valuation: D^{S+k}_ij - D^S_ij = D^{S+j}_ik - D^S_ik
// = D^{S+i}_jk - D^S_jk for every S and triple {i,j,k} outside S.
inline bool check_integrability(const DeltaTensor& d) {
  const int n = d.n();
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    Subset s(m);
    std::vector<int> out = s.complement_in(n).items();
    for (std::size_t a = 0; a < out.size(); ++a) {
      for (std::size_t b = a + 1; b < out.size(); ++b) {
        for (std::size_t c = b + 1; c < out.size(); ++c) {
          int i = out[a], j = out[b], k = out[c];
          Rational g0 = d.at(s.with(k), i, j) - d.at(s, i, j);
          Rational g1 = d.at(s.with(j), i, k) - d.at(s, i, k);
          Rational g2 = d.at(s.with(i), j, k) - d.at(s, j, k);
          if (g0 != g1 || g1 != g2) return false;
        }
      }
    }
  }
  return true;
}

class NotIntegrableError : public std::runtime_error {
 public:
  NotIntegrableError() : std::runtime_error("tensor violates the integrability conditions") {}
};

// The unique normalized valuation whose delta tensor is d:
// v(S) = -sum over pairs {i,j} in S of D_ij conditioned on the elements of S
// below min(i,j). The summation order is immaterial once integrability holds.
inline Valuation reconstruct(const DeltaTensor& d) {
  if (!check_integrability(d)) throw NotIntegrableError();
  const int n = d.n();
  Valuation v(n);
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    Subset s(m);
    std::vector<int> items = s.items();
    Rational total = 0;
    for (std::size_t a = 0; a < items.size(); ++a) {
      Subset below;  // elements of S smaller than items[a]
      for (std::size_t x = 0; x < a; ++x) below = below.with(items[x]);
      for (std::size_t b = a + 1; b < items.size(); ++b) {
        total += d.at(below, items[a], items[b]);
      }
    }
    v.set(s, -total);
  }
  return v;
}

// Label-consistency form of integrability: whenever D^S_ik = D^S_jk =
// D^S_ij - alpha with alpha >= 0, the shifted symbols obey
// D^{S+j}_ik = D^{S+i}_jk = D^{S+k}_ij - alpha. Equivalent to
// check_integrability on substitutes tensors.
inline bool check_label_consistency(const DeltaTensor& d) {
  const int n = d.n();
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    Subset s(m);
    std::vector<int> out = s.complement_in(n).items();
    for (std::size_t a = 0; a < out.size(); ++a) {
      for (std::size_t b = a + 1; b < out.size(); ++b) {
        for (std::size_t c = b + 1; c < out.size(); ++c) {
          int tri[3] = {out[a], out[b], out[c]};
          for (int kk = 0; kk < 3; ++kk) {
            int k = tri[kk];
            int i = tri[(kk + 1) % 3];
            int j = tri[(kk + 2) % 3];
            const Rational& ik = d.at(s, i, k);
            const Rational& jk = d.at(s, j, k);
            const Rational& ij = d.at(s, i, j);
            if (ik != jk || ij < ik) continue;
            Rational alpha = ij - ik;
            if (d.at(s.with(j), i, k) != d.at(s.with(i), j, k) ||
                d.at(s.with(k), i, j) - alpha != d.at(s.with(j), i, k)) {
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

}  // namespace gs

#endif  // GS_TREE_HPP_
