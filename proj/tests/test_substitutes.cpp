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

#include <catch2/catch_amalgamated.hpp>

#include "gs/cone.hpp"
#include "gs/paper.hpp"
#include "gs/substitutes.hpp"
#include "oracles.hpp"

using namespace gs;

TEST_CASE("substitutes check on the counterexample") {
  GsReport report = check_gs(counterexample_valuation());
  CHECK(report.gs());
  CHECK(report.triple_instances == 40);
}

TEST_CASE("substitutes check on additive valuations") {
  Valuation v(4);
  for (std::uint32_t m = 0; m < 16; ++m) {
    v.set(Subset(m), Rational(3) * Subset(m).size());
  }
  GsReport report = check_gs(v);
  CHECK(report.gs());
  CHECK(report.triple_instances == 8);
}

TEST_CASE("substitutes check rejects the extremal submodular valuation") {
  GsReport report = check_gs(appendix_b_function());
  REQUIRE_FALSE(report.gs());
  // the named witness: at S = {}, d2(1,3) = 0 exceeds max(d2(1,2), d2(2,3)) = -1
  bool found = false;
  for (const GSViolation& w : report.violations) {
    if (w.kind == ViolationKind::kTripleInequality && w.S == Subset() &&
        w.i == 1 && w.j == 3 && w.k == 2) {
      CHECK(w.lhs == 0);
      CHECK(w.rhs == -1);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("violation records carry consistent witnesses") {
  Valuation v(3);
  v.set(Subset::of({1, 2}), Rational(1));  // complementary pair
  GsReport report = check_gs(v);
  REQUIRE_FALSE(report.gs());
  bool nonpos = false;
  for (const GSViolation& w : report.violations) {
    if (w.kind == ViolationKind::kNonpositivity) {
      nonpos = true;
      CHECK(w.lhs > w.rhs);
      CHECK(w.k == 0);
    }
  }
  CHECK(nonpos);
}

TEST_CASE("the two triple phrasings agree") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    Rational a = oracle::random_rational(rng, -3, 3, 2);
    Rational b = oracle::random_rational(rng, -3, 3, 2);
    Rational c = oracle::random_rational(rng, -3, 3, 2);
    CHECK(detail::triple_ok_max_form(a, b, c) ==
          detail::triple_ok_min_twice(a, b, c));
  }
}

TEST_CASE("check_gs matches the brute-force definition") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Valuation v(n);
    // small integer tables produce a healthy mix of GS and non-GS
    for (std::uint32_t m = 1; m < v.table_size(); ++m) {
      if (Subset(m).size() >= 2) {
        v.set(Subset(m), oracle::random_rational(rng, -2, 0, 1));
      }
    }
    CHECK(check_gs(v).gs() == oracle::brute_gs(v));
    CHECK(check_submodular(v) == oracle::brute_submodular(v));
  }
}

TEST_CASE("substitutes implies submodular on samples") {
  for (int n = 2; n <= 4; ++n) {
    for (const Valuation& v : sample_gs(n, 1000 + n, 40)) {
      REQUIRE(check_gs(v).gs());
      CHECK(check_submodular(v));
    }
  }
}

TEST_CASE("check_gs is affine invariant and relabeling equivariant") {
  std::mt19937_64 rng(41);
  Valuation v = counterexample_valuation();
  for (int trial = 0; trial < 10; ++trial) {
    AffineTransform t{oracle::random_prices(rng, 5),
                      oracle::random_rational(rng, -4, 4, 3)};
    CHECK(check_gs(apply_affine(v, t)).gs());
  }
  Valuation f = appendix_b_function();
  std::size_t base_count = check_gs(f).violations.size();
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> perm = oracle::random_permutation(rng, 4);
    Valuation g = permute_items(f, perm);
    GsReport report = check_gs(g);
    CHECK(report.violations.size() == base_count);
    // each violating conditioning set maps through the permutation
    for (const GSViolation& w : check_gs(f).violations) {
      Subset image;
      for (int i : w.S.items()) image = image.with(perm[i - 1]);
      bool found = false;
      for (const GSViolation& x : report.violations) {
        if (x.S == image && x.kind == w.kind) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("submodularity check") {
  CHECK(check_submodular(appendix_b_function()));
  CHECK(check_submodular(counterexample_valuation()));
  Valuation v(3);
  v.set(Subset::of({1, 2}), Rational(1));
  CHECK_FALSE(check_submodular(v));
}

TEST_CASE("priced valuations") {
  Valuation v = counterexample_valuation();
  CHECK(priced(v, PriceVector::zero(5)) == v);

  Valuation u = rank_function(uniform_matroid(2, 1));
  PriceVector half{{Rational(1, 2), Rational(1, 2)}};
  Valuation up = priced(u, half);
  CHECK(up[Subset::of({1})] == Rational(1, 2));
  CHECK(up[Subset::of({1, 2})] == 0);

  AffineTransform ones{PriceVector{{1, 1, 1, 1, 1}}, 0};
  CHECK(priced(apply_affine(v, ones), PriceVector{{1, 1, 1, 1, 1}}) == v);
  CHECK_THROWS_AS(priced(v, PriceVector::zero(3)), std::invalid_argument);
}

TEST_CASE("demand correspondence") {
  Valuation v = counterexample_valuation();
  PriceVector huge{{100, 100, 100, 100, 100}};
  DemandResult at_huge = demand(v, huge);
  CHECK(at_huge.max_value == 0);
  CHECK(at_huge.demanded == std::vector<Subset>{Subset()});

  Valuation u = rank_function(uniform_matroid(2, 1));
  DemandResult tie = demand(u, PriceVector{{Rational(1, 2), Rational(1, 2)}});
  CHECK(tie.max_value == Rational(1, 2));
  CHECK(tie.demanded == std::vector<Subset>{Subset::of({1}), Subset::of({2})});

  AffineTransform ones{PriceVector{{1, 1, 1, 1, 1}}, 0};
  DemandResult monotone = demand(apply_affine(v, ones), PriceVector::zero(5));
  CHECK(monotone.max_value == 2);
  bool has14 = false;
  for (Subset s : monotone.demanded) {
    if (s == Subset::of({1, 4})) has14 = true;
  }
  CHECK(has14);
}

TEST_CASE("greedy") {
  Valuation v = counterexample_valuation();
  CHECK(greedy(v, PriceVector{{9, 9, 9, 9, 9}}) == Subset());

  // additive with weights (3,1): only item 1 has positive margin at p=(2,2)
  Valuation a(2);
  a.set(Subset::of({1}), Rational(3));
  a.set(Subset::of({2}), Rational(1));
  a.set(Subset::of({1, 2}), Rational(4));
  CHECK(greedy(a, PriceVector{{2, 2}}) == Subset::of({1}));
}

TEST_CASE("greedy lands in the demand set on substitutes valuations") {
  std::mt19937_64 rng(43);
  for (int n = 2; n <= 4; ++n) {
    for (const Valuation& v : sample_gs(n, 500 + n, 25)) {
      for (int rep = 0; rep < 4; ++rep) {
        PriceVector p = oracle::random_prices(rng, n);
        Subset g = greedy(v, p);
        DemandResult d = demand(v, p);
        bool member = false;
        for (Subset s : d.demanded) {
          if (s == g) member = true;
        }
        CHECK(member);
        CHECK(check_local_global(v, p));
      }
    }
  }
}

TEST_CASE("local optima can trap non-substitutes valuations") {
  Valuation f = appendix_b_function();
  PriceVector witness{{-1, -1, -1, -1}};
  CHECK_FALSE(check_local_global(f, witness));

  Valuation a(3);  // additive valuations never trap
  a.set(Subset::of({1}), Rational(2));
  a.set(Subset::of({2}), Rational(1));
  a.set(Subset::of({3}), Rational(3));
  for (std::uint32_t m = 0; m < 8; ++m) {
    Rational total = 0;
    for (int i : Subset(m).items()) total += a[Subset().with(i)];
    a.set(Subset(m), total);
  }
  std::mt19937_64 rng(47);
  for (int rep = 0; rep < 20; ++rep) {
    CHECK(check_local_global(a, oracle::random_prices(rng, 3)));
  }
}
