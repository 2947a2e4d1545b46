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

#include <algorithm>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "gs/matroid.hpp"
#include "gs/paper.hpp"
#include "oracles.hpp"

using namespace gs;

TEST_CASE("basis exchange") {
  CHECK(check_basis_exchange(3, {Subset::of({1, 2}), Subset::of({2, 3})}));
  CHECK_FALSE(check_basis_exchange(4, {Subset::of({1, 2}), Subset::of({3, 4})}));
  CHECK(check_basis_exchange(5, uniform_matroid(5, 2).bases));
  CHECK_THROWS_AS(check_basis_exchange(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(
      check_basis_exchange(3, {Subset::of({1}), Subset::of({1, 2})}),
      std::invalid_argument);
}

TEST_CASE("rank function") {
  Valuation r1 = rank_function(uniform_matroid(5, 1));
  for (std::uint32_t m = 0; m < 32; ++m) {
    CHECK(r1[Subset(m)] == std::min(Subset(m).size(), 1));
  }

  // graphic matroid with parallel pair {1,2} and a third independent element
  Matroid gm = make_matroid(
      3, {Subset::of({1, 3}), Subset::of({2, 3})});
  Valuation r = rank_function(gm);
  CHECK(r[Subset::of({1})] == 1);
  CHECK(r[Subset::of({2})] == 1);
  CHECK(r[Subset::of({3})] == 1);
  CHECK(r[Subset::of({1, 2})] == 1);
  CHECK(r[Subset::of({2, 3})] == 2);
  CHECK(r[Subset::of({1, 3})] == 2);
  CHECK(r[Subset::of({1, 2, 3})] == 2);

  Valuation free3 = rank_function(uniform_matroid(3, 3));
  for (std::uint32_t m = 0; m < 8; ++m) {
    CHECK(free3[Subset(m)] == Subset(m).size());
  }
}

TEST_CASE("rank function matches the brute-force oracle") {
  MatroidCatalog catalog = enumerate_matroids(4);
  for (const Matroid& m : catalog.entries) {
    Valuation r = rank_function(m);
    for (std::uint32_t s = 0; s < 16; ++s) {
      CHECK(r[Subset(s)] == oracle::brute_rank(m.bases, Subset(s)));
    }
  }
}

TEST_CASE("normalized rank") {
  Valuation u = normalized_rank(uniform_matroid(5, 1));
  CHECK(u[Subset()] == 0);
  for (std::uint32_t m = 1; m < 32; ++m) {
    CHECK(u[Subset(m)] == 1 - Subset(m).size());
  }
  CHECK(normalized_rank(uniform_matroid(4, 4)) == Valuation(4));  // free
  Matroid loops{3, 0, {Subset()}};
  CHECK(normalized_rank(loops) == Valuation(3));
}

TEST_CASE("matroid rank valuation recognition") {
  CHECK(is_matroid_rank_valuation(rank_function(uniform_matroid(5, 2))));
  CHECK_FALSE(is_matroid_rank_valuation(counterexample_valuation()));
  // the extremal submodular valuation lifted to {0,1} marginals is still not
  // a matroid rank function: it fails the substitutes triple at {1,2,3}
  Valuation f = appendix_b_function();
  AffineTransform lift{PriceVector{{1, 1, 1, 1}}, 0};
  Valuation lifted = apply_affine(f, lift);
  bool marginals_ok = true;
  for (std::uint32_t m = 0; m < 16; ++m) {
    for (int i = 1; i <= 4; ++i) {
      if (Subset(m).contains(i)) continue;
      Rational step = d1(lifted, i, Subset(m));
      if (step != 0 && step != 1) marginals_ok = false;
    }
  }
  CHECK(marginals_ok);
  CHECK_FALSE(is_matroid_rank_valuation(lifted));
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_matroids(0).entries.size() == 1);
  CHECK(enumerate_matroids(1).entries.size() == 2);
  CHECK(enumerate_matroids(2).entries.size() == 5);
  CHECK(enumerate_matroids(3).entries.size() == 16);
  CHECK(enumerate_matroids(4).entries.size() == 68);
  CHECK(enumerate_matroids(5).entries.size() == 406);
  CHECK_THROWS_AS(enumerate_matroids(7), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_matroids(-1), std::invalid_argument);
}

TEST_CASE("enumeration agrees with direct independence-system enumeration") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<Subset>> direct =
        oracle::independence_system_matroids(n);
    MatroidCatalog catalog = enumerate_matroids(n);
    std::set<std::vector<Subset>> via_bases;
    for (const Matroid& m : catalog.entries) via_bases.insert(m.bases);
    CHECK(direct == via_bases);
  }
}

TEST_CASE("enumeration is permutation invariant") {
  MatroidCatalog catalog = enumerate_matroids(4);
  std::set<std::vector<Subset>> families;
  for (const Matroid& m : catalog.entries) families.insert(m.bases);
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<int> perm = oracle::random_permutation(rng, 4);
    for (const Matroid& m : catalog.entries) {
      std::vector<Subset> image;
      for (Subset b : m.bases) {
        Subset img;
        for (int i : b.items()) img = img.with(perm[i - 1]);
        image.push_back(img);
      }
      std::sort(image.begin(), image.end());
      CHECK(families.count(image) == 1);
    }
  }
}

TEST_CASE("every enumerated rank function is a matroid rank valuation") {
  for (int n = 1; n <= 5; ++n) {
    MatroidCatalog catalog = enumerate_matroids(n);
    for (const Matroid& m : catalog.entries) {
      CHECK(is_matroid_rank_valuation(rank_function(m)));
      CHECK(check_gs(normalized_rank(m)).gs());
    }
  }
}

TEST_CASE("isomorphism classes") {
  MatroidCatalog c1 = enumerate_matroids(1);
  CHECK(isomorphism_classes(c1) == 2);
  MatroidCatalog c3 = enumerate_matroids(3);
  CHECK(isomorphism_classes(c3) == 8);
  MatroidCatalog c4 = enumerate_matroids(4);
  CHECK(isomorphism_classes(c4) == 17);
  MatroidCatalog c5 = enumerate_matroids(5);
  CHECK(isomorphism_classes(c5) == 38);
  CHECK(c5.iso_class.size() == 406);
  CHECK(c5.canonical_forms.size() == 38);
  // canonical representative is itself in the catalog and minimal in its class
  std::set<std::vector<Subset>> families;
  for (const Matroid& m : c5.entries) families.insert(m.bases);
  for (const auto& canon : c5.canonical_forms) {
    CHECK(families.count(canon) == 1);
  }
  for (std::size_t e = 0; e < c5.entries.size(); ++e) {
    CHECK(c5.canonical_forms[c5.iso_class[e]] <= c5.entries[e].bases);
  }
}

TEST_CASE("normalized rank generators") {
  CHECK(normalized_rank_generators(1).empty());

  std::vector<Valuation> g2 = normalized_rank_generators(2);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0][Subset::of({1, 2})] == -1);
  CHECK(g2[0][Subset::of({1})] == 0);

  CHECK(normalized_rank_generators(3).size() == 5);
  CHECK(normalized_rank_generators(4).size() == 26);

  std::vector<Valuation> g5 = normalized_rank_generators(5);
  CHECK(g5.size() == 184);  // frozen count of distinct nonzero vectors
  std::set<std::vector<Rational>> distinct;
  for (const Valuation& v : g5) {
    bool nonzero = false;
    std::vector<Rational> key;
    for (std::uint32_t m = 0; m < 32; ++m) {
      key.push_back(v[Subset(m)]);
      if (v[Subset(m)] != 0) nonzero = true;
      // marginals in {-1, 0}
      for (int i = 1; i <= 5; ++i) {
        if (Subset(m).contains(i)) continue;
        Rational step = d1(v, i, Subset(m));
        CHECK((step == 0 || step == -1));
      }
    }
    CHECK(nonzero);
    distinct.insert(key);
  }
  CHECK(distinct.size() == g5.size());
}
