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

#include "gs/rational.hpp"
#include "gs/subset.hpp"

using namespace gs;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("+4") == Rational(4));
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational(" 10/5 ") == Rational(2));
  CHECK(to_string(Rational(2, 4)) == "1/2");
  CHECK(to_string(Rational(-7)) == "-7");
  CHECK(to_string(Rational(0)) == "0");

  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(numerator(Rational(-6, 4)) == -3);
  CHECK(denominator(Rational(-6, 4)) == 2);
}

TEST_CASE("subset basics") {
  Subset s = Subset::of({1, 3, 5});
  CHECK(s.size() == 3);
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(2));
  CHECK(s.items() == std::vector<int>{1, 3, 5});
  CHECK(s.min_item() == 1);
  CHECK((s | Subset::of({2})) == Subset::of({1, 2, 3, 5}));
  CHECK((s & Subset::of({3, 4})) == Subset::of({3}));
  CHECK((s - Subset::of({1})) == Subset::of({3, 5}));
  CHECK(s.complement_in(5) == Subset::of({2, 4}));
  CHECK(Subset::of({1, 2}).subset_of(s) == false);
  CHECK(Subset::of({1, 3}).subset_of(s));
  CHECK(Subset::full(0).empty());
  CHECK(Subset::full(16).size() == 16);
}

TEST_CASE("subset parsing and formatting") {
  CHECK(format_subset(Subset::of({1, 2, 3})) == "{1,2,3}");
  CHECK(format_subset(Subset()) == "{}");
  CHECK(format_items(Subset::of({2, 5})) == "2,5");
  CHECK(format_items(Subset()) == "");
  CHECK(parse_subset("{1,2}", 5) == Subset::of({1, 2}));
  CHECK(parse_subset("1,2", 5) == Subset::of({1, 2}));
  CHECK(parse_subset("{}", 5) == Subset());
  CHECK(parse_subset("", 5) == Subset());
  CHECK(parse_subset(" { 2 , 4 } ", 5) == Subset::of({2, 4}));

  CHECK_THROWS_AS(parse_subset("{1,6}", 5), std::invalid_argument);
  CHECK_THROWS_AS(parse_subset("{0}", 5), std::invalid_argument);
  CHECK_THROWS_AS(parse_subset("{1,1}", 5), std::invalid_argument);
  CHECK_THROWS_AS(parse_subset("{1,", 5), std::invalid_argument);
  CHECK_THROWS_AS(parse_subset("{1,}", 5), std::invalid_argument);
  CHECK_THROWS_AS(parse_subset("{x}", 5), std::invalid_argument);
}
