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

#ifndef GS_RATIONAL_HPP_
#define GS_RATIONAL_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gs {

// Exact arbitrary-precision arithmetic. Every quantity in this library is a
// Rational; there is no floating point anywhere. GMP keeps values canonical
// (lowest terms, positive denominator).
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

// Renders as "p" for integers and "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.str(); }

// Parses "p" or "p/q" with an optional leading sign. Throws
// std::invalid_argument on anything else (including q <= 0).
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("invalid rational: '" + std::string(text) +
                                "'");
  };
  std::size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  std::string_view body = text.substr(a, b - a);
  if (body.empty()) fail();

  auto parse_int = [&](std::string_view s, bool allow_sign) -> Integer {
    std::size_t i = 0;
    if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
    if (i == s.size()) fail();
    for (std::size_t k = i; k < s.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) fail();
    }
    return Integer(std::string(s));
  };

  std::size_t slash = body.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(body, true));
  }
  Integer num = parse_int(body.substr(0, slash), true);
  std::string_view den_part = body.substr(slash + 1);
  if (den_part.empty()) fail();
  Integer den = parse_int(den_part, false);
  if (den <= 0) fail();
  Rational q(num);
  q /= Rational(den);
  return q;
}

}  // namespace gs

#endif  // GS_RATIONAL_HPP_
