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

#ifndef GS_SUBSET_HPP_
#define GS_SUBSET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gs {

// Ground sets are [n] = {1, ..., n} with n <= 16. Item i sits on bit i-1.
inline constexpr int kMaxItems = 16;

class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static Subset of(std::initializer_list<int> items) {
    Subset s;
    for (int i : items) s = s.with(i);
    return s;
  }
  static constexpr Subset full(int n) {
    return Subset(n == 0 ? 0u : (0xFFFFFFFFu >> (32 - n)));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  constexpr bool contains(int item) const { return (bits_ >> (item - 1)) & 1u; }
  constexpr bool subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(Subset other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr Subset with(int item) const { return Subset(bits_ | bit(item)); }
  constexpr Subset without(int item) const { return Subset(bits_ & ~bit(item)); }
  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset complement_in(int n) const {
    return Subset(~bits_ & full(n).bits_);
  }

  std::vector<int> items() const {
    std::vector<int> out;
    for (int i = 1; i <= kMaxItems; ++i) {
      if (contains(i)) out.push_back(i);
    }
    return out;
  }
  int min_item() const {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }

  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  static constexpr std::uint32_t bit(int item) { return 1u << (item - 1); }
  std::uint32_t bits_ = 0;
};

// "{1,2,3}"; the empty set prints as "{}".
inline std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.items()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

// Bare comma-separated items, e.g. "1,2,3"; empty string for the empty set.
// Used as map keys in the JSON formats.
inline std::string format_items(Subset s) {
  std::string out;
  for (int i : s.items()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

// Accepts both "{1,2}" and "1,2" (and "{}" / "" for the empty set).
inline Subset parse_subset(std::string_view text, int n) {
  auto fail = [&] {
    throw std::invalid_argument("invalid subset: '" + std::string(text) + "'");
  };
  std::size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  std::string_view body = text.substr(a, b - a);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') fail();
    body = body.substr(1, body.size() - 2);
  }
  Subset s;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view tok = body.substr(
        pos, comma == std::string_view::npos ? body.size() - pos : comma - pos);
    std::size_t ta = 0, tb = tok.size();
    while (ta < tb && std::isspace(static_cast<unsigned char>(tok[ta]))) ++ta;
    while (tb > ta && std::isspace(static_cast<unsigned char>(tok[tb - 1])))
      --tb;
    tok = tok.substr(ta, tb - ta);
    if (tok.empty()) fail();
    int item = 0;
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
      item = item * 10 + (c - '0');
      if (item > kMaxItems) fail();
    }
    if (item < 1 || item > n) fail();
    if (s.contains(item)) fail();
    s = s.with(item);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == body.size()) fail();
  }
  return s;
}

}  // namespace gs

#endif  // GS_SUBSET_HPP_
