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

#ifndef GS_IO_HPP_
#define GS_IO_HPP_

// File formats.
//
// Valuation (text): first line `n=<int>`, then one `{i,j,...}: <rational>`
// line per subset with the empty set written `{}`. Rationals are `p` or
// `p/q`. Unlisted subsets default to 0; listing a subset twice is an error.
// Blank lines and `#` comments are accepted on input, never written.
//
// Valuation (JSON): {"n": 5, "values": {"1,2": "-1", ...}} with the empty
// set keyed "". Values are strings to keep them exact.
//
// Matroid (text): `n=<int>` then `bases: {1,2} {1,3} ...`.
//
// Both valuation formats round-trip bit-exactly through read/write.

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gs/matroid.hpp"
#include "gs/rational.hpp"
#include "gs/subset.hpp"
#include "gs/tree.hpp"
#include "gs/valuation.hpp"

namespace gs {

// Input error with the offending source name and line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
        source(source),
        line(line) {}
  std::string source;
  int line;
};

namespace detail {

inline std::string strip(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline int parse_header_n(const std::string& line, const std::string& source,
                          int lineno) {
  std::string body = strip(line);
  if (body.rfind("n=", 0) != 0) {
    throw ParseError(source, lineno, "expected 'n=<int>' header");
  }
  std::string digits = strip(body.substr(2));
  if (digits.empty()) throw ParseError(source, lineno, "missing item count");
  int n = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(source, lineno, "invalid item count '" + digits + "'");
    }
    n = n * 10 + (c - '0');
    if (n > kMaxItems) throw ParseError(source, lineno, "item count exceeds 16");
  }
  return n;
}

}  // namespace detail

inline Valuation read_valuation_text(std::istream& in,
                                     const std::string& source = "<input>") {
  std::string line;
  int lineno = 0;
  int n = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = detail::strip(line);
    if (body.empty() || body[0] == '#') continue;
    n = detail::parse_header_n(body, source, lineno);
    break;
  }
  if (n < 0) throw ParseError(source, lineno, "empty valuation file");
  Valuation v(n);
  std::set<Subset> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = detail::strip(line);
    if (body.empty() || body[0] == '#') continue;
    std::size_t colon = body.find(':');
    if (colon == std::string::npos) {
      throw ParseError(source, lineno, "expected '{...}: value'");
    }
    Subset s;
    Rational value;
    try {
      s = parse_subset(std::string_view(body).substr(0, colon), n);
      value = parse_rational(std::string_view(body).substr(colon + 1));
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, lineno, e.what());
    }
    if (!seen.insert(s).second) {
      throw ParseError(source, lineno,
                       "duplicate subset " + format_subset(s));
    }
    v.set(s, value);
  }
  return v;
}

inline void write_valuation_text(std::ostream& out, const Valuation& v) {
  out << "n=" << v.n() << "\n";
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    Subset s(m);
    if (v[s] == 0) continue;
    out << format_subset(s) << ": " << to_string(v[s]) << "\n";
  }
}

inline Valuation read_valuation_json(std::istream& in,
                                     const std::string& source = "<input>") {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source, 0, e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError(source, 0, "expected {\"n\": <int>, \"values\": {...}}");
  }
  int n = doc["n"].get<int>();
  if (n < 0 || n > kMaxItems) throw ParseError(source, 0, "item count out of range");
  Valuation v(n);
  if (doc.contains("values")) {
    if (!doc["values"].is_object()) {
      throw ParseError(source, 0, "\"values\" must be an object");
    }
    std::set<Subset> seen;
    for (const auto& [key, val] : doc["values"].items()) {
      Subset s;
      Rational value;
      try {
        s = parse_subset(key, n);
        value = parse_rational(val.get<std::string>());
      } catch (const std::exception& e) {
        throw ParseError(source, 0, std::string(e.what()));
      }
      if (!seen.insert(s).second) {
        throw ParseError(source, 0, "duplicate subset " + format_subset(s));
      }
      v.set(s, value);
    }
  }
  return v;
}

inline nlohmann::json valuation_to_json(const Valuation& v) {
  nlohmann::json values = nlohmann::json::object();
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    Subset s(m);
    if (v[s] == 0) continue;
    values[format_items(s)] = to_string(v[s]);
  }
  return nlohmann::json{{"n", v.n()}, {"values", values}};
}

inline void write_valuation_json(std::ostream& out, const Valuation& v) {
  out << valuation_to_json(v).dump(2) << "\n";
}

// Auto-detects JSON (leading '{') versus the text format.
inline Valuation read_valuation(std::istream& in,
                                const std::string& source = "<input>") {
  int c = in.peek();
  while (c != EOF && std::isspace(c)) {
    in.get();
    c = in.peek();
  }
  if (c == '{') return read_valuation_json(in, source);
  return read_valuation_text(in, source);
}

inline Valuation read_valuation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return read_valuation(in, path);
}

inline Matroid read_matroid_text(std::istream& in,
                                 const std::string& source = "<input>") {
  std::string line;
  int lineno = 0;
  int n = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = detail::strip(line);
    if (body.empty() || body[0] == '#') continue;
    n = detail::parse_header_n(body, source, lineno);
    break;
  }
  if (n < 0) throw ParseError(source, lineno, "empty matroid file");
  std::vector<Subset> bases;
  bool saw_bases = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = detail::strip(line);
    if (body.empty() || body[0] == '#') continue;
    if (body.rfind("bases:", 0) != 0) {
      throw ParseError(source, lineno, "expected 'bases: {..} {..} ...'");
    }
    saw_bases = true;
    std::string rest = body.substr(6);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      while (pos < rest.size() &&
             std::isspace(static_cast<unsigned char>(rest[pos]))) {
        ++pos;
      }
      if (pos == rest.size()) break;
      if (rest[pos] != '{') throw ParseError(source, lineno, "expected '{'");
      std::size_t close = rest.find('}', pos);
      if (close == std::string::npos) {
        throw ParseError(source, lineno, "unterminated basis");
      }
      try {
        bases.push_back(
            parse_subset(std::string_view(rest).substr(pos, close - pos + 1), n));
      } catch (const std::invalid_argument& e) {
        throw ParseError(source, lineno, e.what());
      }
      pos = close + 1;
    }
  }
  if (!saw_bases) throw ParseError(source, lineno, "missing 'bases:' line");
  try {
    return make_matroid(n, std::move(bases));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, lineno, e.what());
  }
}

inline void write_matroid_text(std::ostream& out, const Matroid& m) {
  out << "n=" << m.n << "\n";
  out << "bases:";
  for (Subset b : m.bases) out << " " << format_subset(b);
  out << "\n";
}

// Catalog export: one record per matroid plus its isomorphism class index.
inline nlohmann::json catalog_to_json(MatroidCatalog& catalog) {
  if (catalog.iso_class.size() != catalog.entries.size()) {
    isomorphism_classes(catalog);
  }
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t e = 0; e < catalog.entries.size(); ++e) {
    nlohmann::json bases = nlohmann::json::array();
    for (Subset b : catalog.entries[e].bases) bases.push_back(format_subset(b));
    arr.push_back({{"n", catalog.entries[e].n},
                   {"rank", catalog.entries[e].rank},
                   {"bases", bases},
                   {"iso_class", catalog.iso_class[e]}});
  }
  return arr;
}

// {"S": "1,2", "nodes": [{"set": "3,4,5", "label": "2"}, ...]}
inline nlohmann::json tree_to_json(Subset conditioning, const LabeledTree& tree) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& [node, label] : tree.nodes) {
    nodes.push_back({{"set", format_items(node)}, {"label", to_string(label)}});
  }
  return nlohmann::json{{"S", format_items(conditioning)}, {"nodes", nodes}};
}

}  // namespace gs

#endif  // GS_IO_HPP_
