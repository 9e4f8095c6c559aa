// Copyright 2026 The anyonweave Authors
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

#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "anyon/braid.hpp"
#include "json.hpp"

namespace anyon {

/// Malformed input, with a 1-based position when the JSON itself is broken.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// The interchange unit: a level, a starting object order and a word, plus
/// the mobile object's position when the word is a weave.
struct BraidFile {
  int k = 0;
  BraidWord word;
  std::optional<std::size_t> mobile;
};

namespace detail {

inline std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline int require_int(const nlohmann::json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  return j.get<int>();
}

}  // namespace detail

/// Fixed layout: one key per line in the order k, objects, word, mobile, with
/// arrays kept on one line. Byte-identical for equal inputs.
inline std::string to_json(const BraidFile& f) {
  std::ostringstream os;
  os << "{\n  \"k\": " << f.k << ",\n  \"objects\": [";
  for (std::size_t i = 0; i < f.word.context().size(); ++i) os << (i ? ", " : "") << f.word.context()[i].twice;
  os << "],\n  \"word\": [";
  for (std::size_t i = 0; i < f.word.size(); ++i) {
    const auto l = f.word.letters()[i];
    os << (i ? ", " : "") << '[' << l.index << ", " << l.sign << ']';
  }
  os << ']';
  if (f.mobile) os << ",\n  \"mobile\": " << *f.mobile;
  os << "\n}\n";
  return os.str();
}

inline nlohmann::ordered_json to_ordered_json(const BraidFile& f) {
  return nlohmann::ordered_json::parse(to_json(f));
}

/// Schema checks beyond JSON syntax: level range, object charges, letter
/// ranges, and for weaves that every move involves the mobile object.
inline BraidFile braid_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("braid: top level must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& key = it.key();
    if (key != "k" && key != "objects" && key != "word" && key != "mobile") {
      throw ParseError("braid: unknown field '" + key + "'");
    }
  }
  for (auto key : {"k", "objects", "word"})
    if (!j.contains(key)) throw ParseError(std::string("braid: missing field '") + key + "'");

  BraidFile f;
  f.k = detail::require_int(j["k"], "k");
  if (f.k < 1 || f.k > kMaxLevel) throw ParseError("k=" + std::to_string(f.k) + " outside 1..64");
  const Level level(f.k);

  if (!j["objects"].is_array() || j["objects"].empty()) throw ParseError("objects must be a non-empty array");
  ObjectList objects;
  for (const auto& o : j["objects"]) {
    const Charge c{detail::require_int(o, "objects entry")};
    if (!c.valid_at(level)) {
      throw ParseError("object charge " + std::to_string(c.twice) + " (twice units) invalid at k=" +
                       std::to_string(f.k));
    }
    objects.push_back(c);
  }

  if (!j["word"].is_array()) throw ParseError("word must be an array");
  std::vector<Letter> letters;
  for (const auto& l : j["word"]) {
    if (!l.is_array() || l.size() != 2) throw ParseError("each letter must be a pair [index, sign]");
    letters.push_back({detail::require_int(l[0], "letter index"), detail::require_int(l[1], "letter sign")});
  }
  try {
    f.word = BraidWord(objects, std::move(letters));
    if (j.contains("mobile")) {
      const int mob = detail::require_int(j["mobile"], "mobile");
      if (mob < 0) throw ParseError("mobile must be non-negative");
      f.mobile = static_cast<std::size_t>(mob);
      Weave(f.word.context(), *f.mobile, f.word.letters());
    }
  } catch (const DomainError& e) {
    throw ParseError(std::string("braid: ") + e.what());
  }
  return f;
}

inline BraidFile parse_braid(const std::string& text, const std::string& source = "<input>") {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = detail::line_column(text, e.byte);
    std::string msg = e.what();
    // Strip the library's own prefix; keep its description.
    if (auto p = msg.find(": "); p != std::string::npos) msg = msg.substr(p + 2);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg, line, col);
  }
  try {
    return braid_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

inline BraidFile read_braid(const std::string& path) { return parse_braid(read_text(path), path); }

inline void write_braid(const std::string& path, const BraidFile& f) { write_text(path, to_json(f)); }

}  // namespace anyon
