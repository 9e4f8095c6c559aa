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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anyon/core.hpp"

namespace anyon {

/// sigma_index^{sign}: objects index and index+1 (1-based, bottom-up) exchange.
/// Positive sign means the lower (left) strand passes over.
struct Letter {
  int index = 1;
  int sign = +1;

  Letter inverse() const { return {index, -sign}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(ObjectList context, std::vector<Letter> letters = {})
      : context_(std::move(context)), letters_(std::move(letters)) {
    validate();
  }

  const ObjectList& context() const { return context_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::size_t strands() const { return context_.size(); }

  /// Object order after every letter has been applied.
  ObjectList final_objects() const {
    ObjectList objs = context_;
    for (auto l : letters_) std::swap(objs[l.index - 1], objs[l.index]);
    return objs;
  }

  /// Appends `other`, which must start from this word's final object order.
  BraidWord then(const BraidWord& other) const {
    if (other.context_ != final_objects()) {
      throw DomainError("BraidWord::then: object order mismatch");
    }
    auto letters = letters_;
    letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
    return BraidWord(context_, std::move(letters));
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord& a, const BraidWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  void validate() const {
    const int n = static_cast<int>(context_.size());
    for (auto l : letters_) {
      if (l.index < 1 || l.index >= n) {
        throw DomainError("braid letter index " + std::to_string(l.index) + " out of range for " +
                          std::to_string(n) + " objects");
      }
      if (l.sign != 1 && l.sign != -1) throw DomainError("braid letter sign must be +1 or -1");
    }
  }

  ObjectList context_;
  std::vector<Letter> letters_;
};

/// Free reduction: cancels adjacent sigma_i sigma_i^{-1} pairs.
inline BraidWord reduce(const BraidWord& word) {
  std::vector<Letter> stack;
  stack.reserve(word.size());
  for (auto l : word.letters()) {
    if (!stack.empty() && stack.back().index == l.index && stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(word.context(), std::move(stack));
}

inline BraidWord inverse(const BraidWord& word) {
  std::vector<Letter> letters;
  letters.reserve(word.size());
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return BraidWord(word.final_objects(), std::move(letters));
}

/// A braid in which only one object moves. `mobile` is a 0-based position in
/// the starting context.
class Weave {
 public:
  Weave(ObjectList context, std::size_t mobile, std::vector<Letter> moves = {})
      : context_(std::move(context)), mobile_(mobile), moves_(std::move(moves)) {
    if (mobile_ >= context_.size()) throw DomainError("weave: mobile index out of range");
    BraidWord(context_, moves_);  // index validation
    std::size_t pos = mobile_;
    for (auto m : moves_) {
      const auto lo = static_cast<std::size_t>(m.index - 1);
      if (pos == lo) {
        pos = lo + 1;
      } else if (pos == lo + 1) {
        pos = lo;
      } else {
        throw DomainError("weave: move sigma_" + std::to_string(m.index) +
                          " does not involve the mobile object");
      }
    }
    final_position_ = pos;
  }

  const ObjectList& context() const { return context_; }
  std::size_t mobile() const { return mobile_; }
  std::size_t final_position() const { return final_position_; }
  const std::vector<Letter>& moves() const { return moves_; }

 private:
  ObjectList context_;
  std::size_t mobile_;
  std::vector<Letter> moves_;
  std::size_t final_position_ = 0;
};

inline int winding(const Weave& weave) {
  int w = 0;
  for (auto m : weave.moves()) w += m.sign;
  return w;
}

inline int winding(std::span<const Letter> letters) {
  int w = 0;
  for (auto m : letters) w += m.sign;
  return w;
}

inline BraidWord weave_to_braid(const Weave& weave) {
  return BraidWord(weave.context(), weave.moves());
}

/// Rewrites a word on rigid composites as a word on their constituent
/// strands. `widths[j]` is the strand count of object j of `word.context()`;
/// `strand_charges` gives the charges of the underlying strands in the
/// starting order, and `offset` shifts the whole group up by that many
/// strands inside `strand_context`. Each composite exchange becomes the cabled
/// crossing in which every strand of the upper object passes every strand of
/// the lower one with the same sign.
inline BraidWord expand_composites(const BraidWord& word, std::vector<int> widths,
                                   const ObjectList& strand_context, int offset = 0) {
  if (widths.size() != word.context().size()) {
    throw DomainError("expand_composites: one width per object required");
  }
  int total = 0;
  for (int w : widths) total += w;
  if (offset < 0 || offset + total > static_cast<int>(strand_context.size())) {
    throw DomainError("expand_composites: group does not fit the strand context");
  }
  std::vector<Letter> out;
  for (auto l : word.letters()) {
    const int i = l.index - 1;
    int start = offset;
    for (int j = 0; j < i; ++j) start += widths[static_cast<std::size_t>(j)];
    const int wa = widths[static_cast<std::size_t>(i)];
    const int wb = widths[static_cast<std::size_t>(i) + 1];
    // Strand b_j (initially at start + wa + j) moves down past all of A.
    for (int j = 0; j < wb; ++j) {
      for (int t = wa - 1; t >= 0; --t) {
        out.push_back({start + t + j + 1, l.sign});
      }
    }
    std::swap(widths[static_cast<std::size_t>(i)], widths[static_cast<std::size_t>(i) + 1]);
  }
  return BraidWord(strand_context, std::move(out));
}

}  // namespace anyon
