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

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace anyon {

/// Raised when an input lies outside the algebraic domain of the theory
/// (invalid charge, inadmissible fusion channel, bad index).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for malformed requests that are not algebraic errors (bad format
/// names, incompatible options).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxLevel = 64;

/// The level k of su(2)_k. q = exp(2 pi i / (k + 2)) is derived on demand.
class Level {
 public:
  explicit Level(int k) : k_(k) {
    if (k < 1 || k > kMaxLevel) {
      throw DomainError("level k=" + std::to_string(k) + " outside [1, " +
                        std::to_string(kMaxLevel) + "]");
    }
  }
  int k() const { return k_; }
  double q_angle() const { return 2.0 * std::numbers::pi / (k_ + 2); }
  /// True iff braiding is universal for gate compilation (k >= 3, k != 4).
  bool universal() const { return k_ >= 3 && k_ != 4; }
  friend bool operator==(const Level&, const Level&) = default;

 private:
  int k_;
};

/// A topological charge stored as twice its spin-like value, so 1/2 -> 1.
struct Charge {
  int twice = 0;

  constexpr Charge() = default;
  constexpr explicit Charge(int twice_value) : twice(twice_value) {}

  static constexpr Charge vacuum() { return Charge{0}; }
  static constexpr Charge half() { return Charge{1}; }
  static constexpr Charge one() { return Charge{2}; }

  double spin() const { return twice / 2.0; }
  bool valid_at(const Level& level) const { return twice >= 0 && twice <= level.k(); }

  friend constexpr auto operator<=>(const Charge&, const Charge&) = default;
};

inline std::string to_string(Charge c) {
  if (c.twice % 2 == 0) return std::to_string(c.twice / 2);
  return std::to_string(c.twice) + "/2";
}

using ObjectList = std::vector<Charge>;

inline void require_valid(Charge c, const Level& level) {
  if (!c.valid_at(level)) {
    throw DomainError("charge " + to_string(c) + " invalid at k=" + std::to_string(level.k()));
  }
}

inline void require_valid(const ObjectList& objects, const Level& level) {
  if (objects.empty()) throw DomainError("object list is empty");
  for (auto c : objects) require_valid(c, level);
}

inline ObjectList uniform_objects(std::size_t n, Charge c) { return ObjectList(n, c); }

/// Truncated triangle rule: s1 x s2 = |s1-s2| + ... + min(s1+s2, k-s1-s2).
inline std::vector<Charge> fuse(Charge a, Charge b, const Level& level) {
  require_valid(a, level);
  require_valid(b, level);
  std::vector<Charge> out;
  const int lo = std::abs(a.twice - b.twice);
  const int hi = std::min(a.twice + b.twice, 2 * level.k() - a.twice - b.twice);
  for (int c = lo; c <= hi; c += 2) out.emplace_back(c);
  return out;
}

/// Admissibility of the vertex (a, b -> c); no validity checks, callers pass
/// charges already known to be in range.
inline bool admissible(int a, int b, int c, int k) {
  if ((a + b + c) % 2 != 0) return false;
  if (c < std::abs(a - b) || c > a + b) return false;
  return a + b + c <= 2 * k;
}

inline bool admissible(Charge a, Charge b, Charge c, const Level& level) {
  return admissible(a.twice, b.twice, c.twice, level.k());
}

/// Standard-basis label: intermediate charges of left-to-right fusion.
/// intermediates[i] is the total charge of objects 0..i.
struct FusionPath {
  std::vector<Charge> intermediates;

  Charge total() const { return intermediates.back(); }
  std::size_t size() const { return intermediates.size(); }
  Charge operator[](std::size_t i) const { return intermediates[i]; }

  friend auto operator<=>(const FusionPath&, const FusionPath&) = default;
  friend bool operator==(const FusionPath&, const FusionPath&) = default;
};

inline std::string to_string(const FusionPath& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i].twice;
  os << ')';
  return os.str();
}

/// All fusion paths of `objects`, optionally restricted to a total charge,
/// in lexicographic order of intermediates (the canonical basis order).
inline std::vector<FusionPath> enumerate_paths(const ObjectList& objects, const Level& level,
                                               const Charge* total = nullptr) {
  require_valid(objects, level);
  std::vector<FusionPath> current{FusionPath{{objects.front()}}};
  for (std::size_t i = 1; i < objects.size(); ++i) {
    std::vector<FusionPath> next;
    for (const auto& p : current) {
      for (auto c : fuse(p.total(), objects[i], level)) {
        auto q = p;
        q.intermediates.push_back(c);
        next.push_back(std::move(q));
      }
    }
    current = std::move(next);
  }
  if (total != nullptr) {
    std::erase_if(current, [&](const FusionPath& p) { return p.total() != *total; });
  }
  std::sort(current.begin(), current.end());
  return current;
}

inline std::vector<FusionPath> enumerate_paths(const ObjectList& objects, const Level& level,
                                               Charge total) {
  return enumerate_paths(objects, level, &total);
}

/// Replaces objects i, i+1 (0-based) by one rigid composite of charge `channel`.
inline ObjectList fuse_adjacent(const ObjectList& objects, std::size_t i, Charge channel,
                                const Level& level) {
  if (i + 1 >= objects.size()) throw DomainError("fuse_adjacent: index out of range");
  const auto allowed = fuse(objects[i], objects[i + 1], level);
  if (std::find(allowed.begin(), allowed.end(), channel) == allowed.end()) {
    throw DomainError("fuse_adjacent: channel " + to_string(channel) + " not in " +
                      to_string(objects[i]) + " x " + to_string(objects[i + 1]));
  }
  ObjectList out(objects.begin(), objects.begin() + static_cast<std::ptrdiff_t>(i));
  out.push_back(channel);
  out.insert(out.end(), objects.begin() + static_cast<std::ptrdiff_t>(i) + 2, objects.end());
  return out;
}

}  // namespace anyon
