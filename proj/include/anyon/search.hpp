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
#include <array>
#include <limits>
#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>

#include "anyon/simulator.hpp"
#include "anyon/su2.hpp"

namespace anyon {

enum class SearchMethod { kExhaustive, kBidirectional };

inline std::string to_string(SearchMethod m) {
  return m == SearchMethod::kExhaustive ? "exhaustive" : "bidirectional";
}

inline SearchMethod parse_method(const std::string& s) {
  if (s == "exhaustive") return SearchMethod::kExhaustive;
  if (s == "bidirectional") return SearchMethod::kBidirectional;
  throw UsageError("unknown search method '" + s + "'");
}

/// Move alphabet of the middle weave. With step 2 the mobile object only makes
/// full passes (sigma_i^{+-2}, +-4, ...) and stays in the middle; step 1 allows
/// odd powers and is only meaningful when all three charges agree.
struct Alphabet {
  int step = 2;
  int max_power = 0;  ///< cap on |exponent| in units of `step`; 0 = no cap
};

struct SearchConstraints {
  bool weave_only = true;
  std::optional<int> winding;  ///< fixed total winding; implies phase-sensitive matching
};

struct SearchConfig {
  int max_length = 24;  ///< elementary interchanges in the searched middle weave
  Alphabet alphabet;
  SearchConstraints constraints;
  SearchMethod method = SearchMethod::kBidirectional;
  double hash_cell = 0.05;
  std::uint64_t budget = 4'000'000;  ///< max enumerated words per half (or in total for exhaustive)
  int threads = 1;
  int refine = 0;  ///< commutator refinement levels applied after a weave-problem search

  void validate() const {
    if (refine < 0 || refine > 3) throw UsageError("refine must be in 0..3");
    if (max_length < 0) throw UsageError("max_length must be >= 0");
    if (!(hash_cell > 0.0)) throw UsageError("hash_cell must be > 0");
    if (budget == 0) throw UsageError("budget must be > 0");
    if (alphabet.step != 1 && alphabet.step != 2) throw UsageError("alphabet step must be 1 or 2");
    if (constraints.weave_only && alphabet.step != 2) {
      throw UsageError("weave-only search requires the step-2 alphabet");
    }
    if (threads < 1) throw UsageError("threads must be >= 1");
  }
};

/// One maximal run sigma_{gen+1}^{exp * step} of the middle weave.
struct Part {
  std::int8_t gen = 0;
  std::int16_t exp = 0;
  friend bool operator==(const Part&, const Part&) = default;
};

using Parts = std::vector<Part>;

/// Middle-mobile three-object weave problem restricted to a two-dimensional
/// total-charge sector. The SU(2) images of the two move units are stored
/// after dividing by a common square root of their determinant, so the image
/// of any word is  (SU(2) product) * root^{winding/step}.
class WeaveSpace {
 public:
  WeaveSpace(const Model& model, ObjectList objects, Charge sector, Alphabet alphabet)
      : model_(&model), objects_(std::move(objects)), sector_(sector), alphabet_(alphabet) {
    if (objects_.size() != 3) throw DomainError("weave space needs exactly three objects");
    if (alphabet_.step == 1 && !(objects_[0] == objects_[1] && objects_[1] == objects_[2])) {
      throw UsageError("odd-power alphabet needs three equal charges");
    }
    basis_ = enumerate_paths(objects_, model.level(), sector_);
    if (basis_.size() != 2) {
      throw DomainError("weave space: sector " + to_string(sector_) + " is " +
                        std::to_string(basis_.size()) + "-dimensional, need 2");
    }
    for (int g = 0; g < 2; ++g) {
      std::vector<Letter> letters(static_cast<std::size_t>(alphabet_.step), Letter{g + 1, +1});
      const auto u = represent(BraidWord(objects_, letters), model, sector_);
      blocks_[g] = u.matrix;
    }
    const cplx d0 = blocks_[0].determinant(), d1 = blocks_[1].determinant();
    if (std::abs(d0 - d1) > 1e-10) throw DomainError("weave space: unit determinants differ");
    root_ = std::sqrt(d0);
    for (int g = 0; g < 2; ++g) units_[g] = Su2::from_matrix(blocks_[g] / root_);
  }

  const Model& model() const { return *model_; }
  const ObjectList& objects() const { return objects_; }
  Charge sector() const { return sector_; }
  const Alphabet& alphabet() const { return alphabet_; }
  int step() const { return alphabet_.step; }
  const std::vector<FusionPath>& basis() const { return basis_; }
  const Su2& unit(int g) const { return units_[g]; }
  /// Phase carried by a word of the given winding on top of its SU(2) image.
  cplx winding_phase(int winding) const {
    return std::pow(root_, static_cast<double>(winding / step()));
  }

  Su2 power(int gen, int exp) const { return su2_power(units_[gen], exp); }

  Su2 image(const Parts& parts) const {
    Su2 v;
    for (auto p : parts) v = power(p.gen, p.exp) * v;
    return v;
  }

  std::vector<Letter> letters(const Parts& parts, int offset = 0) const {
    std::vector<Letter> out;
    for (auto p : parts) {
      const int n = std::abs(p.exp) * step();
      for (int i = 0; i < n; ++i) out.push_back({p.gen + 1 + offset, p.exp > 0 ? 1 : -1});
    }
    return out;
  }

  int length(const Parts& parts) const {
    int n = 0;
    for (auto p : parts) n += std::abs(p.exp) * step();
    return n;
  }

  int winding(const Parts& parts) const {
    int n = 0;
    for (auto p : parts) n += p.exp * step();
    return n;
  }

  /// Largest exponent (in units) allowed for a part of at most `len` interchanges.
  int max_units(int len) const {
    int m = len / step();
    if (alphabet_.max_power > 0) m = std::min(m, alphabet_.max_power);
    return m;
  }

  /// Number of words of exactly `len` interchanges (saturating).
  std::uint64_t count_exact(int len) const {
    if (len % step() != 0) return 0;
    const int n = len / step();
    // ways[m][g]: words of total m units whose last part uses generator g.
    std::vector<std::array<long double, 2>> ways(static_cast<std::size_t>(n) + 1, {0.0L, 0.0L});
    long double total = n == 0 ? 1.0L : 0.0L;
    for (int m = 1; m <= n; ++m) {
      for (int g = 0; g < 2; ++g) {
        long double w = 0.0L;
        for (int e = 1; e <= m && (alphabet_.max_power == 0 || e <= alphabet_.max_power); ++e) {
          const long double prev = (m - e == 0) ? 1.0L : ways[m - e][1 - g];
          w += 2.0L * prev;
        }
        ways[m][g] = w;
      }
    }
    if (n > 0) total = ways[n][0] + ways[n][1];
    return total > 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(total);
  }

  std::uint64_t count_up_to(int len) const {
    std::uint64_t t = 0;
    for (int l = 0; l <= len; ++l) {
      const auto c = count_exact(l);
      if (c == UINT64_MAX || t + c < t) return UINT64_MAX;
      t += c;
    }
    return t;
  }

  /// Largest length <= max_len whose cumulative word count fits the budget.
  int budgeted_length(int max_len, std::uint64_t budget) const {
    int best = 0;
    for (int l = 0; l <= max_len; ++l) {
      if (count_up_to(l) <= budget) best = l;
      else break;
    }
    return best;
  }

  /// Depth-first enumeration of all words with length <= max_len whose first
  /// part is `first`; `visit(parts, image, winding, length)`.
  template <typename Visit>
  void enumerate_from(Part first, int max_len, Visit&& visit) const {
    Parts parts{first};
    const Su2 v = power(first.gen, first.exp);
    const int len = std::abs(first.exp) * step();
    if (len > max_len) return;
    recurse(parts, v, first.exp * step(), len, max_len, visit);
  }

  /// Every admissible first part for words of length <= max_len, in canonical order.
  std::vector<Part> first_parts(int max_len) const {
    std::vector<Part> out;
    const int m = max_units(max_len);
    for (int g = 0; g < 2; ++g)
      for (int e = 1; e <= m; ++e) {
        out.push_back({static_cast<std::int8_t>(g), static_cast<std::int16_t>(e)});
        out.push_back({static_cast<std::int8_t>(g), static_cast<std::int16_t>(-e)});
      }
    return out;
  }

 private:
  template <typename Visit>
  void recurse(Parts& parts, const Su2& v, int wind, int len, int max_len, Visit& visit) const {
    visit(parts, v, wind, len);
    const int g = 1 - parts.back().gen;
    const int m = max_units(max_len - len);
    for (int e = 1; e <= m; ++e) {
      for (int s : {+1, -1}) {
        const int exp = s * e;
        parts.push_back({static_cast<std::int8_t>(g), static_cast<std::int16_t>(exp)});
        recurse(parts, power(g, exp) * v, wind + exp * step(), len + e * step(), max_len, visit);
        parts.pop_back();
      }
    }
  }

  const Model* model_;
  ObjectList objects_;
  Charge sector_;
  Alphabet alphabet_;
  std::vector<FusionPath> basis_;
  Eigen::Matrix2cd blocks_[2];
  Su2 units_[2];
  cplx root_;
};

/// Raw result of a middle-weave search.
struct SearchResult {
  Parts parts;
  double distance = std::numeric_limits<double>::infinity();
  int length = 0;
  std::uint64_t examined = 0;
  bool budget_limited = false;
  bool certified = true;  ///< false if hashing could not prove optimality
  int searched_length = 0;
};

/// A compiled braid together with the search bookkeeping that produced it.
struct CompiledGate {
  BraidWord word;
  std::string target;
  double distance = 0.0;
  double leakage = 0.0;
  std::uint64_t candidates_examined = 0;
  std::string method;
  bool budget_limited = false;
  int searched_length = 0;
  Parts parts;  ///< middle-weave runs, when the gate came from a weave space
};

inline Parts inverse_parts(const Parts& p) {
  Parts out(p.rbegin(), p.rend());
  for (auto& r : out) r.exp = static_cast<std::int16_t>(-r.exp);
  return out;
}

namespace detail {

/// Concatenates two middle words, merging runs on the same generator.
inline Parts merge_parts(const Parts& left, const Parts& right) {
  Parts out = left;
  for (auto p : right) {
    if (!out.empty() && out.back().gen == p.gen) {
      out.back().exp = static_cast<std::int16_t>(out.back().exp + p.exp);
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(p);
    }
  }
  return out;
}

/// Strict ordering: distance (ties within 1e-13), then length, then letters.
inline bool better(double d1, int len1, const Parts& p1, double d2, int len2, const Parts& p2) {
  if (d1 < d2 - 1e-13) return true;
  if (d2 < d1 - 1e-13) return false;
  if (len1 != len2) return len1 < len2;
  auto expand = [](const Parts& p) {
    std::vector<std::pair<int, int>> out;
    for (auto r : p)
      for (int i = 0; i < std::abs(r.exp); ++i) out.emplace_back(r.gen, r.exp > 0 ? 1 : -1);
    return out;
  };
  return expand(p1) < expand(p2);
}

struct Candidate {
  double distance = std::numeric_limits<double>::infinity();
  int length = 0;
  Parts parts;
  bool valid = false;

  void offer(double d, int len, const Parts& p) {
    if (!valid || better(d, len, p, distance, length, parts)) {
      distance = d, length = len, parts = p, valid = true;
    }
  }
  void offer(const Candidate& c) {
    if (c.valid) offer(c.distance, c.length, c.parts);
  }
};

/// Runs `task(i)` for i in [0, n) on `threads` workers.
template <typename Task>
void parallel_for(std::size_t n, int threads, Task&& task) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) task(i);
    });
  }
  for (auto& th : pool) th.join();
}

struct MatchMode {
  bool phase_sensitive = false;
  int winding = 0;

  double distance(const Su2& x, const Su2& y) const {
    return phase_sensitive ? su2_distance(x, y) : su2_distance_mod_phase(x, y);
  }
};

inline MatchMode match_mode(const WeaveSpace& space, const SearchConfig& cfg) {
  MatchMode m;
  if (cfg.constraints.winding) {
    m.phase_sensitive = true;
    m.winding = *cfg.constraints.winding;
    if (m.winding % space.step() != 0) throw UsageError("winding not reachable with this alphabet");
  }
  return m;
}

/// Target in SU(2): phase-sensitive targets are divided by the known winding
/// phase, phase-free targets by a root of their determinant.
inline Su2 normalized_target(const WeaveSpace& space, const Eigen::Matrix2cd& target,
                             const MatchMode& mode) {
  if (mode.phase_sensitive) {
    const Eigen::Matrix2cd t = target / space.winding_phase(mode.winding);
    if (std::abs(t.determinant() - 1.0) > 1e-9) {
      throw DomainError("target is unreachable at winding " + std::to_string(mode.winding) +
                        ": determinant mismatch");
    }
    return Su2::from_matrix(t);
  }
  return Su2::normalized(target);
}

}  // namespace detail

/// Enumerates every middle weave up to the budgeted length and keeps the best.
inline SearchResult exhaustive(const WeaveSpace& space, const Eigen::Matrix2cd& target,
                               const SearchConfig& cfg) {
  cfg.validate();
  const auto mode = detail::match_mode(space, cfg);
  const Su2 t = detail::normalized_target(space, target, mode);

  SearchResult res;
  res.searched_length = space.budgeted_length(cfg.max_length, cfg.budget);
  res.budget_limited = res.searched_length < cfg.max_length &&
                       space.count_up_to(cfg.max_length) > space.count_up_to(res.searched_length);
  const int max_len = res.searched_length;

  detail::Candidate best;
  if (!mode.phase_sensitive || mode.winding == 0) best.offer(mode.distance(Su2::identity(), t), 0, {});
  res.examined = 1;

  const auto firsts = space.first_parts(max_len);
  std::vector<detail::Candidate> partial(firsts.size());
  std::vector<std::uint64_t> counts(firsts.size(), 0);
  detail::parallel_for(firsts.size(), cfg.threads, [&](std::size_t i) {
    auto& local = partial[i];
    std::uint64_t n = 0;
    space.enumerate_from(firsts[i], max_len, [&](const Parts& parts, const Su2& v, int wind, int len) {
      ++n;
      if (mode.phase_sensitive && wind != mode.winding) return;
      const double d = mode.distance(v, t);
      if (!local.valid || d <= local.distance + 1e-13) local.offer(d, len, parts);
    });
    counts[i] = n;
  });
  for (std::size_t i = 0; i < firsts.size(); ++i) {
    best.offer(partial[i]);
    res.examined += counts[i];
  }
  res.parts = best.parts;
  res.distance = best.distance;
  res.length = best.length;
  return res;
}

namespace detail {

struct CellKey {
  std::array<std::int32_t, 4> c{};
  std::int32_t winding = 0;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const {
    std::size_t h = static_cast<std::size_t>(k.winding) * 0x9E3779B97F4A7C15ULL;
    for (auto v : k.c) h = (h ^ static_cast<std::size_t>(static_cast<std::uint32_t>(v))) * 0x100000001B3ULL;
    return h;
  }
};

struct LeftNode {
  Su2 v;
  std::int32_t parent = -1;
  Part part;
  std::int16_t winding = 0;
  std::int16_t length = 0;
};

inline Parts node_parts(const std::vector<LeftNode>& nodes, std::int32_t i) {
  Parts out;
  while (i > 0) {
    out.push_back(nodes[static_cast<std::size_t>(i)].part);
    i = nodes[static_cast<std::size_t>(i)].parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Meet-in-the-middle search. Left halves are tabulated in a uniform grid over
/// R^4 (cells of side hash_cell, keyed also by winding when the match is
/// phase-sensitive); each right half R queries the cells around R^dagger T.
/// When the best pair is closer than one cell side it is provably the optimum
/// over all (left, right) pairs; otherwise all pairs are tested directly.
inline SearchResult bidirectional(const WeaveSpace& space, const Eigen::Matrix2cd& target,
                                  const SearchConfig& cfg, std::ostream* log = nullptr) {
  using namespace detail;
  cfg.validate();
  const auto mode = match_mode(space, cfg);
  const Su2 t = normalized_target(space, target, mode);

  SearchResult res;
  // Identity target: the empty word is optimal, nothing to enumerate.
  if ((!mode.phase_sensitive || mode.winding == 0) && mode.distance(Su2::identity(), t) < 1e-14) {
    res.distance = mode.distance(Su2::identity(), t);
    res.examined = 1;
    return res;
  }

  const int half_max = cfg.max_length / 2;
  const int left_len = space.budgeted_length(half_max, cfg.budget);
  const int right_len = space.budgeted_length(cfg.max_length - half_max, cfg.budget);
  res.searched_length = left_len + right_len;
  res.budget_limited = left_len < half_max || right_len < cfg.max_length - half_max;

  // Tabulate left halves (node 0 = empty word).
  std::vector<LeftNode> nodes;
  nodes.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(space.count_up_to(left_len), 1ULL << 28)));
  nodes.push_back({Su2::identity(), -1, {}, 0, 0});
  {
    std::vector<std::int32_t> stack_index;
    for (auto first : space.first_parts(left_len)) {
      stack_index.clear();
      space.enumerate_from(first, left_len, [&](const Parts& parts, const Su2& v, int wind, int len) {
        const auto depth = parts.size();
        stack_index.resize(depth);
        const std::int32_t parent = depth == 1 ? 0 : stack_index[depth - 2];
        nodes.push_back({v, parent, parts.back(), static_cast<std::int16_t>(wind),
                         static_cast<std::int16_t>(len)});
        stack_index[depth - 1] = static_cast<std::int32_t>(nodes.size() - 1);
      });
    }
  }
  const double h = cfg.hash_cell;
  auto cell_of = [h](double x) { return static_cast<std::int32_t>(std::floor(x / h)); };
  auto key_of = [&](const Su2& v, int wind) {
    CellKey k;
    for (int i = 0; i < 4; ++i) k.c[static_cast<std::size_t>(i)] = cell_of(v.coord(i));
    k.winding = mode.phase_sensitive ? wind : 0;
    return k;
  };
  std::vector<std::uint32_t> order(nodes.size());
  std::vector<CellKey> keys(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    order[i] = static_cast<std::uint32_t>(i);
    keys[i] = key_of(nodes[i].v, nodes[i].winding);
  }
  std::unordered_map<CellKey, std::pair<std::uint32_t, std::uint32_t>, CellKeyHash> grid;
  {
    std::unordered_map<CellKey, std::vector<std::uint32_t>, CellKeyHash> buckets;
    for (std::size_t i = 0; i < nodes.size(); ++i) buckets[keys[i]].push_back(static_cast<std::uint32_t>(i));
    std::uint32_t pos = 0;
    order.clear();
    grid.reserve(buckets.size());
    for (auto& [k, v] : buckets) {
      grid.emplace(k, std::make_pair(pos, pos + static_cast<std::uint32_t>(v.size())));
      order.insert(order.end(), v.begin(), v.end());
      pos += static_cast<std::uint32_t>(v.size());
    }
  }

  // Right halves, partitioned by first part (index 0 = empty right word).
  const auto firsts = space.first_parts(right_len);
  const std::size_t partitions = firsts.size() + 1;
  std::vector<Candidate> partial(partitions);
  std::vector<std::uint64_t> right_counts(partitions, 0);

  auto probe = [&](const Parts& rparts, const Su2& rv, int rwind, int rlen, Candidate& local) {
    const Su2 q = rv.adjoint() * t;
    const int need = mode.winding - rwind;
    const int signs = mode.phase_sensitive ? 1 : 2;
    for (int s = 0; s < signs; ++s) {
      const Su2 qq = s == 0 ? q : -q;
      const double r = std::min(h, local.valid ? local.distance + 1e-12 : h);
      std::array<std::int32_t, 4> lo{}, hi{};
      for (int i = 0; i < 4; ++i) {
        const double x = qq.coord(i);
        lo[static_cast<std::size_t>(i)] = cell_of(x - r);
        hi[static_cast<std::size_t>(i)] = cell_of(x + r);
      }
      CellKey k;
      k.winding = mode.phase_sensitive ? need : 0;
      for (k.c[0] = lo[0]; k.c[0] <= hi[0]; ++k.c[0])
        for (k.c[1] = lo[1]; k.c[1] <= hi[1]; ++k.c[1])
          for (k.c[2] = lo[2]; k.c[2] <= hi[2]; ++k.c[2])
            for (k.c[3] = lo[3]; k.c[3] <= hi[3]; ++k.c[3]) {
              auto it = grid.find(k);
              if (it == grid.end()) continue;
              for (auto j = it->second.first; j < it->second.second; ++j) {
                const auto& node = nodes[order[j]];
                const double d = su2_distance(node.v, qq);
                if (local.valid && d > local.distance + 1e-13) continue;
                const Parts merged = merge_parts(node_parts(nodes, static_cast<std::int32_t>(order[j])), rparts);
                local.offer(d, space.length(merged), merged);
              }
            }
    }
    (void)rlen;
  };

  parallel_for(partitions, cfg.threads, [&](std::size_t i) {
    auto& local = partial[i];
    if (i == 0) {
      probe({}, Su2::identity(), 0, 0, local);
      right_counts[i] = 1;
      return;
    }
    std::uint64_t n = 0;
    space.enumerate_from(firsts[i - 1], right_len, [&](const Parts& parts, const Su2& v, int wind, int len) {
      ++n;
      probe(parts, v, wind, len, local);
    });
    right_counts[i] = n;
  });

  Candidate best;
  std::uint64_t n_right = 0;
  for (std::size_t i = 0; i < partitions; ++i) {
    best.offer(partial[i]);
    n_right += right_counts[i];
  }
  const std::uint64_t n_left = nodes.size();
  res.examined = n_left * n_right;

  if (!best.valid || best.distance > h) {
    res.certified = false;
    const long double pairs = static_cast<long double>(n_left) * static_cast<long double>(n_right);
    if (pairs <= 4e9L) {
      if (log) *log << "warning: hash cell " << h << " too coarse for this depth; testing all pairs\n";
      std::vector<Candidate> full(partitions);
      auto brute = [&](const Parts& rparts, const Su2& rv, int rwind, Candidate& local) {
        const Su2 q = rv.adjoint() * t;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
          if (mode.phase_sensitive && nodes[j].winding + rwind != mode.winding) continue;
          const double d = mode.distance(nodes[j].v, q);
          if (local.valid && d > local.distance + 1e-13) continue;
          const Parts merged = merge_parts(node_parts(nodes, static_cast<std::int32_t>(j)), rparts);
          local.offer(d, space.length(merged), merged);
        }
      };
      parallel_for(partitions, cfg.threads, [&](std::size_t i) {
        if (i == 0) {
          brute({}, Su2::identity(), 0, full[i]);
          return;
        }
        space.enumerate_from(firsts[i - 1], right_len, [&](const Parts& parts, const Su2& v, int wind, int) {
          brute(parts, v, wind, full[i]);
        });
      });
      for (auto& c : full) best.offer(c);
      res.certified = true;
    } else if (log) {
      *log << "warning: best match " << best.distance << " exceeds hash cell " << h
           << "; result is not certified optimal\n";
    }
  }
  res.parts = best.parts;
  res.distance = best.distance;
  res.length = best.length;
  return res;
}

struct ClosureResult {
  bool finite = false;
  std::size_t elements = 0;
};

/// Breadth-first closure of the group generated by `generators` (and their
/// inverses), identifying elements equal up to a global phase within `tol`.
inline ClosureResult closure_probe(const std::vector<Matrix>& generators, double tol, std::size_t cap) {
  if (generators.empty()) return {true, 1};
  const auto n = generators.front().rows();
  std::vector<Matrix> gens;
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw DomainError("closure_probe: generator shape mismatch");
    gens.push_back(g);
    gens.push_back(g.adjoint());
  }
  // Buckets keyed by phase-invariant moduli |u00|^2, |u01|^2 on a coarse grid.
  const double cell = std::max(1e-6, 1000.0 * tol);
  auto key = [&](const Matrix& u) {
    const auto a = static_cast<std::int64_t>(std::floor(std::norm(u(0, 0)) / cell));
    const auto b = static_cast<std::int64_t>(std::floor(std::norm(u(0, n > 1 ? 1 : 0)) / cell));
    return std::make_pair(a, b);
  };
  struct PairHash {
    std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& p) const {
      return std::hash<std::int64_t>()(p.first * 1000003 + p.second);
    }
  };
  std::vector<Matrix> elements;
  std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>, PairHash> index;
  auto same_up_to_phase = [&](const Matrix& x, const Matrix& y) {
    const cplx tr = (y.adjoint() * x).trace();
    if (std::abs(tr) < 1e-12) return false;
    return (x - (tr / std::abs(tr)) * y).cwiseAbs().maxCoeff() < tol;
  };
  auto insert = [&](const Matrix& u) {
    const auto k = key(u);
    for (std::int64_t da = -1; da <= 1; ++da)
      for (std::int64_t db = -1; db <= 1; ++db) {
        auto it = index.find({k.first + da, k.second + db});
        if (it == index.end()) continue;
        for (auto j : it->second)
          if (same_up_to_phase(u, elements[j])) return false;
      }
    index[k].push_back(elements.size());
    elements.push_back(u);
    return true;
  };
  insert(Matrix::Identity(n, n));
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto i : frontier) {
      for (const auto& g : gens) {
        if (insert(g * elements[i])) {
          next.push_back(elements.size() - 1);
          if (elements.size() > cap) return {false, elements.size()};
        }
      }
    }
    frontier = std::move(next);
  }
  return {true, elements.size()};
}

}  // namespace anyon
