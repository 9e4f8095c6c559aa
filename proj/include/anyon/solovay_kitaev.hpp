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
#include <functional>
#include <numbers>
#include <random>
#include <utility>

#include "json.hpp"
#include "anyon/search.hpp"

namespace anyon {

/// Group-commutator factors of an SU(2) element close to the identity.
struct Commutator {
  Su2 v;
  Su2 w;
};

/// Balanced group commutator: returns v, w with u = v w v^dagger w^dagger.
/// u is first taken to the representative with Re(a) >= 0, so the result may
/// differ from u by an overall sign.
inline Commutator gc_decompose(const Su2& u_in) {
  const Su2 u = u_in.a.real() < 0.0 ? -u_in : u_in;
  double theta, nx, ny, nz;
  su2_axis_angle(u, theta, nx, ny, nz);
  if (theta > 2.0 * std::numbers::pi / 3.0) {
    throw DomainError("gc_decompose: element is too far from the identity (rotation angle " +
                      std::to_string(theta) + ")");
  }
  if (theta < 1e-300) return {Su2::identity(), Su2::identity()};
  // [R_x(phi), R_y(phi)] rotates by theta when sin^2(phi/2) = sin(theta/4).
  const double phi = 2.0 * std::asin(std::sqrt(std::sin(theta / 4.0)));
  const Su2 v0 = su2_rotation(phi, 1, 0, 0), w0 = su2_rotation(phi, 0, 1, 0);
  const Su2 c = v0 * w0 * v0.adjoint() * w0.adjoint();
  double ct, mx, my, mz;
  su2_axis_angle(c, ct, mx, my, mz);
  // Rotate the commutator axis m onto the target axis n.
  const double dot = std::clamp(mx * nx + my * ny + mz * nz, -1.0, 1.0);
  double ax = my * nz - mz * ny, ay = mz * nx - mx * nz, az = mx * ny - my * nx;
  double an = std::sqrt(ax * ax + ay * ay + az * az);
  if (an < 1e-12) {
    if (dot > 0.0) return {v0, w0};
    // Antiparallel: any axis orthogonal to m, taken with the smallest azimuth.
    ax = -mz, ay = 0.0, az = mx;
    an = std::sqrt(ax * ax + az * az);
    if (an < 1e-12) ax = 1.0, ay = 0.0, az = 0.0, an = 1.0;
  }
  const Su2 s = su2_rotation(std::atan2(an, dot), ax / an, ay / an, az / an);
  return {s * v0 * s.adjoint(), s * w0 * s.adjoint()};
}

inline Su2 group_commutator(const Su2& v, const Su2& w) { return v * w * v.adjoint() * w.adjoint(); }

/// An SU(2) approximation carried together with the middle weave realising it:
/// value = +-image(parts).
struct Approximation {
  Parts parts;
  Su2 value;
};

/// Weave words tabulated over SU(2) for nearest-element lookup.
class EpsilonNet {
 public:
  EpsilonNet(const WeaveSpace& space, int max_length, double hash_cell)
      : space_(&space), max_length_(max_length), cell_(hash_cell) {
    entries_.push_back({{}, Su2::identity()});
    for (auto first : space.first_parts(max_length)) {
      space.enumerate_from(first, max_length, [&](const Parts& p, const Su2& v, int, int) {
        entries_.push_back({p, v});
      });
    }
    index();
  }

  EpsilonNet(const WeaveSpace& space, int max_length, double hash_cell, std::vector<Parts> words)
      : space_(&space), max_length_(max_length), cell_(hash_cell) {
    for (auto& p : words) {
      const Su2 v = space.image(p);
      entries_.push_back({std::move(p), v});
    }
    index();
  }

  const WeaveSpace& space() const { return *space_; }
  int max_length() const { return max_length_; }
  double hash_cell() const { return cell_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Approximation>& entries() const { return entries_; }
  double epsilon0() const { return epsilon0_; }
  double covering_radius() const { return covering_; }
  void set_epsilon0(double e) { epsilon0_ = e; }

  /// Nearest element up to sign, with the sign folded into the returned value.
  Approximation nearest(const Su2& u) const {
    const Approximation* best = nullptr;
    bool flip = false;
    double bd = std::numeric_limits<double>::infinity();
    int best_len = 0;
    auto consider = [&](const Approximation& e, const Su2& q, bool flipped) {
      const double d = su2_distance(e.value, q);
      if (best != nullptr && d > bd + 1e-13) return;
      const int len = space_->length(e.parts);
      if (best == nullptr || detail::better(d, len, e.parts, bd, best_len, best->parts)) {
        best = &e, bd = d, best_len = len, flip = flipped;
      }
    };
    for (double r = cell_;; r *= 2.0) {
      for (int s = 0; s < 2; ++s) {
        const Su2 q = s == 0 ? u : -u;
        std::array<std::int32_t, 4> lo{}, hi{};
        const double rr = std::min(r, bd + 1e-12);
        for (int i = 0; i < 4; ++i) {
          lo[static_cast<std::size_t>(i)] = cell(q.coord(i) - rr);
          hi[static_cast<std::size_t>(i)] = cell(q.coord(i) + rr);
        }
        double cells = 1.0;
        for (int i = 0; i < 4; ++i) cells *= hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)] + 1;
        if (cells >= static_cast<double>(entries_.size())) {
          for (const auto& e : entries_) consider(e, q, s == 1);
          continue;
        }
        std::array<std::int32_t, 4> k{};
        for (k[0] = lo[0]; k[0] <= hi[0]; ++k[0])
          for (k[1] = lo[1]; k[1] <= hi[1]; ++k[1])
            for (k[2] = lo[2]; k[2] <= hi[2]; ++k[2])
              for (k[3] = lo[3]; k[3] <= hi[3]; ++k[3]) {
                auto it = grid_.find(key(k));
                if (it == grid_.end()) continue;
                for (auto j : it->second) consider(entries_[j], q, s == 1);
              }
      }
      if (best != nullptr && bd <= r) break;
      if (r > 4.0) break;
    }
    return {best->parts, flip ? -best->value : best->value};
  }

  /// Largest nearest-element distance (up to phase) over Haar samples.
  double sample_covering(int samples, std::uint32_t seed = 20260101u) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      const Su2 u = Su2{cplx(g(rng), g(rng)), cplx(g(rng), g(rng))}.renormalized();
      worst = std::max(worst, su2_distance(nearest(u).value, u));
    }
    covering_ = worst;
    return worst;
  }

 private:
  std::int32_t cell(double x) const { return static_cast<std::int32_t>(std::floor(x / cell_)); }
  static std::uint64_t key(const std::array<std::int32_t, 4>& c) {
    std::uint64_t h = 0;
    for (auto v : c) h = (h << 16) ^ static_cast<std::uint16_t>(v);
    return h;
  }

  void index() {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      std::array<std::int32_t, 4> c{};
      for (int j = 0; j < 4; ++j) c[static_cast<std::size_t>(j)] = cell(entries_[i].value.coord(j));
      grid_[key(c)].push_back(static_cast<std::uint32_t>(i));
    }
  }

  const WeaveSpace* space_;
  int max_length_;
  double cell_;
  double epsilon0_ = 0.0;
  double covering_ = 0.0;
  std::vector<Approximation> entries_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> grid_;
};

/// Refuses weave spaces whose action is not dense in SU(2).
inline void require_dense(const WeaveSpace& space) {
  const int k = space.model().level().k();
  if (!space.model().level().universal()) {
    throw DomainError("level k=" + std::to_string(k) +
                      " is not universal: braiding is dense only for k >= 3, k != 4");
  }
  const auto& o = space.objects();
  if (k == 8 && o[0] == Charge::half() && o[1] == Charge::half() && o[2] == Charge::half()) {
    throw DomainError("level k=8: three charge-1/2 objects generate a finite group; weave a charge-1 "
                      "object instead");
  }
}

/// Grows the tabulated length until the sampled covering radius is <= eps0.
/// Lengths are capped by cfg.max_length and cfg.budget.
inline EpsilonNet build_net(const WeaveSpace& space, double eps0, const SearchConfig& cfg,
                            int samples = 1000) {
  cfg.validate();
  require_dense(space);
  if (!(eps0 > 0.0)) throw UsageError("epsilon0 must be > 0");
  const int cap = space.budgeted_length(cfg.max_length, cfg.budget);
  for (int len = space.step();; len += space.step()) {
    const int l = std::min(len, cap);
    EpsilonNet net(space, l, cfg.hash_cell);
    const double r = net.sample_covering(samples);
    if (r <= eps0) {
      net.set_epsilon0(eps0);
      return net;
    }
    if (l >= cap) {
      throw DomainError("build_net: covering radius " + std::to_string(r) + " at length " +
                        std::to_string(l) + " exceeds epsilon0 " + std::to_string(eps0) +
                        "; raise max_length or budget");
    }
  }
}

/// Base approximation used at the bottom of the recursion.
using BaseApproximator = std::function<Approximation(const Su2&)>;

/// One commutator correction: approximates u as V W V^dagger W^dagger prev,
/// with V and W from `approx`. The correction has winding zero.
inline Approximation sk_step(const Su2& u, const Approximation& prev, const BaseApproximator& approx) {
  const Su2 delta = u * prev.value.adjoint();
  const auto [v, w] = gc_decompose(delta);
  const Approximation av = approx(v);
  const Approximation aw = approx(w);
  using detail::merge_parts;
  // Product V W V^dagger W^dagger U_prev: U_prev acts first.
  Parts p = merge_parts(prev.parts, inverse_parts(aw.parts));
  p = merge_parts(p, inverse_parts(av.parts));
  p = merge_parts(p, aw.parts);
  p = merge_parts(p, av.parts);
  return {std::move(p), group_commutator(av.value, aw.value) * prev.value};
}

/// Solovay-Kitaev recursion starting from `start` (depth 0 result).
inline Approximation sk_recurse(const Su2& u, const Approximation& start, int depth,
                                const BaseApproximator& base) {
  if (depth <= 0) return start;
  const Approximation prev = sk_recurse(u, start, depth - 1, base);
  const BaseApproximator inner = [&](const Su2& x) { return sk_recurse(x, base(x), depth - 1, base); };
  return sk_step(u, prev, inner);
}

/// Solovay-Kitaev recursion on SU(2) elements.
inline Approximation sk_approximate(const Su2& u, const EpsilonNet& net, int depth) {
  const BaseApproximator base = [&](const Su2& x) { return net.nearest(x); };
  return sk_recurse(u, net.nearest(u), depth, base);
}

/// Refines `target` (any 2x2 unitary; compared up to global phase).
inline CompiledGate refine(const Eigen::Matrix2cd& target, const EpsilonNet& net, int depth,
                           const std::string& name = "custom") {
  if (depth < 0) throw UsageError("refine: depth must be >= 0");
  const Su2 t = Su2::normalized(target);
  const auto a = sk_approximate(t, net, depth);
  const auto& space = net.space();
  CompiledGate g;
  g.word = BraidWord(space.objects(), space.letters(a.parts));
  g.parts = a.parts;
  g.target = name;
  g.distance = su2_distance_mod_phase(a.value, t);
  g.method = "solovay-kitaev depth " + std::to_string(depth);
  g.candidates_examined = net.size();
  g.searched_length = net.max_length();
  return g;
}

namespace detail {

inline nlohmann::ordered_json parts_to_json(const Parts& p) {
  auto a = nlohmann::ordered_json::array();
  for (auto r : p) {
    a.push_back(r.gen + 1);
    a.push_back(r.exp);
  }
  return a;
}

inline Parts parts_from_json(const nlohmann::ordered_json& a) {
  if (!a.is_array() || a.size() % 2 != 0) throw DomainError("net file: malformed word");
  Parts p;
  for (std::size_t i = 0; i < a.size(); i += 2) {
    const int g = a[i].get<int>(), e = a[i + 1].get<int>();
    if ((g != 1 && g != 2) || e == 0) throw DomainError("net file: malformed word");
    p.push_back({static_cast<std::int8_t>(g - 1), static_cast<std::int16_t>(e)});
  }
  return p;
}

}  // namespace detail

inline void save_net(const EpsilonNet& net, const std::string& path) {
  const auto& s = net.space();
  nlohmann::ordered_json j;
  j["format"] = "anyonweave-net/1";
  j["k"] = s.model().level().k();
  auto objs = nlohmann::ordered_json::array();
  for (auto c : s.objects()) objs.push_back(c.twice);
  j["objects"] = objs;
  j["sector"] = s.sector().twice;
  j["step"] = s.step();
  j["max_power"] = s.alphabet().max_power;
  j["epsilon0"] = net.epsilon0();
  j["covering_radius"] = net.covering_radius();
  j["max_length"] = net.max_length();
  j["hash_cell"] = net.hash_cell();
  auto words = nlohmann::ordered_json::array();
  for (const auto& e : net.entries()) words.push_back(detail::parts_to_json(e.parts));
  j["words"] = std::move(words);
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << j.dump() << '\n';
}

/// Loads a net saved for exactly this weave space; the key fields must match.
inline EpsilonNet load_net(const WeaveSpace& space, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  nlohmann::ordered_json j;
  try {
    f >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("net file: ") + e.what());
  }
  if (j.value("format", "") != "anyonweave-net/1") throw DomainError("net file: unknown format");
  std::vector<int> objs;
  for (auto c : space.objects()) objs.push_back(c.twice);
  if (j.at("k").get<int>() != space.model().level().k() || j.at("objects").get<std::vector<int>>() != objs ||
      j.at("sector").get<int>() != space.sector().twice || j.at("step").get<int>() != space.step() ||
      j.at("max_power").get<int>() != space.alphabet().max_power) {
    throw DomainError("net file was built for a different level, sector or alphabet");
  }
  std::vector<Parts> words;
  for (const auto& w : j.at("words")) words.push_back(detail::parts_from_json(w));
  EpsilonNet net(space, j.at("max_length").get<int>(), j.at("hash_cell").get<double>(), std::move(words));
  net.set_epsilon0(j.at("epsilon0").get<double>());
  return net;
}

}  // namespace anyon
