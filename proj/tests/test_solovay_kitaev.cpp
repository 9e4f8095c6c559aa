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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include "anyon/solovay_kitaev.hpp"

using namespace anyon;

namespace {

const Charge kHalf = Charge::half();

Su2 haar(std::mt19937& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return Su2{cplx(n(rng), n(rng)), cplx(n(rng), n(rng))}.renormalized();
}

double dist_to_identity(const Su2& u) { return su2_distance(u, Su2::identity()); }

struct Fixture {
  Model model{5};
  WeaveSpace space{model, {kHalf, kHalf, kHalf}, kHalf, {2, 0}};
  EpsilonNet net{space, 20, 0.05};
};

Fixture& shared() {
  static Fixture f;
  return f;
}

}  // namespace

TEST(GroupCommutator, IdentityGivesIdentityFactors) {
  const auto [v, w] = gc_decompose(Su2::identity());
  EXPECT_LT(dist_to_identity(v), 1e-15);
  EXPECT_LT(dist_to_identity(w), 1e-15);
}

TEST(GroupCommutator, SmallZRotation) {
  const Su2 u = su2_rotation(0.01, 0, 0, 1);
  const auto [v, w] = gc_decompose(u);
  EXPECT_LT(su2_distance(group_commutator(v, w), u), 1e-10);
  EXPECT_LE(dist_to_identity(v), 0.2);
  EXPECT_LE(dist_to_identity(w), 0.2);
}

TEST(GroupCommutator, BalancedOnRandomAxes) {
  std::mt19937 rng(17);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    double x = n(rng), y = n(rng), z = n(rng);
    const double r = std::sqrt(x * x + y * y + z * z);
    // ||u - I|| = 2 sin(theta/4) = 0.05
    const double theta = 4.0 * std::asin(0.025);
    const Su2 u = su2_rotation(theta, x / r, y / r, z / r);
    ASSERT_NEAR(dist_to_identity(u), 0.05, 1e-12);
    const auto [v, w] = gc_decompose(u);
    EXPECT_LT(su2_distance(group_commutator(v, w), u), 1e-10);
    EXPECT_GE(dist_to_identity(v) * dist_to_identity(w), 0.05 / 2.0);
    EXPECT_NEAR(dist_to_identity(v), dist_to_identity(w), 1e-12);
  }
  // Antiparallel axis case.
  const Su2 u = su2_rotation(0.02, 0, 0, -1);
  const auto [v, w] = gc_decompose(u);
  EXPECT_LT(su2_distance(group_commutator(v, w), u), 1e-10);
}

TEST(GroupCommutator, NegativeRepresentativeIsFolded) {
  const Su2 u = -su2_rotation(0.03, 1, 0, 0);
  const auto [v, w] = gc_decompose(u);
  EXPECT_LT(su2_distance_mod_phase(group_commutator(v, w), u), 1e-10);
}

TEST(GroupCommutator, FarElementRejected) {
  EXPECT_THROW(gc_decompose(su2_rotation(2.5, 0, 1, 0)), DomainError);
}

TEST(EpsilonNet, ContainsIdentityExactly) {
  const auto a = shared().net.nearest(Su2::identity());
  EXPECT_TRUE(a.parts.empty());
  EXPECT_LT(su2_distance(a.value, Su2::identity()), 1e-15);
}

TEST(EpsilonNet, LookupMatchesLinearScan) {
  auto& f = shared();
  std::mt19937 rng(2);
  for (int t = 0; t < 40; ++t) {
    const Su2 u = haar(rng);
    double best = 1e9;
    for (const auto& e : f.net.entries()) best = std::min(best, su2_distance_mod_phase(e.value, u));
    EXPECT_NEAR(su2_distance(f.net.nearest(u).value, u), best, 1e-14);
  }
}

TEST(EpsilonNet, BuildMeetsRequestedRadius) {
  auto& f = shared();
  SearchConfig cfg;
  cfg.max_length = 24;
  const auto net = build_net(f.space, 0.1, cfg);
  EXPECT_LE(net.covering_radius(), 0.1);
  EXPECT_LE(net.max_length(), 24);
  // The sampled radius is an estimate; a fresh sample should land close to it.
  std::mt19937 rng(99);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Su2 u = haar(rng);
    worst = std::max(worst, su2_distance(net.nearest(u).value, u));
  }
  EXPECT_LE(worst, 0.1 * 1.25);
}

TEST(EpsilonNet, UnreachableRadiusRejected) {
  auto& f = shared();
  SearchConfig cfg;
  cfg.max_length = 6;
  EXPECT_THROW(build_net(f.space, 1e-3, cfg), DomainError);
}

TEST(EpsilonNet, NonDenseLevelsRefused) {
  Model m4(4), m8(8);
  SearchConfig cfg;
  cfg.max_length = 8;
  WeaveSpace s4(m4, {kHalf, kHalf, kHalf}, kHalf, {2, 0});
  EXPECT_THROW(build_net(s4, 0.1, cfg), DomainError);
  WeaveSpace s8(m8, {kHalf, kHalf, kHalf}, kHalf, {2, 0});
  EXPECT_THROW(build_net(s8, 0.1, cfg), DomainError);
  WeaveSpace s8c(m8, {kHalf, Charge::one(), kHalf}, Charge::one(), {2, 0});
  EXPECT_NO_THROW(require_dense(s8c));
}

TEST(Refine, DepthZeroOnNetElement) {
  auto& f = shared();
  const Parts p{{0, 2}, {1, -1}, {0, 1}};
  const Eigen::Matrix2cd target = represent(BraidWord(f.space.objects(), f.space.letters(p)), f.model, kHalf).matrix;
  const auto g = refine(target, f.net, 0);
  EXPECT_LT(g.distance, 1e-12);
  EXPECT_LE(f.space.length(g.parts), f.space.length(p));
}

TEST(Refine, HadamardImprovesStrictly) {
  auto& f = shared();
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  double prev = 1e9;
  std::size_t prev_len = 0;
  for (int depth = 0; depth <= 2; ++depth) {
    const auto g = refine(h, f.net, depth, "hadamard");
    EXPECT_LT(g.distance, prev) << "depth " << depth;
    const auto u = represent(g.word, f.model, kHalf).matrix;
    EXPECT_NEAR(distance(u, h), g.distance, 1e-12);
    if (depth > 0) {
      EXPECT_LE(g.word.size(), 5 * std::max<std::size_t>(prev_len, 20));
    }
    prev = g.distance;
    prev_len = g.word.size();
  }
}

TEST(Refine, WordsStayMiddleWeaves) {
  auto& f = shared();
  std::mt19937 rng(4);
  const auto g = refine(haar(rng).matrix(), f.net, 2);
  EXPECT_EQ(g.word.final_objects(), f.space.objects());
  for (auto l : g.word.letters()) EXPECT_TRUE(l.index == 1 || l.index == 2);
  // The middle object always moves: letters come in equal adjacent pairs.
  for (std::size_t i = 0; i < g.word.size(); i += 2) EXPECT_EQ(g.word.letters()[i], g.word.letters()[i + 1]);
}

TEST(NetFile, RoundTrip) {
  auto& f = shared();
  SearchConfig cfg;
  cfg.max_length = 16;
  auto net = build_net(f.space, 0.2, cfg, 200);
  const auto path = (std::filesystem::temp_directory_path() / "anyon_net_test.json").string();
  save_net(net, path);
  const auto back = load_net(f.space, path);
  EXPECT_EQ(back.size(), net.size());
  EXPECT_EQ(back.epsilon0(), 0.2);
  std::mt19937 rng(8);
  const Su2 u = haar(rng);
  EXPECT_EQ(refine(u.matrix(), back, 2).parts, refine(u.matrix(), net, 2).parts);

  Model m7(7);
  WeaveSpace other(m7, {kHalf, kHalf, kHalf}, kHalf, {2, 0});
  EXPECT_THROW(load_net(other, path), DomainError);
  std::remove(path.c_str());
}
