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

#include <complex>
#include <random>

#include "anyon/simulator.hpp"

using namespace anyon;

namespace {

const Charge kHalf = Charge::half();

BraidWord random_word(const ObjectList& objs, int len, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> idx(1, static_cast<int>(objs.size()) - 1);
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i) ls.push_back({idx(rng), rng() % 2 ? 1 : -1});
  return BraidWord(objs, ls);
}

// Conformal weight of spin a/2 at level k.
double weight(Charge a, int k) { return a.twice * (a.twice + 2) / (4.0 * (k + 2)); }

}  // namespace

TEST(Represent, EmptyWordIsIdentity) {
  Model m(5);
  const auto u = represent(BraidWord(ObjectList(5, kHalf)), m);
  EXPECT_EQ(u.dim(), static_cast<Eigen::Index>(enumerate_paths(ObjectList(5, kHalf), m.level()).size()));
  EXPECT_LT((u.matrix - Matrix::Identity(u.dim(), u.dim())).norm(), 1e-15);
}

TEST(Represent, IsAHomomorphism) {
  Model m(5);
  const ObjectList objs{kHalf, Charge::one(), kHalf, Charge::one()};
  const auto a = random_word(objs, 9, 1);
  const auto b = random_word(a.final_objects(), 7, 2);
  const auto ua = represent(a, m);
  const auto ub = represent(b, m);
  const auto uab = represent(a.then(b), m);
  EXPECT_EQ(ua.out_basis, ub.in_basis);
  EXPECT_LT((uab.matrix - ub.matrix * ua.matrix).norm(), 1e-12);
  EXPECT_LT(unitarity_defect(uab.matrix), 1e-12);
  const auto back = represent(a.then(inverse(a)), m);
  EXPECT_LT((back.matrix - Matrix::Identity(back.dim(), back.dim())).norm(), 1e-12);
}

TEST(Represent, FarGeneratorsCommute) {
  Model m(7);
  const ObjectList objs(5, kHalf);
  const auto x = represent(BraidWord(objs, {{1, 1}, {3, -1}}), m);
  const auto y = represent(BraidWord(objs, {{3, -1}, {1, 1}}), m);
  EXPECT_LT((x.matrix - y.matrix).norm(), 1e-12);
  const auto z = represent(BraidWord(objs, {{1, 1}, {2, -1}}), m);
  const auto t = represent(BraidWord(objs, {{2, -1}, {1, 1}}), m);
  EXPECT_GT((z.matrix - t.matrix).norm(), 1e-3);
}

TEST(Represent, TotalChargeRestrictionIsABlock) {
  Model m(6);
  const ObjectList objs(5, kHalf);
  const auto w = random_word(objs, 12, 3);
  const auto full = represent(w, m);
  for (int tot : {1, 3, 5}) {
    const auto part = represent(w, m, Charge{tot});
    for (std::size_t c = 0; c < part.in_basis.size(); ++c) {
      const auto fc = std::find(full.in_basis.begin(), full.in_basis.end(), part.in_basis[c]) - full.in_basis.begin();
      for (std::size_t r = 0; r < part.out_basis.size(); ++r) {
        const auto fr =
            std::find(full.out_basis.begin(), full.out_basis.end(), part.out_basis[r]) - full.out_basis.begin();
        EXPECT_LT(std::abs(part.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) - full.matrix(fr, fc)),
                  1e-12);
      }
    }
  }
}

TEST(Represent, FullTwistIsTheRibbonScalar) {
  // (sigma_1 ... sigma_{n-1})^n acts on total charge c as
  // exp(2 pi i (h_c - sum h_j)).
  for (int k : {3, 5, 6, 10}) {
    Model m(k);
    for (int n : {3, 4}) {
      const ObjectList objs(static_cast<std::size_t>(n), kHalf);
      std::vector<Letter> ls;
      for (int r = 0; r < n; ++r)
        for (int i = 1; i < n; ++i) ls.push_back({i, 1});
      const auto u = represent(BraidWord(objs, ls), m);
      for (std::size_t c = 0; c < u.in_basis.size(); ++c) {
        const Charge tot = u.in_basis[c].total();
        const cplx expect = std::polar(1.0, 2 * std::numbers::pi * (weight(tot, k) - n * weight(kHalf, k)));
        Vector col = Vector::Zero(u.dim());
        col(static_cast<Eigen::Index>(c)) = expect;
        EXPECT_LT((u.matrix.col(static_cast<Eigen::Index>(c)) - col).norm(), 1e-12) << k << " " << n;
      }
    }
  }
}

TEST(Apply, MatchesColumnsAndChecksDimension) {
  Model m(5);
  const ObjectList objs(4, kHalf);
  const auto w = random_word(objs, 10, 4);
  const auto u = represent(w, m, Charge::vacuum());
  for (Eigen::Index j = 0; j < u.dim(); ++j) {
    Vector e = Vector::Zero(u.dim());
    e(j) = 1.0;
    EXPECT_LT((apply(w, e, m, Charge::vacuum()) - u.matrix.col(j)).norm(), 1e-13);
  }
  EXPECT_THROW(apply(w, Vector::Zero(3), m, Charge::vacuum()), DomainError);
}

TEST(Sectors, PrefixChargeIsConservedByFirstGenerator) {
  Model m(5);
  const ObjectList objs(4, kHalf);
  const ContiguousCharge first_pair{0, 1};
  const auto a = sector_blocks(represent(BraidWord(objs, {{1, 1}, {1, 1}, {3, -1}}), m), first_pair);
  EXPECT_LT(a.off_block_norm, 1e-14);
  EXPECT_EQ(a.blocks.size(), 2u);
  const auto b = sector_blocks(represent(BraidWord(objs, {{2, 1}}), m), first_pair);
  EXPECT_GT(b.off_block_norm, 0.1);
  EXPECT_LE(b.off_block_spectral, b.off_block_norm + 1e-15);
  EXPECT_THROW(sector_blocks(represent(BraidWord(objs), m), ContiguousCharge{1, 2}), DomainError);
  const auto single = sector_blocks(represent(BraidWord(objs), m), ContiguousCharge{2, 2});
  EXPECT_EQ(single.blocks.size(), 1u);
}

TEST(Invariants, FreeReductionPreservesTheUnitary) {
  Model m(5);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    // Random words padded with cancelling pairs so reduction has work to do.
    auto base = random_word(ObjectList(4, kHalf), 8, static_cast<unsigned>(trial)).letters();
    std::vector<Letter> padded;
    for (auto l : base) {
      padded.push_back(l);
      if (rng() % 2) {
        const Letter x{static_cast<int>(rng() % 3) + 1, 1};
        padded.push_back(x);
        padded.push_back(x.inverse());
      }
    }
    const BraidWord w(ObjectList(4, kHalf), padded);
    EXPECT_LT((represent(w, m).matrix - represent(reduce(w), m).matrix).norm(), 1e-10);
  }
}

TEST(Invariants, ZeroWindingWeavesAreTrivialOnLineSectors) {
  Model m(7);
  const ObjectList objs{Charge::one(), kHalf, kHalf};
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    // Random closed walk of the mobile object starting at position 0.
    std::vector<Letter> moves;
    std::size_t pos = 0;
    int wind = 0;
    while (moves.size() < 20 || pos != 0 || wind != 0) {
      const bool up = pos == 0 || (pos == 1 && rng() % 2);
      const int idx = up ? static_cast<int>(pos) + 1 : static_cast<int>(pos);
      int sign = rng() % 2 ? 1 : -1;
      if (moves.size() > 40) sign = wind > 0 ? -1 : 1;
      moves.push_back({idx, sign});
      wind += sign;
      pos = up ? pos + 1 : pos - 1;
    }
    const Weave w(objs, 0, moves);
    ASSERT_EQ(winding(w), 0);
    const auto u = represent(weave_to_braid(w), m);
    for (std::size_t c = 0; c < u.in_basis.size(); ++c) {
      const int tot = u.in_basis[c].total().twice;
      if (tot != 0 && tot != 4) continue;
      const auto i = static_cast<Eigen::Index>(c);
      EXPECT_LT(std::abs(u.matrix(i, i) - 1.0), 1e-10);
    }
  }
}
