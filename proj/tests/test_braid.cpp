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

#include "anyon/braid.hpp"

using namespace anyon;

namespace {

// Distinct charges serve as strand labels; BraidWord never inspects them.
ObjectList labelled(int n) {
  ObjectList o;
  for (int i = 0; i < n; ++i) o.push_back(Charge{i});
  return o;
}

std::vector<Letter> L(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Letter> out;
  for (auto [i, s] : xs) out.push_back({i, s});
  return out;
}

}  // namespace

TEST(BraidWord, ValidatesLetters) {
  EXPECT_THROW(BraidWord(labelled(3), L({{0, 1}})), DomainError);
  EXPECT_THROW(BraidWord(labelled(3), L({{3, 1}})), DomainError);
  EXPECT_THROW(BraidWord(labelled(3), L({{1, 2}})), DomainError);
  EXPECT_NO_THROW(BraidWord(labelled(3), L({{1, 1}, {2, -1}})));
}

TEST(BraidWord, FinalObjectsFollowThePermutation) {
  const BraidWord w(labelled(4), L({{1, 1}, {2, -1}, {3, 1}}));
  EXPECT_EQ(w.final_objects(), (ObjectList{Charge{1}, Charge{2}, Charge{3}, Charge{0}}));
  EXPECT_EQ(BraidWord(labelled(2)).final_objects(), labelled(2));
}

TEST(BraidWord, ThenRequiresMatchingOrder) {
  const BraidWord a(labelled(3), L({{1, 1}}));
  EXPECT_THROW(a.then(BraidWord(labelled(3), L({{2, 1}}))), DomainError);
  const auto ab = a.then(BraidWord(a.final_objects(), L({{2, 1}})));
  EXPECT_EQ(ab.letters(), L({{1, 1}, {2, 1}}));
  EXPECT_EQ(ab.context(), labelled(3));
}

TEST(BraidWord, FreeReduction) {
  const BraidWord w(labelled(4), L({{1, 1}, {2, 1}, {2, -1}, {1, -1}, {3, 1}, {3, 1}, {1, -1}}));
  EXPECT_EQ(reduce(w).letters(), L({{3, 1}, {3, 1}, {1, -1}}));
  // sigma_1 sigma_1 does not cancel; neither does sigma_1 sigma_2^{-1}.
  const BraidWord k(labelled(3), L({{1, 1}, {1, 1}, {2, -1}}));
  EXPECT_EQ(reduce(k), k);
  EXPECT_TRUE(reduce(w.then(inverse(w))).empty());
}

TEST(BraidWord, InverseStartsFromFinalOrder) {
  const BraidWord w(labelled(4), L({{1, 1}, {3, -1}, {2, 1}}));
  const auto v = inverse(w);
  EXPECT_EQ(v.context(), w.final_objects());
  EXPECT_EQ(v.final_objects(), w.context());
  EXPECT_EQ(v.letters(), L({{2, -1}, {3, 1}, {1, -1}}));
  EXPECT_EQ(inverse(v), w);
}

TEST(Weave, TracksTheMobileObject) {
  const Weave w(labelled(4), 1, L({{2, 1}, {3, 1}, {3, -1}, {2, -1}, {1, 1}}));
  EXPECT_EQ(w.final_position(), 0u);
  EXPECT_EQ(winding(w), 1);
  EXPECT_THROW(Weave(labelled(4), 1, L({{3, 1}})), DomainError);
  EXPECT_THROW(Weave(labelled(4), 4), DomainError);
  const auto b = weave_to_braid(w);
  EXPECT_EQ(b.final_objects()[0], Charge{1});
}

TEST(Composites, SingleCrossingExpansions) {
  // A width-2 object crossing a single strand above it, and the reverse.
  const ObjectList s = labelled(3);
  const auto up = expand_composites(BraidWord({Charge{2}, Charge{1}}, L({{1, 1}})), {2, 1}, s);
  EXPECT_EQ(up.letters(), L({{2, 1}, {1, 1}}));
  const auto down = expand_composites(BraidWord({Charge{1}, Charge{2}}, L({{1, -1}})), {1, 2}, s);
  EXPECT_EQ(down.letters(), L({{1, -1}, {2, -1}}));
}

TEST(Composites, ExpansionPermutesBlocksRigidly) {
  // Oracle: expanding each composite into its strand labels must give the
  // strand order obtained by permuting whole blocks.
  const std::vector<int> widths{2, 1, 3, 1};
  const BraidWord comp(labelled(4), L({{1, 1}, {2, -1}, {3, 1}, {1, -1}, {2, 1}, {3, -1}}));
  const auto strands = expand_composites(comp, widths, labelled(9), 1);
  std::vector<std::vector<int>> blocks;
  int next = 1;
  for (int w : widths) {
    blocks.emplace_back();
    for (int j = 0; j < w; ++j) blocks.back().push_back(next++);
  }
  std::vector<int> order{0};
  for (auto o : comp.final_objects())
    for (int x : blocks[static_cast<std::size_t>(o.twice)]) order.push_back(x);
  order.push_back(8);
  const auto fin = strands.final_objects();
  for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(fin[i].twice, order[i]);
  // Each composite crossing contributes width_a * width_b strand crossings.
  std::size_t expect = 0;
  int signed_count = 0;
  auto w = widths;
  for (auto l : comp.letters()) {
    const auto i = static_cast<std::size_t>(l.index - 1);
    expect += static_cast<std::size_t>(w[i] * w[i + 1]);
    signed_count += l.sign * w[i] * w[i + 1];
    std::swap(w[i], w[i + 1]);
  }
  EXPECT_EQ(strands.size(), expect);
  EXPECT_EQ(winding(std::span<const Letter>(strands.letters())), signed_count);
}

TEST(Composites, RejectsBadLayouts) {
  const BraidWord comp(labelled(2), L({{1, 1}}));
  EXPECT_THROW(expand_composites(comp, {1}, labelled(4)), DomainError);
  EXPECT_THROW(expand_composites(comp, {2, 2}, labelled(4), 1), DomainError);
  EXPECT_THROW(expand_composites(comp, {1, 1}, labelled(4), -1), DomainError);
}

TEST(Weave, WindingOfSimpleWeaves) {
  EXPECT_EQ(winding(Weave(labelled(3), 1)), 0);
  EXPECT_EQ(winding(Weave(labelled(3), 1, L({{2, 1}, {2, 1}}))), 2);
  EXPECT_EQ(winding(Weave(labelled(3), 1, L({{1, -1}, {1, -1}}))), -2);
  EXPECT_EQ(Weave(labelled(3), 1, L({{2, 1}, {2, 1}})).final_position(), 1u);
}

TEST(Weave, BraidRoundTripKeepsTheMobileObject) {
  EXPECT_TRUE(weave_to_braid(Weave(labelled(3), 0)).empty());
  EXPECT_EQ(weave_to_braid(Weave(labelled(3), 0, L({{1, 1}}))).letters(), L({{1, 1}}));
  const Weave w(labelled(5), 2, L({{3, 1}, {4, -1}, {4, -1}, {3, 1}, {2, 1}, {1, -1}}));
  const auto b = weave_to_braid(w);
  const Weave back(b.context(), w.mobile(), b.letters());
  EXPECT_EQ(back.final_position(), w.final_position());
  // The object that started at the mobile slot is where the weave says it is.
  EXPECT_EQ(b.final_objects()[w.final_position()], Charge{2});
}
