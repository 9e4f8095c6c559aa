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

#include "anyon/synthesis.hpp"

using namespace anyon;

namespace {

const Charge kHalf = Charge::half();
const Charge kOne = Charge::one();
constexpr double kPi = std::numbers::pi;

SearchConfig short_search(int len) {
  SearchConfig c;
  c.max_length = len;
  return c;
}

}  // namespace

TEST(SingleQubit, IdentityIsEmptyWeave) {
  Model m(5);
  const auto g = compile_single_qubit(Eigen::Matrix2cd::Identity(), m, short_search(12));
  EXPECT_TRUE(g.word.empty());
  EXPECT_LT(g.distance, 1e-14);
}

TEST(SingleQubit, ExcludedLevelsRefused) {
  for (int k : {1, 2, 4, 8}) {
    Model m(k);
    try {
      compile_single_qubit(named_gate("hadamard"), m, short_search(8));
      ADD_FAILURE() << "k=" << k << " accepted";
    } catch (const DomainError& e) {
      EXPECT_NE(std::string(e.what()).find("k != 4, 8"), std::string::npos);
    }
  }
}

TEST(SingleQubit, ReportedDistanceReverifies) {
  Model m(5);
  for (auto name : {"hadamard", "pauli-x", "t"}) {
    const auto g = compile_single_qubit(named_gate(name), m, short_search(20), name);
    const auto u = represent(qubit_word(g.word), m, Charge::vacuum());
    ASSERT_EQ(u.dim(), 2);
    EXPECT_NEAR(distance(u.matrix, named_gate(name)), g.distance, 1e-12) << name;
    EXPECT_EQ(g.word.final_objects(), g.word.context());
    // The first and third anyons never exchange with each other.
    for (std::size_t i = 0; i + 1 < g.word.size(); i += 2) EXPECT_EQ(g.word.letters()[i], g.word.letters()[i + 1]);
  }
}

TEST(SingleQubit, HadamardImprovesWithLength) {
  Model m(5);
  double prev = 10.0;
  for (int len : {8, 16, 24, 32}) {
    const auto g = compile_single_qubit(named_gate("hadamard"), m, short_search(len));
    EXPECT_LE(g.distance, prev + 1e-15) << len;
    prev = g.distance;
  }
  EXPECT_LT(prev, 0.05);
}

TEST(SingleQubit, WithinQubitBraidDoesNotLeak) {
  Model m(5);
  const auto g = compile_single_qubit(named_gate("hadamard"), m, short_search(16));
  const auto u8 = represent(BraidWord(QubitLayout::strands(), g.word.letters()), m, Charge::vacuum());
  EXPECT_LT(leakage(u8), 1e-12);
  std::vector<Letter> target_side;
  for (auto l : g.word.letters()) target_side.push_back({l.index + 4, l.sign});
  const auto t8 = represent(BraidWord(QubitLayout::strands(), target_side), m, Charge::vacuum());
  EXPECT_LT(leakage(t8), 1e-12);
}

TEST(Labels, BasesAreOrthogonal) {
  for (int k : {5, 6, 8}) {
    Model m(k);
    for (bool first : {true, false}) {
      const auto lb = label_basis(m, first ? ObjectList{kOne, kHalf, kHalf} : ObjectList{kHalf, kHalf, kOne}, first);
      ASSERT_EQ(lb.labels.size(), 4u);
      EXPECT_LT((lb.q.transpose() * lb.q - Eigen::MatrixXd::Identity(4, 4)).norm(), 1e-12);
      // Order by total, then b: 10, 01, 11, 12.
      EXPECT_EQ(lb.labels[0], (Label{2, 0}));
      EXPECT_EQ(lb.labels[1], (Label{0, 2}));
      EXPECT_EQ(lb.labels[2], (Label{2, 2}));
      EXPECT_EQ(lb.labels[3], (Label{2, 4}));
    }
  }
}

TEST(SwapTarget, UnitaryWithUnitPhasesOnLineSectors) {
  for (int k : {5, 6, 8, 12}) {
    Model m(k);
    const auto t = derive_swap_target(m);
    EXPECT_LT(unitarity_defect(t.matrix), 1e-12);
    for (std::size_t c = 0; c < t.in_basis.size(); ++c) {
      const int tot = t.in_basis[c].total().twice;
      if (tot == 0 || tot == 4) {
        const auto r = static_cast<Eigen::Index>(c);
        EXPECT_NEAR(t.matrix.col(r).norm(), 1.0, 1e-12);
        EXPECT_NEAR(t.matrix.col(r).cwiseAbs().maxCoeff(), 1.0, 1e-12);
      }
    }
    EXPECT_LT((t.matrix.adjoint() * t.matrix - Matrix::Identity(4, 4)).norm(), 1e-12);
  }
  EXPECT_THROW(derive_swap_target(Model(3)), DomainError);
  EXPECT_THROW(derive_swap_target(Model(4)), DomainError);
}

TEST(SwapTarget, NaturalPassIsDiagonalInLabels) {
  Model m(5);
  const auto in = label_basis(m, {kOne, kHalf, kHalf}, true);
  const auto out = label_basis(m, {kHalf, kHalf, kOne}, false);
  const Matrix l = to_labels(natural_swap(m), in, out);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto lab = in.labels[i];
    const auto ii = static_cast<Eigen::Index>(i);
    // A composite pass of C over (xx)_b in channel t is R^{C b}_t.
    EXPECT_LT(std::abs(l(ii, ii) - m.r_phase(kOne, Charge{lab.b}, Charge{lab.t})), 1e-12);
  }
  EXPECT_LT((l - Matrix(l.diagonal().asDiagonal())).norm(), 1e-12);
}

TEST(Composites, ClosedCompositeWordsMatchStrands) {
  // C = strands 1,2 fused to charge 1; closed weaves of C around strands 3,4.
  Model m(5);
  const std::vector<std::vector<Letter>> words{
      {{1, 1}, {2, 1}, {2, 1}, {1, 1}},
      {{1, -1}, {2, 1}, {2, 1}, {1, -1}},
      {{1, 1}, {1, 1}},
      {{1, 1}, {2, -1}, {2, -1}, {2, -1}, {2, -1}, {1, 1}}};
  for (const auto& w : words) {
    const BraidWord comp({kOne, kHalf, kHalf}, w);
    const auto uc = represent(comp, m);
    const auto strands = expand_composites(comp, {2, 1, 1}, ObjectList(4, kHalf));
    EXPECT_EQ(strands.size(), 2 * w.size());
    const auto us = represent(strands, m);
    // Strand paths (1, 2, e, t) correspond to composite paths (2, e, t).
    for (std::size_t c = 0; c < uc.in_basis.size(); ++c) {
      const auto& pc = uc.in_basis[c];
      const FusionPath ps{{kHalf, kOne, pc[1], pc[2]}};
      const auto sc = std::find(us.in_basis.begin(), us.in_basis.end(), ps) - us.in_basis.begin();
      for (std::size_t r = 0; r < us.out_basis.size(); ++r) {
        const auto& pr = us.out_basis[r];
        cplx expect = 0.0;
        if (pr[1] == kOne) {
          const FusionPath qc{{kOne, pr[2], pr[3]}};
          const auto rc = std::find(uc.out_basis.begin(), uc.out_basis.end(), qc) - uc.out_basis.begin();
          expect = uc.matrix(rc, static_cast<Eigen::Index>(c));
        }
        EXPECT_LT(std::abs(us.matrix(static_cast<Eigen::Index>(r), sc) - expect), 1e-12);
      }
    }
  }
}

TEST(Swap, CompiledSwapIsExactOnLineSectors) {
  Model m(5);
  const auto g = compile_swap(m, short_search(24));
  EXPECT_EQ(winding(std::span<const Letter>(g.word.letters())), 0);
  EXPECT_EQ(g.word.final_objects(), (ObjectList{kHalf, kHalf, kOne}));
  EXPECT_NEAR(full_distance(g, derive_swap_target(m), m), g.distance, 1e-12);
  EXPECT_LT(g.distance, 0.1);
}

TEST(Swap, InverseComposesToIdentity) {
  Model m(6);
  const auto t = derive_swap_target(m);
  const auto g = compile_swap(m, short_search(20));
  const auto u = represent(g.word.then(inverse(g.word)), m);
  EXPECT_LT((u.matrix - Matrix::Identity(4, 4)).norm(), 1e-12);
  EXPECT_LT((t.matrix.adjoint() * t.matrix - Matrix::Identity(4, 4)).norm(), 1e-12);
}

TEST(Swap, ChargeOneWeavingRunsAtLevelEight) {
  Model m(8);
  const auto g = compile_swap(m, short_search(20));
  EXPECT_LT(g.distance, 0.2);
  EXPECT_NEAR(full_distance(g, derive_swap_target(m), m), g.distance, 1e-12);
}

TEST(PhaseStep, ZeroAngleIsEmptyWeave) {
  Model m(5);
  const auto g = compile_phase_step(m, 0.0, short_search(16));
  EXPECT_TRUE(g.word.empty());
  EXPECT_LT(g.distance, 1e-14);
}

TEST(PhaseStep, DiagonalInBAndExactOnLineSectors) {
  Model m(5);
  const auto g = compile_phase_step(m, kPi, short_search(24));
  const auto lb = label_basis(m, {kOne, kHalf, kHalf}, true);
  const Matrix l = to_labels(represent(g.word, m), lb, lb);
  EXPECT_NEAR(std::abs(l(lb.index({2, 0}), lb.index({2, 0})) - 1.0), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(l(lb.index({2, 4}), lb.index({2, 4})) - 1.0), 0.0, 1e-10);
  const double off = std::abs(l(lb.index({0, 2}), lb.index({2, 2}))) + 0.0;
  EXPECT_LE(off, g.distance + 1e-12);
  EXPECT_NEAR(full_distance(g, phase_step_target(m, kPi), m), g.distance, 1e-12);
}

TEST(PhaseStep, ExactLoopsAtEightNMinusTwo) {
  for (int k : {6, 14, 22}) {
    Model m(k);
    const auto e = exact_phase_step(m);
    EXPECT_EQ(e.n, (k + 2) / 8);
    EXPECT_LT(std::abs(e.relative_phase + 1.0), 1e-12) << k;
    EXPECT_LT(std::abs(e.predicted + 1.0), 1e-12);
    EXPECT_EQ(winding(e.weave), 4 * e.n);
    EXPECT_EQ(e.weave.final_position(), 0u);
    // Monodromy ratio m(1,1,0) / m(1,0,1) is the same number.
    const cplx ratio = m.monodromy(kOne, kOne, Charge::vacuum()) / m.monodromy(kOne, Charge::vacuum(), kOne);
    EXPECT_LT(std::abs(std::pow(ratio, e.n) + 1.0), 1e-12);
  }
}

TEST(PhaseStep, ExactLoopRefusesOtherLevels) {
  try {
    exact_phase_step(Model(5));
    ADD_FAILURE();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("nearest valid k: 6"), std::string::npos) << e.what();
  }
  try {
    exact_phase_step(Model(10));
    ADD_FAILURE();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("6 or 14"), std::string::npos) << e.what();
  }
}

TEST(TwoQubit, ThreeStepGateReport) {
  Model m(5);
  const auto sw = compile_swap(m, short_search(24));
  const auto ph = compile_phase_step(m, kPi, short_search(24));
  const auto g = assemble_two_qubit(sw, ph, m);
  EXPECT_LE(g.report.distance, 2 * sw.distance + ph.distance + 1e-12);
  EXPECT_LE(g.report.leakage, g.report.distance + 1e-12);
  EXPECT_LT(g.report.control0, 1e-10);
  EXPECT_EQ(g.word.strands(), 8u);
  EXPECT_EQ(g.word.final_objects(), QubitLayout::strands());
  // Every composite crossing involves C and a single strand.
  EXPECT_EQ(g.word.size(), 2 * (2 * sw.word.size() + ph.word.size()));
}

TEST(TwoQubit, ExactLoopGivesControlledZ) {
  // k = 6: the swap is approximate, the phase loop exact; the gate error is
  // bounded by twice the swap error alone.
  Model m(6);
  const auto sw = compile_swap(m, short_search(24));
  const auto e = exact_phase_step(m);
  CompiledGate ph;
  ph.word = weave_to_braid(e.weave);
  const auto g = assemble_two_qubit(sw, ph, m, kPi, true);
  EXPECT_LE(g.report.distance, 2 * sw.distance + 1e-12);
  EXPECT_LT(g.report.control0, 1e-10);
}

TEST(TwoQubit, LevelThreeControlledZ) {
  Model m(3);
  const auto g = build_k3_controlled_z(m, short_search(24));
  const double eff = g.components.at(0).distance;
  EXPECT_LT(eff, 0.1);
  EXPECT_LE(g.report.distance, 3 * eff);
  EXPECT_LE(g.report.leakage, g.report.distance + 1e-12);
  EXPECT_LT(g.report.control0, 1e-10);
  EXPECT_LT(g.report.target0, 1e-10);
  EXPECT_THROW(build_k3_controlled_z(Model(5), short_search(8)), DomainError);
}

TEST(TwoQubit, RefinementKeepsWindingAndImproves) {
  Model m(5);
  auto c = short_search(20);
  const auto plain = compile_phase_step(m, kPi, c);
  c.refine = 1;
  const auto refined = compile_phase_step(m, kPi, c);
  EXPECT_LT(refined.distance, plain.distance);
  EXPECT_EQ(winding(std::span<const Letter>(refined.word.letters())), 0);
  EXPECT_NEAR(full_distance(refined, phase_step_target(m, kPi), m), refined.distance, 1e-12);
}

TEST(TwoQubit, LeakageOfIdentityIsZero) {
  Model m(5);
  const auto u = represent(BraidWord(QubitLayout::strands()), m, Charge::vacuum());
  EXPECT_EQ(u.dim(), 14);
  EXPECT_LT(leakage(u), 1e-15);
  const auto r = two_qubit_report(u, 0.0, false);
  EXPECT_LT(r.distance, 1e-12);
}
