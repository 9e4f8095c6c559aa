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

#include <complex>
#include <numbers>

#include "anyon/solovay_kitaev.hpp"

namespace anyon {

// ---------------------------------------------------------------------------
// Three-object weave problems

/// One object of a three-object list moves; everything else is fixed.
/// `target` maps the start basis of `sector` to the end basis of `sector`.
struct WeaveProblem {
  ObjectList objects;
  std::size_t mobile = 1;
  std::size_t final_position = 1;
  Charge sector;
  Eigen::Matrix2cd target;
  std::string name = "custom";
};

namespace detail {

inline Matrix sector_block(const SectorUnitary& u, Charge total) {
  std::vector<Eigen::Index> rows, cols;
  for (std::size_t i = 0; i < u.out_basis.size(); ++i)
    if (u.out_basis[i].total() == total) rows.push_back(static_cast<Eigen::Index>(i));
  for (std::size_t i = 0; i < u.in_basis.size(); ++i)
    if (u.in_basis[i].total() == total) cols.push_back(static_cast<Eigen::Index>(i));
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = u.matrix(rows[r], cols[c]);
  return m;
}

inline ObjectList moved(ObjectList objs, int index) {
  std::swap(objs[static_cast<std::size_t>(index - 1)], objs[static_cast<std::size_t>(index)]);
  return objs;
}

}  // namespace detail

/// Searches every entry/exit option around a middle-mobile weave and returns
/// the best full word. With cfg.constraints.winding set the total winding of
/// the returned word is exactly that value and matching is phase-sensitive.
inline CompiledGate solve(const Model& model, const WeaveProblem& pb, const SearchConfig& cfg,
                          std::ostream* log = nullptr) {
  cfg.validate();
  if (pb.objects.size() != 3 || pb.mobile > 2 || pb.final_position > 2) {
    throw DomainError("weave problem needs three objects and positions in 0..2");
  }
  const auto start_basis = enumerate_paths(pb.objects, model.level(), pb.sector);
  if (start_basis.size() != 2) throw DomainError("weave problem: sector is not two-dimensional");

  // Entry letter index (0 = none) and middle configuration.
  const int entry_index = pb.mobile == 0 ? 1 : pb.mobile == 2 ? 2 : 0;
  const ObjectList middle = entry_index ? detail::moved(pb.objects, entry_index) : pb.objects;
  const int exit_index = pb.final_position == 0 ? 1 : pb.final_position == 2 ? 2 : 0;
  WeaveSpace space(model, middle, pb.sector, cfg.alphabet);

  struct Best {
    bool valid = false;
    double distance = 0.0;
    std::vector<Letter> letters;
    SearchResult result;
    std::vector<Letter> head, tail;
    Eigen::Matrix2cd mid_target;
    int mid_winding = 0;
    bool searched = false;
  } best;
  std::uint64_t examined = 0;
  bool limited = false;
  int searched = 0;

  auto consider = [&](double d, std::vector<Letter> letters, Best candidate) {
    letters = reduce(BraidWord(pb.objects, std::move(letters))).letters();
    if (!best.valid || d < best.distance - 1e-13 ||
        (d <= best.distance + 1e-13 &&
         (letters.size() < best.letters.size() ||
          (letters.size() == best.letters.size() && letters < best.letters)))) {
      candidate.valid = true;
      candidate.distance = d;
      candidate.letters = std::move(letters);
      best = std::move(candidate);
    }
  };

  const bool sensitive = cfg.constraints.winding.has_value();
  const std::vector<int> entry_signs = entry_index ? std::vector<int>{+1, -1} : std::vector<int>{0};
  const std::vector<int> exit_signs = exit_index ? std::vector<int>{+1, -1} : std::vector<int>{0};

  // Empty word, when it is admissible.
  if (pb.mobile == pb.final_position && (!sensitive || *cfg.constraints.winding == 0)) {
    const Matrix t = pb.target;
    const Matrix id = Matrix::Identity(2, 2);
    consider(sensitive ? distance_phase_sensitive(id, t) : distance(id, t), {}, Best{});
  }

  for (int es : entry_signs) {
    for (int xs : exit_signs) {
      Eigen::Matrix2cd e = Eigen::Matrix2cd::Identity(), x = Eigen::Matrix2cd::Identity();
      std::vector<Letter> head, tail;
      if (es) {
        head.push_back({entry_index, es});
        e = represent(BraidWord(pb.objects, head), model, pb.sector).matrix;
      }
      const ObjectList exit_from = middle;
      if (xs) {
        tail.push_back({exit_index, xs});
        x = represent(BraidWord(exit_from, tail), model, pb.sector).matrix;
      }
      const Eigen::Matrix2cd mid_target = x.adjoint() * pb.target * e.adjoint();
      SearchConfig c = cfg;
      int w = 0;
      if (sensitive) {
        w = *cfg.constraints.winding - es - xs;
        if (w % space.step() != 0) continue;
        c.constraints.winding = w;
      }
      const SearchResult r = cfg.method == SearchMethod::kExhaustive ? exhaustive(space, mid_target, c)
                                                                      : bidirectional(space, mid_target, c, log);
      examined += r.examined;
      limited = limited || r.budget_limited;
      searched = std::max(searched, r.searched_length);
      auto letters = head;
      for (auto l : space.letters(r.parts)) letters.push_back(l);
      for (auto l : tail) letters.push_back(l);
      Best cand;
      cand.result = r;
      cand.head = head;
      cand.tail = tail;
      cand.mid_target = mid_target;
      cand.mid_winding = w;
      cand.searched = true;
      consider(r.distance, std::move(letters), std::move(cand));
    }
  }

  if (cfg.refine > 0 && best.searched && best.distance > 1e-14) {
    // Commutator corrections on the middle weave; factors come from phase-free
    // searches in the same space and carry no winding.
    SearchConfig base_cfg = cfg;
    base_cfg.constraints.winding.reset();
    base_cfg.refine = 0;
    const Su2 t = sensitive ? Su2::from_matrix(best.mid_target / space.winding_phase(best.mid_winding))
                            : Su2::normalized(best.mid_target);
    Su2 start = space.image(best.result.parts);
    if (!sensitive && su2_distance(-start, t) < su2_distance(start, t)) start = -start;
    const BaseApproximator base = [&](const Su2& x) {
      const auto r = cfg.method == SearchMethod::kExhaustive ? exhaustive(space, x.matrix(), base_cfg)
                                                              : bidirectional(space, x.matrix(), base_cfg, log);
      examined += r.examined;
      Su2 v = space.image(r.parts);
      if (su2_distance(-v, x) < su2_distance(v, x)) v = -v;
      return Approximation{r.parts, v};
    };
    const auto refined = sk_recurse(t, {best.result.parts, start}, cfg.refine, base);
    const double d = sensitive ? su2_distance(refined.value, t) : su2_distance_mod_phase(refined.value, t);
    if (d < best.distance) {
      auto letters = best.head;
      for (auto l : space.letters(refined.parts)) letters.push_back(l);
      for (auto l : best.tail) letters.push_back(l);
      best.letters = reduce(BraidWord(pb.objects, std::move(letters))).letters();
      best.distance = d;
      best.result.parts = refined.parts;
    }
  }

  CompiledGate g;
  g.word = BraidWord(pb.objects, best.letters);
  g.target = pb.name;
  g.distance = best.distance;
  g.candidates_examined = examined;
  g.method = to_string(cfg.method) + (cfg.refine > 0 ? "+refine" + std::to_string(cfg.refine) : "");
  g.budget_limited = limited;
  g.searched_length = searched;
  g.parts = best.result.parts;
  return g;
}

// ---------------------------------------------------------------------------
// Single-qubit gates

inline Eigen::Matrix2cd named_gate(const std::string& name, double phi = std::numbers::pi) {
  const cplx i(0.0, 1.0);
  Eigen::Matrix2cd m;
  if (name == "identity") m << 1, 0, 0, 1;
  else if (name == "hadamard") m << M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2;
  else if (name == "pauli-x") m << 0, 1, 1, 0;
  else if (name == "pauli-y") m << 0, -i, i, 0;
  else if (name == "pauli-z") m << 1, 0, 0, -1;
  else if (name == "s") m << 1, 0, 0, i;
  else if (name == "t") m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4);
  else if (name == "phase") m << 1, 0, 0, std::polar(1.0, phi);
  else throw UsageError("unknown gate '" + name + "'");
  return m;
}

inline std::vector<std::string> gate_names() {
  return {"identity", "hadamard", "pauli-x", "pauli-y", "pauli-z", "s", "t", "phase"};
}

inline void require_single_qubit_level(const Level& level) {
  const int k = level.k();
  if (k < 3 || k == 4 || k == 8) {
    throw DomainError("single-qubit weaving of charge-1/2 anyons needs k >= 3, k != 4, 8 (got k=" +
                      std::to_string(k) + ")");
  }
}

/// Weaves the second anyon of a four-anyon qubit around the first and third.
/// The three-anyon total-1/2 sector is the encoded qubit.
inline CompiledGate compile_single_qubit(const Eigen::Matrix2cd& target, const Model& model,
                                         const SearchConfig& cfg, const std::string& name = "custom",
                                         std::ostream* log = nullptr) {
  require_single_qubit_level(model.level());
  const Charge h = Charge::half();
  WeaveProblem pb{{h, h, h}, 1, 1, h, target, name};
  return solve(model, pb, cfg, log);
}

/// Four-anyon qubit context for a compiled three-anyon weave.
inline BraidWord qubit_word(const BraidWord& three) {
  const Charge h = Charge::half();
  return BraidWord({h, h, h, h}, three.letters());
}

// ---------------------------------------------------------------------------
// Label bases of three-object problems

/// A label (b, t): b is the charge of the two fixed objects, t the total.
struct Label {
  int b = 0;  ///< twice units
  int t = 0;  ///< twice units
  friend bool operator==(const Label&, const Label&) = default;
};

/// Orthogonal change of basis from labels |(m (yz)_b)_t> to fusion paths.
/// `mobile_first`: objects are (m, y, z); otherwise (y, z, m). Labels are
/// ordered by total, then b.
struct LabelBasis {
  ObjectList objects;
  std::vector<FusionPath> paths;
  std::vector<Label> labels;
  Eigen::MatrixXd q;  ///< paths x labels

  Eigen::Index index(Label l) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return static_cast<Eigen::Index>(i);
    throw DomainError("label not present");
  }
};

inline LabelBasis label_basis(const Model& model, const ObjectList& objs, bool mobile_first) {
  if (objs.size() != 3) throw DomainError("label basis needs three objects");
  LabelBasis lb;
  lb.objects = objs;
  lb.paths = enumerate_paths(objs, model.level());
  const Charge m = mobile_first ? objs[0] : objs[2];
  const Charge y = mobile_first ? objs[1] : objs[0];
  const Charge z = mobile_first ? objs[2] : objs[1];
  for (auto b : model.fuse(y, z))
    for (auto t : model.fuse(m, b)) lb.labels.push_back({b.twice, t.twice});
  std::sort(lb.labels.begin(), lb.labels.end(),
            [](Label u, Label v) { return std::pair(u.t, u.b) < std::pair(v.t, v.b); });
  lb.q = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(lb.paths.size()),
                               static_cast<Eigen::Index>(lb.labels.size()));
  for (std::size_t r = 0; r < lb.paths.size(); ++r) {
    const auto& p = lb.paths[r];
    for (std::size_t c = 0; c < lb.labels.size(); ++c) {
      const auto l = lb.labels[c];
      if (p.total().twice != l.t) continue;
      double v = 0.0;
      if (mobile_first) {
        v = model.f_symbol(m, y, z, Charge{l.t}, p[1], Charge{l.b});
      } else {
        v = p[1].twice == l.b ? 1.0 : 0.0;
      }
      lb.q(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    }
  }
  return lb;
}

/// Matrix of `u` between label bases.
inline Matrix to_labels(const SectorUnitary& u, const LabelBasis& in, const LabelBasis& out) {
  if (u.in_basis != in.paths || u.out_basis != out.paths) throw DomainError("to_labels: basis mismatch");
  return out.q.transpose().cast<cplx>() * u.matrix * in.q.cast<cplx>();
}

inline SectorUnitary from_labels(const Matrix& l, const LabelBasis& in, const LabelBasis& out) {
  SectorUnitary u;
  u.in_objects = in.objects;
  u.out_objects = out.objects;
  u.in_basis = in.paths;
  u.out_basis = out.paths;
  u.matrix = out.q.cast<cplx>() * l * in.q.transpose().cast<cplx>();
  return u;
}

// ---------------------------------------------------------------------------
// Two-qubit constructions

/// Eight charge-1/2 anyons; control = 1..4, target = 5..8; control pair (3,4).
struct QubitLayout {
  static ObjectList strands() { return ObjectList(8, Charge::half()); }

  /// Computational basis indices in the total-0 space, ordered ab = 00, 01, 10, 11.
  static std::array<Eigen::Index, 4> computational(const std::vector<FusionPath>& basis) {
    std::array<Eigen::Index, 4> out{};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const FusionPath want{{Charge{1}, Charge{2 * a}, Charge{1}, Charge{0}, Charge{1}, Charge{2 * b},
                               Charge{1}, Charge{0}}};
        auto it = std::find(basis.begin(), basis.end(), want);
        if (it == basis.end()) throw DomainError("layout: computational state missing");
        out[static_cast<std::size_t>(2 * a + b)] = static_cast<Eigen::Index>(it - basis.begin());
      }
    return out;
  }
};

inline Eigen::Matrix4cd controlled_phase_target(double phi, bool on_11) {
  Eigen::Matrix4cd t = Eigen::Matrix4cd::Identity();
  t(on_11 ? 3 : 2, on_11 ? 3 : 2) = std::polar(1.0, phi);
  return t;
}

/// Block of u taking computational states to non-computational ones.
inline Matrix leakage_block(const SectorUnitary& u) {
  const auto idx = QubitLayout::computational(u.in_basis);
  const auto out_idx = QubitLayout::computational(u.out_basis);
  std::vector<Eigen::Index> rows;
  for (Eigen::Index r = 0; r < u.matrix.rows(); ++r)
    if (std::find(out_idx.begin(), out_idx.end(), r) == out_idx.end()) rows.push_back(r);
  Matrix m(static_cast<Eigen::Index>(rows.size()), 4);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < 4; ++j) m(static_cast<Eigen::Index>(i), j) = u.matrix(rows[i], idx[static_cast<std::size_t>(j)]);
  return m;
}

/// Spectral norm of the leakage block; a sub-block of U P - T, so never above
/// the full-gate distance.
inline double leakage(const SectorUnitary& u) {
  const Matrix m = leakage_block(u);
  return m.size() == 0 ? 0.0 : Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

inline double leakage_frobenius(const SectorUnitary& u) { return leakage_block(u).norm(); }

struct TwoQubitReport {
  double distance = 0.0;  ///< min over global phase of ||U P - T||, P the computational embedding
  double leakage = 0.0;            ///< spectral norm
  double leakage_frobenius = 0.0;
  Eigen::Matrix4cd block;  ///< computational block, ab order
  double control0 = 0.0;   ///< control |0> branch vs identity, up to phase
  double control1 = 0.0;   ///< control |1> branch vs its target, up to phase
  double target0 = 0.0;    ///< target |0> branch vs its target, up to phase
  double phi = std::numbers::pi;
  bool phase_on_11 = false;
};

inline TwoQubitReport two_qubit_report(const SectorUnitary& u, double phi, bool on_11) {
  const auto idx = QubitLayout::computational(u.in_basis);
  const auto t4 = controlled_phase_target(phi, on_11);
  const auto n = u.matrix.rows();
  Matrix up(n, 4), tp = Matrix::Zero(n, 4);
  for (int j = 0; j < 4; ++j) {
    up.col(j) = u.matrix.col(idx[static_cast<std::size_t>(j)]);
    for (int i = 0; i < 4; ++i) tp(idx[static_cast<std::size_t>(i)], j) = t4(i, j);
  }
  TwoQubitReport r;
  r.phi = phi;
  r.phase_on_11 = on_11;
  r.distance = distance_isometry(up, tp);
  r.leakage = leakage(u);
  r.leakage_frobenius = leakage_frobenius(u);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.block(i, j) = u.matrix(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  auto branch = [&](std::initializer_list<int> cols) {
    Matrix a(n, static_cast<Eigen::Index>(cols.size())), b(n, static_cast<Eigen::Index>(cols.size()));
    Eigen::Index c = 0;
    for (int j : cols) {
      a.col(c) = up.col(j);
      b.col(c) = tp.col(j);
      ++c;
    }
    return distance_isometry(a, b);
  };
  r.control0 = branch({0, 1});
  r.control1 = branch({2, 3});
  r.target0 = branch({0, 2});
  return r;
}

struct TwoQubitGate {
  BraidWord word;  ///< on the eight strands
  TwoQubitReport report;
  std::vector<CompiledGate> components;
};

/// Effective k=3 problem: the charge-1 control pair woven around the charge-1
/// target pairs, total charge 1. Returns the weave approximating -I.
inline CompiledGate compile_k3_effective(const Model& model, SearchConfig cfg, std::ostream* log = nullptr) {
  if (model.k() != 3) throw DomainError("the effective-qubit controlled-Z construction needs k = 3");
  const Charge one = Charge::one();
  cfg.constraints.winding = 0;
  WeaveProblem pb{{one, one, one}, 0, 0, one, -Eigen::Matrix2cd::Identity(), "-identity"};
  return solve(model, pb, cfg, log);
}

namespace detail {

/// Embeds a word on composite objects into the eight strands.
inline BraidWord embed(const std::vector<Letter>& letters, const std::vector<int>& widths) {
  ObjectList ctx;
  for (int w : widths) ctx.push_back(w == 2 ? Charge::one() : Charge::half());
  return expand_composites(BraidWord(ctx, letters), widths, QubitLayout::strands(), 0);
}

inline std::vector<Letter> shifted(const std::vector<Letter>& letters, int by) {
  std::vector<Letter> out;
  for (auto l : letters) out.push_back({l.index + by, l.sign});
  return out;
}

inline std::vector<Letter> inverted(const std::vector<Letter>& letters) {
  std::vector<Letter> out(letters.rbegin(), letters.rend());
  for (auto& l : out) l.sign = -l.sign;
  return out;
}

}  // namespace detail

inline TwoQubitGate assemble_k3(const CompiledGate& effective, const Model& model) {
  if (model.k() != 3) throw DomainError("k = 3 required");
  if (effective.word.context() != ObjectList(3, Charge::one())) throw DomainError("layout mismatch");
  TwoQubitGate g;
  g.word = detail::embed(detail::shifted(effective.word.letters(), 1), {2, 2, 2, 2});
  const auto u = represent(g.word, model, Charge::vacuum());
  g.report = two_qubit_report(u, std::numbers::pi, true);
  g.components = {effective};
  return g;
}

inline TwoQubitGate build_k3_controlled_z(const Model& model, const SearchConfig& cfg, std::ostream* log = nullptr) {
  return assemble_k3(compile_k3_effective(model, cfg, log), model);
}

inline void require_three_step_level(const Level& level) {
  if (level.k() < 5) {
    throw DomainError("the three-step controlled-phase construction needs k >= 5 (got k=" +
                      std::to_string(level.k()) + "; use the k = 3 construction for k = 3)");
  }
}

/// Step-one target on objects (C, x, x) -> (x, x, C): the label map
/// |(C (xx)_b)_d'> -> s_b |((xx)_b C)_d'>, with s = -1 on (b=0, d'=1) and +1
/// elsewhere. Winding-zero weaves have determinant -1 on the d'=1 block in
/// these labels; the sign sits on a single computational path and cancels
/// against the inverse swap.
inline SectorUnitary derive_swap_target(const Model& model) {
  require_three_step_level(model.level());
  const Charge one = Charge::one(), h = Charge::half();
  const auto in = label_basis(model, {one, h, h}, true);
  const auto out = label_basis(model, {h, h, one}, false);
  Matrix l = Matrix::Identity(4, 4);
  l(in.index({0, 2}), in.index({0, 2})) = -1.0;
  return from_labels(l, in, out);
}

/// Single composite pass of C over (x x): sigma_1 sigma_2 on (C, x, x).
inline SectorUnitary natural_swap(const Model& model) {
  const Charge one = Charge::one(), h = Charge::half();
  return represent(BraidWord({one, h, h}, {{1, 1}, {2, 1}}), model);
}

/// Step-two target on (C, x, x): diagonal in labels, e^{i phi} on (b=0, d=1),
/// e^{-i phi} on (b=1, d=1), 1 on the one-dimensional sectors.
inline SectorUnitary phase_step_target(const Model& model, double phi) {
  require_three_step_level(model.level());
  const Charge one = Charge::one(), h = Charge::half();
  const auto lb = label_basis(model, {one, h, h}, true);
  Matrix l = Matrix::Identity(4, 4);
  l(lb.index({0, 2}), lb.index({0, 2})) = std::polar(1.0, phi);
  l(lb.index({2, 2}), lb.index({2, 2})) = std::polar(1.0, -phi);
  return from_labels(l, lb, lb);
}

inline CompiledGate compile_swap(const Model& model, SearchConfig cfg, std::ostream* log = nullptr) {
  const auto t = derive_swap_target(model);
  cfg.constraints.winding = 0;
  WeaveProblem pb{t.in_objects, 0, 2, Charge::one(), detail::sector_block(t, Charge::one()), "swap"};
  return solve(model, pb, cfg, log);
}

inline CompiledGate compile_phase_step(const Model& model, double phi, SearchConfig cfg,
                                       std::ostream* log = nullptr) {
  const auto t = phase_step_target(model, phi);
  cfg.constraints.winding = 0;
  WeaveProblem pb{t.in_objects, 0, 0, Charge::one(), detail::sector_block(t, Charge::one()), "phase"};
  return solve(model, pb, cfg, log);
}

/// Phase-sensitive distance of a three-object compiled word to a target over
/// every total-charge sector.
inline double full_distance(const CompiledGate& g, const SectorUnitary& target, const Model& model) {
  const auto u = represent(g.word, model);
  if (!u.same_basis_as(target)) throw DomainError("full_distance: basis mismatch");
  return distance_phase_sensitive(u.matrix, target.matrix);
}

/// Swap, phase step, inverse swap. The target is diag(1, 1, e^{i phi}, 1) in
/// ab order, or diag(1, 1, 1, e^{i phi}) with `on_11`.
inline TwoQubitGate assemble_two_qubit(const CompiledGate& swap, const CompiledGate& phase, const Model& model,
                                       double phi = std::numbers::pi, bool on_11 = false) {
  require_three_step_level(model.level());
  const Charge one = Charge::one(), h = Charge::half();
  if (swap.word.context() != ObjectList{one, h, h} || swap.word.final_objects() != ObjectList{h, h, one} ||
      phase.word.context() != ObjectList{one, h, h} || phase.word.final_objects() != ObjectList{one, h, h}) {
    throw DomainError("assemble_two_qubit: components do not fit the layout");
  }
  // Composite objects: A (1,2), C (3,4), x5, x6, x7, x8.
  std::vector<Letter> letters = detail::shifted(swap.word.letters(), 1);
  for (auto l : detail::shifted(phase.word.letters(), 3)) letters.push_back(l);
  for (auto l : detail::shifted(detail::inverted(swap.word.letters()), 1)) letters.push_back(l);
  TwoQubitGate g;
  g.word = detail::embed(letters, {2, 2, 1, 1, 1, 1});
  const auto u = represent(g.word, model, Charge::vacuum());
  g.report = two_qubit_report(u, phi, on_11);
  g.components = {swap, phase};
  return g;
}

/// Exact phase step for k = 8n - 2: n full loops of C around (x7 x8).
struct ExactPhase {
  int n = 0;
  Weave weave{{Charge::vacuum()}, 0};
  cplx relative_phase;  ///< U(b=0, d=1) / U(b=1, d=0) in labels
  cplx predicted;       ///< exp(-i 8 pi n / (k+2))
};

inline ExactPhase exact_phase_step(const Model& model) {
  const int k = model.k();
  if ((k + 2) % 8 != 0) {
    const int lo = ((k + 2) / 8) * 8 - 2, hi = lo + 8;
    std::string near = lo >= 6 ? std::to_string(lo) + " or " + std::to_string(hi) : std::to_string(hi);
    throw DomainError("exact phase step needs k = 8n - 2 (got k=" + std::to_string(k) +
                      "); nearest valid k: " + near);
  }
  ExactPhase e;
  e.n = (k + 2) / 8;
  const Charge one = Charge::one(), h = Charge::half();
  std::vector<Letter> moves;
  for (int i = 0; i < e.n; ++i)
    for (auto l : {Letter{1, 1}, Letter{2, 1}, Letter{2, 1}, Letter{1, 1}}) moves.push_back(l);
  e.weave = Weave({one, h, h}, 0, moves);
  const auto lb = label_basis(model, {one, h, h}, true);
  const Matrix l = to_labels(represent(weave_to_braid(e.weave), model), lb, lb);
  e.relative_phase = l(lb.index({0, 2}), lb.index({0, 2})) / l(lb.index({2, 0}), lb.index({2, 0}));
  e.predicted = std::polar(1.0, -8.0 * std::numbers::pi * e.n / (k + 2));
  return e;
}

}  // namespace anyon
