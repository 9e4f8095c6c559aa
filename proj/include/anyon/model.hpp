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

#include <cmath>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>

#include "anyon/core.hpp"
#include "anyon/sector.hpp"

namespace anyon {

/// Recoupling block F^{abc}_d: rows are e in a x b, columns f in b x c.
struct FBlock {
  std::vector<Charge> rows;
  std::vector<Charge> cols;
  Eigen::MatrixXd values;
};

/// Identifies the gauge, exchange-phase and ordering conventions; embedded in
/// every report so results from different conventions are never compared.
inline constexpr const char* kConventionId = "su2k/F-racah-sqrtdim/R-signed-exp/first-letter-first/v1";

struct ConsistencyReport {
  int k = 0;
  int max_label = 0;  ///< largest external label checked, twice units
  double pentagon = 0.0;
  double hexagon = 0.0;
  double unitarity = 0.0;
  std::size_t pentagon_equations = 0;
  std::size_t hexagon_equations = 0;

  bool passed(double identity_tol = 1e-10, double unitary_tol = 1e-12) const {
    return pentagon < identity_tol && hexagon < identity_tol && unitarity < unitary_tol;
  }
};

/// Algebraic data of su(2)_k: q-integers, q-6j recoupling (F), exchange
/// phases (R) and braid generators in the fusion-path basis.
///
/// Gauge: F comes from the Racah sum with square-root q-dimension
/// normalisation, which makes every block real orthogonal. The R convention is
///   R^{ab}_c = (-1)^{a+b-c} q^{(c(c+1) - a(a+1) - b(b+1))/2}.
/// Immutable after construction.
class Model {
 public:
  explicit Model(Level level) : level_(level) {
    const int k = level_.k();
    qfact_.assign(static_cast<std::size_t>(k + 2), 1.0);
    for (int n = 1; n <= k + 1; ++n) qfact_[n] = qfact_[n - 1] * qint(n);
  }
  explicit Model(int k) : Model(Level(k)) {}

  const Level& level() const { return level_; }
  int k() const { return level_.k(); }

  /// q-integer (q^{m/2} - q^{-m/2}) / (q^{1/2} - q^{-1/2}) = sin(m pi/(k+2)) / sin(pi/(k+2)).
  double qint(int m) const {
    const int r = k() + 2;
    if (m % r == 0) return 0.0;
    return std::sin(m * std::numbers::pi / r) / std::sin(std::numbers::pi / r);
  }

  /// Quantum dimension of a charge: [2s+1].
  double quantum_dimension(Charge c) const { return qint(c.twice + 1); }

  std::vector<Charge> fuse(Charge a, Charge b) const { return anyon::fuse(a, b, level_); }

  /// Element (F^{abc}_d)_{ef}; zero when any vertex is inadmissible.
  double f_symbol(Charge a, Charge b, Charge c, Charge d, Charge e, Charge f) const {
    const int k = this->k();
    if (!admissible(a.twice, b.twice, e.twice, k) || !admissible(e.twice, c.twice, d.twice, k) ||
        !admissible(b.twice, c.twice, f.twice, k) || !admissible(a.twice, f.twice, d.twice, k)) {
      return 0.0;
    }
    const double sign = ((a.twice + b.twice + c.twice + d.twice) / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * std::sqrt(qint(e.twice + 1) * qint(f.twice + 1)) *
           six_j(a.twice, b.twice, e.twice, c.twice, d.twice, f.twice);
  }

  FBlock f_matrix(Charge a, Charge b, Charge c, Charge d) const {
    for (auto x : {a, b, c, d}) require_valid(x, level_);
    FBlock block;
    for (auto e : fuse(a, b)) {
      if (admissible(e, c, d, level_)) block.rows.push_back(e);
    }
    for (auto f : fuse(b, c)) {
      if (admissible(a, f, d, level_)) block.cols.push_back(f);
    }
    if (block.rows.empty() || block.cols.empty()) {
      throw DomainError("f_matrix: no admissible intermediates for (" + to_string(a) + "," +
                        to_string(b) + "," + to_string(c) + ";" + to_string(d) + ")");
    }
    const auto n = static_cast<Eigen::Index>(block.rows.size());
    const auto m = static_cast<Eigen::Index>(block.cols.size());
    block.values.resize(n, m);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < m; ++j)
        block.values(i, j) = f_symbol(a, b, c, d, block.rows[i], block.cols[j]);
    return block;
  }

  /// Exchange eigenvalue of (a, b) in channel c. `sign` < 0 gives the inverse.
  cplx r_phase(Charge a, Charge b, Charge c, int sign = +1) const {
    if (!admissible(a, b, c, level_) || !c.valid_at(level_)) {
      throw DomainError("r_phase: " + to_string(c) + " not in " + to_string(a) + " x " +
                        to_string(b));
    }
    const int parity = ((a.twice + b.twice - c.twice) / 2) % 2 == 0 ? 1 : -1;
    // c(c+1) in twice units is c2 (c2 + 2) / 4; q^{x/2} = exp(i pi x / (k+2)).
    const double x = (casimir4(c) - casimir4(a) - casimir4(b)) / 4.0;
    const cplx v = static_cast<double>(parity) * std::polar(1.0, std::numbers::pi * x / (k() + 2));
    return sign >= 0 ? v : std::conj(v);
  }

  /// Full monodromy of a around b in channel c; gauge invariant.
  cplx monodromy(Charge a, Charge b, Charge c) const {
    return r_phase(b, a, c) * r_phase(a, b, c);
  }

  /// q^{c(c+1) - a(a+1) - b(b+1)} evaluated directly.
  cplx monodromy_closed_form(Charge a, Charge b, Charge c) const {
    const double x = (casimir4(c) - casimir4(a) - casimir4(b)) / 4.0;
    return std::polar(1.0, 2.0 * std::numbers::pi * x / (k() + 2));
  }

  /// Matrix of sigma_i^{sign} (1-based i: objects i and i+1 exchange) on the
  /// canonical basis of `objects`. Output basis lives on the swapped list.
  SectorUnitary braid_generator(const ObjectList& objects, int i, int sign = +1,
                                const Charge* total = nullptr) const {
    require_valid(objects, level_);
    if (i < 1 || i >= static_cast<int>(objects.size())) {
      throw DomainError("braid_generator: index " + std::to_string(i) + " out of range for " +
                        std::to_string(objects.size()) + " objects");
    }
    ObjectList out = objects;
    std::swap(out[i - 1], out[i]);
    auto in_basis = enumerate_paths(objects, level_, total);
    auto out_basis = enumerate_paths(out, level_, total);
    std::map<FusionPath, Eigen::Index> index;
    for (std::size_t n = 0; n < out_basis.size(); ++n) index[out_basis[n]] = static_cast<Eigen::Index>(n);

    const Charge x = objects[i - 1];
    const Charge y = objects[i];
    const auto channels = fuse(x, y);
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(out_basis.size()),
                            static_cast<Eigen::Index>(in_basis.size()));
    for (std::size_t col = 0; col < in_basis.size(); ++col) {
      const auto& p = in_basis[col];
      const Charge a = i >= 2 ? p[i - 2] : Charge::vacuum();
      const Charge e = p[i - 1];
      const Charge d = p[i];
      for (auto e2 : fuse(a, y)) {
        if (!admissible(e2, x, d, level_)) continue;
        cplx v = 0.0;
        for (auto f : channels) {
          const double left = f_symbol(a, y, x, d, e2, f);
          const double right = f_symbol(a, x, y, d, e, f);
          if (left == 0.0 || right == 0.0) continue;
          v += left * r_phase(x, y, f, sign) * right;
        }
        auto q = p;
        q.intermediates[i - 1] = e2;
        m(index.at(q), static_cast<Eigen::Index>(col)) += v;
      }
    }
    return {objects, std::move(out), std::move(in_basis), std::move(out_basis), std::move(m)};
  }

  SectorUnitary braid_generator(const ObjectList& objects, int i, int sign, Charge total) const {
    return braid_generator(objects, i, sign, &total);
  }

  /// Pentagon, hexagon and unitarity residuals over every admissible index
  /// set. A non-negative `max_label` (twice units) bounds the external labels;
  /// internal channels stay unrestricted.
  ConsistencyReport check_consistency(int max_label = -1) const;

 private:
  static int casimir4(Charge c) { return c.twice * (c.twice + 2); }

  double qfactorial(int n) const {
    if (n < 0) return 0.0;
    if (n >= static_cast<int>(qfact_.size())) return 0.0;
    return qfact_[static_cast<std::size_t>(n)];
  }

  double triangle(int a, int b, int c) const {
    return std::sqrt(qfactorial((a + b - c) / 2) * qfactorial((a - b + c) / 2) *
                     qfactorial((-a + b + c) / 2) / qfactorial((a + b + c) / 2 + 1));
  }

  /// q-deformed Racah sum for {j1 j2 j3; j4 j5 j6}, arguments in twice units.
  double six_j(int j1, int j2, int j3, int j4, int j5, int j6) const {
    const int t[4] = {(j1 + j2 + j3) / 2, (j1 + j5 + j6) / 2, (j4 + j2 + j6) / 2,
                      (j4 + j5 + j3) / 2};
    const int s[3] = {(j1 + j2 + j4 + j5) / 2, (j2 + j3 + j5 + j6) / 2, (j3 + j1 + j6 + j4) / 2};
    const int zmin = std::max({t[0], t[1], t[2], t[3]});
    const int zmax = std::min({s[0], s[1], s[2]});
    double sum = 0.0;
    for (int z = zmin; z <= zmax; ++z) {
      // [z+1]! contains [k+2] = 0 beyond this point.
      if (z + 1 >= k() + 2) break;
      double den = 1.0;
      for (int x : t) den *= qfactorial(z - x);
      for (int x : s) den *= qfactorial(x - z);
      sum += (z % 2 == 0 ? 1.0 : -1.0) * qfactorial(z + 1) / den;
    }
    return triangle(j1, j2, j3) * triangle(j1, j5, j6) * triangle(j4, j2, j6) *
           triangle(j4, j5, j3) * sum;
  }

  Level level_;
  std::vector<double> qfact_;
};

inline double qint(int m, const Level& level) { return Model(level).qint(m); }

inline ConsistencyReport Model::check_consistency(int max_label) const {
  ConsistencyReport rep;
  rep.k = k();
  const int k = this->k();
  const int top = (max_label < 0 || max_label > k) ? k : max_label;
  rep.max_label = top;

  // F blocks indexed by (a, b, c, d), built on first use; within a block rows
  // run over e = |a-b|, |a-b|+2, ... and columns over f = |b-c|, |b-c|+2, ...
  const int n = k + 1;
  std::unordered_map<std::size_t, Eigen::MatrixXd> table;
  auto slot = [n](int a, int b, int c, int d) {
    return ((static_cast<std::size_t>(a) * n + b) * n + c) * n + d;
  };
  auto block = [&](int a, int b, int c, int d) -> const Eigen::MatrixXd& {
    auto [it, fresh] = table.try_emplace(slot(a, b, c, d));
    if (!fresh) return it->second;
    const int e_lo = std::abs(a - b), f_lo = std::abs(b - c);
    const int ne = (std::min(a + b, 2 * k - a - b) - e_lo) / 2 + 1;
    const int nf = (std::min(b + c, 2 * k - b - c) - f_lo) / 2 + 1;
    if ((a + b + c + d) % 2 != 0 || ne <= 0 || nf <= 0) return it->second;
    Eigen::MatrixXd blk(ne, nf);
    for (int i = 0; i < ne; ++i)
      for (int j = 0; j < nf; ++j)
        blk(i, j) = f_symbol(Charge(a), Charge(b), Charge(c), Charge(d), Charge(e_lo + 2 * i), Charge(f_lo + 2 * j));
    it->second = std::move(blk);
    return it->second;
  };
  auto F = [&](int a, int b, int c, int d, int e, int f) -> double {
    const auto& blk = block(a, b, c, d);
    const int i = (e - std::abs(a - b)) / 2, j = (f - std::abs(b - c)) / 2;
    if (i < 0 || j < 0 || i >= blk.rows() || j >= blk.cols()) return 0.0;
    return blk(i, j);
  };
  auto channels = [k](int a, int b) {
    std::vector<int> out;
    for (int c = std::abs(a - b); c <= std::min(a + b, 2 * k - a - b); c += 2) out.push_back(c);
    return out;
  };

  // Unitarity of every F block.
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b)
      for (int c = 0; c <= top; ++c)
        for (int d = 0; d <= top; ++d) {
          std::vector<int> rows, cols;
          for (int e : channels(a, b))
            if (admissible(e, c, d, k)) rows.push_back(e);
          for (int f : channels(b, c))
            if (admissible(a, f, d, k)) cols.push_back(f);
          if (rows.empty() && cols.empty()) continue;
          if (rows.size() != cols.size()) {
            rep.unitarity = std::max(rep.unitarity, 1.0);
            continue;
          }
          Eigen::MatrixXd m(rows.size(), cols.size());
          for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = F(a, b, c, d, rows[i], cols[j]);
          const auto dim = static_cast<Eigen::Index>(rows.size());
          rep.unitarity = std::max(
              rep.unitarity, (m.transpose() * m - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff());
        }

  // Pentagon:
  // F^{fcd}_e[g][l] F^{abl}_e[f][k] = sum_h F^{abc}_g[f][h] F^{ahd}_e[g][k] F^{bcd}_k[h][l]
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b)
      for (int c = 0; c <= top; ++c)
        for (int d = 0; d <= top; ++d)
          for (int f : channels(a, b))
            for (int g : channels(f, c))
              for (int e : channels(g, d))
                for (int l : channels(c, d))
                  for (int kk : channels(b, l)) {
                    if (!admissible(a, kk, e, k)) continue;
                    const double lhs = F(f, c, d, e, g, l) * F(a, b, l, e, f, kk);
                    double rhs = 0.0;
                    for (int h : channels(b, c)) {
                      rhs += F(a, b, c, g, f, h) * F(a, h, d, e, g, kk) * F(b, c, d, kk, h, l);
                    }
                    rep.pentagon = std::max(rep.pentagon, std::abs(lhs - rhs));
                    ++rep.pentagon_equations;
                  }

  // Hexagon, in braid form: c passing a then b equals c passing the fused
  // pair (ab)_f, for both exchange orientations. Also checks generator
  // unitarity on every three-object list.
  for (int c = 0; c <= top; ++c)
    for (int a = 0; a <= top; ++a)
      for (int b = 0; b <= top; ++b) {
        const ObjectList objs{Charge(c), Charge(a), Charge(b)};
        for (int sign : {+1, -1}) {
          const auto g1 = braid_generator(objs, 1, sign);
          const auto g2 = braid_generator(g1.out_objects, 2, sign);
          rep.unitarity = std::max({rep.unitarity, unitarity_defect(g1.matrix),
                                    unitarity_defect(g2.matrix)});
          const Matrix strands = g2.matrix * g1.matrix;
          Matrix composite = Matrix::Zero(strands.rows(), strands.cols());
          std::map<FusionPath, Eigen::Index> out_index;
          for (std::size_t i = 0; i < g2.out_basis.size(); ++i)
            out_index[g2.out_basis[i]] = static_cast<Eigen::Index>(i);
          for (std::size_t col = 0; col < g1.in_basis.size(); ++col) {
            const auto& p = g1.in_basis[col];
            const int e = p[1].twice;
            const int d = p[2].twice;
            for (int f : channels(a, b)) {
              const double w = F(c, a, b, d, e, f);
              if (w == 0.0) continue;
              const FusionPath target{{Charge(a), Charge(f), Charge(d)}};
              composite(out_index.at(target), static_cast<Eigen::Index>(col)) +=
                  w * r_phase(Charge(c), Charge(f), Charge(d), sign);
            }
          }
          rep.hexagon = std::max(rep.hexagon, (strands - composite).cwiseAbs().maxCoeff());
          ++rep.hexagon_equations;
        }
      }
  return rep;
}

}  // namespace anyon
