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

#include <functional>
#include <map>
#include <optional>
#include <tuple>

#include "anyon/braid.hpp"
#include "anyon/model.hpp"

namespace anyon {

/// Caches generator matrices by (object order, index, sign) for one total-charge
/// restriction. Not thread-safe; create one per thread.
class GeneratorCache {
 public:
  GeneratorCache(const Model& model, std::optional<Charge> total)
      : model_(model), total_(total) {}

  const SectorUnitary& get(const ObjectList& objects, Letter l) {
    std::vector<int> key;
    key.reserve(objects.size() + 2);
    for (auto c : objects) key.push_back(c.twice);
    key.push_back(l.index);
    key.push_back(l.sign);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_
               .emplace(std::move(key),
                        model_.braid_generator(objects, l.index, l.sign, total_ ? &*total_ : nullptr))
               .first;
    }
    return it->second;
  }

 private:
  const Model& model_;
  std::optional<Charge> total_;
  std::map<std::vector<int>, SectorUnitary> cache_;
};

/// Ordered product of generator matrices; the first letter acts first.
inline SectorUnitary represent(const BraidWord& word, const Model& model,
                               std::optional<Charge> total = std::nullopt) {
  GeneratorCache cache(model, total);
  auto basis = enumerate_paths(word.context(), model.level(), total ? &*total : nullptr);
  SectorUnitary u = SectorUnitary::identity(word.context(), basis);
  ObjectList objs = word.context();
  for (auto l : word.letters()) {
    const auto& g = cache.get(objs, l);
    u.matrix = g.matrix * u.matrix;
    objs = g.out_objects;
  }
  u.out_objects = objs;
  u.out_basis = enumerate_paths(objs, model.level(), total ? &*total : nullptr);
  return u;
}

/// Applies a word to a state over the canonical basis of word.context().
inline Vector apply(const BraidWord& word, const Vector& state, const Model& model,
                    std::optional<Charge> total = std::nullopt) {
  const auto basis = enumerate_paths(word.context(), model.level(), total ? &*total : nullptr);
  if (static_cast<std::size_t>(state.size()) != basis.size()) {
    throw DomainError("apply: state dimension " + std::to_string(state.size()) +
                      " does not match basis dimension " + std::to_string(basis.size()));
  }
  GeneratorCache cache(model, total);
  Vector v = state;
  ObjectList objs = word.context();
  for (auto l : word.letters()) {
    const auto& g = cache.get(objs, l);
    v = g.matrix * v;
    objs = g.out_objects;
  }
  return v;
}

/// A charge observable that is a function of the fusion path: the total
/// charge of a contiguous run of objects [first, last] (0-based). Only prefix
/// runs (first == 0) and single objects are diagonal in the standard basis.
struct ContiguousCharge {
  std::size_t first = 0;
  std::size_t last = 0;

  int label(const FusionPath& p, const ObjectList& objects) const {
    if (last >= p.size() || first > last) throw DomainError("grouping: run out of range");
    if (first == last) return objects[first].twice;
    if (first == 0) return p[last].twice;
    throw DomainError("grouping: charge of objects " + std::to_string(first) + ".." +
                      std::to_string(last) + " is not a function of the fusion path");
  }
};

struct SectorBlock {
  int label = 0;
  std::vector<FusionPath> basis;
  Matrix block;
};

struct SectorDecomposition {
  std::vector<SectorBlock> blocks;
  double off_block_norm = 0.0;      ///< Frobenius norm of inter-label mixing.
  double off_block_spectral = 0.0;  ///< Spectral norm of the same part.
};

inline SectorDecomposition sector_blocks(const SectorUnitary& u, const ContiguousCharge& grouping) {
  std::vector<int> in_labels, out_labels;
  for (const auto& p : u.in_basis) in_labels.push_back(grouping.label(p, u.in_objects));
  for (const auto& p : u.out_basis) out_labels.push_back(grouping.label(p, u.out_objects));

  std::map<int, std::pair<std::vector<Eigen::Index>, std::vector<Eigen::Index>>> groups;
  for (std::size_t i = 0; i < in_labels.size(); ++i)
    groups[in_labels[i]].second.push_back(static_cast<Eigen::Index>(i));
  for (std::size_t i = 0; i < out_labels.size(); ++i)
    groups[out_labels[i]].first.push_back(static_cast<Eigen::Index>(i));

  SectorDecomposition out;
  Matrix off = u.matrix;
  for (auto& [label, idx] : groups) {
    const auto& [rows, cols] = idx;
    SectorBlock b;
    b.label = label;
    b.block.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        b.block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = u.matrix(rows[r], cols[c]);
        off(rows[r], cols[c]) = 0.0;
      }
    }
    for (auto c : cols) b.basis.push_back(u.in_basis[static_cast<std::size_t>(c)]);
    out.blocks.push_back(std::move(b));
  }
  out.off_block_norm = off.norm();
  out.off_block_spectral =
      off.size() == 0 ? 0.0 : Eigen::JacobiSVD<Matrix>(off).singularValues()(0);
  return out;
}

}  // namespace anyon
