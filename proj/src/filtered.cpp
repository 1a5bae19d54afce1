#include "eqvb/filtered.hpp"

#include <algorithm>
#include <set>

#include "eqvb/error.hpp"

namespace eqvb {

std::size_t GradedVectorSpace::total_dim() const {
  std::size_t total = 0;
  for (const auto& [deg, d] : pieces) total += d;
  return total;
}

FilteredSpace FilteredSpace::make(std::size_t dim, const std::map<int, Subspace>& steps) {
  for (const auto& [i, s] : steps) {
    if (s.ambient_dim() != dim) {
      throw Error(ErrorKind::AmbientMismatch, "step " + std::to_string(i) + " has ambient dimension " +
                                                  std::to_string(s.ambient_dim()) + ", expected " +
                                                  std::to_string(dim));
    }
  }
  const Subspace* prev = nullptr;
  int prev_index = 0;
  bool exhaustive = dim == 0;
  for (const auto& [i, s] : steps) {
    if (prev != nullptr && !prev->contains(s)) {
      throw Error(ErrorKind::NotDecreasing, "F^" + std::to_string(prev_index) + " does not contain F^" +
                                                std::to_string(i));
    }
    exhaustive = exhaustive || s.is_full();
    prev = &s;
    prev_index = i;
  }
  if (!exhaustive) throw Error(ErrorKind::NotExhaustive, "no index carries the full space");

  FilteredSpace f;
  f.dim_ = dim;
  // Keep p only where F^p differs from F^{p+1}; under the fill rule F^{p+1}
  // is the next listed step (or zero past the end).
  for (auto it = steps.begin(); it != steps.end(); ++it) {
    auto next = std::next(it);
    const bool last = next == steps.end();
    const bool differs = last ? !it->second.is_zero() : !(it->second == next->second);
    if (differs) f.levels_.emplace(it->first, it->second);
  }
  return f;
}

FilteredSpace FilteredSpace::from_leveled(std::size_t dim, const std::vector<LeveledVector>& vectors) {
  std::set<int> levels;
  for (const auto& lv : vectors) {
    if (lv.vector.size() != dim) throw Error(ErrorKind::AmbientMismatch, "vector length does not match dimension");
    levels.insert(lv.level);
  }
  std::map<int, Subspace> steps;
  for (int p : levels) {
    std::vector<Vec> span;
    for (const auto& lv : vectors)
      if (lv.level >= p) span.push_back(lv.vector);
    steps.emplace(p, Subspace::span(dim, span));
  }
  if (dim > 0 && (steps.empty() || !steps.begin()->second.is_full())) {
    throw Error(ErrorKind::NotExhaustive, "leveled vectors do not span the space");
  }
  return make(dim, steps);
}

FilteredSpace FilteredSpace::trivial(std::size_t dim) {
  if (dim == 0) return make(0, {});
  return make(dim, {{0, Subspace::full(dim)}});
}

Subspace FilteredSpace::at(int i) const {
  auto it = levels_.lower_bound(i);
  if (it == levels_.end()) return Subspace::zero(dim_);
  if (it == levels_.begin()) return Subspace::full(dim_);
  return it->second;
}

std::vector<int> FilteredSpace::jumps() const {
  std::vector<int> out;
  out.reserve(levels_.size());
  for (const auto& [p, s] : levels_) out.push_back(p + 1);
  return out;
}

bool is_filtration_morphism(const Mat& f, const FilteredSpace& src, const FilteredSpace& dst) {
  if (f.cols() != src.dim() || f.rows() != dst.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "map shape does not match filtered spaces");
  }
  std::set<int> indices;
  for (int j : src.jumps()) indices.insert(j);
  for (int j : dst.jumps()) indices.insert(j);
  for (int i : indices) {
    const Subspace target = dst.at(i);
    const Subspace source = src.at(i);
    for (const auto& v : source.basis())
      if (!target.contains(f * v)) return false;
  }
  return true;
}

GradedVectorSpace associated_graded(const FilteredSpace& filtration) {
  GradedVectorSpace g;
  for (const auto& [p, s] : filtration.levels()) {
    const std::size_t d = s.dim() - filtration.at(p + 1).dim();
    if (d > 0) g.pieces[p] = d;
  }
  return g;
}

std::vector<LeveledVector> adapted_basis(const FilteredSpace& filtration) {
  std::vector<LeveledVector> out;
  std::vector<Vec> current;
  const auto& levels = filtration.levels();
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    Subspace have = Subspace::span(filtration.dim(), current);
    for (const auto& row : it->second.basis()) {
      if (have.contains(row)) continue;
      current.push_back(row);
      out.push_back({row, it->first});
      have = Subspace::span(filtration.dim(), current);
    }
  }
  return out;
}

}  // namespace eqvb
