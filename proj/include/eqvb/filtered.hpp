#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "eqvb/matrix.hpp"
#include "eqvb/subspace.hpp"

namespace eqvb {

/// Finite Z-graded vector space, recorded by the dimension of each nonzero
/// degree.
struct GradedVectorSpace {
  std::map<int, std::size_t> pieces;

  std::size_t total_dim() const;
  friend bool operator==(const GradedVectorSpace&, const GradedVectorSpace&) = default;
};

struct LeveledVector {
  Vec vector;
  int level = 0;
};

/// Finite decreasing filtration F^i of Q^dim.
///
/// Storage is sparse: `levels()` maps each index p with F^p != F^{p+1} to
/// F^p. Below the smallest stored index the space is full; above the
/// largest it is zero.
class FilteredSpace {
 public:
  FilteredSpace() = default;

  /// Validates and normalizes a step map. An index i missing from `steps`
  /// takes the subspace of the smallest listed index k >= i; indices above
  /// the largest listed one are zero.
  ///
  /// Throws AmbientMismatch, NotDecreasing or NotExhaustive.
  static FilteredSpace make(std::size_t dim, const std::map<int, Subspace>& steps);

  /// F^i spanned by the vectors of level >= i. The vectors need not be
  /// independent.
  static FilteredSpace from_leveled(std::size_t dim, const std::vector<LeveledVector>& vectors);

  /// F^0 = V, F^1 = 0.
  static FilteredSpace trivial(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::map<int, Subspace>& levels() const { return levels_; }

  /// F^i for any integer i.
  Subspace at(int i) const;

  /// Indices J with F^J != F^{J-1}, ascending.
  std::vector<int> jumps() const;

  friend bool operator==(const FilteredSpace&, const FilteredSpace&) = default;

 private:
  std::size_t dim_ = 0;
  std::map<int, Subspace> levels_;
};

/// True iff f(F^i_src) lies in F^i_dst for every i. Throws DimensionMismatch.
bool is_filtration_morphism(const Mat& f, const FilteredSpace& src, const FilteredSpace& dst);

GradedVectorSpace associated_graded(const FilteredSpace& filtration);

/// Basis of V adapted to the filtration: vectors of level >= i form a basis
/// of F^i. Built from the top level down, extending by the earliest-pivot
/// echelon rows of each F^p.
std::vector<LeveledVector> adapted_basis(const FilteredSpace& filtration);

}  // namespace eqvb
