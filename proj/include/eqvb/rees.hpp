#pragma once

#include <cstddef>
#include <vector>

#include "eqvb/filtered.hpp"

namespace eqvb {

/// A G_m-equivariant vector bundle on the affine line, given by its graded
/// module of global sections inside V[x, x^-1]: the free Q[x]-module with
/// basis x^degree * vector over the generators.
class GradedFreeModule {
 public:
  struct Generator {
    Vec vector;
    int degree = 0;
    friend bool operator==(const Generator&, const Generator&) = default;
  };

  GradedFreeModule() = default;

  /// Throws RankDeficient unless the generator vectors form a basis of
  /// Q^ambient_dim.
  GradedFreeModule(std::size_t ambient_dim, std::vector<Generator> generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Generator>& generators() const { return generators_; }

  /// Sections of V homogeneous of degree d: x^d * F^{-d}(V) in the Rees picture.
  Subspace graded_piece(int degree) const;

  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Generator> generators_;
};

/// Sum over n of x^{-n} F^n(V), presented by an adapted basis: each vector of
/// level p becomes a generator of degree -p.
GradedFreeModule rees_construct(const FilteredSpace& filtration);

/// F^p(V) = { v : x^{-p} v is a section }, i.e. the span of the generators
/// of degree <= -p.
FilteredSpace derees(const GradedFreeModule& module);

/// Graded dimensions of the fiber over 0 with the grading reversed: degree n
/// counts the generators of degree -n.
GradedVectorSpace fiber_at_zero(const GradedFreeModule& module);

}  // namespace eqvb
