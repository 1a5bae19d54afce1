#pragma once

#include <cstdint>
#include <random>

#include "eqvb/filtered.hpp"
#include "eqvb/gl2.hpp"
#include "eqvb/hom.hpp"

namespace eqvb {

using Rng = std::mt19937_64;

/// Invertible n x n matrix with small integer entries.
Mat random_invertible(Rng& rng, std::size_t n, int bound = 3);

/// Filtration of Q^dim (dim drawn from [min_dim, max_dim]) with every jump
/// index in [jump_lo, jump_hi], built from a random basis so that the
/// subspaces are not coordinate subspaces.
FilteredSpace random_filtered_space(Rng& rng, std::size_t min_dim, std::size_t max_dim, int jump_lo, int jump_hi);

/// Random stabilizer shape shared by a family of objects: Lie elements and
/// group elements of GL2, plus the number of filtrations.
struct RandomHShape {
  std::vector<Vec> lie_elements;
  std::vector<GroupElement> group_elements;
  std::size_t filtration_count = 0;
};

RandomHShape random_h_shape(Rng& rng);

/// Direct sum of random GL2 irreducibles of total dimension in [1, max_dim],
/// with the H-action of `shape` and random filtrations.
FiltObject random_filt_object(Rng& rng, const RandomHShape& shape, std::size_t max_dim);

}  // namespace eqvb
