#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "eqvb/cocharacter.hpp"
#include "eqvb/filtered.hpp"
#include "eqvb/gl2.hpp"

namespace eqvb {

/// Object of Filt(I, H): a representation, its H-action constraints and one
/// filtration per index in I.
struct FiltObject {
  RepData rep;
  GroupActionData h_action;
  std::vector<FilteredSpace> filtrations;

  std::size_t dim() const { return rep.dim; }
  /// Throws DimensionMismatch when the pieces disagree on dimension.
  void validate() const;
};

/// Which constraint families enter the Hom system. Dropping constraints
/// can only enlarge the solution space.
struct HomConstraints {
  bool intertwining = true;
  std::size_t filtrations = std::numeric_limits<std::size_t>::max();
};

/// Dimension of the space of linear f : V_a -> V_b that intertwine every
/// paired H constraint and map F^i_{a,j} into F^i_{b,j} for all i and j.
/// Zero-dimensional objects: 1 when both are zero, else 0.
///
/// Throws ShapeMismatch when the constraint or filtration counts differ.
std::size_t hom_dim(const FiltObject& a, const FiltObject& b, const HomConstraints& which = {});

/// A basis of the same space, as dim_b x dim_a matrices.
std::vector<Mat> hom_basis(const FiltObject& a, const FiltObject& b, const HomConstraints& which = {});

/// The object attached to a G-representation by a variety: the stabilizer
/// action and the filtrations of its boundary cocharacters.
FiltObject filt_object(const RepData& rep, const VarietySpec& spec, HStyle style);

/// Multiplicity of rep in k[X]: Hom from rep to the trivial object.
std::size_t multiplicity(const RepData& rep, const VarietySpec& spec, HStyle style = HStyle::LiePlusElements);

struct TableRow {
  RepLabel label;
  std::size_t value = 0;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// One multiplicity per label, evaluated in parallel, returned in label order.
std::vector<TableRow> multiplicity_table(const VarietySpec& spec, const std::vector<RepLabel>& labels,
                                         HStyle style = HStyle::LiePlusElements);

}  // namespace eqvb
