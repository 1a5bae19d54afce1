#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eqvb/filtered.hpp"
#include "eqvb/gl2.hpp"

namespace eqvb {

/// One-parameter subgroup of the maximal torus, as exponents on each torus
/// coordinate.
struct Cocharacter {
  std::vector<int> components;
  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;
};

/// Natural pairing of cocharacters with characters. Throws LengthMismatch.
int pairing(const Cocharacter& mu, const Weight& chi);

/// F^i = sum of the weight spaces V_chi with -<mu, chi> >= i, in the rep's
/// weight basis.
FilteredSpace cocharacter_filtration(const RepData& rep, const Cocharacter& mu);

/// Generators of the stabilizer H of a base point, applied to any
/// representation of the ambient group.
struct StabilizerRecipe {
  /// Coordinates in the group's Lie basis (see RepData).
  std::vector<Vec> lie_elements;
  /// Finite set of elements meeting the components of H.
  std::vector<GroupElement> group_elements;

  GroupActionData apply(const RepData& rep, HStyle style) const;
};

enum class VarietyName { BinaryQuadraticForms, TwoByTwoMatrices, Custom };

std::string to_string(VarietyName name);

/// An affine fixed-pointed spherical variety X, given as a G-module U = X
/// with the data needed on both sides of the multiplicity computation.
struct VarietySpec {
  VarietyName name = VarietyName::Custom;
  GroupKind group = GroupKind::GL2;
  /// The boundary one-parameter subgroups mu_i; may be empty.
  std::vector<Cocharacter> boundary_cocharacters;
  StabilizerRecipe stabilizer;
  /// Torus weights of U itself.
  std::vector<Weight> x_module_weights;
  std::string action;
  std::string base_point;

  /// Throws LengthMismatch when a cocharacter or weight has the wrong length.
  void validate() const;
};

/// Accepts "BinaryQuadraticForms" / "binary-forms" and
/// "TwoByTwoMatrices" / "matrices". Throws UnknownName.
VarietySpec builtin_variety(std::string_view name);
VarietySpec builtin_variety(VarietyName name);

}  // namespace eqvb
