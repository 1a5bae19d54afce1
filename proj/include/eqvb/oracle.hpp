#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqvb/cocharacter.hpp"
#include "eqvb/gl2.hpp"
#include "eqvb/hom.hpp"

namespace eqvb {

/// Character of a representation: weight -> multiplicity (stored keys > 0).
using WeightMultiset = std::map<Weight, std::uint64_t>;

WeightMultiset to_multiset(const std::vector<Weight>& weights);

/// Character of a tensor product.
WeightMultiset tensor_weights(const WeightMultiset& a, const WeightMultiset& b);

/// Characters of Sym^0 .. Sym^max_degree of the module with the given
/// weights, by expanding prod_w 1 / (1 - s z^w) up to s^max_degree.
std::vector<WeightMultiset> sym_power_series(const WeightMultiset& w, int max_degree);
WeightMultiset sym_power_weights(const WeightMultiset& w, int degree);

/// Irreducible constituents of a GL2 (2-component weights) or GL2 x GL2
/// (4-component weights) character, by repeatedly peeling off the
/// lexicographically largest weight as a highest weight.
///
/// Throws NotDominant or NegativeMultiplicity when w is not a character.
std::map<RepLabel, std::uint64_t> decompose(WeightMultiset w);

/// Where dualization happens when passing from the module U = X to k[X].
enum class Convention {
  /// k[X]_d = Sym^d(U^*), the polynomial functions on U.
  DualModule,
  /// k[X]_d = Sym^d(U).
  DirectModule,
};

std::string to_string(Convention convention);
Convention parse_convention(const std::string& name);

/// Weights of the degree-one generators of k[X].
std::vector<Weight> coordinate_ring_generators(const VarietySpec& spec, Convention convention);

/// The unique degree in which `label` can occur in k[X], read off from
/// weight sums when every generator has the same nonzero sum. Returns -1
/// when the label cannot occur at all, nullopt when no bound is implied.
std::optional<int> required_degree(const VarietySpec& spec, const RepLabel& label, Convention convention);

/// Sum over d <= max_degree of the multiplicity of `label` in k[X]_d.
std::uint64_t oracle_multiplicity(const VarietySpec& spec, const RepLabel& label, int max_degree,
                                  Convention convention = Convention::DualModule);

/// Oracle multiplicities for many labels, sharing the symmetric-power
/// decompositions. Without max_degree each label uses its required degree.
std::vector<TableRow> oracle_table(const VarietySpec& spec, const std::vector<RepLabel>& labels,
                                   std::optional<int> max_degree = std::nullopt,
                                   Convention convention = Convention::DualModule);

}  // namespace eqvb
