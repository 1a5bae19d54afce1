#include "eqvb/rees.hpp"

#include "eqvb/error.hpp"

namespace eqvb {

GradedFreeModule::GradedFreeModule(std::size_t ambient_dim, std::vector<Generator> generators)
    : ambient_dim_(ambient_dim), generators_(std::move(generators)) {
  std::vector<Vec> vecs;
  vecs.reserve(generators_.size());
  for (const auto& g : generators_) {
    if (g.vector.size() != ambient_dim_) {
      throw Error(ErrorKind::AmbientMismatch, "generator length does not match ambient dimension");
    }
    vecs.push_back(g.vector);
  }
  if (generators_.size() != ambient_dim_ || Subspace::span(ambient_dim_, vecs).dim() != ambient_dim_) {
    throw Error(ErrorKind::RankDeficient, "generators are not a basis of the ambient space");
  }
}

Subspace GradedFreeModule::graded_piece(int degree) const {
  // x^degree v is a section iff v only involves generators g with
  // deg(g) <= degree.
  std::vector<Vec> vecs;
  for (const auto& g : generators_)
    if (g.degree <= degree) vecs.push_back(g.vector);
  return Subspace::span(ambient_dim_, vecs);
}

GradedFreeModule rees_construct(const FilteredSpace& filtration) {
  std::vector<GradedFreeModule::Generator> gens;
  for (auto& lv : adapted_basis(filtration)) gens.push_back({std::move(lv.vector), -lv.level});
  return GradedFreeModule(filtration.dim(), std::move(gens));
}

FilteredSpace derees(const GradedFreeModule& module) {
  std::vector<LeveledVector> vecs;
  vecs.reserve(module.generators().size());
  for (const auto& g : module.generators()) vecs.push_back({g.vector, -g.degree});
  return FilteredSpace::from_leveled(module.ambient_dim(), vecs);
}

GradedVectorSpace fiber_at_zero(const GradedFreeModule& module) {
  GradedVectorSpace g;
  for (const auto& gen : module.generators()) ++g.pieces[-gen.degree];
  return g;
}

}  // namespace eqvb
