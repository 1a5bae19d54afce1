#include "eqvb/cocharacter.hpp"

#include <map>

#include "eqvb/error.hpp"

namespace eqvb {

int pairing(const Cocharacter& mu, const Weight& chi) {
  if (mu.components.size() != chi.size()) {
    throw Error(ErrorKind::LengthMismatch, "cocharacter has length " + std::to_string(mu.components.size()) +
                                               ", weight has length " + std::to_string(chi.size()));
  }
  int total = 0;
  for (std::size_t i = 0; i < chi.size(); ++i) total += mu.components[i] * chi[i];
  return total;
}

FilteredSpace cocharacter_filtration(const RepData& rep, const Cocharacter& mu) {
  rep.validate();
  std::vector<LeveledVector> vecs;
  vecs.reserve(rep.dim);
  for (std::size_t j = 0; j < rep.dim; ++j) vecs.push_back({unit_vector(rep.dim, j), -pairing(mu, rep.weights[j])});
  return FilteredSpace::from_leveled(rep.dim, vecs);
}

GroupActionData StabilizerRecipe::apply(const RepData& rep, HStyle style) const {
  GroupActionData data;
  data.dim = rep.dim;
  for (const auto& x : lie_elements) data.constraints.push_back(lie_matrix(rep, x));
  if (style == HStyle::LiePlusElements) {
    for (const auto& g : group_elements) data.constraints.push_back(group_matrix(rep, g));
  }
  return data;
}

std::string to_string(VarietyName name) {
  switch (name) {
    case VarietyName::BinaryQuadraticForms: return "BinaryQuadraticForms";
    case VarietyName::TwoByTwoMatrices: return "TwoByTwoMatrices";
    case VarietyName::Custom: return "Custom";
  }
  return "Custom";
}

void VarietySpec::validate() const {
  const std::size_t rank = torus_rank(group);
  std::size_t len = rank;
  if (group == GroupKind::Generic) {
    if (!boundary_cocharacters.empty()) len = boundary_cocharacters.front().components.size();
    else if (!x_module_weights.empty()) len = x_module_weights.front().size();
  }
  for (const auto& mu : boundary_cocharacters) {
    if (mu.components.size() != len) throw Error(ErrorKind::LengthMismatch, "cocharacter length does not match the torus rank");
  }
  for (const auto& w : x_module_weights) {
    if (w.size() != len) throw Error(ErrorKind::LengthMismatch, "module weight length does not match the torus rank");
  }
  const std::size_t lie_dim = group == GroupKind::GL2 ? 4 : (group == GroupKind::GL2xGL2 ? 8 : 0);
  if (lie_dim != 0) {
    for (const auto& x : stabilizer.lie_elements) {
      if (x.size() != lie_dim) throw Error(ErrorKind::ShapeMismatch, "stabilizer Lie element has the wrong number of coordinates");
    }
    const std::size_t factors = lie_dim / 4;
    for (const auto& g : stabilizer.group_elements) {
      if (g.size() != factors) throw Error(ErrorKind::ShapeMismatch, "stabilizer element has the wrong number of factors");
      for (const auto& m : g) {
        if (m.rows() != 2 || m.cols() != 2 || determinant(m).is_zero()) {
          throw Error(ErrorKind::ShapeMismatch, "stabilizer element factor must be an invertible 2x2 matrix");
        }
      }
    }
  }
}

namespace {

VarietySpec binary_quadratic_forms() {
  VarietySpec spec;
  spec.name = VarietyName::BinaryQuadraticForms;
  spec.group = GroupKind::GL2;
  spec.boundary_cocharacters = {Cocharacter{{1, 0}}};
  // H = { [[t, 1/t - t], [0, 1/t]] } has Lie algebra spanned by
  // [[1, -2], [0, -1]]; the reflection swaps the two linear factors of the
  // base form and meets the det = -1 component.
  spec.stabilizer.lie_elements = {gl2_lie_coordinates(Mat{{1, -2}, {0, -1}})};
  spec.stabilizer.group_elements = {{Mat{{-1, 0}, {0, -1}}}, {Mat{{1, 0}, {1, -1}}}};
  spec.x_module_weights = weights_of(dual(Gl2Label{2, 0}));
  spec.action = "quadratic forms Sym^2(V^*), (g.q)(v) = q(g^-1 v)";
  spec.base_point = "xy - y^2";
  return spec;
}

VarietySpec two_by_two_matrices() {
  VarietySpec spec;
  spec.name = VarietyName::TwoByTwoMatrices;
  spec.group = GroupKind::GL2xGL2;
  spec.boundary_cocharacters = {Cocharacter{{1, 1, 0, -1}}};
  // Stabilizer of the identity matrix is { (g, g^-T) }, Lie algebra
  // { (x, -x^T) }.
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Mat x(2, 2);
      x(i, j) = Rat(1);
      spec.stabilizer.lie_elements.push_back(gl2_pair_lie_coordinates(x, x.transpose() * Rat(-1)));
    }
  spec.stabilizer.group_elements = {{Mat{{-1, 0}, {0, -1}}, Mat{{-1, 0}, {0, -1}}}};
  spec.x_module_weights = weights_of(RepLabel{Gl2PairLabel{dual(Gl2Label{1, 0}), dual(Gl2Label{1, 0})}});
  spec.action = "2x2 matrices V^* (x) V^*, (g1,g2).A = g1^-T A g2^-1";
  spec.base_point = "identity matrix";
  return spec;
}

}  // namespace

VarietySpec builtin_variety(VarietyName name) {
  switch (name) {
    case VarietyName::BinaryQuadraticForms: return binary_quadratic_forms();
    case VarietyName::TwoByTwoMatrices: return two_by_two_matrices();
    case VarietyName::Custom: break;
  }
  throw Error(ErrorKind::UnknownName, "Custom varieties are not built in");
}

VarietySpec builtin_variety(std::string_view name) {
  static const std::map<std::string_view, VarietyName> names = {
      {"BinaryQuadraticForms", VarietyName::BinaryQuadraticForms},
      {"binary-forms", VarietyName::BinaryQuadraticForms},
      {"TwoByTwoMatrices", VarietyName::TwoByTwoMatrices},
      {"matrices", VarietyName::TwoByTwoMatrices},
  };
  auto it = names.find(name);
  if (it == names.end()) throw Error(ErrorKind::UnknownName, "unknown variety '" + std::string(name) + "'");
  return builtin_variety(it->second);
}

}  // namespace eqvb
