#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqvb/cocharacter.hpp"
#include "eqvb/error.hpp"
#include "eqvb/hom.hpp"

using namespace eqvb;

namespace {

// Every subspace of the flag, in decreasing order, with indices dropped.
std::vector<Subspace> flag_of(const FilteredSpace& f) {
  std::vector<Subspace> out;
  for (auto it = f.levels().rbegin(); it != f.levels().rend(); ++it) out.push_back(it->second);
  return out;
}

}  // namespace

TEST_CASE("pairing") {
  CHECK(pairing(Cocharacter{{1, 0}}, Weight{{7, 3}}) == 7);
  CHECK(pairing(Cocharacter{{0, 0}}, Weight{{7, 3}}) == 0);
  CHECK(pairing(Cocharacter{{1, 1, 0, -1}}, Weight{{2, 3, 5, 7}}) == 2 + 3 - 7);
  CHECK_THROWS_AS(pairing(Cocharacter{{1, 0}}, Weight{{1, 2, 3, 4}}), Error);
  try {
    (void)pairing(Cocharacter{{1}}, Weight{{1, 2}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LengthMismatch);
  }
}

TEST_CASE("binary-form filtrations have one-dimensional graded pieces") {
  const Cocharacter mu{{1, 0}};
  for (int n = 0; n <= 8; ++n)
    for (int m = -6; m <= 6; ++m) {
      const auto rep = irrep_gl2(n, m);
      CHECK(pairing(mu, rep.weights[0]) == n + m);
      const auto f = cocharacter_filtration(rep, mu);
      // Levels -(n+m), ..., -m, one basis vector each.
      const auto gr = associated_graded(f);
      REQUIRE(gr.pieces.size() == static_cast<std::size_t>(n + 1));
      CHECK(gr.pieces.begin()->first == -(n + m));
      CHECK(gr.pieces.rbegin()->first == -m);
      for (const auto& [p, d] : gr.pieces) CHECK(d == 1);
    }
}

TEST_CASE("trivial representation gives a single jump") {
  for (const auto& mu : {Cocharacter{{1, 0}}, Cocharacter{{-3, 5}}}) {
    const auto f = cocharacter_filtration(irrep_gl2(0, 0), mu);
    CHECK(f.jumps().size() == 1);
    CHECK(associated_graded(f).pieces == std::map<int, std::size_t>{{0, 1}});
  }
}

TEST_CASE("matrix-space filtrations have graded pieces of dimension n + 1") {
  const Cocharacter mu{{1, 1, 0, -1}};
  for (int n = 0; n <= 4; ++n)
    for (int n2 = 0; n2 <= 4; ++n2) {
      const auto f = cocharacter_filtration(external_rep({n, 1}, {n2, -2}), mu);
      const auto gr = associated_graded(f);
      CHECK(gr.total_dim() == static_cast<std::size_t>((n + 1) * (n2 + 1)));
      for (const auto& [p, d] : gr.pieces) CHECK(d == static_cast<std::size_t>(n + 1));
    }
}

TEST_CASE("filtration steps are sums of weight spaces") {
  const auto rep = external_rep({2, 0}, {1, 1});
  const auto f = cocharacter_filtration(rep, Cocharacter{{1, -1, 2, 0}});
  for (const auto& [p, s] : f.levels())
    for (const auto& v : s.basis())
      for (std::size_t j = 0; j < rep.dim; ++j)
        if (!v[j].is_zero()) CHECK(s.contains(unit_vector(rep.dim, j)));
}

TEST_CASE("doubling the cocharacter doubles the indices") {
  const auto rep = external_rep({3, 1}, {2, -1});
  const Cocharacter mu{{1, 1, 0, -1}};
  const Cocharacter twice{{2, 2, 0, -2}};
  const auto f = cocharacter_filtration(rep, mu);
  const auto g = cocharacter_filtration(rep, twice);
  CHECK(flag_of(f) == flag_of(g));
  for (const auto& [p, s] : f.levels()) CHECK(g.at(2 * p) == s);
}

TEST_CASE("built-in varieties") {
  const auto bqf = builtin_variety("BinaryQuadraticForms");
  CHECK(bqf.name == VarietyName::BinaryQuadraticForms);
  REQUIRE(bqf.boundary_cocharacters.size() == 1);
  CHECK(bqf.boundary_cocharacters[0] == Cocharacter{{1, 0}});
  CHECK(builtin_variety("binary-forms").group == GroupKind::GL2);

  const auto mat = builtin_variety("TwoByTwoMatrices");
  REQUIRE(mat.boundary_cocharacters.size() == 1);
  CHECK(mat.boundary_cocharacters[0] == Cocharacter{{1, 1, 0, -1}});
  CHECK(mat.group == GroupKind::GL2xGL2);
  CHECK(mat.x_module_weights.size() == 4);
  CHECK(bqf.x_module_weights.size() == 3);

  CHECK_THROWS_AS(builtin_variety("Grassmannian"), Error);
}

TEST_CASE("lie_only drops the group elements") {
  const auto bqf = builtin_variety(VarietyName::BinaryQuadraticForms);
  const auto rep = irrep_gl2(2, 0);
  const auto lie = bqf.stabilizer.apply(rep, HStyle::LieOnly);
  const auto all = bqf.stabilizer.apply(rep, HStyle::LiePlusElements);
  CHECK(lie.constraints.size() == bqf.stabilizer.lie_elements.size());
  CHECK(all.constraints.size() == lie.constraints.size() + bqf.stabilizer.group_elements.size());
}

TEST_CASE("custom variety with no boundary cocharacters") {
  VarietySpec spec;
  spec.name = VarietyName::Custom;
  spec.group = GroupKind::GL2;
  // H = GL2 itself, so k[X] is just the constants.
  for (std::size_t i = 0; i < 4; ++i) spec.stabilizer.lie_elements.push_back(unit_vector(4, i));
  spec.validate();
  CHECK(multiplicity(irrep_gl2(0, 0), spec) == 1);
  CHECK(multiplicity(irrep_gl2(0, 1), spec) == 0);
  CHECK(multiplicity(irrep_gl2(2, 0), spec) == 0);
  // Schur: with no filtrations, an irreducible has only scalar endomorphisms.
  const auto obj = filt_object(irrep_gl2(3, -1), spec, HStyle::LiePlusElements);
  CHECK(obj.filtrations.empty());
  CHECK(hom_dim(obj, obj) == 1);
}

TEST_CASE("custom variety validation") {
  VarietySpec spec;
  spec.group = GroupKind::GL2;
  spec.boundary_cocharacters = {Cocharacter{{1, 0, 0}}};
  CHECK_THROWS_AS(spec.validate(), Error);
}
