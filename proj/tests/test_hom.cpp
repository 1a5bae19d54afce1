#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqvb/error.hpp"
#include "eqvb/grid.hpp"
#include "eqvb/hom.hpp"
#include "eqvb/random_objects.hpp"

using namespace eqvb;

namespace {

FiltObject trivial_object(std::size_t filtrations) {
  FiltObject obj;
  obj.rep = irrep_gl2(0, 0);
  obj.h_action.dim = 1;
  obj.filtrations.assign(filtrations, FilteredSpace::trivial(1));
  return obj;
}

// Direct check that f satisfies every defining condition.
bool is_witness(const Mat& f, const FiltObject& a, const FiltObject& b) {
  for (std::size_t k = 0; k < a.h_action.constraints.size(); ++k) {
    if (!(f * a.h_action.constraints[k] == b.h_action.constraints[k] * f)) return false;
  }
  for (std::size_t j = 0; j < a.filtrations.size(); ++j) {
    if (!is_filtration_morphism(f, a.filtrations[j], b.filtrations[j])) return false;
  }
  return true;
}

bool in_span(const Mat& f, const std::vector<Mat>& basis) {
  std::vector<Vec> flat;
  for (const auto& b : basis) flat.push_back(b.entries());
  return Subspace::span(f.entries().size(), flat).contains(f.entries());
}

}  // namespace

TEST_CASE("trivial objects") {
  CHECK(hom_dim(trivial_object(1), trivial_object(1)) == 1);
  CHECK(hom_dim(trivial_object(0), trivial_object(0)) == 1);
}

TEST_CASE("zero-dimensional objects") {
  FiltObject zero;
  zero.rep.group = GroupKind::GL2;
  zero.filtrations = {FilteredSpace::trivial(0)};
  CHECK(hom_dim(zero, zero) == 1);
  CHECK(hom_dim(zero, trivial_object(1)) == 0);
  CHECK(hom_dim(trivial_object(1), zero) == 0);
}

TEST_CASE("shape mismatches") {
  CHECK_THROWS_AS(hom_dim(trivial_object(1), trivial_object(2)), Error);
  auto a = trivial_object(0);
  a.h_action.constraints.push_back(Mat::zero(1, 1));
  try {
    (void)hom_dim(a, trivial_object(0));
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ShapeMismatch);
  }
  auto bad = trivial_object(0);
  bad.h_action.dim = 2;
  CHECK_THROWS_AS(hom_dim(bad, bad), Error);
}

TEST_CASE("multiplicity examples") {
  const auto bqf = builtin_variety(VarietyName::BinaryQuadraticForms);
  const auto mat = builtin_variety(VarietyName::TwoByTwoMatrices);
  CHECK(multiplicity(irrep_gl2(2, 2), bqf) == 1);
  CHECK(hom_dim(filt_object(irrep_gl2(2, 2), bqf, HStyle::LiePlusElements),
                filt_object(irrep_gl2(0, 0), bqf, HStyle::LiePlusElements)) == 1);
  CHECK(multiplicity(irrep_gl2(0, 0), bqf) == 1);
  CHECK(multiplicity(external_rep({0, 0}, {0, 0}), mat) == 1);
  CHECK_THROWS_AS(multiplicity(irrep_gl2(1, 0), mat), Error);
}

TEST_CASE("binary-form table on a small grid") {
  const auto spec = builtin_variety(VarietyName::BinaryQuadraticForms);
  const auto labels = LabelGrid::parse("n=0..4,m=-2..2").labels(GroupKind::GL2);
  const auto table = multiplicity_table(spec, labels);
  REQUIRE(table.size() == 25);
  for (const auto& row : table) {
    const auto& l = std::get<Gl2Label>(row.label);
    CHECK(row.value == (l.n % 2 == 0 && l.m % 2 == 0 && l.m >= 0 ? 1u : 0u));
  }
  CHECK(multiplicity_table(spec, {}).empty());
}

TEST_CASE("matrix-space diagonal slice") {
  const auto spec = builtin_variety(VarietyName::TwoByTwoMatrices);
  std::vector<RepLabel> labels;
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) labels.push_back(Gl2PairLabel{{n, m}, {n, m}});
  for (const auto& row : multiplicity_table(spec, labels)) CHECK(row.value == 1);
  CHECK(multiplicity(external_rep({1, 0}, {1, 1}), spec) == 0);
  CHECK(multiplicity(external_rep({2, -1}, {2, -1}), spec) == 0);
}

TEST_CASE("table order does not depend on input order") {
  const auto spec = builtin_variety(VarietyName::BinaryQuadraticForms);
  auto labels = LabelGrid::parse("n=0..3,m=-1..1").labels(GroupKind::GL2);
  const auto forward = multiplicity_table(spec, labels);
  std::reverse(labels.begin(), labels.end());
  CHECK(multiplicity_table(spec, labels) == forward);
}

TEST_CASE("constraints shrink the Hom space") {
  Rng rng(31);
  for (int k = 0; k < 60; ++k) {
    const auto shape = random_h_shape(rng);
    const auto a = random_filt_object(rng, shape, 5);
    const auto b = random_filt_object(rng, shape, 5);
    const std::size_t none = hom_dim(a, b, {false, 0});
    CHECK(none == a.dim() * b.dim());
    const std::size_t h_only = hom_dim(a, b, {true, 0});
    const std::size_t filt_only = hom_dim(a, b, {false, shape.filtration_count});
    const std::size_t full = hom_dim(a, b);
    CHECK(h_only <= none);
    CHECK(full <= h_only);
    CHECK(full <= filt_only);
    CHECK(hom_dim(a, a) >= 1);
    CHECK(is_witness(Mat::identity(a.dim()), a, a));
  }
}

TEST_CASE("Hom witnesses are valid and compose") {
  Rng rng(37);
  for (int k = 0; k < 40; ++k) {
    const auto shape = random_h_shape(rng);
    const auto a = random_filt_object(rng, shape, 4);
    const auto b = random_filt_object(rng, shape, 4);
    const auto c = random_filt_object(rng, shape, 4);
    const auto ab = hom_basis(a, b);
    const auto bc = hom_basis(b, c);
    const auto ac = hom_basis(a, c);
    CHECK(ab.size() == hom_dim(a, b));
    for (const auto& f : ab) CHECK(is_witness(f, a, b));
    for (const auto& f : ab)
      for (const auto& g : bc) CHECK(in_span(g * f, ac));
  }
}
