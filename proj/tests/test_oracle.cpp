#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "eqvb/error.hpp"
#include "eqvb/grid.hpp"
#include "eqvb/hom.hpp"
#include "eqvb/oracle.hpp"

using namespace eqvb;

namespace {

// Sym^d character by enumerating nondecreasing index tuples.
WeightMultiset brute_sym_power(const std::vector<Weight>& basis, int d) {
  WeightMultiset out;
  const std::size_t len = basis.empty() ? 0 : basis[0].size();
  std::function<void(std::size_t, int, Weight)> rec = [&](std::size_t start, int left, Weight acc) {
    if (left == 0) {
      ++out[acc];
      return;
    }
    for (std::size_t i = start; i < basis.size(); ++i) rec(i, left - 1, acc + basis[i]);
  };
  rec(0, d, Weight{std::vector<int>(len, 0)});
  return out;
}

// Decomposition by brute force: a GL2 weight (a, b) with a >= b has
// multiplicity of the label (a - b, b) equal to mult(a, b) - mult(a + 1, b - 1).
std::map<RepLabel, std::uint64_t> brute_decompose_gl2(const WeightMultiset& w) {
  std::map<RepLabel, std::uint64_t> out;
  auto count = [&](int a, int b) -> long {
    auto it = w.find(Weight{{a, b}});
    return it == w.end() ? 0 : static_cast<long>(it->second);
  };
  for (const auto& [wt, k] : w) {
    if (wt[0] < wt[1]) continue;
    const long mult = count(wt[0], wt[1]) - count(wt[0] + 1, wt[1] - 1);
    if (mult > 0) out[Gl2Label{wt[0] - wt[1], wt[1]}] = static_cast<std::uint64_t>(mult);
  }
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t total(const WeightMultiset& w) {
  std::uint64_t t = 0;
  for (const auto& [k, v] : w) t += v;
  return t;
}

}  // namespace

TEST_CASE("symmetric power characters") {
  const auto std_rep = to_multiset(weights_of(Gl2Label{1, 0}));
  CHECK(sym_power_weights(std_rep, 0) == WeightMultiset{{Weight{{0, 0}}, 1}});
  CHECK(sym_power_weights(std_rep, 2) == to_multiset(weights_of(Gl2Label{2, 0})));
  const auto u = weights_of(Gl2PairLabel{{1, 0}, {2, -1}});
  for (int d = 0; d <= 5; ++d) {
    const auto w = sym_power_weights(to_multiset(u), d);
    CHECK(total(w) == binomial(u.size() + d - 1, d));
    CHECK(w == brute_sym_power(u, d));
  }
}

TEST_CASE("series matches single powers") {
  const auto w = to_multiset(weights_of(Gl2Label{2, -1}));
  const auto series = sym_power_series(w, 6);
  REQUIRE(series.size() == 7);
  for (int d = 0; d <= 6; ++d) CHECK(series[static_cast<std::size_t>(d)] == brute_sym_power(weights_of(Gl2Label{2, -1}), d));
}

TEST_CASE("decomposition examples") {
  CHECK(decompose(to_multiset(weights_of(Gl2Label{2, 1}))) == std::map<RepLabel, std::uint64_t>{{Gl2Label{2, 1}, 1}});
  const auto prod = tensor_weights(to_multiset(weights_of(Gl2Label{1, 0})), to_multiset(weights_of(Gl2Label{1, 0})));
  CHECK(decompose(prod) == std::map<RepLabel, std::uint64_t>{{Gl2Label{0, 1}, 1}, {Gl2Label{2, 0}, 1}});
  const auto pair = to_multiset(weights_of(Gl2PairLabel{{2, 1}, {1, -1}}));
  CHECK(decompose(pair) == std::map<RepLabel, std::uint64_t>{{Gl2PairLabel{{2, 1}, {1, -1}}, 1}});
}

TEST_CASE("decomposition inverts the weight map") {
  for (const auto& label : LabelGrid::parse("n=0..8,m=-6..6").labels(GroupKind::GL2)) {
    CHECK(decompose(to_multiset(weights_of(label))) == std::map<RepLabel, std::uint64_t>{{label, 1}});
  }
  for (const auto& label : LabelGrid::parse("n=0..3,m=-1..1").labels(GroupKind::GL2xGL2)) {
    CHECK(decompose(to_multiset(weights_of(label))) == std::map<RepLabel, std::uint64_t>{{label, 1}});
  }
}

TEST_CASE("decomposition errors") {
  try {
    (void)decompose(WeightMultiset{{Weight{{0, 1}}, 1}});
    FAIL("expected NotDominant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDominant);
  }
  try {
    (void)decompose(WeightMultiset{{Weight{{1, 0}}, 1}});
    FAIL("expected NegativeMultiplicity");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeMultiplicity);
  }
}

TEST_CASE("plethysm of quadratic forms") {
  const auto spec = builtin_variety(VarietyName::BinaryQuadraticForms);
  const auto gens = to_multiset(coordinate_ring_generators(spec, Convention::DualModule));
  for (int d = 0; d <= 6; ++d) {
    const auto w = sym_power_weights(gens, d);
    const auto got = decompose(w);
    CHECK(got == brute_decompose_gl2(w));
    std::map<RepLabel, std::uint64_t> want;
    for (int i = 0; 2 * i <= d; ++i) want[Gl2Label{2 * d - 4 * i, 2 * i}] = 1;
    CHECK(got == want);
    std::uint64_t dim = 0;
    for (const auto& [l, k] : got) dim += k * static_cast<std::uint64_t>(std::get<Gl2Label>(l).n + 1);
    CHECK(dim == total(w));
  }
}

TEST_CASE("oracle decompositions never go negative") {
  for (const auto name : {VarietyName::BinaryQuadraticForms, VarietyName::TwoByTwoMatrices}) {
    const auto spec = builtin_variety(name);
    for (const auto conv : {Convention::DualModule, Convention::DirectModule}) {
      const auto series = sym_power_series(to_multiset(coordinate_ring_generators(spec, conv)), 6);
      for (const auto& w : series) CHECK_NOTHROW(decompose(w));
    }
  }
}

TEST_CASE("oracle multiplicities") {
  const auto bqf = builtin_variety(VarietyName::BinaryQuadraticForms);
  CHECK(oracle_multiplicity(bqf, Gl2Label{0, 0}, 0) == 1);
  CHECK(oracle_multiplicity(bqf, Gl2Label{2, 2}, 4) == 1);
  CHECK(oracle_multiplicity(bqf, Gl2Label{2, 1}, 4) == 0);
  CHECK(required_degree(bqf, Gl2Label{4, 2}, Convention::DualModule) == std::optional<int>(4));
  CHECK(required_degree(bqf, Gl2Label{1, 0}, Convention::DualModule) == std::optional<int>(-1));

  for (const auto& row : oracle_table(bqf, LabelGrid::parse("n=0..8,m=-6..6").labels(GroupKind::GL2))) {
    const auto& l = std::get<Gl2Label>(row.label);
    CHECK(row.value == (l.n % 2 == 0 && l.m % 2 == 0 && l.m >= 0 ? 1u : 0u));
  }
  const auto mat = builtin_variety(VarietyName::TwoByTwoMatrices);
  for (const auto& row : oracle_table(mat, LabelGrid::parse("n=0..3,m=-2..2").labels(GroupKind::GL2xGL2))) {
    const auto& p = std::get<Gl2PairLabel>(row.label);
    CHECK(row.value == (p.left == p.right && p.left.m >= 0 ? 1u : 0u));
  }
}

TEST_CASE("oracle agrees with Hom on a small grid") {
  const auto bqf = builtin_variety(VarietyName::BinaryQuadraticForms);
  const auto labels = LabelGrid::parse("n=0..6,m=-4..4").labels(GroupKind::GL2);
  CHECK(oracle_table(bqf, labels) == multiplicity_table(bqf, labels));
}

TEST_CASE("oracle argument errors") {
  VarietySpec generic;
  generic.group = GroupKind::Generic;
  CHECK_THROWS_AS(oracle_table(generic, {Gl2Label{0, 0}}), Error);
  CHECK(parse_convention("dual") == Convention::DualModule);
  CHECK(parse_convention("direct") == Convention::DirectModule);
  CHECK_THROWS_AS(parse_convention("sideways"), Error);
}
