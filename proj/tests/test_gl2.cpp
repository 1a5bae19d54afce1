#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "eqvb/error.hpp"
#include "eqvb/gl2.hpp"
#include "eqvb/oracle.hpp"
#include "eqvb/random_objects.hpp"
#include "eqvb/subspace.hpp"

using namespace eqvb;

namespace {

std::vector<Weight> sorted(std::vector<Weight> w) {
  std::sort(w.begin(), w.end());
  return w;
}

std::vector<Weight> ws(std::initializer_list<std::vector<int>> list) {
  std::vector<Weight> out;
  for (const auto& c : list) out.push_back(Weight{c});
  return out;
}

// Lie operators of a GL2 rep: e = E12, f = E21, h = E11 - E22.
Mat op(const RepData& rep, int i) { return rep.lie_ops.at(static_cast<std::size_t>(i)); }

Mat ad_weight_shift(const RepData& rep, const Mat& x, int di0, int di1) {
  // x maps the basis vector of weight w to multiples of vectors of weight
  // w + (di0, di1); returns the entries violating this.
  Mat bad(rep.dim, rep.dim);
  for (std::size_t r = 0; r < rep.dim; ++r)
    for (std::size_t c = 0; c < rep.dim; ++c) {
      const bool shifted = rep.weights[r][0] == rep.weights[c][0] + di0 && rep.weights[r][1] == rep.weights[c][1] + di1;
      if (!shifted) bad(r, c) = x(r, c);
    }
  return bad;
}

}  // namespace

TEST_CASE("irreducible GL2 representations") {
  const auto triv = irrep_gl2(0, 0);
  CHECK(triv.dim == 1);
  CHECK(triv.weights == ws({{0, 0}}));
  CHECK(irrep_gl2(1, 0).weights == ws({{1, 0}, {0, 1}}));
  const auto r21 = irrep_gl2(2, 1);
  CHECK(r21.dim == 3);
  CHECK(r21.weights == ws({{3, 1}, {2, 2}, {1, 3}}));
  CHECK_THROWS_AS(irrep_gl2(-1, 0), Error);
}

TEST_CASE("weight sums") {
  for (int n = 0; n <= 8; ++n)
    for (int m = -4; m <= 4; ++m) {
      int total = 0;
      for (const auto& w : irrep_gl2(n, m).weights) total += w[0] + w[1];
      CHECK(total == (n + 1) * (n + 2 * m));
    }
}

TEST_CASE("Lie operator relations") {
  for (int n = 0; n <= 6; ++n)
    for (int m = -2; m <= 2; ++m) {
      const auto rep = irrep_gl2(n, m);
      const Mat e = op(rep, 1);
      const Mat f = op(rep, 2);
      const Mat h = op(rep, 0) - op(rep, 3);
      CHECK(commutator(e, f) == h);
      CHECK(commutator(h, e) == e * Rat(2));
      CHECK(commutator(h, f) == f * Rat(-2));
      CHECK(ad_weight_shift(rep, e, 1, -1).is_zero());
      CHECK(ad_weight_shift(rep, f, -1, 1).is_zero());
      // The torus operators are diagonal with the weights as entries.
      for (std::size_t j = 0; j < rep.dim; ++j) {
        CHECK(op(rep, 0)(j, j) == Rat(rep.weights[j][0]));
        CHECK(op(rep, 3)(j, j) == Rat(rep.weights[j][1]));
      }
    }
}

TEST_CASE("symmetric power matrices") {
  const Mat g{{2, 3}, {5, 7}};
  CHECK(sym_power_matrix(g, 0) == Mat::identity(1));
  CHECK(sym_power_matrix(Mat::identity(2), 4) == Mat::identity(5));
  CHECK(sym_power_matrix(Mat{{1, 1}, {0, 1}}, 2) == Mat{{1, 2, 1}, {0, 1, 1}, {0, 0, 1}});
  CHECK(sym_power_matrix(g, 1) == g);
}

TEST_CASE("symmetric powers are multiplicative") {
  Rng rng(17);
  for (int k = 0; k < 30; ++k) {
    const Mat g = random_invertible(rng, 2);
    const Mat h = random_invertible(rng, 2);
    const int n = k % 6;
    CHECK(sym_power_matrix(g * h, n) == sym_power_matrix(g, n) * sym_power_matrix(h, n));
  }
}

TEST_CASE("group matrices and Lie matrices agree on a unipotent path") {
  // exp of a nilpotent X is I + X, and the Lie image of X is nilpotent too,
  // so rho(I + X) = exp(d rho(X)) can be summed exactly.
  const Mat x{{0, 3}, {0, 0}};
  for (int n = 0; n <= 5; ++n) {
    const auto rep = irrep_gl2(n, 2);
    const Mat dx = lie_matrix(rep, gl2_lie_coordinates(x));
    Mat expo = Mat::identity(rep.dim);
    Mat term = Mat::identity(rep.dim);
    for (int k = 1; k <= n; ++k) {
      term = term * dx * Rat(1, k);
      expo += term;
    }
    CHECK(group_matrix(rep, {Mat::identity(2) + x}) == expo);
  }
}

TEST_CASE("duals") {
  CHECK(dual(Gl2Label{0, 0}) == Gl2Label{0, 0});
  CHECK(dual(Gl2Label{1, 0}) == Gl2Label{1, -1});
  for (int n = 0; n <= 5; ++n)
    for (int m = -3; m <= 3; ++m) {
      const Gl2Label l{n, m};
      CHECK(dual(dual(l)) == l);
      std::vector<Weight> neg;
      for (const auto& w : weights_of(l)) neg.push_back(-w);
      CHECK(sorted(neg) == sorted(weights_of(dual(l))));
    }
}

TEST_CASE("Clebsch-Gordan examples") {
  CHECK(clebsch_gordan({1, 0}, {1, 0}) == std::vector<Gl2Label>{{0, 1}, {2, 0}});
  CHECK(clebsch_gordan({2, 0}, {1, 0}) == std::vector<Gl2Label>{{1, 1}, {3, 0}});
  CHECK(clebsch_gordan({4, 1}, {0, 3}) == std::vector<Gl2Label>{{4, 4}});
}

TEST_CASE("Clebsch-Gordan conserves characters") {
  for (int n = 0; n <= 5; ++n)
    for (int n2 = 0; n2 <= 5; ++n2) {
      const Gl2Label a{n, 1};
      const Gl2Label b{n2, -2};
      std::vector<Weight> lhs;
      for (const auto& p : clebsch_gordan(a, b))
        for (const auto& w : weights_of(p)) lhs.push_back(w);
      std::vector<Weight> rhs;
      for (const auto& u : weights_of(a))
        for (const auto& v : weights_of(b)) rhs.push_back(u + v);
      CHECK(sorted(lhs) == sorted(rhs));
    }
}

TEST_CASE("external products") {
  CHECK(external_rep({0, 0}, {0, 0}).weights == ws({{0, 0, 0, 0}}));
  CHECK(external_rep({1, 0}, {1, 0}).weights == ws({{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}));
  CHECK(external_rep({1, 0}, {0, 1}).weights == ws({{1, 0, 1, 1}, {0, 1, 1, 1}}));
  const auto rep = external_rep({2, 1}, {1, -1});
  CHECK(rep.lie_ops.size() == 8);
  // The two factors commute.
  for (int i = 0; i < 4; ++i)
    for (int j = 4; j < 8; ++j) CHECK(commutator(op(rep, i), op(rep, j)).is_zero());
}

TEST_CASE("restriction to the diagonal") {
  const auto r = restrict_to_diagonal(external_rep({1, 0}, {1, 0}));
  CHECK(sorted(r.weights) == ws({{0, 2}, {1, 1}, {1, 1}, {2, 0}}));
  CHECK(restrict_to_diagonal(external_rep({0, 0}, {0, 0})).weights == ws({{0, 0}}));
  const auto same = restrict_to_diagonal(external_rep({3, -1}, {0, 0}));
  CHECK(same.weights == irrep_gl2(3, -1).weights);
  CHECK(same.lie_ops == irrep_gl2(3, -1).lie_ops);
  CHECK_THROWS_AS(restrict_to_diagonal(irrep_gl2(1, 0)), Error);
}

TEST_CASE("restriction matches Clebsch-Gordan") {
  for (int n = 0; n <= 4; ++n)
    for (int n2 = 0; n2 <= 4; ++n2) {
      const Gl2Label a{n, 0};
      const Gl2Label b{n2, 1};
      std::vector<Weight> cg;
      for (const auto& p : clebsch_gordan(a, b))
        for (const auto& w : weights_of(p)) cg.push_back(w);
      const auto r = restrict_to_diagonal(external_rep(a, b));
      CHECK(sorted(r.weights) == sorted(cg));
      // The summed operators still satisfy the gl2 relations.
      CHECK(commutator(op(r, 1), op(r, 2)) == op(r, 0) - op(r, 3));
    }
}

TEST_CASE("binary-form stabilizer constraints") {
  // H-fixed vectors: the common kernel of the constraints minus identity
  // for group elements, and of the Lie constraints themselves.
  auto fixed_dim = [](int n, int m) {
    const auto h = stabilizer_action_binary_forms(n, m);
    std::vector<Vec> rows;
    const auto d = static_cast<std::size_t>(n + 1);
    for (std::size_t k = 0; k < h.constraints.size(); ++k) {
      const Mat c = k == 0 ? h.constraints[k] : h.constraints[k] - Mat::identity(d);
      for (std::size_t r = 0; r < d; ++r) rows.push_back(c.row_vec(r));
    }
    return d - rank(Mat::from_rows(d, rows));
  };
  CHECK(fixed_dim(0, 0) == 1);
  CHECK(fixed_dim(2, 0) == 1);
  CHECK(fixed_dim(1, 0) == 0);
  CHECK(stabilizer_action_binary_forms(0, 0).constraints[0].is_zero());
}

TEST_CASE("binary-form stabilizer Lie constraint is the derivative of H") {
  // H = {[[t, 1/t - t], [0, 1/t]]}; its tangent at t = 1 is [[1, -2], [0, -1]].
  const Mat tangent{{1, -2}, {0, -1}};
  for (int n = 0; n <= 6; ++n)
    for (int m = -2; m <= 2; ++m) {
      const auto h = stabilizer_action_binary_forms(n, m, HStyle::LieOnly);
      REQUIRE(h.constraints.size() == 1);
      CHECK(h.constraints[0] == lie_matrix(irrep_gl2(n, m), gl2_lie_coordinates(tangent)));
    }
}

TEST_CASE("binary-form stabilizer elements fix the invariant line of the Lie constraint") {
  // In (2, -2) and (2, 0) the H-invariant forms are one-dimensional; the
  // extra group elements must act trivially on them.
  for (int m : {-2, 0, 2}) {
    const auto h = stabilizer_action_binary_forms(2, m);
    const Subspace line = kernel(h.constraints[0]);
    REQUIRE(line.dim() == 1);
    const Vec v = line.basis()[0];
    for (std::size_t k = 1; k < h.constraints.size(); ++k) CHECK(h.constraints[k] * v == v);
  }
  // For odd m the reflection acts by -1 on that line.
  const auto odd = stabilizer_action_binary_forms(2, 1);
  const Vec v = kernel(odd.constraints[0]).basis()[0];
  Vec neg;
  for (const auto& x : v) neg.push_back(-x);
  CHECK(odd.constraints.back() * v == neg);
}
