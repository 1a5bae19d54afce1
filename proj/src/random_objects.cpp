#include "eqvb/random_objects.hpp"

#include "eqvb/cocharacter.hpp"

namespace eqvb {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Mat random_invertible(Rng& rng, std::size_t n, int bound) {
  for (;;) {
    Mat m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Rat(uniform(rng, -bound, bound));
    if (rank(m) == n) return m;
  }
}

FilteredSpace random_filtered_space(Rng& rng, std::size_t min_dim, std::size_t max_dim, int jump_lo, int jump_hi) {
  const auto dim = static_cast<std::size_t>(uniform(rng, static_cast<int>(min_dim), static_cast<int>(max_dim)));
  const Mat basis = random_invertible(rng, dim);
  // A handful of distinct levels keeps repeated levels common.
  const int distinct = uniform(rng, 1, 3);
  std::vector<int> pool;
  for (int k = 0; k < distinct; ++k) pool.push_back(uniform(rng, jump_lo, jump_hi) - 1);
  std::vector<LeveledVector> vecs;
  for (std::size_t i = 0; i < dim; ++i) {
    vecs.push_back({basis.row_vec(i), pool[static_cast<std::size_t>(uniform(rng, 0, distinct - 1))]});
  }
  return FilteredSpace::from_leveled(dim, vecs);
}

RandomHShape random_h_shape(Rng& rng) {
  RandomHShape shape;
  const int lie_count = uniform(rng, 0, 2);
  for (int k = 0; k < lie_count; ++k) {
    Vec x(4);
    for (auto& c : x) c = Rat(uniform(rng, -2, 2));
    shape.lie_elements.push_back(std::move(x));
  }
  static const std::vector<Mat> elements = {Mat{{-1, 0}, {0, -1}}, Mat{{1, 0}, {0, -1}}, Mat{{0, 1}, {1, 0}},
                                            Mat{{1, 0}, {1, -1}}};
  const int group_count = uniform(rng, 0, 1);
  for (int k = 0; k < group_count; ++k) {
    shape.group_elements.push_back({elements[static_cast<std::size_t>(uniform(rng, 0, 3))]});
  }
  shape.filtration_count = static_cast<std::size_t>(uniform(rng, 0, 2));
  return shape;
}

FiltObject random_filt_object(Rng& rng, const RandomHShape& shape, std::size_t max_dim) {
  const int target = uniform(rng, 1, static_cast<int>(max_dim));
  RepData rep;
  rep.group = GroupKind::GL2;
  rep.lie_ops.assign(4, Mat(0, 0));
  int used = 0;
  while (used < target) {
    const int n = uniform(rng, 0, target - used - 1);
    const RepData part = irrep_gl2(n, uniform(rng, -2, 2));
    rep = rep.dim == 0 ? part : direct_sum(rep, part);
    used += n + 1;
  }
  FiltObject obj;
  obj.rep = rep;
  StabilizerRecipe recipe{shape.lie_elements, shape.group_elements};
  obj.h_action = recipe.apply(rep, HStyle::LiePlusElements);
  for (std::size_t k = 0; k < shape.filtration_count; ++k) {
    if (uniform(rng, 0, 1) == 0) {
      obj.filtrations.push_back(cocharacter_filtration(rep, Cocharacter{{uniform(rng, -2, 2), uniform(rng, -2, 2)}}));
    } else {
      obj.filtrations.push_back(random_filtered_space(rng, rep.dim, rep.dim, -4, 4));
    }
  }
  return obj;
}

}  // namespace eqvb
