#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eqvb/matrix.hpp"

namespace eqvb {

/// A subspace of Q^n stored by its reduced row-echelon basis. The basis is
/// canonical, so structural equality is subspace equality.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Span of arbitrary (possibly dependent) vectors of length ambient_dim.
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace row_space(const Mat& m);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_dim_; }

  bool contains(std::span<const Rat> v) const;
  bool contains(const Subspace& other) const;

  /// Rows spanning the annihilator: c with c . v = 0 for every v here.
  std::vector<Vec> annihilator() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0} as a subspace of Q^{cols(m)}.
Subspace kernel(const Mat& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, std::span<const Rat> v);

/// Image f(S) of a subspace under a linear map.
Subspace image(const Mat& f, const Subspace& s);

}  // namespace eqvb
