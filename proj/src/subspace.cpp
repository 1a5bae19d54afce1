#include "eqvb/subspace.hpp"

#include "eqvb/error.hpp"

namespace eqvb {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::AmbientMismatch, "subspaces live in spaces of dimension " +
                                                std::to_string(a.ambient_dim()) + " and " +
                                                std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return row_space(Mat::identity(ambient_dim));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw Error(ErrorKind::AmbientMismatch, "vector length does not match ambient dimension");
  }
  Subspace s = row_space(Mat::from_rows(ambient_dim, vectors));
  return s;
}

Subspace Subspace::row_space(const Mat& m) {
  auto [red, piv] = rref(m);
  Subspace s;
  s.ambient_dim_ = m.cols();
  s.pivots_ = piv;
  s.basis_.reserve(piv.size());
  for (std::size_t r = 0; r < piv.size(); ++r) s.basis_.push_back(red.row_vec(r));
  return s;
}

bool Subspace::contains(std::span<const Rat> v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorKind::AmbientMismatch, "vector length does not match ambient dimension");
  // Reduce against the echelon basis; v is inside iff the residue vanishes.
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rat f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t c = pivots_[i]; c < ambient_dim_; ++c) {
      if (!basis_[i][c].is_zero()) r[c] -= f * basis_[i][c];
    }
  }
  return is_zero_vector(r);
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

std::vector<Vec> Subspace::annihilator() const {
  if (basis_.empty()) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient_dim_; ++i) rows.push_back(unit_vector(ambient_dim_, i));
    return rows;
  }
  return kernel(Mat::from_rows(ambient_dim_, basis_)).basis();
}

Subspace kernel(const Mat& m) {
  auto [red, piv] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vec> vecs;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n);
    v[free] = Rat(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -red(r, free);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(n, vecs);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  std::vector<Vec> constraints = a.annihilator();
  const auto bc = b.annihilator();
  constraints.insert(constraints.end(), bc.begin(), bc.end());
  if (constraints.empty()) return Subspace::full(a.ambient_dim());
  return kernel(Mat::from_rows(a.ambient_dim(), constraints));
}

bool subspace_contains(const Subspace& a, std::span<const Rat> v) { return a.contains(v); }

Subspace image(const Mat& f, const Subspace& s) {
  if (f.cols() != s.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "map domain does not match subspace ambient dimension");
  std::vector<Vec> imgs;
  imgs.reserve(s.dim());
  for (const auto& v : s.basis()) imgs.push_back(f * v);
  return Subspace::span(f.rows(), imgs);
}

}  // namespace eqvb
