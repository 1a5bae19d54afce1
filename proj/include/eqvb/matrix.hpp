#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "eqvb/rational.hpp"

namespace eqvb {

using Vec = std::vector<Rat>;

/// Dense row-major matrix over the rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries);
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat from_rows(std::size_t cols, const std::vector<Vec>& rows);
  static Mat diagonal(std::span<const Rat> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rat> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { auto s = row(r); return Vec(s.begin(), s.end()); }
  Vec col_vec(std::size_t c) const;
  const std::vector<Rat>& entries() const { return data_; }

  Mat transpose() const;
  bool is_zero() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rat& s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Rat& s) { return a *= s; }
  friend Mat operator*(const Rat& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, std::span<const Rat> v);

  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

Mat kronecker(const Mat& a, const Mat& b);
Mat commutator(const Mat& a, const Mat& b);
Rat determinant(const Mat& m);
/// Inverse of a square matrix; throws Error(RankDeficient) when singular.
Mat inverse(const Mat& m);

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form with its pivot columns.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

Vec unit_vector(std::size_t dim, std::size_t i);
bool is_zero_vector(std::span<const Rat> v);

}  // namespace eqvb
