#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eqvb/matrix.hpp"

namespace eqvb {

/// Character of a maximal torus, as exponents on the torus coordinates
/// (t1, t2) for GL2 or (t1, t2, t3, t4) for GL2 x GL2.
struct Weight {
  std::vector<int> components;

  std::size_t size() const { return components.size(); }
  int operator[](std::size_t i) const { return components[i]; }
  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& w);

/// The irreducible GL2 representation Sym^n V (x) det^m.
struct Gl2Label {
  int n = 0;
  int m = 0;
  friend auto operator<=>(const Gl2Label&, const Gl2Label&) = default;
};

/// External product of two GL2 irreducibles, a representation of GL2 x GL2.
struct Gl2PairLabel {
  Gl2Label left;
  Gl2Label right;
  friend auto operator<=>(const Gl2PairLabel&, const Gl2PairLabel&) = default;
};

using RepLabel = std::variant<Gl2Label, Gl2PairLabel>;

std::string to_string(const RepLabel& label);

enum class GroupKind { GL2, GL2xGL2, Generic };

std::string to_string(GroupKind group);
/// Number of torus coordinates: 2, 4, or 0 for a generic group.
std::size_t torus_rank(GroupKind group);

/// A representation in a weight basis together with the images of a Lie
/// algebra basis. For GL2 the Lie basis is E11, E12, E21, E22 (in that
/// order); GL2 x GL2 lists the left factor's four, then the right's.
///
/// `components` records a decomposition into labelled irreducibles (in
/// basis order) when one is known; group elements can only be evaluated
/// on such representations.
struct RepData {
  GroupKind group = GroupKind::Generic;
  std::size_t dim = 0;
  std::vector<Weight> weights;
  std::vector<Mat> lie_ops;
  std::vector<RepLabel> components;

  std::optional<RepLabel> label() const {
    if (components.size() == 1) return components.front();
    return std::nullopt;
  }

  /// Throws ShapeMismatch / LengthMismatch when the invariants fail.
  void validate() const;
};

/// Element of GL2 (one matrix) or GL2 x GL2 (two matrices), each 2 x 2.
using GroupElement = std::vector<Mat>;

/// Linear maps f intertwine H iff f * A_src = A_dst * f for each paired
/// constraint.
struct GroupActionData {
  std::size_t dim = 0;
  std::vector<Mat> constraints;
};

enum class HStyle { LieOnly, LiePlusElements };

std::string to_string(HStyle style);

/// Matrix of g on degree-n binary forms in the basis x^{n-j} y^j, j = 0..n:
/// entry (i, j) is the coefficient of x^{n-j} y^j in
/// (a x + b y)^{n-i} (c x + d y)^i for g = [[a, b], [c, d]].
Mat sym_power_matrix(const Mat& g, int n);

/// Derivative of sym_power_matrix at the identity in direction x.
Mat sym_power_lie(const Mat& x, int n);

/// Weights of (n, m): (n - j + m, j + m) for j = 0..n.
std::vector<Weight> weights_of(const Gl2Label& label);
std::vector<Weight> weights_of(const RepLabel& label);

RepData irrep_gl2(int n, int m);
RepData trivial_rep(GroupKind group);
/// One-dimensional trivial representation with the same weight length and
/// Lie basis size as `rep`.
RepData trivial_like(const RepData& rep);

Gl2Label dual(const Gl2Label& label);

/// Tensor product decomposition of two GL2 irreducibles, sorted.
std::vector<Gl2Label> clebsch_gordan(const Gl2Label& a, const Gl2Label& b);

/// a boxtimes b; basis index of a varies slowest.
RepData external_rep(const Gl2Label& a, const Gl2Label& b);

RepData make_rep(const RepLabel& label);

/// Restriction of a GL2 x GL2 representation along g -> (g, g).
RepData restrict_to_diagonal(const RepData& rep);

RepData direct_sum(const RepData& a, const RepData& b);

/// rho(g) for a representation with a known decomposition. Throws
/// Unsupported otherwise.
Mat group_matrix(const RepData& rep, const GroupElement& g);

/// Image of the Lie algebra element with the given coordinates in the
/// rep's Lie basis.
Mat lie_matrix(const RepData& rep, const Vec& coefficients);

/// Coordinates of x in gl2, and of (x, y) in gl2 + gl2.
Vec gl2_lie_coordinates(const Mat& x);
Vec gl2_pair_lie_coordinates(const Mat& x, const Mat& y);

/// The stabilizer of the base binary form acting on (n, m): the torus
/// Lie operator conjugated by sym_power_matrix([[1,1],[0,1]], n) and, for
/// LiePlusElements, the elements -Id and the reflection [[1,0],[1,-1]].
GroupActionData stabilizer_action_binary_forms(int n, int m, HStyle style = HStyle::LiePlusElements);

}  // namespace eqvb
