#include "eqvb/gl2.hpp"

#include <algorithm>

#include "eqvb/error.hpp"

namespace eqvb {

namespace {

void require_gl2_element(const Mat& g) {
  if (g.rows() != 2 || g.cols() != 2) throw Error(ErrorKind::ShapeMismatch, "expected a 2x2 matrix");
}

// Coefficients of (p0 x + p1 y)^k in the basis x^{k-j} y^j.
Vec linear_form_power(const Rat& p0, const Rat& p1, int k) {
  Vec poly{Rat(1)};
  for (int e = 0; e < k; ++e) {
    Vec next(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j] * p0;
      next[j + 1] += poly[j] * p1;
    }
    poly = std::move(next);
  }
  return poly;
}

Vec poly_mul(const Vec& a, const Vec& b) {
  Vec out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Mat basis_matrix(std::size_t i, std::size_t j) {
  Mat e(2, 2);
  e(i, j) = Rat(1);
  return e;
}

std::vector<Mat> gl2_lie_ops(int n, int m) {
  std::vector<Mat> ops;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Mat op = sym_power_lie(basis_matrix(i, j), n);
      if (i == j && m != 0) op += Mat::identity(n + 1) * Rat(m);
      ops.push_back(std::move(op));
    }
  return ops;
}

Mat irrep_group_matrix(const Gl2Label& label, const Mat& g) {
  return sym_power_matrix(g, label.n) * pow(determinant(g), label.m);
}

Mat block_diagonal(const std::vector<Mat>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Mat out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(off + r, off + c) = b(r, c);
    off += b.rows();
  }
  return out;
}

}  // namespace

Weight operator+(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "weight length mismatch");
  Weight w = a;
  for (std::size_t i = 0; i < w.size(); ++i) w.components[i] += b[i];
  return w;
}

Weight operator-(const Weight& w) {
  Weight out = w;
  for (auto& c : out.components) c = -c;
  return out;
}

std::string to_string(const RepLabel& label) {
  auto one = [](const Gl2Label& l) { return "(" + std::to_string(l.n) + "," + std::to_string(l.m) + ")"; };
  if (const auto* l = std::get_if<Gl2Label>(&label)) return one(*l);
  const auto& p = std::get<Gl2PairLabel>(label);
  return one(p.left) + "x" + one(p.right);
}

std::string to_string(GroupKind group) {
  switch (group) {
    case GroupKind::GL2: return "GL2";
    case GroupKind::GL2xGL2: return "GL2xGL2";
    case GroupKind::Generic: return "generic";
  }
  return "generic";
}

std::size_t torus_rank(GroupKind group) {
  switch (group) {
    case GroupKind::GL2: return 2;
    case GroupKind::GL2xGL2: return 4;
    case GroupKind::Generic: return 0;
  }
  return 0;
}

std::string to_string(HStyle style) {
  return style == HStyle::LieOnly ? "lie_only" : "lie_plus_elements";
}

void RepData::validate() const {
  if (weights.size() != dim) throw Error(ErrorKind::LengthMismatch, "weight list length differs from dimension");
  const std::size_t len = weights.empty() ? 0 : weights.front().size();
  for (const auto& w : weights) {
    if (w.size() != len) throw Error(ErrorKind::LengthMismatch, "weights of differing lengths");
  }
  if (group != GroupKind::Generic && !weights.empty() && len != torus_rank(group)) {
    throw Error(ErrorKind::LengthMismatch, "weight length does not match the group's torus rank");
  }
  for (const auto& op : lie_ops) {
    if (op.rows() != dim || op.cols() != dim) throw Error(ErrorKind::ShapeMismatch, "action operator is not dim x dim");
  }
}

Mat sym_power_matrix(const Mat& g, int n) {
  require_gl2_element(g);
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative symmetric power");
  const std::size_t size = static_cast<std::size_t>(n) + 1;
  Mat out(size, size);
  for (int i = 0; i <= n; ++i) {
    const Vec row = poly_mul(linear_form_power(g(0, 0), g(0, 1), n - i), linear_form_power(g(1, 0), g(1, 1), i));
    for (std::size_t j = 0; j < size; ++j) out(i, j) = row[j];
  }
  return out;
}

Mat sym_power_lie(const Mat& x, int n) {
  require_gl2_element(x);
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative symmetric power");
  const std::size_t size = static_cast<std::size_t>(n) + 1;
  Mat out(size, size);
  for (int i = 0; i <= n; ++i) {
    out(i, i) = Rat(n - i) * x(0, 0) + Rat(i) * x(1, 1);
    if (i < n) out(i, i + 1) = Rat(n - i) * x(0, 1);
    if (i > 0) out(i, i - 1) = Rat(i) * x(1, 0);
  }
  return out;
}

std::vector<Weight> weights_of(const Gl2Label& label) {
  if (label.n < 0) throw Error(ErrorKind::InvalidArgument, "negative n in label");
  std::vector<Weight> ws;
  for (int j = 0; j <= label.n; ++j) ws.push_back(Weight{{label.n - j + label.m, j + label.m}});
  return ws;
}

std::vector<Weight> weights_of(const RepLabel& label) {
  if (const auto* l = std::get_if<Gl2Label>(&label)) return weights_of(*l);
  const auto& p = std::get<Gl2PairLabel>(label);
  std::vector<Weight> ws;
  for (const auto& a : weights_of(p.left))
    for (const auto& b : weights_of(p.right)) {
      Weight w = a;
      w.components.insert(w.components.end(), b.components.begin(), b.components.end());
      ws.push_back(std::move(w));
    }
  return ws;
}

RepData irrep_gl2(int n, int m) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "irrep_gl2 requires n >= 0");
  RepData rep;
  rep.group = GroupKind::GL2;
  rep.dim = static_cast<std::size_t>(n) + 1;
  rep.weights = weights_of(Gl2Label{n, m});
  rep.lie_ops = gl2_lie_ops(n, m);
  rep.components = {Gl2Label{n, m}};
  return rep;
}

RepData trivial_rep(GroupKind group) {
  switch (group) {
    case GroupKind::GL2: return irrep_gl2(0, 0);
    case GroupKind::GL2xGL2: return external_rep({0, 0}, {0, 0});
    case GroupKind::Generic: break;
  }
  throw Error(ErrorKind::Unsupported, "generic groups need trivial_like");
}

RepData trivial_like(const RepData& rep) {
  if (rep.group != GroupKind::Generic) return trivial_rep(rep.group);
  RepData t;
  t.group = GroupKind::Generic;
  t.dim = 1;
  const std::size_t len = rep.weights.empty() ? 0 : rep.weights.front().size();
  t.weights = {Weight{std::vector<int>(len, 0)}};
  t.lie_ops.assign(rep.lie_ops.size(), Mat(1, 1));
  return t;
}

Gl2Label dual(const Gl2Label& label) {
  if (label.n < 0) throw Error(ErrorKind::InvalidArgument, "negative n in label");
  return {label.n, -label.n - label.m};
}

std::vector<Gl2Label> clebsch_gordan(const Gl2Label& a, const Gl2Label& b) {
  if (a.n < 0 || b.n < 0) throw Error(ErrorKind::InvalidArgument, "negative n in label");
  std::vector<Gl2Label> out;
  for (int j = 0; j <= std::min(a.n, b.n); ++j) out.push_back({a.n + b.n - 2 * j, a.m + b.m + j});
  std::sort(out.begin(), out.end());
  return out;
}

RepData external_rep(const Gl2Label& a, const Gl2Label& b) {
  const RepData ra = irrep_gl2(a.n, a.m);
  const RepData rb = irrep_gl2(b.n, b.m);
  RepData rep;
  rep.group = GroupKind::GL2xGL2;
  rep.dim = ra.dim * rb.dim;
  rep.weights = weights_of(RepLabel{Gl2PairLabel{a, b}});
  const Mat ia = Mat::identity(ra.dim);
  const Mat ib = Mat::identity(rb.dim);
  for (const auto& op : ra.lie_ops) rep.lie_ops.push_back(kronecker(op, ib));
  for (const auto& op : rb.lie_ops) rep.lie_ops.push_back(kronecker(ia, op));
  rep.components = {Gl2PairLabel{a, b}};
  return rep;
}

RepData make_rep(const RepLabel& label) {
  if (const auto* l = std::get_if<Gl2Label>(&label)) return irrep_gl2(l->n, l->m);
  const auto& p = std::get<Gl2PairLabel>(label);
  return external_rep(p.left, p.right);
}

RepData restrict_to_diagonal(const RepData& rep) {
  if (rep.group != GroupKind::GL2xGL2) throw Error(ErrorKind::LengthMismatch, "restriction needs a GL2 x GL2 representation");
  for (const auto& w : rep.weights) {
    if (w.size() != 4) throw Error(ErrorKind::LengthMismatch, "expected 4-component weights");
  }
  if (rep.lie_ops.size() != 8) throw Error(ErrorKind::ShapeMismatch, "expected 8 Lie operators");
  RepData out;
  out.group = GroupKind::GL2;
  out.dim = rep.dim;
  for (const auto& w : rep.weights) out.weights.push_back(Weight{{w[0] + w[2], w[1] + w[3]}});
  for (std::size_t k = 0; k < 4; ++k) out.lie_ops.push_back(rep.lie_ops[k] + rep.lie_ops[4 + k]);
  for (const auto& c : rep.components) {
    const auto* p = std::get_if<Gl2PairLabel>(&c);
    if (p != nullptr && p->right.n == 0) {
      out.components.push_back(Gl2Label{p->left.n, p->left.m + p->right.m});
    } else if (p != nullptr && p->left.n == 0) {
      out.components.push_back(Gl2Label{p->right.n, p->left.m + p->right.m});
    } else {
      // Reducible in general; group elements are no longer evaluable.
      out.components.clear();
      break;
    }
  }
  return out;
}

RepData direct_sum(const RepData& a, const RepData& b) {
  if (a.group != b.group) throw Error(ErrorKind::ShapeMismatch, "direct sum of representations of different groups");
  if (a.lie_ops.size() != b.lie_ops.size()) throw Error(ErrorKind::ShapeMismatch, "Lie bases differ");
  RepData out;
  out.group = a.group;
  out.dim = a.dim + b.dim;
  out.weights = a.weights;
  out.weights.insert(out.weights.end(), b.weights.begin(), b.weights.end());
  for (std::size_t k = 0; k < a.lie_ops.size(); ++k) out.lie_ops.push_back(block_diagonal({a.lie_ops[k], b.lie_ops[k]}));
  const bool known = (a.dim == 0 || !a.components.empty()) && (b.dim == 0 || !b.components.empty());
  if (known) {
    out.components = a.components;
    out.components.insert(out.components.end(), b.components.begin(), b.components.end());
  }
  out.validate();
  return out;
}

Mat group_matrix(const RepData& rep, const GroupElement& g) {
  if (rep.dim > 0 && rep.components.empty()) {
    throw Error(ErrorKind::Unsupported, "group elements need a representation with known irreducible components");
  }
  std::vector<Mat> blocks;
  for (const auto& c : rep.components) {
    if (const auto* l = std::get_if<Gl2Label>(&c)) {
      if (g.size() != 1) throw Error(ErrorKind::ShapeMismatch, "GL2 element expected");
      blocks.push_back(irrep_group_matrix(*l, g[0]));
    } else {
      const auto& p = std::get<Gl2PairLabel>(c);
      if (g.size() != 2) throw Error(ErrorKind::ShapeMismatch, "GL2 x GL2 element expected");
      blocks.push_back(kronecker(irrep_group_matrix(p.left, g[0]), irrep_group_matrix(p.right, g[1])));
    }
  }
  return block_diagonal(blocks);
}

Mat lie_matrix(const RepData& rep, const Vec& coefficients) {
  if (coefficients.size() != rep.lie_ops.size()) {
    throw Error(ErrorKind::ShapeMismatch, "Lie element has " + std::to_string(coefficients.size()) +
                                              " coordinates, representation has " +
                                              std::to_string(rep.lie_ops.size()) + " operators");
  }
  Mat out(rep.dim, rep.dim);
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    if (!coefficients[k].is_zero()) out += rep.lie_ops[k] * coefficients[k];
  return out;
}

Vec gl2_lie_coordinates(const Mat& x) {
  require_gl2_element(x);
  return {x(0, 0), x(0, 1), x(1, 0), x(1, 1)};
}

Vec gl2_pair_lie_coordinates(const Mat& x, const Mat& y) {
  Vec out = gl2_lie_coordinates(x);
  const Vec r = gl2_lie_coordinates(y);
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

GroupActionData stabilizer_action_binary_forms(int n, int m, HStyle style) {
  const RepData rep = irrep_gl2(n, m);
  const Mat conj = sym_power_matrix(Mat{{1, 1}, {0, 1}}, n);
  Vec torus(rep.dim);
  for (int j = 0; j <= n; ++j) torus[j] = Rat(n - 2 * j);
  GroupActionData data;
  data.dim = rep.dim;
  data.constraints.push_back(conj * Mat::diagonal(torus) * inverse(conj));
  if (style == HStyle::LiePlusElements) {
    data.constraints.push_back(group_matrix(rep, {Mat{{-1, 0}, {0, -1}}}));
    data.constraints.push_back(group_matrix(rep, {Mat{{1, 0}, {1, -1}}}));
  }
  return data;
}

}  // namespace eqvb
