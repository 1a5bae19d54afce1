#include "eqvb/hom.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

#include "eqvb/error.hpp"
#include "eqvb/grid.hpp"

namespace eqvb {

void FiltObject::validate() const {
  rep.validate();
  if (h_action.dim != rep.dim) throw Error(ErrorKind::DimensionMismatch, "H action dimension differs from the representation");
  for (const auto& c : h_action.constraints) {
    if (c.rows() != rep.dim || c.cols() != rep.dim) throw Error(ErrorKind::DimensionMismatch, "H constraint is not dim x dim");
  }
  for (const auto& f : filtrations) {
    if (f.dim() != rep.dim) throw Error(ErrorKind::DimensionMismatch, "filtration dimension differs from the representation");
  }
}

namespace {

// Rows of the linear system in the entries of f, indexed r * dim_a + c.
Mat assemble(const FiltObject& a, const FiltObject& b, const HomConstraints& which) {
  a.validate();
  b.validate();
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  const std::size_t unknowns = da * db;
  std::vector<Vec> rows;

  if (which.intertwining) {
    if (a.h_action.constraints.size() != b.h_action.constraints.size()) {
      throw Error(ErrorKind::ShapeMismatch, "H constraint lists have different lengths");
    }
    for (std::size_t k = 0; k < a.h_action.constraints.size(); ++k) {
      const Mat& src = a.h_action.constraints[k];
      const Mat& dst = b.h_action.constraints[k];
      // (f src - dst f)(r, c) = sum_t f(r, t) src(t, c) - dst(r, t) f(t, c)
      for (std::size_t r = 0; r < db; ++r)
        for (std::size_t c = 0; c < da; ++c) {
          Vec row(unknowns);
          for (std::size_t t = 0; t < da; ++t) row[r * da + t] += src(t, c);
          for (std::size_t t = 0; t < db; ++t) row[t * da + c] -= dst(r, t);
          if (!is_zero_vector(row)) rows.push_back(std::move(row));
        }
    }
  }

  if (a.filtrations.size() != b.filtrations.size()) {
    throw Error(ErrorKind::ShapeMismatch, "objects carry different numbers of filtrations");
  }
  const std::size_t nfilt = std::min(which.filtrations, a.filtrations.size());
  for (std::size_t j = 0; j < nfilt; ++j) {
    const FilteredSpace& fa = a.filtrations[j];
    const FilteredSpace& fb = b.filtrations[j];
    std::set<int> indices;
    for (int i : fa.jumps()) indices.insert(i);
    for (int i : fb.jumps()) indices.insert(i);
    for (int i : indices) {
      const Subspace src = fa.at(i);
      if (src.is_zero()) continue;
      const auto ann = fb.at(i).annihilator();
      for (const auto& v : src.basis())
        for (const auto& cvec : ann) {
          Vec row(unknowns);
          for (std::size_t r = 0; r < db; ++r) {
            if (cvec[r].is_zero()) continue;
            for (std::size_t t = 0; t < da; ++t)
              if (!v[t].is_zero()) row[r * da + t] += cvec[r] * v[t];
          }
          rows.push_back(std::move(row));
        }
    }
  }
  return Mat::from_rows(unknowns, rows);
}

}  // namespace

std::size_t hom_dim(const FiltObject& a, const FiltObject& b, const HomConstraints& which) {
  const Mat system = assemble(a, b, which);
  if (a.dim() == 0 || b.dim() == 0) return (a.dim() == 0 && b.dim() == 0) ? 1 : 0;
  return system.cols() - rank(system);
}

std::vector<Mat> hom_basis(const FiltObject& a, const FiltObject& b, const HomConstraints& which) {
  const Mat system = assemble(a, b, which);
  if (a.dim() == 0 || b.dim() == 0) {
    if (a.dim() == 0 && b.dim() == 0) return {Mat(0, 0)};
    return {};
  }
  std::vector<Mat> out;
  const Subspace solutions = kernel(system);
  for (const auto& v : solutions.basis()) out.emplace_back(b.dim(), a.dim(), v);
  return out;
}

FiltObject filt_object(const RepData& rep, const VarietySpec& spec, HStyle style) {
  spec.validate();
  if (rep.group != spec.group) {
    throw Error(ErrorKind::ShapeMismatch, "representation of " + to_string(rep.group) + " used with a " +
                                              to_string(spec.group) + " variety");
  }
  FiltObject obj;
  obj.rep = rep;
  obj.h_action = spec.stabilizer.apply(rep, style);
  for (const auto& mu : spec.boundary_cocharacters) obj.filtrations.push_back(cocharacter_filtration(rep, mu));
  return obj;
}

std::size_t multiplicity(const RepData& rep, const VarietySpec& spec, HStyle style) {
  const FiltObject src = filt_object(rep, spec, style);
  const FiltObject dst = filt_object(trivial_like(rep), spec, style);
  return hom_dim(src, dst);
}

std::vector<TableRow> multiplicity_table(const VarietySpec& spec, const std::vector<RepLabel>& labels, HStyle style) {
  std::vector<RepLabel> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  std::vector<TableRow> rows(sorted.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < sorted.size(); i += workers) {
        rows[i] = {sorted[i], multiplicity(make_rep(sorted[i]), spec, style)};
      }
    }));
  }
  for (auto& j : jobs) j.get();
  return rows;
}

}  // namespace eqvb
