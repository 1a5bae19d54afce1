#include "eqvb/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "eqvb/error.hpp"

namespace eqvb {

WeightMultiset to_multiset(const std::vector<Weight>& weights) {
  WeightMultiset out;
  for (const auto& w : weights) ++out[w];
  return out;
}

WeightMultiset tensor_weights(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) out[wa + wb] += ca * cb;
  return out;
}

std::vector<WeightMultiset> sym_power_series(const WeightMultiset& w, int max_degree) {
  if (max_degree < 0) throw Error(ErrorKind::InvalidArgument, "negative symmetric power degree");
  const std::size_t len = w.empty() ? 0 : w.begin()->first.size();
  std::vector<WeightMultiset> series(static_cast<std::size_t>(max_degree) + 1);
  series[0][Weight{std::vector<int>(len, 0)}] = 1;
  for (const auto& [weight, count] : w) {
    // Each copy of a generator multiplies by 1 / (1 - s z^weight); ascending
    // degree order lets P_d reuse the updated P_{d-1}.
    for (std::uint64_t copy = 0; copy < count; ++copy) {
      for (std::size_t d = 1; d < series.size(); ++d)
        for (const auto& [lower, c] : series[d - 1]) series[d][lower + weight] += c;
    }
  }
  return series;
}

WeightMultiset sym_power_weights(const WeightMultiset& w, int degree) {
  return sym_power_series(w, degree).back();
}

std::map<RepLabel, std::uint64_t> decompose(WeightMultiset w) {
  std::map<RepLabel, std::uint64_t> out;
  while (!w.empty()) {
    const Weight top = w.rbegin()->first;
    RepLabel label;
    if (top.size() == 2) {
      if (top[0] < top[1]) throw Error(ErrorKind::NotDominant, "maximal weight is not dominant");
      label = Gl2Label{top[0] - top[1], top[1]};
    } else if (top.size() == 4) {
      if (top[0] < top[1] || top[2] < top[3]) throw Error(ErrorKind::NotDominant, "maximal weight is not dominant");
      label = Gl2PairLabel{{top[0] - top[1], top[1]}, {top[2] - top[3], top[3]}};
    } else {
      throw Error(ErrorKind::Unsupported, "decompose handles 2- and 4-component weights only");
    }
    const std::uint64_t times = w.rbegin()->second;
    for (const auto& weight : weights_of(label)) {
      auto it = w.find(weight);
      if (it == w.end() || it->second < times) {
        throw Error(ErrorKind::NegativeMultiplicity, "subtracting " + to_string(label) + " leaves a negative multiplicity");
      }
      it->second -= times;
      if (it->second == 0) w.erase(it);
    }
    out[label] += times;
  }
  return out;
}

std::string to_string(Convention convention) {
  return convention == Convention::DualModule ? "dual" : "direct";
}

Convention parse_convention(const std::string& name) {
  if (name == "dual") return Convention::DualModule;
  if (name == "direct") return Convention::DirectModule;
  throw Error(ErrorKind::UnknownName, "unknown convention '" + name + "' (expected dual or direct)");
}

std::vector<Weight> coordinate_ring_generators(const VarietySpec& spec, Convention convention) {
  std::vector<Weight> out;
  for (const auto& w : spec.x_module_weights) out.push_back(convention == Convention::DualModule ? -w : w);
  return out;
}

namespace {

int weight_sum(const Weight& w) { return std::accumulate(w.components.begin(), w.components.end(), 0); }

}  // namespace

std::optional<int> required_degree(const VarietySpec& spec, const RepLabel& label, Convention convention) {
  const auto gens = coordinate_ring_generators(spec, convention);
  const int label_sum = weight_sum(weights_of(label).front());
  if (gens.empty()) return label_sum == 0 ? 0 : -1;
  const int s = weight_sum(gens.front());
  for (const auto& g : gens)
    if (weight_sum(g) != s) return std::nullopt;
  if (s == 0) return std::nullopt;
  if (label_sum % s != 0 || label_sum / s < 0) return -1;
  return label_sum / s;
}

std::uint64_t oracle_multiplicity(const VarietySpec& spec, const RepLabel& label, int max_degree, Convention convention) {
  return oracle_table(spec, {label}, max_degree, convention).front().value;
}

std::vector<TableRow> oracle_table(const VarietySpec& spec, const std::vector<RepLabel>& labels,
                                   std::optional<int> max_degree, Convention convention) {
  spec.validate();
  if (spec.group == GroupKind::Generic) throw Error(ErrorKind::Unsupported, "the oracle needs a GL2 or GL2 x GL2 variety");
  std::vector<RepLabel> sorted = labels;
  std::sort(sorted.begin(), sorted.end());

  // Degrees to inspect for each label; a label only occurs in degrees whose
  // weight sums match its own.
  std::vector<std::vector<int>> degrees(sorted.size());
  int top = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto need = required_degree(spec, sorted[i], convention);
    if (need.has_value()) {
      if (*need >= 0 && (!max_degree || *need <= *max_degree)) degrees[i] = {*need};
    } else {
      if (!max_degree) throw Error(ErrorKind::InvalidArgument, "no degree bound implied for " + to_string(sorted[i]) + "; pass a max degree");
      for (int d = 0; d <= *max_degree; ++d) degrees[i].push_back(d);
    }
    for (int d : degrees[i]) top = std::max(top, d);
  }

  const auto series = sym_power_series(to_multiset(coordinate_ring_generators(spec, convention)), top);
  std::map<int, std::map<RepLabel, std::uint64_t>> decomposed;
  std::vector<TableRow> rows;
  rows.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    std::uint64_t total = 0;
    for (int d : degrees[i]) {
      auto it = decomposed.find(d);
      if (it == decomposed.end()) it = decomposed.emplace(d, decompose(series[d])).first;
      auto hit = it->second.find(sorted[i]);
      if (hit != it->second.end()) total += hit->second;
    }
    rows.push_back({sorted[i], static_cast<std::size_t>(total)});
  }
  return rows;
}

}  // namespace eqvb
