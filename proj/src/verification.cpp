#include "eqvb/verification.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "eqvb/cocharacter.hpp"
#include "eqvb/grid.hpp"
#include "eqvb/hom.hpp"
#include "eqvb/random_objects.hpp"
#include "eqvb/rees.hpp"

namespace eqvb {

namespace {

// Wall-clock budgets, in seconds.
constexpr double kReesBudget = 1.0;
constexpr double kBinaryFormsBudget = 10.0;
constexpr double kMatricesBudget = 60.0;

constexpr std::size_t kReesSamples = 200;
constexpr std::size_t kHomSamples = 100;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << " s";
  return os.str();
}

const Gl2Label& left_of(const RepLabel& l) { return std::get<Gl2PairLabel>(l).left; }
const Gl2Label& right_of(const RepLabel& l) { return std::get<Gl2PairLabel>(l).right; }

std::vector<FilteredSpace> rees_samples(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<FilteredSpace> out;
  for (std::size_t k = 0; k < kReesSamples; ++k) out.push_back(random_filtered_space(rng, 0, 6, -10, 10));
  return out;
}

CriterionResult check_rees_roundtrip(const VerifyOptions& opt) {
  CriterionResult r{1, "derees(rees(F)) == F", false, "", {}, 0.0};
  const auto samples = rees_samples(opt.seed);
  const auto start = Clock::now();
  std::size_t good = 0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (derees(rees_construct(samples[k])) == samples[k]) {
      ++good;
    } else {
      r.details.push_back("sample " + std::to_string(k) + " does not round trip");
    }
  }
  r.seconds = seconds_since(start);
  r.passed = good == samples.size() && r.seconds < kReesBudget;
  r.summary = std::to_string(good) + "/" + std::to_string(samples.size()) + " exact, " + fmt_seconds(r.seconds) +
              " (budget " + fmt_seconds(kReesBudget) + ")";
  return r;
}

CriterionResult check_fiber_at_zero(const VerifyOptions& opt) {
  CriterionResult r{2, "fiber_at_zero(rees(F)) == gr(F)", false, "", {}, 0.0};
  const auto samples = rees_samples(opt.seed);
  const auto start = Clock::now();
  std::size_t good = 0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto gr = associated_graded(samples[k]);
    const auto fiber = fiber_at_zero(rees_construct(samples[k]));
    if (gr.pieces == fiber.pieces) {
      ++good;
    } else {
      r.details.push_back("sample " + std::to_string(k) + " has mismatched graded pieces");
    }
  }
  r.seconds = seconds_since(start);
  r.passed = good == samples.size();
  r.summary = std::to_string(good) + "/" + std::to_string(samples.size()) + " equal";
  return r;
}

// Compares the Filt-side table with the closed form and the oracle, one
// detail line per first label coordinate.
CriterionResult check_variety(int id, const std::string& name, const VarietySpec& spec, const LabelGrid& grid,
                              const std::function<std::size_t(const RepLabel&)>& expected, double budget,
                              const VerifyOptions& opt) {
  CriterionResult r{id, name, false, "", {}, 0.0};
  const auto labels = grid.labels(spec.group);
  const auto start = Clock::now();
  const auto table = multiplicity_table(spec, labels, opt.style);
  r.seconds = seconds_since(start);
  const auto oracle = oracle_table(spec, labels, std::nullopt, opt.convention);
  std::size_t closed_ok = 0;
  std::size_t oracle_ok = 0;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const auto want = expected(labels[k]);
    const bool a = table[k].value == want;
    const bool b = table[k].value == oracle[k].value;
    closed_ok += a;
    oracle_ok += b;
    r.details.push_back(std::string(a && b ? "  " : "! ") + to_string(labels[k]) + "\thom " +
                        std::to_string(table[k].value) + "\toracle " + std::to_string(oracle[k].value) +
                        "\texpected " + std::to_string(want));
  }
  r.passed = closed_ok == labels.size() && oracle_ok == labels.size() && r.seconds < budget;
  std::ostringstream os;
  os << labels.size() << " labels, closed form " << closed_ok << "/" << labels.size() << ", oracle " << oracle_ok
     << "/" << labels.size() << ", " << fmt_seconds(r.seconds) << " (budget " << fmt_seconds(budget) << ")";
  r.summary = os.str();
  return r;
}

LabelGrid binary_forms_grid() { return LabelGrid::parse("n=0..8,m=-6..6"); }
LabelGrid matrices_grid() { return LabelGrid::parse("n=0..4,m=-2..3,n2=0..4,m2=-2..3"); }

CriterionResult check_binary_forms(const VerifyOptions& opt) {
  const auto expected = [](const RepLabel& l) -> std::size_t {
    const auto& g = std::get<Gl2Label>(l);
    return g.n % 2 == 0 && g.m % 2 == 0 && g.m >= 0 ? 1 : 0;
  };
  return check_variety(3, "binary forms: multiplicity == [n even, m even, m >= 0] == oracle",
                       builtin_variety(VarietyName::BinaryQuadraticForms), binary_forms_grid(), expected,
                       kBinaryFormsBudget, opt);
}

CriterionResult check_matrices(const VerifyOptions& opt) {
  const auto expected = [](const RepLabel& l) -> std::size_t {
    const auto& a = left_of(l);
    const auto& b = right_of(l);
    return a.n == b.n && a.m == b.m && a.m >= 0 ? 1 : 0;
  };
  return check_variety(4, "2x2 matrices: multiplicity == [n = n', m = m', m >= 0] == oracle",
                       builtin_variety(VarietyName::TwoByTwoMatrices), matrices_grid(), expected, kMatricesBudget,
                       opt);
}

CriterionResult check_filtration_shape(const VerifyOptions&) {
  CriterionResult r{5, "cocharacter filtration graded pieces: 1 (binary forms), n + 1 (matrices)", false, "", {}, 0.0};
  const auto start = Clock::now();
  std::size_t total = 0;
  std::size_t good = 0;
  const auto bqf = builtin_variety(VarietyName::BinaryQuadraticForms);
  for (const auto& label : binary_forms_grid().labels(GroupKind::GL2)) {
    const auto& g = std::get<Gl2Label>(label);
    const auto gr = associated_graded(cocharacter_filtration(make_rep(label), bqf.boundary_cocharacters.at(0)));
    bool ok = gr.pieces.size() == static_cast<std::size_t>(g.n + 1);
    for (const auto& [p, d] : gr.pieces) ok = ok && d == 1;
    ++total;
    good += ok;
    if (!ok) r.details.push_back(to_string(label) + ": unexpected graded piece dimensions");
  }
  const auto mat = builtin_variety(VarietyName::TwoByTwoMatrices);
  for (const auto& label : matrices_grid().labels(GroupKind::GL2xGL2)) {
    const auto n = static_cast<std::size_t>(left_of(label).n);
    const auto gr = associated_graded(cocharacter_filtration(make_rep(label), mat.boundary_cocharacters.at(0)));
    bool ok = gr.pieces.size() == static_cast<std::size_t>(right_of(label).n + 1);
    for (const auto& [p, d] : gr.pieces) ok = ok && d == n + 1;
    ++total;
    good += ok;
    if (!ok) r.details.push_back(to_string(label) + ": unexpected graded piece dimensions");
  }
  r.seconds = seconds_since(start);
  r.passed = good == total;
  r.summary = std::to_string(good) + "/" + std::to_string(total) + " labels";
  return r;
}

CriterionResult check_clebsch_gordan(const VerifyOptions&) {
  CriterionResult r{6, "Clebsch-Gordan dimensions and characters", false, "", {}, 0.0};
  const auto start = Clock::now();
  std::size_t total = 0;
  std::size_t good = 0;
  for (int n = 0; n <= 6; ++n)
    for (int m = -2; m <= 2; ++m)
      for (int n2 = 0; n2 <= 6; ++n2)
        for (int m2 = -2; m2 <= 2; ++m2) {
          const Gl2Label a{n, m};
          const Gl2Label b{n2, m2};
          const auto parts = clebsch_gordan(a, b);
          int dim = 0;
          std::vector<Weight> summed;
          std::map<RepLabel, std::uint64_t> counted;
          for (const auto& p : parts) {
            dim += p.n + 1;
            for (const auto& w : weights_of(p)) summed.push_back(w);
            ++counted[RepLabel{p}];
          }
          const auto product = tensor_weights(to_multiset(weights_of(a)), to_multiset(weights_of(b)));
          const bool ok = dim == (n + 1) * (n2 + 1) && to_multiset(summed) == product && decompose(product) == counted;
          ++total;
          good += ok;
          if (!ok) r.details.push_back(to_string(RepLabel{a}) + " x " + to_string(RepLabel{b}) + " disagrees");
        }
  r.seconds = seconds_since(start);
  r.passed = good == total;
  r.summary = std::to_string(good) + "/" + std::to_string(total) + " pairs";
  return r;
}

bool identity_is_hom(const FiltObject& a) {
  const auto basis = hom_basis(a, a);
  if (a.dim() == 0) return true;
  std::vector<Vec> flat;
  for (const auto& f : basis) flat.push_back(f.entries());
  const auto space = Subspace::span(a.dim() * a.dim(), flat);
  return space.contains(Mat::identity(a.dim()).entries());
}

CriterionResult check_hom_monotone(const VerifyOptions& opt) {
  CriterionResult r{7, "hom(a, a) >= 1 and hom_dim shrinks as constraints are added", false, "", {}, 0.0};
  const auto start = Clock::now();
  Rng rng(opt.seed ^ 0x7777);
  std::size_t good = 0;
  for (std::size_t k = 0; k < kHomSamples; ++k) {
    const auto shape = random_h_shape(rng);
    const auto a = random_filt_object(rng, shape, 5);
    const auto b = random_filt_object(rng, shape, 5);
    bool ok = hom_dim(a, a) >= 1 && identity_is_hom(a);
    std::vector<std::size_t> chain;
    chain.push_back(hom_dim(a, b, {false, 0}));
    for (std::size_t j = 0; j <= shape.filtration_count; ++j) chain.push_back(hom_dim(a, b, {true, j}));
    for (std::size_t j = 1; j < chain.size(); ++j) ok = ok && chain[j] <= chain[j - 1];
    ok = ok && hom_dim(a, b, {false, shape.filtration_count}) >= chain.back();
    good += ok;
    if (!ok) {
      std::string line = "sample " + std::to_string(k) + " chain:";
      for (auto c : chain) line += " " + std::to_string(c);
      r.details.push_back(line);
    }
  }
  r.seconds = seconds_since(start);
  r.passed = good == kHomSamples;
  r.summary = std::to_string(good) + "/" + std::to_string(kHomSamples) + " samples";
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
  std::vector<CriterionResult> out;
  out.push_back(check_rees_roundtrip(options));
  out.push_back(check_fiber_at_zero(options));
  out.push_back(check_binary_forms(options));
  out.push_back(check_matrices(options));
  out.push_back(check_filtration_shape(options));
  out.push_back(check_clebsch_gordan(options));
  out.push_back(check_hom_monotone(options));
  return out;
}

std::vector<std::string> informational_report(const VerifyOptions& options) {
  std::vector<std::string> lines;
  const auto spec = builtin_variety(VarietyName::BinaryQuadraticForms);
  const auto labels = binary_forms_grid().labels(GroupKind::GL2);
  const auto lie_only = multiplicity_table(spec, labels, HStyle::LieOnly);
  const auto full = multiplicity_table(spec, labels, HStyle::LiePlusElements);
  const auto oracle = oracle_table(spec, labels, std::nullopt, options.convention);
  std::size_t lie_only_bad = 0;
  std::string odd;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (lie_only[k].value != oracle[k].value) {
      ++lie_only_bad;
      odd += " " + to_string(labels[k]);
    }
  }
  lines.push_back("binary forms, lie_only stabilizer: " + std::to_string(lie_only_bad) + "/" +
                  std::to_string(labels.size()) + " labels disagree with the oracle:" + odd);
  std::size_t lpe_bad = 0;
  for (std::size_t k = 0; k < labels.size(); ++k) lpe_bad += full[k].value != oracle[k].value;
  lines.push_back("binary forms, lie_plus_elements stabilizer: " + std::to_string(lpe_bad) + "/" +
                  std::to_string(labels.size()) + " labels disagree with the oracle");
  std::string zero = "binary forms, m = 0 column:";
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const auto& g = std::get<Gl2Label>(labels[k]);
    if (g.m == 0) zero += " n=" + std::to_string(g.n) + ":" + std::to_string(full[k].value);
  }
  lines.push_back(zero);
  return lines;
}

std::string format_result_line(const CriterionResult& result) {
  return std::string(result.passed ? "PASS" : "FAIL") + " criterion " + std::to_string(result.id) + ": " +
         result.name + " [" + result.summary + "]";
}

}  // namespace eqvb
