#include "eqvb/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "eqvb/error.hpp"
#include "eqvb/grid.hpp"
#include "eqvb/hom.hpp"
#include "eqvb/json_io.hpp"
#include "eqvb/rees.hpp"
#include "eqvb/verification.hpp"

namespace eqvb {

namespace {

using json_io::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::Parse, "cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

json read_json(const std::string& path, std::istream& in) {
  const std::string source = path.empty() || path == "-" ? "<stdin>" : path;
  return json_io::parse(read_input(path, in), source);
}

std::vector<int> parse_ints(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      while (used < item.size() && item[used] == ' ') ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Parse, what + ": expected comma-separated integers, got \"" + text + "\"");
    }
  }
  return out;
}

// "2,2", "[2,2]", "1,0,1,0" or "[[1,0],[1,0]]".
RepLabel parse_label(const std::string& text) {
  if (!text.empty() && text.front() == '[') return json_io::label_from_json(json_io::parse(text, "--label"), "--label");
  const auto v = parse_ints(text, "--label");
  if (v.size() == 2) return Gl2Label{v[0], v[1]};
  if (v.size() == 4) return Gl2PairLabel{{v[0], v[1]}, {v[2], v[3]}};
  throw Error(ErrorKind::Parse, "--label: expected 2 or 4 integers, got \"" + text + "\"");
}

HStyle parse_style(const std::string& name) {
  if (name == "lie_only") return HStyle::LieOnly;
  if (name == "lie_plus_elements") return HStyle::LiePlusElements;
  throw Error(ErrorKind::UnknownName, "unknown --h-style " + name);
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

void emit_table(std::ostream& out, const CliConfig& cfg, const std::vector<TableRow>& rows, GroupKind group,
                const std::string& column) {
  if (cfg.format == OutputFormat::Tsv) {
    out << json_io::to_tsv(rows, group, column);
  } else {
    emit(out, json_io::to_json(rows));
  }
}

json matrix_rows(const Mat& m) { return json_io::to_json(m); }

// Options shared by the multiplicity and oracle subcommands.
struct TableArgs {
  std::string variety;
  std::string variety_file;
  std::string label;
  std::string rep_file;
};

VarietySpec load_variety(const TableArgs& a, std::istream& in) {
  if (!a.variety.empty() && !a.variety_file.empty()) {
    throw Error(ErrorKind::InvalidArgument, "give --variety or --variety-file, not both");
  }
  if (!a.variety_file.empty()) return json_io::variety_from_json(read_json(a.variety_file, in));
  if (a.variety.empty()) throw Error(ErrorKind::InvalidArgument, "missing --variety or --variety-file");
  return builtin_variety(a.variety);
}

std::vector<RepLabel> table_labels(const TableArgs& a, const CliConfig& cfg, GroupKind group) {
  if (!a.label.empty() && !cfg.grid.empty()) throw Error(ErrorKind::InvalidArgument, "give --label or --grid, not both");
  if (!a.label.empty()) return {parse_label(a.label)};
  if (cfg.grid.empty()) throw Error(ErrorKind::InvalidArgument, "missing --label or --grid");
  return LabelGrid::parse(cfg.grid).labels(group);
}

json variety_json(const VarietySpec& v) {
  json cochars = json::array();
  for (const auto& mu : v.boundary_cocharacters) cochars.push_back(mu.components);
  json lie = json::array();
  for (const auto& x : v.stabilizer.lie_elements) lie.push_back(json_io::to_json(x));
  json elements = json::array();
  for (const auto& g : v.stabilizer.group_elements) {
    json parts = json::array();
    for (const auto& m : g) parts.push_back(matrix_rows(m));
    elements.push_back(parts);
  }
  json weights = json::array();
  for (const auto& w : v.x_module_weights) weights.push_back(w.components);
  return json{{"name", to_string(v.name)},
              {"group", to_string(v.group)},
              {"action", v.action},
              {"base_point", v.base_point},
              {"boundary_cocharacters", cochars},
              {"module_weights", weights},
              {"stabilizer_lie", lie},
              {"stabilizer_elements", elements}};
}

}  // namespace

std::string conventions_json(const CliConfig& config) {
  json j;
  j["convention"] = to_string(config.convention);
  j["coordinate_ring"] = config.convention == Convention::DualModule ? "k[X]_d = Sym^d(U^*) for X = U"
                                                                     : "k[X]_d = Sym^d(U) for X = U";
  j["actions"] = "left actions; (g.f)(x) = f(g^-1 x) on functions";
  j["gl2_basis"] = "(n,m) = Sym^n V (x) det^m in the basis x^(n-j) y^j, j = 0..n, of weight (n-j+m, j+m)";
  j["sym_power_matrix"] = "entry (i,j) = coefficient of x^(n-j) y^j in (a x + b y)^(n-i) (c x + d y)^i";
  j["lie_basis"] = "E11, E12, E21, E22 per GL2 factor";
  j["dual"] = "(n,m)^* = (n, -n-m)";
  j["filtration"] = "F^i = sum of weight spaces V_chi with -<mu,chi> >= i";
  j["rees"] = "generator v of level p has degree -p; derees F^p = span of generators of degree <= -p";
  j["h_style"] = to_string(config.style);
  j["hom_zero_dim"] = "Hom(0,0) has dimension 1; any other Hom involving 0 has dimension 0";
  j["varieties"] = json::array({variety_json(builtin_variety(VarietyName::BinaryQuadraticForms)),
                                variety_json(builtin_variety(VarietyName::TwoByTwoMatrices))});
  return j.dump(2);
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Filtered representations, Rees modules and coordinate-ring multiplicities", "eqvb"};
  app.fallthrough();

  CliConfig cfg;
  std::string format = "json";
  std::string convention = "dual";
  std::string style = "lie_plus_elements";
  bool print_conventions = false;
  int max_degree = -1;

  app.add_option("--format", format, "Output format for tables")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--grid", cfg.grid, "Label ranges, e.g. n=0..8,m=-6..6");
  app.add_option("--max-degree", max_degree, "Largest degree searched by the oracle")->check(CLI::NonNegativeNumber);
  app.add_option("--convention", convention, "Dualization placement")->check(CLI::IsMember({"dual", "direct"}));
  app.add_option("--h-style", style, "Stabilizer constraints")
      ->check(CLI::IsMember({"lie_only", "lie_plus_elements"}));
  app.add_flag("--print-conventions", print_conventions, "Print the fixed conventions as JSON");

  std::string input;
  auto* rees = app.add_subcommand("rees", "FilteredSpace JSON -> graded free module JSON");
  rees->add_option("input", input, "Input file, - for stdin");
  auto* derees_cmd = app.add_subcommand("derees", "Graded free module JSON -> FilteredSpace JSON");
  derees_cmd->add_option("input", input, "Input file, - for stdin");
  auto* gr = app.add_subcommand("gr", "FilteredSpace JSON -> associated graded dimensions");
  gr->add_option("input", input, "Input file, - for stdin");

  TableArgs targs;
  std::string cocharacter;
  auto* filtration = app.add_subcommand("filtration", "Cocharacter filtration of a representation");
  filtration->add_option("--label", targs.label, "Label, e.g. 2,2 or 1,0,1,0");
  filtration->add_option("--rep-file", targs.rep_file, "Representation JSON");
  filtration->add_option("--variety", targs.variety, "Built-in variety");
  filtration->add_option("--variety-file", targs.variety_file, "Variety JSON");
  filtration->add_option("--cocharacter", cocharacter, "Comma-separated cocharacter");

  std::string source_file;
  std::string target_file;
  auto* hom = app.add_subcommand("hom-dim", "Dimension of Hom between two filtered objects");
  hom->add_option("source", source_file, "Source object JSON")->required();
  hom->add_option("target", target_file, "Target object JSON")->required();

  auto* mult = app.add_subcommand("multiplicity", "Multiplicities from the filtered side");
  auto* oracle = app.add_subcommand("oracle", "Multiplicities from characters of k[X]");
  for (auto* sub : {mult, oracle}) {
    sub->add_option("--variety", targs.variety, "Built-in variety");
    sub->add_option("--variety-file", targs.variety_file, "Variety JSON");
    sub->add_option("--label", targs.label, "Label, e.g. 2,2 or 1,0,1,0");
  }
  mult->add_option("--rep-file", targs.rep_file, "Representation JSON, for varieties of a generic group");

  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance checks and print a report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    cfg.format = format == "tsv" ? OutputFormat::Tsv : OutputFormat::Json;
    cfg.convention = parse_convention(convention);
    cfg.style = parse_style(style);
    if (max_degree >= 0) cfg.max_degree = max_degree;

    if (print_conventions) {
      out << conventions_json(cfg) << '\n';
      if (app.get_subcommands().empty()) return kExitOk;
    }

    if (rees->parsed()) {
      emit(out, json_io::to_json(rees_construct(json_io::filtered_from_json(read_json(input, in)))));
    } else if (derees_cmd->parsed()) {
      emit(out, json_io::to_json(derees(json_io::module_from_json(read_json(input, in)))));
    } else if (gr->parsed()) {
      const auto g = associated_graded(json_io::filtered_from_json(read_json(input, in)));
      if (cfg.format == OutputFormat::Tsv) {
        out << "degree\tdim\n";
        for (const auto& [p, d] : g.pieces) out << p << '\t' << d << '\n';
      } else {
        emit(out, json_io::to_json(g));
      }
    } else if (filtration->parsed()) {
      if (targs.label.empty() == targs.rep_file.empty()) {
        throw Error(ErrorKind::InvalidArgument, "give exactly one of --label and --rep-file");
      }
      const RepData rep = targs.rep_file.empty() ? make_rep(parse_label(targs.label))
                                                 : json_io::rep_from_json(read_json(targs.rep_file, in));
      std::vector<Cocharacter> mus;
      if (!cocharacter.empty()) {
        if (!targs.variety.empty() || !targs.variety_file.empty()) {
          throw Error(ErrorKind::InvalidArgument, "give --cocharacter or a variety, not both");
        }
        mus.push_back(Cocharacter{parse_ints(cocharacter, "--cocharacter")});
      } else {
        mus = load_variety(targs, in).boundary_cocharacters;
      }
      if (mus.size() == 1) {
        emit(out, json_io::to_json(cocharacter_filtration(rep, mus.front())));
      } else {
        json all = json::array();
        for (const auto& mu : mus) all.push_back(json_io::to_json(cocharacter_filtration(rep, mu)));
        emit(out, all);
      }
    } else if (hom->parsed()) {
      const auto a = json_io::filt_object_from_json(read_json(source_file, in));
      const auto b = json_io::filt_object_from_json(read_json(target_file, in));
      out << hom_dim(a, b) << '\n';
    } else if (mult->parsed()) {
      const auto spec = load_variety(targs, in);
      if (!targs.rep_file.empty()) {
        if (!targs.label.empty() || !cfg.grid.empty()) {
          throw Error(ErrorKind::InvalidArgument, "--rep-file excludes --label and --grid");
        }
        out << multiplicity(json_io::rep_from_json(read_json(targs.rep_file, in)), spec, cfg.style) << '\n';
      } else {
        const auto labels = table_labels(targs, cfg, spec.group);
        emit_table(out, cfg, multiplicity_table(spec, labels, cfg.style), spec.group, "multiplicity");
      }
    } else if (oracle->parsed()) {
      const auto spec = load_variety(targs, in);
      const auto labels = table_labels(targs, cfg, spec.group);
      emit_table(out, cfg, oracle_table(spec, labels, cfg.max_degree, cfg.convention), spec.group, "oracle");
    } else if (verify->parsed()) {
      VerifyOptions opt;
      opt.style = cfg.style;
      opt.convention = cfg.convention;
      bool all = true;
      for (const auto& r : run_acceptance(opt)) {
        out << format_result_line(r) << '\n';
        for (const auto& d : r.details) out << "    " << d << '\n';
        all = all && r.passed;
      }
      for (const auto& line : informational_report(opt)) out << "INFO " << line << '\n';
      out << (all ? "all criteria passed" : "some criteria FAILED") << '\n';
      return all ? kExitOk : kExitVerifyFailed;
    } else {
      err << app.help();
      return kExitInputError;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitInputError;
  } catch (const json::exception& e) {
    err << "error (Parse): " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace eqvb
