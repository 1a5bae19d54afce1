#include "eqvb/json_io.hpp"

#include <sstream>

#include "eqvb/error.hpp"

namespace eqvb::json_io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::Parse, path + ": " + msg);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

int int_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::size_t nat_from_json(const json& j, const std::string& path) {
  const int v = int_from_json(j, path);
  if (v < 0) fail(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& path, const char* key) { return path + "." + key; }

// Re-raise semantic errors of the library with the payload path attached.
template <typename F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    throw Error(e.kind(), path + ": " + e.what());
  }
}

Weight weight_from_json(const json& j, const std::string& path) {
  Weight w;
  const json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) w.components.push_back(int_from_json(arr[i], at(path, i)));
  return w;
}

Gl2Label gl2_label_from_json(const json& j, const std::string& path) {
  const json& arr = array_at(j, path);
  if (arr.size() != 2) fail(path, "expected [n, m]");
  const int n = int_from_json(arr[0], at(path, 0));
  if (n < 0) fail(at(path, 0), "n must be nonnegative");
  return {n, int_from_json(arr[1], at(path, 1))};
}

GroupKind group_from_json(const json& j, const std::string& path) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "GL2") return GroupKind::GL2;
    if (s == "GL2xGL2") return GroupKind::GL2xGL2;
    if (s == "generic") return GroupKind::Generic;
    fail(path, "unknown group '" + s + "'");
  }
  fail(path, "expected a group name");
}

}  // namespace

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

json to_json(const Vec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

Vec vec_from_json(const json& j, const std::string& path) {
  const json& arr = array_at(j, path);
  Vec v;
  v.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) v.push_back(rat_from_json(arr[i], at(path, i)));
  return v;
}

json to_json(const Mat& m) {
  json arr = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) arr.push_back(to_json(m.row_vec(r)));
  return arr;
}

Mat mat_from_json(const json& j, const std::string& path) {
  const json& arr = array_at(j, path);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < arr.size(); ++r) rows.push_back(vec_from_json(arr[r], at(path, r)));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(at(path, r), "ragged matrix row");
  }
  return Mat::from_rows(cols, rows);
}

json to_json(const FilteredSpace& f) {
  json steps = json::array();
  for (const auto& [index, s] : f.levels()) {
    json basis = json::array();
    for (const auto& v : s.basis()) basis.push_back(to_json(v));
    steps.push_back({{"index", index}, {"basis", basis}});
  }
  return {{"dim", f.dim()}, {"steps", steps}};
}

FilteredSpace filtered_from_json(const json& j, const std::string& path) {
  const std::size_t dim = nat_from_json(field(j, "dim", path), dot(path, "dim"));
  const std::string spath = dot(path, "steps");
  const json& steps = array_at(field(j, "steps", path), spath);
  std::map<int, Subspace> map;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const std::string kpath = at(spath, k);
    const int index = int_from_json(field(steps[k], "index", kpath), dot(kpath, "index"));
    const std::string bpath = dot(kpath, "basis");
    const json& basis = array_at(field(steps[k], "basis", kpath), bpath);
    std::vector<Vec> vecs;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Vec v = vec_from_json(basis[b], at(bpath, b));
      if (v.size() != dim) {
        throw Error(ErrorKind::AmbientMismatch, at(bpath, b) + ": vector length " + std::to_string(v.size()) +
                                                    " differs from dim " + std::to_string(dim));
      }
      vecs.push_back(std::move(v));
    }
    if (!map.emplace(index, Subspace::span(dim, vecs)).second) fail(kpath, "duplicate index " + std::to_string(index));
  }
  return with_path(path, [&] { return FilteredSpace::make(dim, map); });
}

json to_json(const GradedVectorSpace& g) {
  json obj = json::object();
  for (const auto& [deg, d] : g.pieces) obj[std::to_string(deg)] = d;
  return obj;
}

json to_json(const GradedFreeModule& m) {
  json gens = json::array();
  for (const auto& g : m.generators()) gens.push_back({{"vector", to_json(g.vector)}, {"degree", g.degree}});
  return {{"ambient_dim", m.ambient_dim()}, {"generators", gens}};
}

GradedFreeModule module_from_json(const json& j, const std::string& path) {
  const std::size_t dim = nat_from_json(field(j, "ambient_dim", path), dot(path, "ambient_dim"));
  const std::string gpath = dot(path, "generators");
  const json& gens = array_at(field(j, "generators", path), gpath);
  std::vector<GradedFreeModule::Generator> out;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string kpath = at(gpath, k);
    out.push_back({vec_from_json(field(gens[k], "vector", kpath), dot(kpath, "vector")),
                   int_from_json(field(gens[k], "degree", kpath), dot(kpath, "degree"))});
  }
  return with_path(path, [&] { return GradedFreeModule(dim, std::move(out)); });
}

json to_json(const RepLabel& label) {
  if (const auto* l = std::get_if<Gl2Label>(&label)) return json::array({l->n, l->m});
  const auto& p = std::get<Gl2PairLabel>(label);
  return json::array({json::array({p.left.n, p.left.m}), json::array({p.right.n, p.right.m})});
}

RepLabel label_from_json(const json& j, const std::string& path) {
  const json& arr = array_at(j, path);
  if (arr.size() == 2 && arr[0].is_array()) {
    return Gl2PairLabel{gl2_label_from_json(arr[0], at(path, 0)), gl2_label_from_json(arr[1], at(path, 1))};
  }
  return gl2_label_from_json(arr, path);
}

json to_json(const RepData& rep) {
  json weights = json::array();
  for (const auto& w : rep.weights) weights.push_back(w.components);
  json ops = json::array();
  for (const auto& op : rep.lie_ops) ops.push_back(to_json(op));
  json out = {{"group", to_string(rep.group)}, {"dim", rep.dim}, {"weights", weights}, {"ops", ops}};
  if (auto label = rep.label()) out["label"] = to_json(*label);
  return out;
}

RepData rep_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  if (j.contains("label")) {
    const RepLabel label = label_from_json(j["label"], dot(path, "label"));
    if (j.contains("group")) {
      const GroupKind g = group_from_json(j["group"], dot(path, "group"));
      const GroupKind expect = std::holds_alternative<Gl2Label>(label) ? GroupKind::GL2 : GroupKind::GL2xGL2;
      if (g != expect) fail(dot(path, "label"), "label shape does not match group " + to_string(g));
    }
    return make_rep(label);
  }
  RepData rep;
  rep.group = j.contains("group") ? group_from_json(j["group"], dot(path, "group")) : GroupKind::Generic;
  rep.dim = nat_from_json(field(j, "dim", path), dot(path, "dim"));
  const std::string wpath = dot(path, "weights");
  const json& ws = array_at(field(j, "weights", path), wpath);
  for (std::size_t i = 0; i < ws.size(); ++i) rep.weights.push_back(weight_from_json(ws[i], at(wpath, i)));
  if (j.contains("ops")) {
    const std::string opath = dot(path, "ops");
    const json& ops = array_at(j["ops"], opath);
    for (std::size_t i = 0; i < ops.size(); ++i) rep.lie_ops.push_back(mat_from_json(ops[i], at(opath, i)));
  }
  with_path(path, [&] { rep.validate(); return 0; });
  return rep;
}

json to_json(const GroupActionData& h) {
  json cs = json::array();
  for (const auto& c : h.constraints) cs.push_back(to_json(c));
  return {{"dim", h.dim}, {"constraints", cs}};
}

GroupActionData group_action_from_json(const json& j, const std::string& path) {
  GroupActionData h;
  h.dim = nat_from_json(field(j, "dim", path), dot(path, "dim"));
  const std::string cpath = dot(path, "constraints");
  const json& cs = array_at(field(j, "constraints", path), cpath);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    Mat m = mat_from_json(cs[i], at(cpath, i));
    if (m.rows() != h.dim || m.cols() != h.dim) {
      throw Error(ErrorKind::DimensionMismatch, at(cpath, i) + ": constraint is not dim x dim");
    }
    h.constraints.push_back(std::move(m));
  }
  return h;
}

FiltObject filt_object_from_json(const json& j, const std::string& path) {
  FiltObject obj;
  obj.rep = rep_from_json(field(j, "rep", path), dot(path, "rep"));
  if (j.contains("h_action")) {
    obj.h_action = group_action_from_json(j["h_action"], dot(path, "h_action"));
  } else {
    obj.h_action.dim = obj.rep.dim;
  }
  if (j.contains("filtrations")) {
    const std::string fpath = dot(path, "filtrations");
    const json& fs = array_at(j["filtrations"], fpath);
    for (std::size_t i = 0; i < fs.size(); ++i) obj.filtrations.push_back(filtered_from_json(fs[i], at(fpath, i)));
  }
  with_path(path, [&] { obj.validate(); return 0; });
  return obj;
}

VarietySpec variety_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  VarietySpec spec;
  spec.name = VarietyName::Custom;
  if (j.contains("group")) {
    spec.group = group_from_json(j["group"], dot(path, "group"));
  } else {
    const int rank = int_from_json(field(j, "group_rank", path), dot(path, "group_rank"));
    if (rank == 2) spec.group = GroupKind::GL2;
    else if (rank == 4) spec.group = GroupKind::GL2xGL2;
    else spec.group = GroupKind::Generic;
  }
  if (j.contains("cocharacters")) {
    const std::string cpath = dot(path, "cocharacters");
    const json& cs = array_at(j["cocharacters"], cpath);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      spec.boundary_cocharacters.push_back(Cocharacter{weight_from_json(cs[i], at(cpath, i)).components});
    }
  }
  if (j.contains("x_module_weights")) {
    const std::string wpath = dot(path, "x_module_weights");
    const json& ws = array_at(j["x_module_weights"], wpath);
    for (std::size_t i = 0; i < ws.size(); ++i) spec.x_module_weights.push_back(weight_from_json(ws[i], at(wpath, i)));
  }
  const char* stab_key = j.contains("stabilizer") ? "stabilizer" : (j.contains("stabilizer_ops") ? "stabilizer_ops" : nullptr);
  if (stab_key != nullptr) {
    const std::string spath = dot(path, stab_key);
    const json& st = j[stab_key];
    if (!st.is_object()) fail(spath, "expected an object");
    if (st.contains("lie")) {
      const json& lie = array_at(st["lie"], dot(spath, "lie"));
      for (std::size_t i = 0; i < lie.size(); ++i) {
        const std::string epath = at(dot(spath, "lie"), i);
        // Either raw coordinates or a list of 2x2 matrices (one per factor).
        if (!lie[i].empty() && lie[i][0].is_array()) {
          Vec coords;
          for (std::size_t f = 0; f < lie[i].size(); ++f) {
            const Vec c = gl2_lie_coordinates(mat_from_json(lie[i][f], at(epath, f)));
            coords.insert(coords.end(), c.begin(), c.end());
          }
          spec.stabilizer.lie_elements.push_back(std::move(coords));
        } else {
          spec.stabilizer.lie_elements.push_back(vec_from_json(lie[i], epath));
        }
      }
    }
    if (st.contains("elements")) {
      const std::string epath = dot(spath, "elements");
      const json& els = array_at(st["elements"], epath);
      for (std::size_t i = 0; i < els.size(); ++i) {
        GroupElement g;
        const json& factors = array_at(els[i], at(epath, i));
        for (std::size_t f = 0; f < factors.size(); ++f) g.push_back(mat_from_json(factors[f], at(at(epath, i), f)));
        spec.stabilizer.group_elements.push_back(std::move(g));
      }
    }
  }
  spec.action = j.value("action", std::string("custom"));
  spec.base_point = j.value("base_point", std::string("custom"));
  with_path(path, [&] { spec.validate(); return 0; });
  return spec;
}

json to_json(const std::vector<TableRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back({{"label", to_json(r.label)}, {"value", r.value}});
  return arr;
}

std::string to_tsv(const std::vector<TableRow>& rows, GroupKind group, const std::string& value_column) {
  std::ostringstream os;
  os << (group == GroupKind::GL2xGL2 ? "n\tm\tn2\tm2\t" : "n\tm\t") << value_column << '\n';
  for (const auto& r : rows) {
    if (const auto* l = std::get_if<Gl2Label>(&r.label)) {
      os << l->n << '\t' << l->m;
    } else {
      const auto& p = std::get<Gl2PairLabel>(r.label);
      os << p.left.n << '\t' << p.left.m << '\t' << p.right.n << '\t' << p.right.m;
    }
    os << '\t' << r.value << '\n';
  }
  return os.str();
}

json parse(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, source + ": " + e.what());
  }
}

}  // namespace eqvb::json_io
