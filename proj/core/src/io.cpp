#include "higherk/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "higherk/errors.hpp"
#include "higherk/suite.hpp"

namespace higherk {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, where + ": " + what);
}

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed,
               std::initializer_list<const char*> required = {}) {
  if (!j.is_object()) fail(where, "expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) fail(where, "unknown key '" + k + "'");
  for (const char* r : required)
    if (!j.contains(r)) fail(where, std::string("missing key '") + r + "'");
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::size_t as_size(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list");
  return j;
}

Rational rational_at(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "rationals are written as strings \"p\" or \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error&) {
    fail(where, "malformed rational '" + j.get<std::string>() + "'");
  }
}

json matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_at(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  as_array(j, where);
  // a map into or out of a zero space may be written as []
  if (rows == 0 || cols == 0) {
    for (const auto& r : j)
      if (!r.is_array() || !r.empty()) fail(where, "expected an empty matrix");
    if (j.size() != rows && !j.empty()) fail(where, "expected " + std::to_string(rows) + " rows");
    return RationalMatrix(rows, cols);
  }
  if (j.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& r = as_array(j[i], where);
    if (r.size() != cols)
      fail(where, "row " + std::to_string(i) + " has " + std::to_string(r.size()) + " entries, expected " +
                      std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_at(r[c], where);
  }
  return m;
}

json module_json(const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  json o;
  o["dims"] = m.dims();
  json maps = json::object();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) maps[q.arrow(a).name] = matrix_json(m.arrow_map(a));
  o["maps"] = std::move(maps);
  return o;
}

Representation module_at(const AlgebraPtr& a, const json& j, const std::string& where) {
  only_keys(j, where, {"dims", "maps"}, {"dims"});
  const Quiver& q = a->quiver();
  const auto& dj = as_array(j["dims"], where + ".dims");
  if (dj.size() != q.vertex_count())
    fail(where + ".dims", "expected " + std::to_string(q.vertex_count()) + " entries");
  std::vector<std::size_t> dims;
  for (const auto& x : dj) dims.push_back(as_size(x, where + ".dims"));
  std::vector<RationalMatrix> maps;
  for (const auto& arr : q.arrows()) maps.emplace_back(dims[arr.target], dims[arr.source]);
  if (j.contains("maps")) {
    const auto& mj = j["maps"];
    if (!mj.is_object()) fail(where + ".maps", "expected an object keyed by arrow name");
    for (const auto& [name, mat] : mj.items()) {
      std::size_t idx = 0;
      try {
        idx = q.arrow_index(name);
      } catch (const std::exception&) {
        fail(where + ".maps", "unknown arrow '" + name + "'");
      }
      const auto& arr = q.arrow(idx);
      maps[idx] = matrix_at(mat, dims[arr.target], dims[arr.source], where + ".maps." + name);
    }
  }
  try {
    return Representation(a, dims, maps);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

json ses_json(const ShortExactSequence& s) {
  json o;
  o["a"] = module_json(s.a);
  o["b"] = module_json(s.b);
  o["c"] = module_json(s.c);
  json inj = json::array(), sur = json::array();
  for (const auto& m : s.inject.vertex_maps()) inj.push_back(matrix_json(m));
  for (const auto& m : s.surject.vertex_maps()) sur.push_back(matrix_json(m));
  o["inject"] = std::move(inj);
  o["surject"] = std::move(sur);
  return o;
}

json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json imatrix_json(const IntegerMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Rational parse_rational(std::string_view s) {
  auto bad = [&] { throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(s) + "'"); };
  auto integer_ok = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num(s.substr(0, slash));
  if (!integer_ok(num)) bad();
  if (num[0] == '+') num.erase(0, 1);
  if (slash == std::string_view::npos) return Rational(Integer(num));
  std::string den(s.substr(slash + 1));
  if (!integer_ok(den) || den[0] == '-' || den[0] == '+') bad();
  Integer d(den);
  if (d == 0) bad();
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

const Representation& AlgebraFile::module(const std::string& name) const {
  for (const auto& [n, m] : modules)
    if (n == name) return m;
  throw Error(ErrorCode::InvalidInput, "no module named '" + name + "'");
}

AlgebraFile parse_algebra_file(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("not valid JSON: ") + e.what());
  }
  only_keys(j, "file", {"vertices", "arrows", "relations", "nilpotency_bound", "modules", "tilting"},
            {"vertices", "arrows"});

  std::vector<std::string> vertices;
  for (const auto& v : as_array(j["vertices"], "vertices")) vertices.push_back(as_string(v, "vertices"));
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const auto& a : as_array(j["arrows"], "arrows")) {
    only_keys(a, "arrows", {"name", "from", "to"}, {"name", "from", "to"});
    arrows.emplace_back(as_string(a["name"], "arrows.name"), as_string(a["from"], "arrows.from"),
                        as_string(a["to"], "arrows.to"));
  }
  Quiver q;
  try {
    q = Quiver(vertices, arrows);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail("quiver", e.what());
  }

  std::vector<PathExpression> relations;
  if (j.contains("relations")) {
    for (const auto& rel : as_array(j["relations"], "relations")) {
      PathExpression e;
      for (const auto& term : as_array(rel, "relations")) {
        only_keys(term, "relations", {"coef", "path"}, {"coef", "path"});
        std::vector<std::string> names;
        for (const auto& n : as_array(term["path"], "relations.path")) names.push_back(as_string(n, "relations.path"));
        if (names.empty()) fail("relations.path", "trivial paths cannot occur in relations");
        Path p;
        try {
          p = make_path(q, names);
        } catch (const Error&) {
          throw;
        } catch (const std::exception& ex) {
          fail("relations.path", ex.what());
        }
        e.terms.push_back({rational_at(term["coef"], "relations.coef"), p});
      }
      relations.push_back(std::move(e));
    }
  }
  std::size_t bound = j.contains("nilpotency_bound") ? as_size(j["nilpotency_bound"], "nilpotency_bound")
                                                      : default_nilpotency_bound(q);

  AlgebraFile out;
  out.algebra = build_algebra(q, relations, bound);
  if (j.contains("modules")) {
    const auto& mj = j["modules"];
    if (!mj.is_object()) fail("modules", "expected an object keyed by module name");
    for (const auto& [name, m] : mj.items()) out.modules.emplace_back(name, module_at(out.algebra, m, "modules." + name));
  }
  if (j.contains("tilting")) {
    const auto& tj = j["tilting"];
    only_keys(tj, "tilting", {"d", "summands"}, {"d", "summands"});
    TiltingSpec spec;
    spec.d = as_size(tj["d"], "tilting.d");
    if (spec.d == 0) fail("tilting.d", "d must be at least 1");
    for (const auto& s : as_array(tj["summands"], "tilting.summands")) {
      spec.summands.push_back(as_string(s, "tilting.summands"));
      (void)out.module(spec.summands.back());
    }
    out.tilting = spec;
  }
  return out;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra_file(ss.str());
}

TiltingData tilting_from_file(const AlgebraFile& f) {
  if (!f.tilting) throw Error(ErrorCode::InvalidInput, "the file has no tilting block");
  std::vector<Representation> summands;
  for (const auto& n : f.tilting->summands) summands.push_back(f.module(n));
  return make_tilting_data(f.algebra, f.tilting->d, summands, f.tilting->summands);
}

std::string write_algebra_file(const AlgebraPtr& a, const std::vector<NamedModule>& modules,
                               const std::optional<TiltingSpec>& tilting) {
  const Quiver& q = a->quiver();
  json o;
  o["vertices"] = q.vertices();
  json arrows = json::array();
  for (const auto& arr : q.arrows())
    arrows.push_back({{"name", arr.name}, {"from", q.vertices()[arr.source]}, {"to", q.vertices()[arr.target]}});
  o["arrows"] = std::move(arrows);
  json rels = json::array();
  for (const auto& r : a->relations()) {
    json terms = json::array();
    for (const auto& t : r.terms) {
      json path = json::array();
      for (auto x : t.path.arrows) path.push_back(q.arrow(x).name);
      terms.push_back({{"coef", rational_to_string(t.coefficient)}, {"path", std::move(path)}});
    }
    rels.push_back(std::move(terms));
  }
  o["relations"] = std::move(rels);
  o["nilpotency_bound"] = a->nilpotency_bound();
  if (!modules.empty()) {
    json mods = json::object();
    for (const auto& [name, m] : modules) mods[name] = module_json(m);
    o["modules"] = std::move(mods);
  }
  if (tilting) o["tilting"] = {{"d", tilting->d}, {"summands", tilting->summands}};
  return o.dump(2) + "\n";
}

std::string write_tilting_file(const TiltingData& t) {
  std::vector<NamedModule> mods;
  for (std::size_t i = 0; i < t.size(); ++i) mods.emplace_back(t.labels[i], t.summands[i]);
  return write_algebra_file(t.algebra, mods, TiltingSpec{t.d, t.labels});
}

std::string module_to_json(const Representation& m) { return module_json(m).dump(); }

Representation module_from_json(const AlgebraPtr& a, std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("not valid JSON: ") + e.what());
  }
  return module_at(a, j, "module");
}

std::string ses_to_json(const ShortExactSequence& s) { return ses_json(s).dump(); }

std::string integer_matrix_to_json(const IntegerMatrix& m) { return imatrix_json(m).dump(); }

std::string report_to_json(const SuiteReport& r) {
  json o;
  o["passed"] = r.passed();
  o["seed"] = r.seed;
  o["probes"] = r.probes;
  o["d"] = r.d;
  o["summands"] = r.summands;
  o["indecomposables"] = r.indecomposables;
  json versions = json::object();
  for (const auto& [k, v] : r.versions) versions[k] = v;
  o["versions"] = std::move(versions);
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj;
    cj["name"] = std::string(check_name(c.kind));
    cj["verdict"] = std::string(verdict_name(c.verdict));
    cj["summary"] = c.summary;
    cj["details"] = c.details;
    json mats = json::object();
    for (const auto& [name, m] : c.matrices) mats[name] = imatrix_json(m);
    cj["matrices"] = std::move(mats);
    json ws = json::array();
    for (const auto& w : c.witnesses) {
      json wj;
      wj["description"] = w.description;
      wj["data"] = w.data.empty() ? json(nullptr) : json::parse(w.data);
      ws.push_back(std::move(wj));
    }
    cj["witnesses"] = std::move(ws);
    if (c.seconds) cj["seconds"] = *c.seconds;
    checks.push_back(std::move(cj));
  }
  o["checks"] = std::move(checks);
  return o.dump(2) + "\n";
}

}  // namespace higherk
