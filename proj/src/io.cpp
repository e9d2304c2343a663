#include "monadlab/io.hpp"

#include <cstdlib>
#include <fstream>
#include <set>

#include "monadlab/errors.hpp"
#include "monadlab/parser.hpp"

#ifndef MONADLAB_FIXTURE_DIR
#define MONADLAB_FIXTURE_DIR "fixtures"
#endif

namespace monadlab {

namespace {

void require_keys(const Json& doc, const std::string& what, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional) {
  if (!doc.is_object()) throw ParseError(what + " must be a JSON object");
  std::set<std::string> known;
  for (const char* k : required) {
    if (!doc.contains(k)) throw ParseError(what + " is missing \"" + k + "\"");
    known.insert(k);
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) throw ParseError(what + " has unknown key \"" + key + "\"");
}

void require_version(const Json& doc, const std::string& what) {
  if (!doc.at("version").is_number_integer() || doc.at("version").get<int>() != kSchemaVersion)
    throw ParseError(what + " has unsupported version " + doc.at("version").dump() + " (expected " +
                     std::to_string(kSchemaVersion) + ")");
}

template <typename T>
T get_as(const Json& doc, const char* key, const std::string& what) {
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(what + ": \"" + key + "\" has the wrong type");
  }
}

Polynomial parse_entry(const Json& e, const Ring& ring, std::span<const std::string> names, const std::string& where) {
  if (!e.is_string()) throw ParseError(where + " must be an expression string");
  try {
    return parse_polynomial(e.get<std::string>(), ring, names);
  } catch (const ParseError& err) {
    throw ParseError(where + ": " + err.what());
  }
}

PolyMatrix matrix_from_json(const Json& rows, std::size_t nrows, std::size_t ncols, const Ring& ring,
                            std::span<const std::string> names, const std::string& what) {
  if (!rows.is_array() || rows.size() != nrows)
    throw ParseError(what + " must have " + std::to_string(nrows) + " rows");
  PolyMatrix m(ring, nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    if (!rows[r].is_array() || rows[r].size() != ncols)
      throw ParseError(what + " row " + std::to_string(r) + " must have " + std::to_string(ncols) + " entries");
    for (std::size_t c = 0; c < ncols; ++c)
      m(r, c) = parse_entry(rows[r][c], ring, names, what + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

Json field_to_json(Field f) { return Json{{"char", f.characteristic()}}; }

Field field_from_json(const Json& doc) {
  require_keys(doc, "field", {"char"}, {});
  if (!doc.at("char").is_number_integer() || doc.at("char").get<std::int64_t>() < 0) throw ParseError("field \"char\" must be a nonnegative integer");
  try {
    return Field::from_characteristic(doc.at("char").get<std::uint32_t>());
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Field parse_field(const std::string& text) {
  if (text == "q" || text == "Q" || text == "0") return Field::rationals();
  std::size_t used = 0;
  unsigned long p = 0;
  try {
    p = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw ArgumentError("field must be 'q' or a prime, got '" + text + "'");
  if (p > 0xFFFFFFFFul) throw ArgumentError("field characteristic too large: " + text);
  return Field::prime(static_cast<std::uint32_t>(p));
}

Field default_field() {
  if (const char* env = std::getenv("MONADLAB_FIELD"); env && *env) return parse_field(env);
  return Field();
}

ProjectiveVariety variety_from_json(const Json& doc, const std::optional<Field>& field) {
  const std::string what = "variety document";
  require_keys(doc, what, {"version", "name", "N", "vars", "generators"}, {"field", "assertions", "parametrization"});
  require_version(doc, what);
  const auto name = get_as<std::string>(doc, "name", what);
  const int big_n = get_as<int>(doc, "N", what);
  const auto vars = get_as<std::vector<std::string>>(doc, "vars", what);
  if (big_n < 1 || static_cast<int>(vars.size()) != big_n + 1)
    throw ParseError(what + " '" + name + "': N = " + std::to_string(big_n) + " needs " + std::to_string(big_n + 1) +
                     " variable names, got " + std::to_string(vars.size()));
  if (big_n + 1 > kMaxVars) throw ParseError(what + " '" + name + "' has too many variables");
  const Field f = field ? *field : doc.contains("field") ? field_from_json(doc.at("field")) : default_field();
  const Ring ring(f, big_n + 1);

  std::vector<Polynomial> gens;
  const Json& g = doc.at("generators");
  if (!g.is_array()) throw ParseError(what + ": \"generators\" must be an array");
  for (std::size_t i = 0; i < g.size(); ++i)
    gens.push_back(parse_entry(g[i], ring, vars, "generator " + std::to_string(i)));

  ProjectiveVariety v(name, ring, std::move(gens), vars);

  if (doc.contains("assertions")) {
    const Json& a = doc.at("assertions");
    require_keys(a, "assertions", {}, {"acm", "linearly_normal", "not_in_quadric"});
    VarietyAssertions as;
    if (a.contains("acm")) as.acm = get_as<bool>(a, "acm", "assertions");
    if (a.contains("linearly_normal")) as.linearly_normal = get_as<bool>(a, "linearly_normal", "assertions");
    if (a.contains("not_in_quadric")) {
      const Json& q = a.at("not_in_quadric");
      if (q.is_boolean()) as.not_in_quadric = q.get<bool>() ? "true" : "false";
      else if (q == "compute") as.not_in_quadric = "compute";
      else throw ParseError("assertions: \"not_in_quadric\" must be a boolean or \"compute\"");
    }
    v.set_assertions(as);
  }

  if (doc.contains("parametrization")) {
    const Json& p = doc.at("parametrization");
    require_keys(p, "parametrization", {"params", "coords"}, {});
    const auto params = get_as<std::vector<std::string>>(p, "params", "parametrization");
    if (params.empty() || params.size() > static_cast<std::size_t>(kMaxVars))
      throw ParseError("parametrization needs between 1 and 32 parameters");
    const Ring pring(f, static_cast<int>(params.size()));
    const Json& coords = p.at("coords");
    if (!coords.is_array() || coords.size() != vars.size())
      throw ParseError("parametrization needs one coordinate expression per variable");
    std::vector<Polynomial> cs;
    for (std::size_t i = 0; i < coords.size(); ++i)
      cs.push_back(parse_entry(coords[i], pring, params, "parametrization coordinate " + std::to_string(i)));
    v.set_parametrization({pring, std::move(cs), params});
  }
  return v;
}

Json variety_to_json(const ProjectiveVariety& v) {
  Json doc;
  doc["version"] = kSchemaVersion;
  doc["name"] = v.name();
  doc["N"] = v.ambient_dim();
  doc["field"] = field_to_json(v.ring().field);
  doc["vars"] = v.variable_names();
  Json gens = Json::array();
  for (const auto& g : v.ideal().generators()) gens.push_back(g.to_string(v.variable_names()));
  doc["generators"] = gens;
  const auto& a = v.assertions();
  if (a.acm || a.linearly_normal || a.not_in_quadric) {
    Json as = Json::object();
    if (a.acm) as["acm"] = *a.acm;
    if (a.linearly_normal) as["linearly_normal"] = *a.linearly_normal;
    if (a.not_in_quadric) {
      if (*a.not_in_quadric == "compute") as["not_in_quadric"] = "compute";
      else as["not_in_quadric"] = *a.not_in_quadric == "true";
    }
    doc["assertions"] = as;
  }
  if (const auto& p = v.parametrization()) {
    const auto params = p->names.empty() ? default_variable_names(p->params.nvars, "t") : p->names;
    Json coords = Json::array();
    for (const auto& c : p->coords) coords.push_back(c.to_string(params));
    doc["parametrization"] = Json{{"params", params}, {"coords", coords}};
  }
  return doc;
}

VarietyResolver::VarietyResolver(std::vector<std::filesystem::path> dirs) : dirs_(std::move(dirs)) {
  if (dirs_.empty()) dirs_.push_back(fixture_dir());
}

std::filesystem::path VarietyResolver::locate(const std::string& name) const {
  if (name.empty() || name.find('/') != std::string::npos || name.find("..") != std::string::npos)
    throw ParseError("invalid variety name '" + name + "'");
  for (const auto& d : dirs_) {
    const auto p = d / (name + ".json");
    if (std::filesystem::exists(p)) return p;
  }
  throw ParseError("unknown variety '" + name + "'");
}

ProjectiveVariety VarietyResolver::resolve(const std::string& name, const std::optional<Field>& field) const {
  return variety_from_json(read_json_file(locate(name)), field);
}

LoadedMonad monad_from_json(const Json& doc, const VarietyResolver& resolver, const std::optional<Field>& field) {
  const std::string what = "monad document";
  require_keys(doc, what, {"version", "variety", "degree", "a", "b", "c", "A", "B"}, {"description"});
  require_version(doc, what);
  const Json& ref = doc.at("variety");
  ProjectiveVariety v = ref.is_string() ? resolver.resolve(ref.get<std::string>(), field)
                        : ref.is_object() ? variety_from_json(ref, field)
                                          : throw ParseError(what + ": \"variety\" must be a name or an object");
  const int degree = get_as<int>(doc, "degree", what);
  const int a = get_as<int>(doc, "a", what), b = get_as<int>(doc, "b", what), c = get_as<int>(doc, "c", what);
  if (a < 0 || b < 0 || c < 0 || degree < 1) throw ParseError(what + ": ranks must be nonnegative and degree positive");
  const auto& names = v.variable_names();
  PolyMatrix A = matrix_from_json(doc.at("A"), static_cast<std::size_t>(b), static_cast<std::size_t>(a), v.ring(), names, "A");
  PolyMatrix B = matrix_from_json(doc.at("B"), static_cast<std::size_t>(c), static_cast<std::size_t>(b), v.ring(), names, "B");
  try {
    return {make_monad(std::move(v), degree, a, b, c, std::move(A), std::move(B)), ref};
  } catch (const StructuralError& e) {
    throw ParseError(what + ": " + e.what());
  }
}

Json matrix_to_json(const PolyMatrix& m, std::span<const std::string> names) {
  Json rows = Json::array();
  for (const auto& row : m.to_strings(names)) rows.push_back(row);
  return rows;
}

Json monad_to_json(const MonadSpec& m, const std::optional<Json>& variety_ref) {
  Json doc;
  doc["version"] = kSchemaVersion;
  doc["variety"] = variety_ref ? *variety_ref : variety_to_json(m.variety);
  doc["degree"] = m.degree;
  doc["a"] = m.a;
  doc["b"] = m.b;
  doc["c"] = m.c;
  const auto& names = m.variety.variable_names();
  doc["A"] = matrix_to_json(m.A, names);
  doc["B"] = matrix_to_json(m.B, names);
  return doc;
}

Json report_to_json(const VerificationReport& r) {
  Json doc;
  doc["complex_ok"] = r.complex_ok;
  doc["g_surjective"] = r.g_surjective;
  doc["g_degeneracy_dim"] = r.g_degeneracy_dim;
  doc["f_degeneracy_dim"] = r.f_degeneracy_dim;
  doc["expected_codim"] = r.expected_codim;
  doc["f_codim_ok"] = r.f_codim_ok;
  doc["is_monad"] = r.is_monad;
  doc["is_bundle"] = r.is_bundle;
  doc["rank"] = r.rank;
  doc["witness"] = r.witness ? Json(r.witness->to_string()) : Json(nullptr);
  if (r.witness) doc["witness_reason"] = r.witness_reason;
  return doc;
}

std::set<DimVector> subdims_from_json(const Json& doc) {
  if (!doc.is_array()) throw ParseError("subdimension file must be a JSON list of [a, b, c] triples");
  std::set<DimVector> out;
  for (const auto& t : doc) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
        !t[2].is_number_integer())
      throw ParseError("subdimension entry " + t.dump() + " is not an [a, b, c] triple");
    out.insert({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  }
  return out;
}

Json subdims_to_json(const std::set<DimVector>& s) {
  Json out = Json::array();
  for (const auto& d : s) out.push_back({d.a, d.b, d.c});
  return out;
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("MONADLAB_FIXTURES"); env && *env) return env;
  return MONADLAB_FIXTURE_DIR;
}

}  // namespace monadlab
