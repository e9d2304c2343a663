// monadctl: command-line front end for monadlab.
//
// Exit codes: 0 success or true, 1 checked-false or refusal, 2 usage or parse error.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monadlab/catalog.hpp"
#include "monadlab/chern.hpp"
#include "monadlab/errors.hpp"
#include "monadlab/io.hpp"

namespace fs = std::filesystem;
using namespace monadlab;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string field;
  std::uint64_t seed = 7;
  int retry_budget = 20;
  bool verbose = false;
  std::string output;
  std::vector<std::string> variety_dirs;
};

std::optional<Field> field_override(const RunConfig& cfg) {
  if (cfg.field.empty()) return std::nullopt;
  return parse_field(cfg.field);
}

VarietyResolver resolver_for(const RunConfig& cfg, const std::optional<fs::path>& near) {
  std::vector<fs::path> dirs;
  for (const auto& d : cfg.variety_dirs) dirs.emplace_back(d);
  if (near) dirs.push_back(near->parent_path().empty() ? fs::path(".") : near->parent_path());
  dirs.push_back(fixture_dir());
  return VarietyResolver(std::move(dirs));
}

void emit(const RunConfig& cfg, const Json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw ParseError("cannot write " + cfg.output);
  out << text;
}

/// A variety argument is a path when it names an existing file or ends in
/// ".json"; otherwise a fixture name.
std::pair<ProjectiveVariety, Json> load_variety(const RunConfig& cfg, const std::string& arg) {
  const auto field = field_override(cfg);
  if (arg.ends_with(".json") || fs::is_regular_file(arg)) {
    auto doc = read_json_file(arg);
    auto v = variety_from_json(doc, field);
    return {std::move(v), std::move(doc)};
  }
  return {resolver_for(cfg, std::nullopt).resolve(arg, field), Json(arg)};
}

LoadedMonad load_monad(const RunConfig& cfg, const std::string& path) {
  return monad_from_json(read_json_file(path), resolver_for(cfg, fs::path(path)), field_override(cfg));
}

DimVector parse_triple(const std::string& text) {
  std::vector<int> v;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw ArgumentError("expected three comma-separated integers, got '" + text + "'");
    v.push_back(x);
  }
  if (v.size() != 3) throw ArgumentError("expected three comma-separated integers, got '" + text + "'");
  return {v[0], v[1], v[2]};
}

std::set<DimVector> load_subdims(const std::string& spec) {
  if (spec.starts_with("preset:")) return subdims_preset(spec.substr(7));
  return subdims_from_json(read_json_file(spec));
}

Json verdict_json(const ExistenceVerdict& v) {
  return Json{{"cond_i", v.cond_i}, {"cond_ii", v.cond_ii}, {"exists", v.exists}};
}

Json assertions_json(const VarietyAssertions& a) {
  Json out = Json::object();
  if (a.acm) out["acm"] = *a.acm;
  if (a.linearly_normal) out["linearly_normal"] = *a.linearly_normal;
  if (a.not_in_quadric) {
    if (*a.not_in_quadric == "compute") out["not_in_quadric"] = "compute";
    else out["not_in_quadric"] = *a.not_in_quadric == "true";
  }
  return out;
}

int cmd_exists(const RunConfig& cfg, int a, int b, int c, int n) {
  const auto v = existence_conditions(a, b, c, n);
  Json doc{{"a", a}, {"b", b}, {"c", c}, {"n", n}};
  doc.update(verdict_json(v));
  if (!v.exists) doc["violated"] = violated_inequalities(a, b, c, n);
  emit(cfg, doc);
  return v.exists ? kOk : kFalse;
}

int cmd_construct(const RunConfig& cfg, const std::string& variety, int a, int b, int c) {
  auto [v, ref] = load_variety(cfg, variety);
  try {
    const MonadSpec m = construct_monad(v, a, b, c, {cfg.seed, cfg.retry_budget});
    emit(cfg, monad_to_json(m, ref.is_string() ? std::optional<Json>(ref) : std::nullopt));
    return kOk;
  } catch (const Refusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
  } catch (const SearchFailure& e) {
    std::cerr << "search failed: " << e.what() << "\n";
  }
  return kFalse;
}

int cmd_verify(const RunConfig& cfg, const std::string& path) {
  const auto loaded = load_monad(cfg, path);
  const auto& m = loaded.monad;
  const auto report = verify_monad(m, cfg.seed);
  Json doc;
  doc["variety"] = m.variety.name();
  doc["n"] = m.variety.dim();
  doc["type"] = {m.a, m.b, m.c};
  doc["degree"] = m.degree;
  doc.update(report_to_json(report));
  if (const auto as = assertions_json(m.variety.assertions()); !as.empty()) doc["asserted"] = as;
  emit(cfg, doc);
  return report.is_monad ? kOk : kFalse;
}

int cmd_dualize(const RunConfig& cfg, const std::string& path) {
  const auto loaded = load_monad(cfg, path);
  emit(cfg, monad_to_json(dualize(loaded.monad), loaded.variety_ref));
  return kOk;
}

int cmd_chern(const RunConfig& cfg, int c, int n, std::optional<int> a, std::optional<int> b) {
  Json doc{{"c", c}, {"n", n}, {"coefficients", chern_series(c, n).coeffs()}};
  int code = kOk;
  if (a || b) {
    if (!a || !b) throw ArgumentError("--a and --b must be given together");
    const auto v = low_rank_shape(*a, *b, c, n);
    doc["low_rank"] = {{"a", *a}, {"b", *b}, {"admissible", v.admissible}, {"reason", v.reason}};
    code = v.admissible ? kOk : kFalse;
  }
  emit(cfg, doc);
  return code;
}

int cmd_semistable(const RunConfig& cfg, const std::string& dims_text, const std::string& lambda_text,
                   const std::string& subs, bool find, int bound) {
  const DimVector d = parse_triple(dims_text);
  const auto subdims = load_subdims(subs);
  Json doc{{"dims", {d.a, d.b, d.c}}, {"subdims", subdims_to_json(subdims)}};
  if (find) {
    if (bound < 1) throw ArgumentError("--bound must be at least 1");
    const auto lambda = find_lambda(d, subdims, bound);
    doc["bound"] = bound;
    doc["lambda"] = lambda ? Json{lambda->l1, lambda->l2, lambda->l3} : Json(nullptr);
    emit(cfg, doc);
    return lambda ? kOk : kFalse;
  }
  if (lambda_text.empty()) throw ArgumentError("give --lambda or --find");
  const DimVector l = parse_triple(lambda_text);
  const LambdaWeight lambda{l.a, l.b, l.c};
  const auto v = king_semistable(d, lambda, subdims);
  doc["lambda"] = {lambda.l1, lambda.l2, lambda.l3};
  doc["semistable"] = v.semistable;
  doc["stable"] = v.stable;
  Json pairings = Json::array();
  for (const auto& s : subdims) pairings.push_back({{"sub", {s.a, s.b, s.c}}, {"pairing", lambda.pair(s)}});
  doc["pairings"] = pairings;
  doc["violator"] = v.violator ? Json{v.violator->a, v.violator->b, v.violator->c} : Json(nullptr);
  emit(cfg, doc);
  return v.semistable ? kOk : kFalse;
}

int cmd_formulas(const RunConfig& cfg, int a, int b, int c, int n, int big_n) {
  if (n < 1 || big_n < 1) throw ArgumentError("n and N must be at least 1");
  const auto f = family_formulas(a, b, c, n, big_n);
  emit(cfg, Json{{"a", a},
                 {"b", b},
                 {"c", c},
                 {"n", n},
                 {"N", big_n},
                 {"h0_K_lower", f.h0_k_lower},
                 {"fiber_dim", f.fiber_dim},
                 {"codimZ_bound", f.codim_z_bound},
                 {"flags", f.flags}});
  return kOk;
}

int cmd_fixtures_list(const RunConfig& cfg) {
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(fixture_dir()))
    if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
  std::sort(names.begin(), names.end());
  Json doc = Json::array();
  for (const auto& n : names) {
    const Json f = read_json_file(fixture_dir() / (n + ".json"));
    const bool is_monad = f.is_object() && f.contains("A");
    doc.push_back({{"name", n}, {"kind", is_monad ? "monad" : f.is_array() ? "subdims" : "variety"}});
  }
  emit(cfg, doc);
  return kOk;
}

/// Writes the Grassmannian documents, which are generated rather than typed.
int cmd_fixtures_emit(const RunConfig& cfg, const std::string& dir, int k) {
  const fs::path out(dir);
  fs::create_directories(out);
  const auto g = grassmannian_g25(field_override(cfg).value_or(default_field()));
  auto write = [&](const std::string& name, const Json& doc) {
    std::ofstream f(out / (name + ".json"));
    if (!f) throw ParseError("cannot write " + (out / (name + ".json")).string());
    f << doc.dump(2) << "\n";
    if (cfg.verbose) std::cerr << "wrote " << (out / (name + ".json")).string() << "\n";
  };
  Json gdoc = variety_to_json(g);
  gdoc["assertions"] = {{"acm", true}, {"linearly_normal", true}, {"not_in_quadric", false}};
  write("g25", gdoc);
  const std::string suffix = "_k" + std::to_string(k);
  write("g25_monad" + suffix, monad_to_json(g25_monad(g, k), Json("g25")));
  write("g25_monad" + suffix + "_lambda", monad_to_json(g25_lambda_monad(g, k), Json("g25")));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify monads on projective varieties"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--field", cfg.field, "Coefficient field: 'q' or a prime (default: $MONADLAB_FIELD, else 32003)");
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("-o,--output", cfg.output, "Write JSON here instead of stdout");
  app.add_option("--variety-dir", cfg.variety_dirs, "Extra directories searched for named varieties");
  app.add_flag("-v,--verbose", cfg.verbose, "Report timing on stderr");

  int a = 0, b = 0, c = 0, n = 0, big_n = 0;
  std::function<int()> run;

  auto* exists = app.add_subcommand("exists", "Existence conditions for a monad of type (a, b, c) on dimension n");
  exists->add_option("a", a)->required();
  exists->add_option("b", b)->required();
  exists->add_option("c", c)->required();
  exists->add_option("n", n)->required();
  exists->callback([&] { run = [&] { return cmd_exists(cfg, a, b, c, n); }; });

  std::string variety;
  auto* construct = app.add_subcommand("construct", "Build a monad of type (a, b, c) on a variety");
  construct->add_option("--variety", variety, "Fixture name or variety JSON file")->required();
  construct->add_option("--a", a)->required();
  construct->add_option("--b", b)->required();
  construct->add_option("--c", c)->required();
  construct->add_option("--budget", cfg.retry_budget, "Retries for the generic reduction")->capture_default_str();
  construct->callback([&] { run = [&] { return cmd_construct(cfg, variety, a, b, c); }; });

  std::string monad_path;
  auto* verify = app.add_subcommand("verify", "Check a monad document");
  verify->add_option("monad", monad_path)->required();
  verify->callback([&] { run = [&] { return cmd_verify(cfg, monad_path); }; });

  auto* dual = app.add_subcommand("dualize", "Transpose a monad document");
  dual->add_option("monad", monad_path)->required();
  dual->callback([&] { run = [&] { return cmd_dualize(cfg, monad_path); }; });

  std::optional<int> ca, cb;
  auto* chern = app.add_subcommand("chern", "Chern series of (1 - l^2 t^2)^(-c) and the low-rank shape test");
  chern->add_option("--c", c)->required();
  chern->add_option("--n", n)->required();
  chern->add_option("--a", ca);
  chern->add_option("--b", cb);
  chern->callback([&] {
    run = [&] {
      if (c < 0 || n < 0) throw ArgumentError("c and n must be nonnegative");
      return cmd_chern(cfg, c, n, ca, cb);
    };
  });

  std::string dims, lambda, subs;
  bool find = false;
  int bound = 10;
  auto* semi = app.add_subcommand("semistable", "King semistability of a dimension vector");
  semi->add_option("--dims", dims, "a,b,c")->required();
  semi->add_option("--lambda", lambda, "l1,l2,l3");
  semi->add_option("--subs", subs, "preset:<name> or a JSON file of [a,b,c] triples")->required();
  semi->add_flag("--find", find, "Search for a weight instead of checking one");
  semi->add_option("--bound", bound, "Search box for --find")->capture_default_str();
  semi->callback([&] { run = [&] { return cmd_semistable(cfg, dims, lambda, subs, find, bound); }; });

  auto* formulas = app.add_subcommand("formulas", "Dimension counts for the family of monads");
  formulas->add_option("--a", a)->required();
  formulas->add_option("--b", b)->required();
  formulas->add_option("--c", c)->required();
  formulas->add_option("--n", n)->required();
  formulas->add_option("--N", big_n)->required();
  formulas->callback([&] { run = [&] { return cmd_formulas(cfg, a, b, c, n, big_n); }; });

  std::string emit_dir;
  int emit_k = 1;
  auto* fixtures = app.add_subcommand("fixtures", "List shipped fixtures or generate the Grassmannian ones");
  fixtures->add_option("--emit", emit_dir, "Directory to write g25 documents into");
  fixtures->add_option("--k", emit_k, "Twist k of the generated Grassmannian monads")->capture_default_str();
  fixtures->callback([&] {
    run = [&] { return emit_dir.empty() ? cmd_fixtures_list(cfg) : cmd_fixtures_emit(cfg, emit_dir, emit_k); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kUsage;
  try {
    field_override(cfg);  // reject a bad --field before any work
    code = run();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ExtractionError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const Refusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    code = kFalse;
  } catch (const SearchFailure& e) {
    std::cerr << "search failed: " << e.what() << "\n";
    code = kFalse;
  }
  if (cfg.verbose) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::cerr << "elapsed " << dt.count() << " s\n";
  }
  return code;
}
