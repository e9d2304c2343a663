#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monadlab/monads.hpp"
#include "monadlab/quiver.hpp"

namespace monadlab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Reads and parses a JSON file; ParseError on I/O or syntax problems.
Json read_json_file(const std::filesystem::path& path);

/// Field named by MONADLAB_FIELD ("q" or a prime), or GF(32003).
Field default_field();
/// "q", "Q", "0" for the rationals, otherwise a prime. ArgumentError if invalid.
Field parse_field(const std::string& text);

/// Variety document: version, name, N, field, vars, generators, optional
/// assertions and parametrization. A field override replaces the document's.
ProjectiveVariety variety_from_json(const Json& doc, const std::optional<Field>& field = std::nullopt);
Json variety_to_json(const ProjectiveVariety& v);

/// Locates variety documents referenced by name: <dir>/<name>.json for each
/// search directory in order.
class VarietyResolver {
 public:
  explicit VarietyResolver(std::vector<std::filesystem::path> dirs = {});
  std::filesystem::path locate(const std::string& name) const;
  ProjectiveVariety resolve(const std::string& name, const std::optional<Field>& field) const;

 private:
  std::vector<std::filesystem::path> dirs_;
};

struct LoadedMonad {
  MonadSpec monad;
  Json variety_ref;  // the name string or inline object from the document
};

/// Monad document: version, variety (name or inline), degree, a, b, c, A, B.
LoadedMonad monad_from_json(const Json& doc, const VarietyResolver& resolver,
                            const std::optional<Field>& field = std::nullopt);
/// `variety_ref` defaults to the variety inlined.
Json monad_to_json(const MonadSpec& m, const std::optional<Json>& variety_ref = std::nullopt);

Json matrix_to_json(const PolyMatrix& m, std::span<const std::string> names);
Json report_to_json(const VerificationReport& r);

std::set<DimVector> subdims_from_json(const Json& doc);
Json subdims_to_json(const std::set<DimVector>& s);

/// Directory of the fixtures shipped with the sources (MONADLAB_FIXTURES
/// overrides the compiled-in path).
std::filesystem::path fixture_dir();

}  // namespace monadlab
