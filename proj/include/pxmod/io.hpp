#ifndef PXMOD_IO_HPP
#define PXMOD_IO_HPP

#include "pxmod/pcm.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace pxmod {

using nlohmann::json;

/// Structurally malformed input (bad JSON shape, unknown variety, missing
/// key). Distinct from ValidationError so callers can map the two to
/// different exit codes.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// References inside action/pcm/morphism files are either inline objects or
// strings holding a path relative to the referencing file's directory.

json group_to_json(const FiniteGroup& g);
GroupRef group_from_json(const json& j);

json algebra_to_json(const StructAlgebra& a);
AlgebraRef algebra_from_json(const json& j);

json matrix_to_json(const Mat& m);
Mat matrix_from_json(const Field& k, const json& j);

json action_to_json(const GroupAction& a);
GroupAction group_action_from_json(const json& j, const std::filesystem::path& dir);

json action_to_json(const AlgebraAction& a);
AlgebraAction algebra_action_from_json(const json& j, const std::filesystem::path& dir);

json pcm_to_json(const GroupPcm& p);
json pcm_to_json(const AlgebraPcm& p);

/// Exactly one of the two members is set, per the file's variety tag.
struct LoadedPcm {
  std::optional<GroupPcmRef> group;
  std::optional<AlgebraPcmRef> algebra;
};

LoadedPcm pcm_from_json(const json& j, const std::filesystem::path& dir);
LoadedPcm load_pcm(const std::filesystem::path& path);

json morphism_to_json(const GroupPXMorphism& f);
json morphism_to_json(const AlgebraPXMorphism& f);

json subobject_to_json(const GroupSubPcm& s);   // sorted index list
json subobject_to_json(const AlgebraSubPcm& s); // echelon basis matrix

/// Parses a file after reading it from disk; ParseError on bad JSON.
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace pxmod

#endif
