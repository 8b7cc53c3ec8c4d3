#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "kcn/canonical.hpp"
#include "kcn/instance.hpp"

namespace kcn {

using Json = nlohmann::ordered_json;

/// Planar balls are written as "disk", all others as "ball".
Json to_json(const Instance& inst);
Json to_json(const Solution& sol);
Json to_json(const CandidateSets& sets);

/// Throw InputError on malformed documents; instances are also validated.
Instance instance_from_json(const Json& j);
Solution solution_from_json(const Json& j);

/// Canonical text form: two-space indentation and a trailing newline.
std::string dump(const Json& j);

Json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace kcn
