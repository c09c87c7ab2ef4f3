// JSON schemas: scene/robot/path loading and decomposition/plan/
// classification serialization. All emitters produce deterministic,
// insertion-ordered output; exact non-double coordinates round-trip as
// "p/q" strings.
#pragma once

#include <string>

#include <json.hpp>

#include "pathclass/planner.hpp"

namespace pathclass {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json read_json_file(const std::string& path);  // InputError on parse failure
void write_text_file(const std::string& path, const std::string& content);

Scene scene_from_json(const Json& j);  // also accepts a decompose output (embedded scene)
Json scene_to_json(const Scene& scene);

RobotSpec robot_from_json(const Json& j);
Json robot_to_json(const RobotSpec& spec);

std::vector<Configuration> path_from_json(const Json& j, int dim);
Json path_to_json(const std::vector<Configuration>& configs, int dim);

Json decomposition_to_json(const Decomposition& d, bool dump_triangulation);

Json representation_to_json(const PathRepresentation& rep);
Json plan_result_to_json(const PlanResult& result, int dim);
Json certificate_to_json(const NonExistenceCertificate& cert);

}  // namespace pathclass
