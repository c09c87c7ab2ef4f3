// Command-line front end: decompose scenes into joint covers, classify path
// pairs, plan robot motions, run obstacle-removal what-ifs, and export
// SVG/OBJ renderings.
//
// Exit codes: 0 success (classify: SAME), 2 malformed input, 3 scene
// validation failure, 4 path resolution error, 10 classify DIFFERENT,
// 20 plan non-existence certificate.
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pathclass/exporters.hpp"
#include "pathclass/json_io.hpp"

namespace {

using namespace pathclass;

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 2;
constexpr int kExitValidation = 3;
constexpr int kExitResolution = 4;
constexpr int kExitDifferent = 10;
constexpr int kExitCertificate = 20;

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-")
    std::cout << content << "\n";
  else
    write_text_file(out_path, content);
}

Configuration parse_configuration(const std::string& text, int dim) {
  Configuration config;
  std::istringstream points(text);
  std::string chunk;
  while (std::getline(points, chunk, ';')) {
    std::istringstream coords(chunk);
    std::string c;
    Position p{0, 0, 0};
    int i = 0;
    while (std::getline(coords, c, ',')) {
      if (i >= dim) throw InputError("too many coordinates in '" + chunk + "'");
      p[i++] = std::stod(c);
    }
    if (i != dim) throw InputError("expected " + std::to_string(dim) + " coordinates in '" +
                                   chunk + "'");
    config.push_back(p);
  }
  if (config.empty()) throw InputError("empty configuration '" + text + "'");
  return config;
}

int cmd_decompose(const std::string& scene_path, const std::string& out_path,
                  const std::string& svg_path, const std::string& obj_path,
                  bool dump_triangulation) {
  Scene scene = scene_from_json(read_json_file(scene_path));
  Decomposition d = decompose(scene);
  emit(out_path, decomposition_to_json(d, dump_triangulation).dump(2));
  if (!svg_path.empty()) write_text_file(svg_path, to_svg(d));
  if (!obj_path.empty()) write_text_file(obj_path, to_obj(d));
  return kExitOk;
}

int cmd_remove_obstacle(const std::string& scene_path, int obstacle_id,
                        const std::string& out_path) {
  Scene scene = scene_from_json(read_json_file(scene_path));
  Decomposition d = what_if_remove(decompose(scene), obstacle_id);
  emit(out_path, decomposition_to_json(d, false).dump(2));
  return kExitOk;
}

int cmd_classify(const std::string& scene_path, const std::string& robot_path,
                 const std::string& path_a, const std::string& path_b) {
  Scene scene = scene_from_json(read_json_file(scene_path));
  RobotSpec spec = robot_from_json(read_json_file(robot_path));
  RobotComplex rc = build_complex(spec);
  Decomposition d = decompose(scene);
  auto configs_a = path_from_json(read_json_file(path_a), scene.dim);
  auto configs_b = path_from_json(read_json_file(path_b), scene.dim);
  PathRepresentation ra = path_representation(configs_a, d, rc);
  PathRepresentation rb = path_representation(configs_b, d, rc);
  const bool same = same_class(ra, rb);

  Json out;
  out["schema_version"] = kSchemaVersion;
  out["representation_a"] = representation_to_json(ra);
  out["representation_b"] = representation_to_json(rb);
  out["verdict"] = same ? "SAME" : "DIFFERENT";
  if (scene.dim == 2) {
    // h-signature of the first key point's trace; for a point robot its
    // equality must coincide with the class verdict
    auto polyline = [](const std::vector<Configuration>& cs) {
      std::vector<Position> pl;
      for (const auto& c : cs) pl.push_back(c[0]);
      return pl;
    };
    try {
      HSignature ha = h_signature(polyline(configs_a), scene);
      HSignature hb = h_signature(polyline(configs_b), scene);
      out["h_signature_a"] = ha.str();
      out["h_signature_b"] = hb.str();
      out["h_signature_equal"] = ha == hb;
      if (rc.key_point_count() == 1 && rc.spec.links.empty())
        out["agreement"] = (ha == hb) == same;
    } catch (const InputError&) {
      // base trace clips an obstacle (possible for wide links); no oracle
    }
  }
  std::cout << out.dump(2) << "\n";
  return same ? kExitOk : kExitDifferent;
}

int cmd_plan(const std::string& scene_path, const std::string& robot_path,
             const std::string& start_text, const std::string& goal_text, int alternatives,
             double step, int length_bound, const std::string& out_path,
             const std::string& svg_path) {
  Scene scene = scene_from_json(read_json_file(scene_path));
  RobotSpec spec = robot_from_json(read_json_file(robot_path));
  RobotComplex rc = build_complex(spec);
  Decomposition d = decompose(scene);
  Configuration start = parse_configuration(start_text, scene.dim);
  Configuration goal = parse_configuration(goal_text, scene.dim);
  PlanParams params;
  params.alternatives = alternatives;
  params.step = step;
  params.length_bound = length_bound;
  PlanResult result = plan(d, rc, start, goal, params);
  emit(out_path, plan_result_to_json(result, scene.dim).dump(2));
  for (const auto& p : result.plans) {
    std::cout << "class sequence:";
    for (int r : p.topo.base_regions) std::cout << ' ' << r;
    std::cout << "\n";
  }
  if (!svg_path.empty() && scene.dim == 2) {
    std::vector<std::vector<Position>> overlays;
    for (const auto& p : result.plans) {
      std::vector<Position> pl;
      for (const auto& c : p.waypoints) pl.push_back(c[0]);
      overlays.push_back(std::move(pl));
    }
    write_text_file(svg_path, to_svg(d, overlays));
  }
  return result.certificate ? kExitCertificate : kExitOk;
}

int cmd_export(const std::string& input_path, const std::string& svg_path,
               const std::string& obj_path) {
  Scene scene = scene_from_json(read_json_file(input_path));
  Decomposition d = decompose(scene);
  if (svg_path.empty() && obj_path.empty())
    throw InputError("export needs --svg or --obj");
  if (!svg_path.empty()) write_text_file(svg_path, to_svg(d));
  if (!obj_path.empty()) write_text_file(obj_path, to_obj(d));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"joint-cover workspace decomposition, path classes, and planning"};
  app.require_subcommand(1);
  // reserved: fixes stochastic tie-breaks (none at present)
  if (const char* seed = std::getenv("PATHCLASS_SEED"); seed != nullptr) {
    // no stochastic components yet; accepted for forward compatibility
  }

  std::string scene_path, robot_path, path_a, path_b, out_path, svg_path, obj_path;
  std::string start_text, goal_text, input_path;
  bool dump_triangulation = false;
  int obstacle_id = 0, alternatives = 1, length_bound = 12;
  double step = 0.25;

  auto* dec = app.add_subcommand("decompose", "build the joint cover of a scene");
  dec->add_option("scene", scene_path)->required();
  dec->add_option("--out", out_path);
  dec->add_option("--svg", svg_path);
  dec->add_option("--obj", obj_path);
  dec->add_flag("--dump-triangulation", dump_triangulation);

  auto* rem = app.add_subcommand("remove-obstacle", "joint cover after removing an obstacle");
  rem->add_option("scene", scene_path)->required();
  rem->add_option("id", obstacle_id)->required();
  rem->add_option("--out", out_path);

  auto* cls = app.add_subcommand("classify", "compare two paths' classes");
  cls->add_option("scene", scene_path)->required();
  cls->add_option("robot", robot_path)->required();
  cls->add_option("path_a", path_a)->required();
  cls->add_option("path_b", path_b)->required();

  auto* pln = app.add_subcommand("plan", "plan class-distinct robot motions");
  pln->add_option("scene", scene_path)->required();
  pln->add_option("robot", robot_path)->required();
  pln->add_option("--start", start_text)->required();
  pln->add_option("--goal", goal_text)->required();
  pln->add_option("--alternatives", alternatives);
  pln->add_option("--step", step);
  pln->add_option("--length-bound", length_bound);
  pln->add_option("--out", out_path);
  pln->add_option("--svg", svg_path);

  auto* exp = app.add_subcommand("export", "render a scene or decomposition");
  exp->add_option("input", input_path)->required();
  exp->add_option("--svg", svg_path);
  exp->add_option("--obj", obj_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (dec->parsed())
      return cmd_decompose(scene_path, out_path, svg_path, obj_path, dump_triangulation);
    if (rem->parsed()) return cmd_remove_obstacle(scene_path, obstacle_id, out_path);
    if (cls->parsed()) return cmd_classify(scene_path, robot_path, path_a, path_b);
    if (pln->parsed())
      return cmd_plan(scene_path, robot_path, start_text, goal_text, alternatives, step,
                      length_bound, out_path, svg_path);
    if (exp->parsed()) return cmd_export(input_path, svg_path, obj_path);
  } catch (const ResolutionError& e) {
    std::cerr << "resolution error at step " << e.step << ": " << e.what() << "\n";
    return kExitResolution;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DegeneracyError& e) {
    std::cerr << "degenerate geometry: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}
