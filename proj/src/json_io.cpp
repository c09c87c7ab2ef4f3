#include "pathclass/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace pathclass {

namespace {

Json coord_to_json(const Rational& x, double d, bool exact_in_double) {
  if (exact_in_double) return d;
  return x.str();  // "p/q"
}

Json point_to_json(const Point& p) {
  Json arr = Json::array();
  for (int i = 0; i < p.dim; ++i) arr.push_back(coord_to_json(p.x[i], p.d[i], p.exact_in_double));
  return arr;
}

Point point_from_json(const Json& arr) {
  if (!arr.is_array() || (arr.size() != 2 && arr.size() != 3))
    throw InputError("point must be an array of 2 or 3 coordinates");
  bool all_numbers = true;
  for (const auto& c : arr)
    if (!c.is_number()) all_numbers = false;
  if (all_numbers) {
    std::vector<double> v;
    for (const auto& c : arr) v.push_back(c.get<double>());
    return Point::from_doubles(v);
  }
  std::vector<std::string> v;
  for (const auto& c : arr) {
    if (c.is_number()) {
      std::ostringstream os;
      os.precision(17);
      os << c.get<double>();
      v.push_back(os.str());
    } else if (c.is_string()) {
      v.push_back(c.get<std::string>());
    } else {
      throw InputError("coordinate must be a number or string");
    }
  }
  return Point::from_strings(v);
}

Json bigint_to_json(const BigInt& v) {
  static const BigInt lo = -((BigInt(1) << 53) - 1);
  static const BigInt hi = (BigInt(1) << 53) - 1;
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

Json position_to_json(const Position& p, int dim) {
  Json arr = Json::array();
  for (int i = 0; i < dim; ++i) arr.push_back(p[i]);
  return arr;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

Scene scene_from_json(const Json& input) {
  const Json* jp = &input;
  if (!input.contains("obstacles") && input.contains("scene")) jp = &input["scene"];
  const Json& j = *jp;
  if (!j.is_object() || !j.contains("dimension") || !j.contains("workspace"))
    throw InputError("scene needs 'dimension' and 'workspace'");
  Scene s;
  s.dim = j["dimension"].get<int>();
  if (s.dim != 2 && s.dim != 3) throw InputError("dimension must be 2 or 3");
  const Json& ws = j["workspace"];
  if (!ws.contains("min") || !ws.contains("max"))
    throw InputError("workspace needs 'min' and 'max'");
  s.ws_min = point_from_json(ws["min"]);
  s.ws_max = point_from_json(ws["max"]);
  if (s.ws_min.dim != s.dim || s.ws_max.dim != s.dim)
    throw InputError("workspace bounds dimension mismatch");

  auto piece_from = [&](const Json& pj) {
    ObstaclePiece piece;
    if (!pj.contains("vertices")) throw InputError("obstacle piece needs 'vertices'");
    for (const auto& vj : pj["vertices"]) {
      Point p = point_from_json(vj);
      if (p.dim != s.dim) throw InputError("obstacle vertex dimension mismatch");
      piece.vertices.push_back(p);
    }
    if (pj.contains("faces"))
      for (const auto& fj : pj["faces"]) {
        if (!fj.is_array() || fj.size() != 3)
          throw InputError("faces must be triangles (3 indices)");
        piece.faces.push_back({fj[0].get<int>(), fj[1].get<int>(), fj[2].get<int>()});
      }
    if (s.dim == 3 && piece.faces.empty())
      throw InputError("3D obstacle pieces need triangulated 'faces'");
    if (s.dim == 2 && piece.vertices.size() >= 3) {
      // normalize polygon orientation to counter-clockwise
      Rational doubled_area = 0;
      const int n = static_cast<int>(piece.vertices.size());
      for (int i = 0; i < n; ++i) {
        const Point& a = piece.vertices[i];
        const Point& b = piece.vertices[(i + 1) % n];
        doubled_area += a.x[0] * b.x[1] - b.x[0] * a.x[1];
      }
      if (doubled_area < 0)
        std::reverse(piece.vertices.begin(), piece.vertices.end());
    }
    return piece;
  };
  if (j.contains("obstacles"))
    for (const auto& oj : j["obstacles"]) {
      Obstacle ob;
      if (!oj.contains("id")) throw InputError("obstacle needs 'id'");
      ob.id = oj["id"].get<int>();
      if (oj.contains("convex_pieces"))
        for (const auto& pj : oj["convex_pieces"]) ob.pieces.push_back(piece_from(pj));
      else
        ob.pieces.push_back(piece_from(oj));
      s.obstacles.push_back(std::move(ob));
    }
  return s;
}

Json scene_to_json(const Scene& scene) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["dimension"] = scene.dim;
  j["workspace"] = {{"min", point_to_json(scene.ws_min)}, {"max", point_to_json(scene.ws_max)}};
  j["obstacles"] = Json::array();
  for (const auto& ob : scene.obstacles) {
    Json oj;
    oj["id"] = ob.id;
    auto piece_json = [&](const ObstaclePiece& piece) {
      Json pj;
      pj["vertices"] = Json::array();
      for (const auto& v : piece.vertices) pj["vertices"].push_back(point_to_json(v));
      if (!piece.faces.empty()) {
        pj["faces"] = Json::array();
        for (const auto& f : piece.faces) pj["faces"].push_back({f[0], f[1], f[2]});
      }
      return pj;
    };
    if (ob.pieces.size() == 1) {
      Json pj = piece_json(ob.pieces[0]);
      for (auto& [k, v] : pj.items()) oj[k] = v;
    } else {
      oj["convex_pieces"] = Json::array();
      for (const auto& piece : ob.pieces) oj["convex_pieces"].push_back(piece_json(piece));
    }
    j["obstacles"].push_back(std::move(oj));
  }
  return j;
}

RobotSpec robot_from_json(const Json& j) {
  if (!j.contains("key_points") || !j.contains("links"))
    throw InputError("robot needs 'key_points' and 'links'");
  RobotSpec spec;
  for (const auto& n : j["key_points"]) spec.key_point_names.push_back(n.get<std::string>());
  for (const auto& lj : j["links"]) {
    if (!lj.is_array() || lj.size() != 3)
      throw InputError("link must be [from, to, length]");
    LinkSpec l;
    l.a = lj[0].is_string() ? spec.key_point(lj[0].get<std::string>()) : lj[0].get<int>();
    l.b = lj[1].is_string() ? spec.key_point(lj[1].get<std::string>()) : lj[1].get<int>();
    l.length = lj[2].get<double>();
    spec.links.push_back(l);
  }
  if (j.contains("link_width")) spec.link_width = j["link_width"].get<double>();
  if (j.contains("joint_limits")) {
    for (const auto& lim : j["joint_limits"]) {
      if (lim.is_null())
        spec.joint_limits.push_back(std::nullopt);
      else
        spec.joint_limits.push_back(std::array<double, 2>{lim[0].get<double>(), lim[1].get<double>()});
    }
  }
  return spec;
}

Json robot_to_json(const RobotSpec& spec) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["key_points"] = spec.key_point_names;
  j["links"] = Json::array();
  for (const auto& l : spec.links)
    j["links"].push_back({spec.key_point_names[l.a], spec.key_point_names[l.b], l.length});
  j["link_width"] = spec.link_width;
  if (!spec.joint_limits.empty()) {
    j["joint_limits"] = Json::array();
    for (const auto& lim : spec.joint_limits) {
      if (lim)
        j["joint_limits"].push_back({(*lim)[0], (*lim)[1]});
      else
        j["joint_limits"].push_back(nullptr);
    }
  }
  return j;
}

std::vector<Configuration> path_from_json(const Json& j, int dim) {
  const Json* arr = nullptr;
  if (j.is_array())
    arr = &j;
  else if (j.contains("configurations"))
    arr = &j["configurations"];
  else
    throw InputError("path file needs a 'configurations' array");
  std::vector<Configuration> out;
  for (const auto& cj : *arr) {
    if (!cj.is_array() || cj.empty()) throw InputError("configuration must be a point array");
    Configuration c;
    for (const auto& pj : cj) {
      if (!pj.is_array() || static_cast<int>(pj.size()) != dim)
        throw InputError("configuration point has wrong dimension");
      Position p{0, 0, 0};
      for (int i = 0; i < dim; ++i) p[i] = pj[i].get<double>();
      c.push_back(p);
    }
    out.push_back(std::move(c));
  }
  if (out.empty()) throw InputError("path file has no configurations");
  return out;
}

Json path_to_json(const std::vector<Configuration>& configs, int dim) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["configurations"] = Json::array();
  for (const auto& c : configs) {
    Json cj = Json::array();
    for (const auto& p : c) cj.push_back(position_to_json(p, dim));
    j["configurations"].push_back(std::move(cj));
  }
  return j;
}

Json decomposition_to_json(const Decomposition& d, bool dump_triangulation) {
  const Triangulation& tri = *d.triangulation;
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["dimension"] = d.scene->dim;
  j["num_obstacles"] = d.scene->num_obstacles();
  j["derived"] = d.derived;
  j["scene"] = scene_to_json(*d.scene);

  j["vertices"] = Json::array();
  for (const auto& v : tri.vertices()) {
    Json vj;
    vj["point"] = point_to_json(v.position);
    vj["obstacles"] = v.obstacle_ids;
    vj["workspace_corner"] = v.workspace_corner;
    j["vertices"].push_back(std::move(vj));
  }
  j["simplices"] = Json::array();
  for (int s = 0; s < static_cast<int>(tri.simplices().size()); ++s) {
    const Simplex& sx = tri.simplices()[s];
    Json sj;
    sj["id"] = s;
    Json vids = Json::array();
    for (int i = 0; i <= tri.dim(); ++i) vids.push_back(sx.v[i]);
    sj["vertices"] = std::move(vids);
    sj["inside_obstacle"] = sx.inside_obstacle;
    sj["region"] = d.simplex_region[s] >= 0 ? Json(d.simplex_region[s]) : Json(nullptr);
    if (dump_triangulation) {
      sj["adjacent_obstacles"] = sx.adjacent_obstacles;
      Json nbrs = Json::array();
      for (int i = 0; i <= tri.dim(); ++i) nbrs.push_back(sx.nbr[i]);
      sj["neighbors"] = std::move(nbrs);
    }
    j["simplices"].push_back(std::move(sj));
  }
  j["regions"] = Json::array();
  for (const auto& r : d.regions) {
    Json rj;
    rj["id"] = r.id;
    rj["label"] = bigint_to_json(r.label);
    rj["obstacles"] = r.obstacles;
    rj["compact"] = r.compact;
    rj["in_pair_hull"] = r.in_pair_hull;
    rj["hole_index"] = r.hole_index;
    rj["simplices"] = r.simplices;
    j["regions"].push_back(std::move(rj));
  }
  j["region_adjacency"] = Json::array();
  for (const auto& e : d.region_adjacency) j["region_adjacency"].push_back({e[0], e[1]});
  Json ga;
  ga["nodes"] = d.adjacency_graph.nodes;
  ga["hyperedges"] = d.adjacency_graph.hyperedges;
  Json pe = Json::array();
  for (const auto& e : d.adjacency_graph.pair_edges()) pe.push_back({e[0], e[1]});
  ga["pair_edges"] = std::move(pe);
  j["adjacency_graph"] = std::move(ga);
  Json sw;
  sw["vertex_count"] = d.workspace_complex.vertex_count;
  sw["edges"] = Json::array();
  for (const auto& e : d.workspace_complex.edges) sw["edges"].push_back({e[0], e[1]});
  sw["triangles"] = Json::array();
  for (const auto& t : d.workspace_complex.triangles)
    sw["triangles"].push_back({t[0], t[1], t[2]});
  j["workspace_complex"] = std::move(sw);
  return j;
}

Json representation_to_json(const PathRepresentation& rep) {
  Json j;
  j["length"] = rep.sequence.size();
  j["states"] = Json::array();
  for (const auto& c : rep.sequence) {
    Json cj;
    cj["encoding"] = c.encoding.str();
    cj["pairs"] = Json::array();
    for (const auto& p : c.pairs) {
      Json pj;
      pj["regions"] = p.regions;
      pj["key_points"] = p.key_points;
      cj["pairs"].push_back(std::move(pj));
    }
    j["states"].push_back(std::move(cj));
  }
  return j;
}

Json certificate_to_json(const NonExistenceCertificate& cert) {
  Json j;
  j["kind"] = cert.kind == NonExistenceCertificate::Kind::connectivity
                  ? "connectivity"
                  : "embedding-infeasible";
  j["heuristic"] = cert.heuristic;
  j["message"] = cert.message;
  j["sequences"] = Json::array();
  for (const auto& s : cert.sequences) {
    Json sj;
    sj["regions"] = s.regions;
    sj["reason"] = s.reason;
    j["sequences"].push_back(std::move(sj));
  }
  return j;
}

Json plan_result_to_json(const PlanResult& result, int dim) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["status"] = result.certificate ? "certificate" : "plan";
  j["plans"] = Json::array();
  for (const auto& p : result.plans) {
    Json pj;
    pj["base_regions"] = p.topo.base_regions;
    pj["representation"] = representation_to_json(p.representation);
    pj["waypoints"] = Json::array();
    for (const auto& c : p.waypoints) {
      Json cj = Json::array();
      for (const auto& pos : c) cj.push_back(position_to_json(pos, dim));
      pj["waypoints"].push_back(std::move(cj));
    }
    j["plans"].push_back(std::move(pj));
  }
  if (result.certificate) j["certificate"] = certificate_to_json(*result.certificate);
  return j;
}

}  // namespace pathclass
