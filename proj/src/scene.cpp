#include "pathclass/scene.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace pathclass {

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t seed) {
  return fnv1a(s.data(), s.size(), seed);
}

const Obstacle& Scene::obstacle_by_id(int id) const {
  for (const auto& ob : obstacles)
    if (ob.id == id) return ob;
  throw QueryError("unknown obstacle id " + std::to_string(id));
}

std::vector<Point> Scene::corners() const {
  std::vector<Point> out;
  if (dim == 2) {
    for (int iy = 0; iy < 2; ++iy)
      for (int ix = 0; ix < 2; ++ix) {
        const Rational cs[2] = {ix ? ws_max.x[0] : ws_min.x[0],
                                iy ? ws_max.x[1] : ws_min.x[1]};
        out.push_back(Point::from_rationals(std::span<const Rational>(cs, 2)));
      }
  } else {
    for (int iz = 0; iz < 2; ++iz)
      for (int iy = 0; iy < 2; ++iy)
        for (int ix = 0; ix < 2; ++ix) {
          const Rational cs[3] = {ix ? ws_max.x[0] : ws_min.x[0],
                                  iy ? ws_max.x[1] : ws_min.x[1],
                                  iz ? ws_max.x[2] : ws_min.x[2]};
          out.push_back(Point::from_rationals(std::span<const Rational>(cs, 3)));
        }
  }
  return out;
}

bool Scene::point_in_workspace(const Point& p) const {
  if (p.dim != dim) throw InputError("dimension mismatch");
  for (int i = 0; i < dim; ++i)
    if (p.x[i] < ws_min.x[i] || p.x[i] > ws_max.x[i]) return false;
  return true;
}

Placement Scene::classify(const Point& p, const Obstacle& ob) const {
  bool on_boundary = false;
  for (const auto& piece : ob.pieces) {
    Polytope poly{ob.id, dim, piece.vertices, piece.faces};
    Placement pl = point_in_polytope(p, poly);
    if (pl == Placement::interior) return Placement::interior;
    if (pl == Placement::boundary) on_boundary = true;
  }
  return on_boundary ? Placement::boundary : Placement::exterior;
}

int Scene::inside_obstacle_id(const Point& p) const {
  for (const auto& ob : obstacles)
    if (classify(p, ob) == Placement::interior) return ob.id;
  return 0;
}

Placement Scene::classify_any(const Point& p) const {
  bool on_boundary = false;
  for (const auto& ob : obstacles) {
    Placement pl = classify(p, ob);
    if (pl == Placement::interior) return Placement::interior;
    if (pl == Placement::boundary) on_boundary = true;
  }
  return on_boundary ? Placement::boundary : Placement::exterior;
}

namespace {

double sq_point_triangle(const std::array<double, 3>& p, const std::array<double, 3>& a,
                         const std::array<double, 3>& b, const std::array<double, 3>& c) {
  // project onto the triangle plane; fall back to edge distances
  double ab[3], ac[3], ap[3];
  for (int i = 0; i < 3; ++i) {
    ab[i] = b[i] - a[i];
    ac[i] = c[i] - a[i];
    ap[i] = p[i] - a[i];
  }
  double n[3] = {ab[1] * ac[2] - ab[2] * ac[1], ab[2] * ac[0] - ab[0] * ac[2],
                 ab[0] * ac[1] - ab[1] * ac[0]};
  double nn = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
  if (nn > 1e-30) {
    double t = (ap[0] * n[0] + ap[1] * n[1] + ap[2] * n[2]) / nn;
    std::array<double, 3> q{};
    for (int i = 0; i < 3; ++i) q[i] = p[i] - t * n[i];
    // barycentric inside test
    double d00 = 0, d01 = 0, d11 = 0, d20 = 0, d21 = 0;
    double aq[3];
    for (int i = 0; i < 3; ++i) aq[i] = q[i] - a[i];
    for (int i = 0; i < 3; ++i) {
      d00 += ab[i] * ab[i];
      d01 += ab[i] * ac[i];
      d11 += ac[i] * ac[i];
      d20 += aq[i] * ab[i];
      d21 += aq[i] * ac[i];
    }
    double denom = d00 * d11 - d01 * d01;
    if (std::fabs(denom) > 1e-30) {
      double v = (d11 * d20 - d01 * d21) / denom;
      double w = (d00 * d21 - d01 * d20) / denom;
      if (v >= 0 && w >= 0 && v + w <= 1) {
        double d2 = 0;
        for (int i = 0; i < 3; ++i) d2 += (p[i] - q[i]) * (p[i] - q[i]);
        return d2;
      }
    }
  }
  double best = std::numeric_limits<double>::infinity();
  best = std::min(best, squared_distance_point_segment(p, a, b, 3));
  best = std::min(best, squared_distance_point_segment(p, b, c, 3));
  best = std::min(best, squared_distance_point_segment(p, c, a, 3));
  return best;
}

double obstacle_pair_distance(const Scene& scene, const Obstacle& oa, const Obstacle& ob) {
  double best = std::numeric_limits<double>::infinity();
  if (scene.dim == 2) {
    for (const auto& pa : oa.pieces)
      for (const auto& pb : ob.pieces) {
        const int na = static_cast<int>(pa.vertices.size());
        const int nb = static_cast<int>(pb.vertices.size());
        for (int i = 0; i < na; ++i)
          for (int j = 0; j < nb; ++j)
            best = std::min(best, squared_distance_segment_segment(
                                      pa.vertices[i].d, pa.vertices[(i + 1) % na].d,
                                      pb.vertices[j].d, pb.vertices[(j + 1) % nb].d, 2));
      }
    return std::sqrt(best);
  }
  auto piece_edges = [](const ObstaclePiece& p) {
    std::set<std::pair<int, int>> es;
    for (const auto& f : p.faces)
      for (int k = 0; k < 3; ++k) {
        int u = f[k], v = f[(k + 1) % 3];
        es.insert({std::min(u, v), std::max(u, v)});
      }
    return es;
  };
  for (const auto& pa : oa.pieces)
    for (const auto& pb : ob.pieces) {
      auto ea = piece_edges(pa), eb = piece_edges(pb);
      for (const auto& [u1, v1] : ea)
        for (const auto& [u2, v2] : eb)
          best = std::min(best, squared_distance_segment_segment(
                                    pa.vertices[u1].d, pa.vertices[v1].d,
                                    pb.vertices[u2].d, pb.vertices[v2].d, 3));
      for (const auto& va : pa.vertices)
        for (const auto& f : pb.faces)
          best = std::min(best, sq_point_triangle(va.d, pb.vertices[f[0]].d,
                                                  pb.vertices[f[1]].d, pb.vertices[f[2]].d));
      for (const auto& vb : pb.vertices)
        for (const auto& f : pa.faces)
          best = std::min(best, sq_point_triangle(vb.d, pa.vertices[f[0]].d,
                                                  pa.vertices[f[1]].d, pa.vertices[f[2]].d));
    }
  return std::sqrt(best);
}

void validate_polygon(const ObstaclePiece& piece, int id) {
  const auto& vs = piece.vertices;
  const int n = static_cast<int>(vs.size());
  if (n < 3)
    throw ValidationError("obstacle " + std::to_string(id) + ": polygon needs >= 3 vertices");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (vs[i].same_coords(vs[j]))
        throw ValidationError("obstacle " + std::to_string(id) + ": repeated vertex");
  // simplicity: non-adjacent edges must not touch
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_touch(vs[i], vs[(i + 1) % n], vs[j], vs[(j + 1) % n]))
        throw ValidationError("obstacle " + std::to_string(id) + ": polygon self-intersects");
    }
  }
}

void validate_mesh(const ObstaclePiece& piece, int id, bool require_convex) {
  const auto& vs = piece.vertices;
  const int n = static_cast<int>(vs.size());
  if (n < 4 || piece.faces.empty())
    throw ValidationError("obstacle " + std::to_string(id) + ": 3D piece needs faces");
  std::map<std::pair<int, int>, int> directed;
  for (const auto& f : piece.faces) {
    for (int k = 0; k < 3; ++k) {
      int u = f[k], v = f[(k + 1) % 3];
      if (u < 0 || u >= n || v < 0 || v >= n || u == v)
        throw ValidationError("obstacle " + std::to_string(id) + ": bad face index");
      if (++directed[{u, v}] > 1)
        throw ValidationError("obstacle " + std::to_string(id) + ": non-manifold edge");
    }
  }
  for (const auto& [e, cnt] : directed)
    if (!directed.count({e.second, e.first}))
      throw ValidationError("obstacle " + std::to_string(id) + ": boundary not closed");
  if (!require_convex) return;
  // single-piece obstacles must be convex up to a tolerance that admits
  // small vertex perturbations of a convex body
  double diameter = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d2 = 0;
      for (int k = 0; k < 3; ++k) d2 += (vs[i].d[k] - vs[j].d[k]) * (vs[i].d[k] - vs[j].d[k]);
      diameter = std::max(diameter, std::sqrt(d2));
    }
  const double tolerance = 0.05 * diameter;
  for (const auto& f : piece.faces) {
    double nx[3], e1[3], e2[3];
    for (int k = 0; k < 3; ++k) {
      e1[k] = vs[f[1]].d[k] - vs[f[0]].d[k];
      e2[k] = vs[f[2]].d[k] - vs[f[0]].d[k];
    }
    nx[0] = e1[1] * e2[2] - e1[2] * e2[1];
    nx[1] = e1[2] * e2[0] - e1[0] * e2[2];
    nx[2] = e1[0] * e2[1] - e1[1] * e2[0];
    double len = std::sqrt(nx[0] * nx[0] + nx[1] * nx[1] + nx[2] * nx[2]);
    if (len < 1e-30) continue;
    double lo = 0, hi = 0;
    for (int i = 0; i < n; ++i) {
      double dot = 0;
      for (int k = 0; k < 3; ++k) dot += (vs[i].d[k] - vs[f[0]].d[k]) * nx[k] / len;
      lo = std::min(lo, dot);
      hi = std::max(hi, dot);
    }
    // all vertices should sit on one side of each supporting face plane
    if (std::min(-lo, hi) > tolerance)
      throw ValidationError("obstacle " + std::to_string(id) +
                            ": concave 3D body; decompose it into convex_pieces");
  }
}

// closed-set contact between two obstacles (different ids)
bool obstacles_touch(const Scene& scene, const Obstacle& oa, const Obstacle& ob) {
  if (scene.dim == 2) {
    for (const auto& pa : oa.pieces) {
      for (const auto& va : pa.vertices)
        if (scene.classify(va, ob) != Placement::exterior) return true;
    }
    for (const auto& pb : ob.pieces) {
      for (const auto& vb : pb.vertices)
        if (scene.classify(vb, oa) != Placement::exterior) return true;
    }
    for (const auto& pa : oa.pieces) {
      const int na = static_cast<int>(pa.vertices.size());
      for (const auto& pb : ob.pieces) {
        const int nb = static_cast<int>(pb.vertices.size());
        for (int i = 0; i < na; ++i)
          for (int j = 0; j < nb; ++j)
            if (segments_touch(pa.vertices[i], pa.vertices[(i + 1) % na],
                               pb.vertices[j], pb.vertices[(j + 1) % nb]))
              return true;
      }
    }
    return false;
  }
  for (const auto& pa : oa.pieces)
    for (const auto& va : pa.vertices)
      if (scene.classify(va, ob) != Placement::exterior) return true;
  for (const auto& pb : ob.pieces)
    for (const auto& vb : pb.vertices)
      if (scene.classify(vb, oa) != Placement::exterior) return true;
  auto edges_of = [](const ObstaclePiece& p) {
    std::set<std::pair<int, int>> es;
    for (const auto& f : p.faces)
      for (int k = 0; k < 3; ++k)
        es.insert({std::min(f[k], f[(k + 1) % 3]), std::max(f[k], f[(k + 1) % 3])});
    return es;
  };
  for (const auto& pa : oa.pieces) {
    auto ea = edges_of(pa);
    for (const auto& pb : ob.pieces)
      for (const auto& [u, v] : ea)
        for (const auto& f : pb.faces)
          if (segment_triangle_touch(pa.vertices[u], pa.vertices[v], pb.vertices[f[0]],
                                     pb.vertices[f[1]], pb.vertices[f[2]]))
            return true;
  }
  for (const auto& pb : ob.pieces) {
    auto eb = edges_of(pb);
    for (const auto& pa : oa.pieces)
      for (const auto& [u, v] : eb)
        for (const auto& f : pa.faces)
          if (segment_triangle_touch(pb.vertices[u], pb.vertices[v], pa.vertices[f[0]],
                                     pa.vertices[f[1]], pa.vertices[f[2]]))
            return true;
  }
  return false;
}

}  // namespace

double Scene::min_obstacle_separation() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < obstacles.size(); ++i)
    for (std::size_t j = i + 1; j < obstacles.size(); ++j)
      best = std::min(best, obstacle_pair_distance(*this, obstacles[i], obstacles[j]));
  return best;
}

double Scene::obstacle_distance(int id_a, int id_b) const {
  return obstacle_pair_distance(*this, obstacle_by_id(id_a), obstacle_by_id(id_b));
}

void Scene::validate() const {
  if (dim != 2 && dim != 3) throw ValidationError("dimension must be 2 or 3");
  if (ws_min.dim != dim || ws_max.dim != dim)
    throw ValidationError("workspace bounds dimension mismatch");
  for (int i = 0; i < dim; ++i)
    if (!(ws_min.x[i] < ws_max.x[i]))
      throw ValidationError("workspace box is empty along an axis");

  std::vector<int> ids;
  for (const auto& ob : obstacles) ids.push_back(ob.id);
  std::sort(ids.begin(), ids.end());
  for (int i = 0; i < static_cast<int>(ids.size()); ++i)
    if (ids[i] != i + 1)
      throw ValidationError("obstacle ids must be dense 1..N");

  for (const auto& ob : obstacles) {
    if (ob.pieces.empty())
      throw ValidationError("obstacle " + std::to_string(ob.id) + " has no geometry");
    for (const auto& piece : ob.pieces) {
      for (const auto& v : piece.vertices) {
        if (v.dim != dim)
          throw ValidationError("obstacle " + std::to_string(ob.id) + ": vertex dimension");
        if (!point_in_workspace(v))
          throw ValidationError("obstacle " + std::to_string(ob.id) +
                                " reaches outside the workspace");
      }
      if (dim == 2)
        validate_polygon(piece, ob.id);
      else
        validate_mesh(piece, ob.id, ob.pieces.size() == 1);
    }
  }
  for (std::size_t i = 0; i < obstacles.size(); ++i)
    for (std::size_t j = i + 1; j < obstacles.size(); ++j)
      if (obstacles_touch(*this, obstacles[i], obstacles[j]))
        throw ValidationError("obstacles " + std::to_string(obstacles[i].id) + " and " +
                              std::to_string(obstacles[j].id) +
                              " overlap or touch; positive separation required");
}

std::uint64_t Scene::content_hash() const {
  std::uint64_t h = fnv1a(&dim, sizeof(dim));
  auto hash_point = [&](const Point& p) {
    for (int i = 0; i < dim; ++i) {
      std::string s = p.x[i].str();
      h = fnv1a(s.data(), s.size(), h);
    }
  };
  hash_point(ws_min);
  hash_point(ws_max);
  for (const auto& ob : obstacles) {
    h = fnv1a(&ob.id, sizeof(ob.id), h);
    for (const auto& piece : ob.pieces) {
      for (const auto& v : piece.vertices) hash_point(v);
      for (const auto& f : piece.faces) h = fnv1a(f.data(), sizeof(int) * 3, h);
    }
  }
  return h;
}

}  // namespace pathclass
