#include "pathclass/robot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace pathclass {

int RobotSpec::key_point(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(key_point_names.size()); ++i)
    if (key_point_names[i] == name) return i;
  throw InputError("unknown key point '" + name + "'");
}

std::uint64_t RobotSpec::content_hash() const {
  std::uint64_t h = fnv1a(&link_width, sizeof(link_width));
  for (const auto& n : key_point_names) h = fnv1a(n, h);
  for (const auto& l : links) {
    h = fnv1a(&l.a, sizeof(l.a), h);
    h = fnv1a(&l.b, sizeof(l.b), h);
    h = fnv1a(&l.length, sizeof(l.length), h);
  }
  return h;
}

RobotComplex build_complex(const RobotSpec& spec) {
  const int n = static_cast<int>(spec.key_point_names.size());
  if (n == 0) throw InputError("robot needs at least one key point");
  {
    std::set<std::string> names(spec.key_point_names.begin(), spec.key_point_names.end());
    if (static_cast<int>(names.size()) != n) throw InputError("duplicate key point names");
  }
  if (!spec.joint_limits.empty() &&
      spec.joint_limits.size() != spec.links.size())
    throw InputError("joint_limits must match link count");

  RobotComplex rc;
  rc.spec = spec;
  rc.adjacency.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (int li = 0; li < static_cast<int>(spec.links.size()); ++li) {
    const LinkSpec& l = spec.links[li];
    if (l.a < 0 || l.a >= n || l.b < 0 || l.b >= n || l.a == l.b)
      throw InputError("link references invalid key points");
    if (!(l.length > 0)) throw InputError("link lengths must be positive");
    if (!seen.insert({std::min(l.a, l.b), std::max(l.a, l.b)}).second)
      throw InputError("duplicate link");
    rc.adjacency[l.a].push_back({l.b, li});
    rc.adjacency[l.b].push_back({l.a, li});
  }
  for (auto& adj : rc.adjacency) std::sort(adj.begin(), adj.end());

  if (!spec.links.empty()) {
    std::vector<char> reach(n, 0);
    std::vector<int> stack{0};
    reach[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, li] : rc.adjacency[v])
        if (!reach[w]) {
          reach[w] = 1;
          stack.push_back(w);
        }
    }
    if (std::count(reach.begin(), reach.end(), 1) != n)
      throw InputError("link graph is disconnected");
  } else if (n > 1) {
    throw InputError("link graph is disconnected");
  }

  // chains: walk from every terminal (degree != 2) through degree-2 interior
  // vertices; leftover links form pure cycles
  std::vector<char> link_used(spec.links.size(), 0);
  auto walk = [&](int start, int first_nbr, int first_link) {
    Chain c;
    c.key_points.push_back(start);
    int prev = start, cur = first_nbr, via = first_link;
    link_used[via] = 1;
    c.links.push_back(via);
    c.key_points.push_back(cur);
    while (rc.adjacency[cur].size() == 2 && cur != start) {
      auto [n0, l0] = rc.adjacency[cur][0];
      auto [n1, l1] = rc.adjacency[cur][1];
      int nxt = (n0 == prev && l0 == via) ? n1 : n0;
      int nlk = (n0 == prev && l0 == via) ? l1 : l0;
      prev = cur;
      cur = nxt;
      via = nlk;
      link_used[via] = 1;
      c.links.push_back(via);
      c.key_points.push_back(cur);
    }
    if (cur == start) {
      c.closed = true;
      c.key_points.pop_back();  // do not repeat the start vertex
    }
    return c;
  };

  std::vector<int> terminals;
  for (int v = 0; v < n; ++v)
    if (!rc.adjacency[v].empty() && rc.adjacency[v].size() != 2) terminals.push_back(v);
  for (int v : terminals)
    for (auto [w, li] : rc.adjacency[v])
      if (!link_used[li]) rc.chains.push_back(walk(v, w, li));
  // pure cycles (every vertex degree 2)
  for (int li = 0; li < static_cast<int>(spec.links.size()); ++li) {
    if (link_used[li]) continue;
    int a = spec.links[li].a;
    int b = spec.links[li].b;
    rc.chains.push_back(walk(a, b, li));
  }

  // canonical chain form: open chains start at the smaller terminal; cycles
  // rotate to the smallest vertex and run toward its smaller neighbor
  for (Chain& c : rc.chains) {
    if (!c.closed) {
      if (c.key_points.front() > c.key_points.back()) {
        std::reverse(c.key_points.begin(), c.key_points.end());
        std::reverse(c.links.begin(), c.links.end());
      }
    } else {
      int k = static_cast<int>(c.key_points.size());
      int at = static_cast<int>(std::min_element(c.key_points.begin(), c.key_points.end()) -
                                c.key_points.begin());
      std::vector<int> kp(k), lk(k);
      for (int i = 0; i < k; ++i) {
        kp[i] = c.key_points[(at + i) % k];
        lk[i] = c.links[(at + i) % k];
      }
      if (k > 1 && kp[1] > kp[k - 1]) {
        std::vector<int> kp2(k), lk2(k);
        kp2[0] = kp[0];
        for (int i = 1; i < k; ++i) kp2[i] = kp[k - i];
        for (int i = 0; i < k; ++i) lk2[i] = lk[(2 * k - 1 - i) % k];
        kp = kp2;
        lk = lk2;
      }
      c.key_points = kp;
      c.links = lk;
    }
  }
  std::sort(rc.chains.begin(), rc.chains.end(), [](const Chain& a, const Chain& b) {
    return a.key_points < b.key_points;
  });

  rc.fingerprint = spec.content_hash();
  return rc;
}

std::vector<Position> chain_pose(const RobotComplex& rc, int chain_index,
                                 const Position& base, const std::vector<double>& angles) {
  const Chain& c = rc.chains.at(chain_index);
  if (c.closed) throw InputError("chain_pose: closed chains embed as rigid bodies");
  if (angles.size() != c.links.size())
    throw InputError("angle count must equal link count");
  std::vector<Position> out;
  out.push_back(base);
  Position cur = base;
  for (std::size_t i = 0; i < c.links.size(); ++i) {
    const double len = rc.spec.links[c.links[i]].length;
    cur[0] += len * std::cos(angles[i]);
    cur[1] += len * std::sin(angles[i]);
    out.push_back(cur);
  }
  return out;
}

double max_link_length_error(const RobotSpec& spec, const Configuration& positions) {
  double worst = 0.0;
  for (const auto& l : spec.links) {
    const Position& a = positions.at(l.a);
    const Position& b = positions.at(l.b);
    double d2 = 0;
    for (int i = 0; i < 3; ++i) d2 += (a[i] - b[i]) * (a[i] - b[i]);
    worst = std::max(worst, std::fabs(std::sqrt(d2) - l.length));
  }
  return worst;
}

namespace {

Point to_point(const Position& p, int dim) {
  return dim == 2 ? Point::from_doubles2(p[0], p[1])
                  : Point::from_doubles3(p[0], p[1], p[2]);
}

}  // namespace

double segment_obstacle_distance(const Scene& scene, const Position& a, const Position& b) {
  Point pa = to_point(a, scene.dim), pb = to_point(b, scene.dim);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& ob : scene.obstacles) {
    for (const auto& piece : ob.pieces) {
      if (scene.dim == 2) {
        const int n = static_cast<int>(piece.vertices.size());
        for (int i = 0; i < n; ++i) {
          if (segments_touch(pa, pb, piece.vertices[i], piece.vertices[(i + 1) % n]))
            return 0.0;
          best = std::min(best, squared_distance_segment_segment(
                                    a, b, piece.vertices[i].d,
                                    piece.vertices[(i + 1) % n].d, 2));
        }
      } else {
        std::set<std::pair<int, int>> edges;
        for (const auto& f : piece.faces) {
          if (segment_triangle_touch(pa, pb, piece.vertices[f[0]], piece.vertices[f[1]],
                                     piece.vertices[f[2]]))
            return 0.0;
          for (int k = 0; k < 3; ++k)
            edges.insert({std::min(f[k], f[(k + 1) % 3]), std::max(f[k], f[(k + 1) % 3])});
        }
        for (const auto& [u, v] : edges)
          best = std::min(best, squared_distance_segment_segment(
                                    a, b, piece.vertices[u].d, piece.vertices[v].d, 3));
      }
    }
    // a segment fully inside the obstacle touches no boundary element
    if (scene.classify(pa, ob) == Placement::interior) return 0.0;
  }
  return std::sqrt(best);
}

bool segment_collides(const Scene& scene, const Position& a, const Position& b,
                      double inflate) {
  if (inflate > 0) return segment_obstacle_distance(scene, a, b) < inflate;
  return segment_obstacle_distance(scene, a, b) <= 0.0;
}

bool pose_collides(const Scene& scene, const RobotSpec& spec,
                   const Configuration& positions) {
  if (positions.size() != spec.key_point_names.size())
    throw InputError("configuration size mismatch");
  for (const auto& p : positions) {
    Point pt = to_point(p, scene.dim);
    if (!scene.point_in_workspace(pt)) return true;
    if (scene.classify_any(pt) == Placement::interior) return true;
  }
  for (const auto& l : spec.links)
    if (segment_collides(scene, positions[l.a], positions[l.b], spec.link_width))
      return true;
  return false;
}

}  // namespace pathclass
