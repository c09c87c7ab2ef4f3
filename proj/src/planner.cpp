#include "pathclass/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace pathclass {

namespace {

constexpr double kLinkLengthTol = 1e-9;

Point to_point(const Position& p, int dim) {
  return dim == 2 ? Point::from_doubles2(p[0], p[1])
                  : Point::from_doubles3(p[0], p[1], p[2]);
}

Position to_position(const Point& p) { return {p.d[0], p.d[1], p.d[2]}; }

double distance(const Position& a, const Position& b, int dim) {
  double d2 = 0;
  for (int i = 0; i < dim; ++i) d2 += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(d2);
}

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& nbr, int src) {
  std::vector<int> dist(nbr.size(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : nbr[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

// contracted rep of a single-region point-robot state
ContractedRep point_rep(int region, const Decomposition& d, const RobotComplex& rc) {
  ContractedRep rep;
  rep.pairs.push_back({{region}, {0}});
  rep.encoding = encode_contracted(rep.pairs);
  rep.provenance = fnv1a(&rc.fingerprint, sizeof(rc.fingerprint), d.fingerprint);
  return rep;
}

// exact membership of p in any simplex of the given set
bool in_any_simplex(const Decomposition& d, const std::vector<int>& simplices,
                    const Point& p) {
  const Triangulation& tri = *d.triangulation;
  const int dim = tri.dim();
  for (int s : simplices) {
    const Simplex& sx = tri.simplices()[s];
    std::vector<Point> verts(dim + 1);
    for (int i = 0; i <= dim; ++i) verts[i] = tri.vertex_point(sx.v[i]);
    Sign so = orient(verts);
    bool ok = true;
    for (int i = 0; i <= dim && ok; ++i) {
      std::vector<Point> repl = verts;
      repl[i] = p;
      Sign oi = orient(repl);
      if (oi != Sign::zero && oi != so) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

// exact check that [a,b] never leaves the union of the allowed regions'
// simplices: between consecutive facet-plane crossings membership in a fixed
// simplex is invariant, so testing one interior point per span suffices
bool segment_within_regions(const Decomposition& d, const Point& a, const Point& b,
                            const std::vector<int>& allowed_regions) {
  const Triangulation& tri = *d.triangulation;
  const int dim = tri.dim();
  std::vector<int> simplices;
  for (int r : allowed_regions)
    simplices.insert(simplices.end(), d.regions[r].simplices.begin(),
                     d.regions[r].simplices.end());

  std::vector<Rational> params = {Rational(0), Rational(1)};
  for (int s : simplices) {
    const Simplex& sx = tri.simplices()[s];
    for (int f = 0; f <= dim; ++f) {
      std::vector<Point> facet;
      for (int i = 0; i <= dim; ++i)
        if (i != f) facet.push_back(tri.vertex_point(sx.v[i]));
      facet.push_back(a);
      Rational ga = homogeneous_orient(facet);
      facet.back() = b;
      Rational gb = homogeneous_orient(facet);
      if (ga == gb) continue;
      Rational t = ga / (ga - gb);
      if (t > 0 && t < 1) params.push_back(t);
    }
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());

  for (std::size_t i = 0; i + 1 < params.size(); ++i) {
    Rational m = (params[i] + params[i + 1]) / 2;
    std::vector<Rational> coords(dim);
    for (int k = 0; k < dim; ++k) coords[k] = a.x[k] + m * (b.x[k] - a.x[k]);
    if (!in_any_simplex(d, simplices, Point::from_rationals(coords))) return false;
  }
  return true;
}

// facet centroid between two adjacent regions, chosen to shorten the route
Position transition_waypoint(const Decomposition& d, int ra, int rb, const Position& from,
                             const Position& toward) {
  const Triangulation& tri = *d.triangulation;
  const int dim = tri.dim();
  Position best{};
  double best_cost = std::numeric_limits<double>::infinity();
  for (int s : d.regions[ra].simplices) {
    const Simplex& sx = tri.simplices()[s];
    for (int f = 0; f <= dim; ++f) {
      int n = sx.nbr[f];
      if (n < 0 || d.simplex_region[n] != rb) continue;
      Position c{0, 0, 0};
      for (int i = 0; i <= dim; ++i) {
        if (i == f) continue;
        const Point& p = tri.vertex_point(sx.v[i]);
        for (int k = 0; k < dim; ++k) c[k] += p.d[k] / dim;
      }
      double cost = distance(from, c, dim) + distance(c, toward, dim);
      if (cost < best_cost) {
        best_cost = cost;
        best = c;
      }
    }
  }
  if (!std::isfinite(best_cost))
    throw QueryError("regions " + std::to_string(ra) + " and " + std::to_string(rb) +
                     " share no facet");
  return best;
}

// polyline through a region's simplex graph from `from` to `to`, exact by
// construction (each hop segment lies inside one simplex). Endpoints sit on
// region facets and may round a hair outside; snap through a neighbor then.
std::vector<Position> simplex_detour(const Decomposition& d, int region, const Point& from,
                                     const Point& to) {
  const Triangulation& tri = *d.triangulation;
  const int dim = tri.dim();
  const auto& members = d.regions[region].simplices;
  auto member_containing = [&](const Point& p) {
    for (int s : members)
      if (in_any_simplex(d, {s}, p)) return s;
    for (int s : tri.containing_simplices(p))
      for (int f = 0; f <= dim; ++f) {
        int n = tri.simplices()[s].nbr[f];
        if (n >= 0 && d.simplex_region[n] == region) return n;
      }
    throw QueryError("detour endpoint not in region");
  };
  int s0 = member_containing(from);
  int s1 = member_containing(to);
  std::map<int, int> prev;
  std::queue<int> q;
  prev[s0] = s0;
  q.push(s0);
  while (!q.empty() && !prev.count(s1)) {
    int s = q.front();
    q.pop();
    for (int f = 0; f <= dim; ++f) {
      int n = tri.simplices()[s].nbr[f];
      if (n < 0 || d.simplex_region[n] != region || prev.count(n)) continue;
      prev[n] = s;
      q.push(n);
    }
  }
  if (!prev.count(s1)) throw QueryError("region simplices disconnected (internal)");
  std::vector<int> chain{s1};
  while (chain.back() != s0) chain.push_back(prev[chain.back()]);
  std::reverse(chain.begin(), chain.end());

  std::vector<Position> out{to_position(from)};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const Simplex& sx = tri.simplices()[chain[i]];
    for (int f = 0; f <= dim; ++f) {
      if (sx.nbr[f] != chain[i + 1]) continue;
      Position c{0, 0, 0};
      for (int j = 0; j <= dim; ++j) {
        if (j == f) continue;
        const Point& p = tri.vertex_point(sx.v[j]);
        for (int k = 0; k < dim; ++k) c[k] += p.d[k] / dim;
      }
      out.push_back(c);
      break;
    }
  }
  out.push_back(to_position(to));
  return out;
}

double robot_min_width(const RobotComplex& rc) {
  return rc.spec.links.empty() ? 0.0 : 2.0 * rc.spec.link_width;
}

// minimum clearance of a region flanked by its obstacles: closest pair among
// the bounding set. Pair regions outside the joint hull are not between
// their obstacles, so the pair distance says nothing about them.
double region_clearance(const Decomposition& d, int region) {
  const auto& r = d.regions[region];
  if (r.obstacles.size() < 2) return std::numeric_limits<double>::infinity();
  if (r.obstacles.size() == 2 && !r.in_pair_hull)
    return std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.obstacles.size(); ++i)
    for (std::size_t j = i + 1; j < r.obstacles.size(); ++j)
      best = std::min(best, d.scene->obstacle_distance(r.obstacles[i], r.obstacles[j]));
  return best;
}

void enumerate_sequences(const std::vector<std::vector<int>>& nbr, int from, int to,
                         int max_len, std::vector<int>& current, std::vector<char>& used,
                         std::vector<std::vector<int>>& out, std::size_t cap) {
  if (out.size() >= cap) return;
  if (from == to) {
    out.push_back(current);
    return;
  }
  if (static_cast<int>(current.size()) > max_len) return;
  for (int w : nbr[from]) {
    if (used[w]) continue;
    used[w] = 1;
    current.push_back(w);
    enumerate_sequences(nbr, w, to, max_len, current, used, out, cap);
    current.pop_back();
    used[w] = 0;
  }
}

}  // namespace

std::vector<Configuration> sample_polyline(const std::vector<Position>& path, double step) {
  std::vector<Configuration> out;
  if (path.empty()) return out;
  out.push_back({path.front()});
  for (std::size_t i = 1; i < path.size(); ++i) {
    double len = distance(path[i - 1], path[i], 3);
    int pieces = std::max(1, static_cast<int>(std::ceil(len / step)));
    for (int k = 1; k <= pieces; ++k) {
      Position p{};
      for (int j = 0; j < 3; ++j)
        p[j] = path[i - 1][j] + (path[i][j] - path[i - 1][j]) * k / pieces;
      out.push_back({p});
    }
  }
  return out;
}

TopoSearchResult search_topological(const StateRep& start, const StateRep& goal,
                                    const Decomposition& d, const RobotComplex& rc,
                                    int k, int length_bound) {
  if (start.provenance != d.fingerprint || goal.provenance != d.fingerprint)
    throw ComparisonError("states built over a different cover");
  TopoSearchResult result;
  const int rs = start.region_of_kp.at(0);
  const int rg = goal.region_of_kp.at(0);
  auto nbr = d.workspace_complex.neighbor_lists();
  auto dist_to_goal = bfs_distances(nbr, rg);
  if (dist_to_goal[rs] < 0) {
    result.certificate = NonExistenceCertificate{
        NonExistenceCertificate::Kind::connectivity, false, {},
        "no region sequence connects region " + std::to_string(rs) + " to region " +
            std::to_string(rg)};
    return result;
  }

  const bool point_robot = rc.spec.links.empty() && rc.key_point_count() == 1;
  // depth-limited DFS in lexicographic order per length: shortest first,
  // ties by region-id order
  for (int len = dist_to_goal[rs];
       len <= length_bound && static_cast<int>(result.paths.size()) < k; ++len) {
    std::vector<int> current{rs};
    std::vector<char> used(nbr.size(), 0);
    used[rs] = 1;
    std::vector<std::vector<int>> found;
    auto dfs = [&](auto&& self, int v, int remaining) -> void {
      if (static_cast<int>(result.paths.size() + found.size()) >= k) return;
      if (remaining == 0) {
        if (v == rg) found.push_back(current);
        return;
      }
      for (int w : nbr[v]) {
        if (used[w] || dist_to_goal[w] < 0 || dist_to_goal[w] > remaining - 1) continue;
        used[w] = 1;
        current.push_back(w);
        self(self, w, remaining - 1);
        current.pop_back();
        used[w] = 0;
      }
    };
    dfs(dfs, rs, len);
    for (auto& seq : found) {
      TopologicalPath tp;
      tp.base_regions = std::move(seq);
      if (point_robot)
        for (int r : tp.base_regions) tp.sequence.push_back(point_rep(r, d, rc));
      result.paths.push_back(std::move(tp));
    }
  }
  return result;
}

std::vector<Position> realize_point_path(const TopologicalPath& tp, const Decomposition& d,
                                         const Position& start, const Position& goal) {
  const int dim = d.scene->dim;
  const auto& regions = tp.base_regions;
  if (regions.empty()) throw InputError("empty topological path");

  std::vector<Position> waypoints{start};
  for (std::size_t i = 0; i + 1 < regions.size(); ++i)
    waypoints.push_back(
        transition_waypoint(d, regions[i], regions[i + 1], waypoints.back(), goal));
  waypoints.push_back(goal);

  // per-piece validation: the segment between facet waypoints must stay in
  // its region (the neighbors are admitted for the on-facet endpoints);
  // otherwise replace it with a simplex-graph detour through the region
  std::vector<Position> out{waypoints.front()};
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
    const std::size_t k = std::min(i, regions.size() - 1);
    std::vector<int> allowed{regions[k]};
    if (k > 0) allowed.push_back(regions[k - 1]);
    if (k + 1 < regions.size()) allowed.push_back(regions[k + 1]);
    Point a = to_point(waypoints[i], dim);
    Point b = to_point(waypoints[i + 1], dim);
    if (segment_within_regions(d, a, b, allowed)) {
      out.push_back(waypoints[i + 1]);
    } else {
      auto detour = simplex_detour(d, regions[k], a, b);
      out.insert(out.end(), detour.begin() + 1, detour.end());
    }
  }
  return out;
}

std::vector<std::vector<Position>> split_visible(const std::vector<Position>& path,
                                                 const Decomposition& d, double inflate) {
  std::vector<std::vector<Position>> pieces;
  if (path.size() < 2) {
    pieces.push_back(path);
    return pieces;
  }
  std::size_t i = 0;
  while (i + 1 < path.size()) {
    std::size_t j = path.size() - 1;
    while (j > i + 1 && segment_collides(*d.scene, path[i], path[j], inflate)) --j;
    pieces.push_back(std::vector<Position>(path.begin() + i, path.begin() + j + 1));
    i = j;
  }
  return pieces;
}

ExistenceResult check_existence(const StateRep& start, const StateRep& goal,
                                const Decomposition& d, const RobotComplex& rc,
                                int length_bound) {
  ExistenceResult result;
  const int rs = start.region_of_kp.at(0);
  const int rg = goal.region_of_kp.at(0);
  auto nbr = d.workspace_complex.neighbor_lists();
  auto dist = bfs_distances(nbr, rs);
  if (dist[rg] < 0) {
    result.certificate = NonExistenceCertificate{
        NonExistenceCertificate::Kind::connectivity, false, {},
        "start and goal regions are disconnected on the workspace complex"};
    return result;
  }
  const double width = robot_min_width(rc);
  std::vector<char> pruned(d.regions.size(), 0);
  std::vector<double> clearance(d.regions.size(), 0);
  for (int r = 0; r < static_cast<int>(d.regions.size()); ++r) {
    clearance[r] = region_clearance(d, r);
    pruned[r] = width > 0 && r != rs && r != rg && clearance[r] < width;
  }
  // connectivity on the pruned graph decides whether any sequence survives
  std::vector<std::vector<int>> pruned_nbr(nbr.size());
  for (int v = 0; v < static_cast<int>(nbr.size()); ++v) {
    if (pruned[v]) continue;
    for (int w : nbr[v])
      if (!pruned[w]) pruned_nbr[v].push_back(w);
  }
  auto pdist = bfs_distances(pruned_nbr, rs);
  if (pdist[rg] >= 0) {
    result.exists = true;
    return result;
  }
  // every sequence up to the bound passes a pruned region; list them
  NonExistenceCertificate cert;
  cert.kind = NonExistenceCertificate::Kind::embedding_infeasible;
  cert.heuristic = true;
  cert.message = "every region sequence (length <= " + std::to_string(length_bound) +
                 ") crosses a region narrower than the robot width " +
                 std::to_string(width);
  std::vector<std::vector<int>> sequences;
  std::vector<int> current{rs};
  std::vector<char> used(nbr.size(), 0);
  used[rs] = 1;
  enumerate_sequences(nbr, rs, rg, length_bound, current, used, sequences, 100000);
  for (auto& seq : sequences) {
    PrunedSequence ps;
    ps.regions = seq;
    for (int r : seq)
      if (pruned[r]) {
        ps.reason = "region " + std::to_string(r) + " clearance " +
                    std::to_string(clearance[r]) + " < robot width " + std::to_string(width);
        break;
      }
    if (ps.reason.empty()) ps.reason = "longer than the length bound after pruning";
    cert.sequences.push_back(std::move(ps));
  }
  result.certificate = std::move(cert);
  return result;
}

std::optional<std::vector<Configuration>> interpolate_chain(
    const std::vector<Position>& base_path, const Configuration& start,
    const Configuration& goal, const Decomposition& d, const RobotComplex& rc,
    const PlanParams& params) {
  const Scene& scene = *d.scene;
  if (scene.dim != 2) throw InputError("chain interpolation is planar only");
  if (rc.chains.size() != 1 || rc.chains[0].closed)
    throw InputError("chain interpolation needs a single open chain");
  Chain chain = rc.chains[0];
  if (chain.key_points.back() == 0) {
    std::reverse(chain.key_points.begin(), chain.key_points.end());
    std::reverse(chain.links.begin(), chain.links.end());
  }
  if (chain.key_points.front() != 0)
    throw InputError("the base key point must be a chain endpoint");
  const int m = static_cast<int>(chain.links.size());

  auto config_of = [&](const std::vector<Position>& chain_pts) {
    Configuration c(rc.key_point_count());
    for (int i = 0; i <= m; ++i) c[chain.key_points[i]] = chain_pts[i];
    return c;
  };
  auto angles_of = [&](const std::vector<Position>& pts) {
    std::vector<double> a(m);
    for (int i = 0; i < m; ++i)
      a[i] = std::atan2(pts[i + 1][1] - pts[i][1], pts[i + 1][0] - pts[i][0]);
    return a;
  };
  auto pose_from_angles = [&](const Position& base, const std::vector<double>& angles) {
    std::vector<Position> pts{base};
    for (int i = 0; i < m; ++i) {
      const double len = rc.spec.links[chain.links[i]].length;
      pts.push_back({pts.back()[0] + len * std::cos(angles[i]),
                     pts.back()[1] + len * std::sin(angles[i]), 0.0});
    }
    return pts;
  };
  auto limits_ok = [&](const std::vector<double>& angles) {
    if (rc.spec.joint_limits.empty()) return true;
    for (int i = 0; i < m; ++i) {
      const auto& lim = rc.spec.joint_limits[chain.links[i]];
      if (lim && (angles[i] < (*lim)[0] || angles[i] > (*lim)[1])) return false;
    }
    return true;
  };
  auto valid = [&](const std::vector<Position>& pts) {
    return !pose_collides(scene, rc.spec, config_of(pts)) && limits_ok(angles_of(pts));
  };

  // current chain positions in chain order
  std::vector<Position> cur(m + 1);
  for (int i = 0; i <= m; ++i) cur[i] = start[chain.key_points[i]];

  std::vector<Configuration> waypoints{config_of(cur)};
  auto resampled = sample_polyline(base_path, params.step);

  for (std::size_t wi = 1; wi < resampled.size(); ++wi) {
    const Position target = resampled[wi][0];
    // follow the leader: pull each point toward its predecessor at fixed
    // link length (minimal-deviation projection of the previous pose)
    std::vector<Position> next(m + 1);
    next[0] = target;
    for (int i = 1; i <= m; ++i) {
      const double len = rc.spec.links[chain.links[i - 1]].length;
      double dx = cur[i][0] - next[i - 1][0];
      double dy = cur[i][1] - next[i - 1][1];
      double n = std::sqrt(dx * dx + dy * dy);
      if (n < 1e-12) {
        dx = cur[i][0] - cur[i - 1][0];
        dy = cur[i][1] - cur[i - 1][1];
        n = std::sqrt(dx * dx + dy * dy);
      }
      next[i] = {next[i - 1][0] + dx / n * len, next[i - 1][1] + dy / n * len, 0.0};
    }
    if (!valid(next)) {
      // discrete neighborhood search around the pulled pose, distal first
      bool fixed = false;
      auto base_angles = angles_of(next);
      for (int ring = 1; ring <= params.max_retries && !fixed; ++ring) {
        const double delta = 2.0 * M_PI / params.angle_samples * ring;
        for (int j = m - 1; j >= 0 && !fixed; --j) {
          for (int s : {+1, -1}) {
            auto trial = base_angles;
            trial[j] += s * delta;
            auto pts = pose_from_angles(target, trial);
            if (valid(pts)) {
              next = pts;
              fixed = true;
              break;
            }
          }
        }
      }
      if (!fixed) return std::nullopt;
    }
    cur = next;
    waypoints.push_back(config_of(cur));
  }

  // in-place morph to the goal angles
  std::vector<Position> goal_pts(m + 1);
  for (int i = 0; i <= m; ++i) goal_pts[i] = goal[chain.key_points[i]];
  auto from_angles = angles_of(cur);
  auto to_angles = angles_of(goal_pts);
  double max_delta = 0, reach = 0;
  std::vector<double> delta(m);
  for (int i = 0; i < m; ++i) {
    double diff = to_angles[i] - from_angles[i];
    while (diff > M_PI) diff -= 2 * M_PI;
    while (diff < -M_PI) diff += 2 * M_PI;
    delta[i] = diff;
    max_delta = std::max(max_delta, std::fabs(diff));
    reach += rc.spec.links[chain.links[i]].length;
  }
  const int substeps =
      std::max(1, static_cast<int>(std::ceil(max_delta * reach / params.step)));
  for (int t = 1; t <= substeps; ++t) {
    std::vector<double> a(m);
    for (int i = 0; i < m; ++i) a[i] = from_angles[i] + delta[i] * t / substeps;
    auto pts = pose_from_angles(cur[0], a);
    if (!valid(pts)) return std::nullopt;
    waypoints.push_back(config_of(pts));
  }
  return waypoints;
}

PlanResult plan(const Decomposition& d, const RobotComplex& rc, const Configuration& start,
                const Configuration& goal, const PlanParams& params) {
  PlanResult result;
  const Scene& scene = *d.scene;
  for (const Configuration* c : {&start, &goal}) {
    if (static_cast<int>(c->size()) != rc.key_point_count())
      throw InputError("configuration does not match the robot's key points");
    if (max_link_length_error(rc.spec, *c) > kLinkLengthTol)
      throw InputError("configuration violates link lengths");
    if (pose_collides(scene, rc.spec, *c)) throw InputError("configuration collides");
  }
  StateRep ss = state_of(start, d);
  StateRep gs = state_of(goal, d);

  auto existence = check_existence(ss, gs, d, rc, params.length_bound);
  if (!existence.exists) {
    result.certificate = existence.certificate;
    return result;
  }

  const bool point_robot = rc.spec.links.empty() && rc.key_point_count() == 1;
  auto search = search_topological(ss, gs, d, rc,
                                   std::max(params.alternatives * 3, params.alternatives),
                                   params.length_bound);
  if (search.paths.empty()) {
    result.certificate = search.certificate;
    return result;
  }

  std::vector<PrunedSequence> attempts;
  for (auto& tp : search.paths) {
    if (static_cast<int>(result.plans.size()) >= params.alternatives) break;
    std::vector<Position> base_path;
    try {
      base_path = realize_point_path(tp, d, start[0], goal[0]);
    } catch (const QueryError&) {
      attempts.push_back({tp.base_regions, "realization failed"});
      continue;
    }
    GeometricPlan gp;
    gp.topo = tp;
    if (point_robot) {
      bool free_path = true;
      for (std::size_t i = 0; i + 1 < base_path.size() && free_path; ++i)
        if (segment_collides(scene, base_path[i], base_path[i + 1], 0.0)) free_path = false;
      if (!free_path) {
        attempts.push_back({tp.base_regions, "realized path touches an obstacle"});
        continue;
      }
      gp.waypoints = sample_polyline(base_path, params.step);
    } else {
      // visible-piece division straightens the base trace before the
      // chain is pulled along it
      std::vector<Position> base_trace{base_path.front()};
      for (const auto& piece : split_visible(base_path, d, rc.spec.link_width))
        base_trace.push_back(piece.back());
      auto motion = interpolate_chain(base_trace, start, goal, d, rc, params);
      if (!motion) {
        attempts.push_back({tp.base_regions, "no collision-free chain motion found"});
        continue;
      }
      gp.waypoints = *motion;
    }
    gp.representation = path_representation(gp.waypoints, d, rc);
    if (!point_robot) gp.topo.sequence = gp.representation.sequence;
    bool duplicate = false;
    for (const auto& existing : result.plans)
      if (same_class(existing.representation, gp.representation)) duplicate = true;
    if (!duplicate) result.plans.push_back(std::move(gp));
  }
  if (result.plans.empty()) {
    NonExistenceCertificate cert;
    cert.kind = NonExistenceCertificate::Kind::embedding_infeasible;
    cert.heuristic = true;
    cert.sequences = std::move(attempts);
    cert.message = "no searched topological path admitted a geometric realization";
    result.certificate = std::move(cert);
  }
  return result;
}

}  // namespace pathclass
