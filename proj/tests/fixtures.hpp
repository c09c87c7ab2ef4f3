// Shared test fixtures: scenes, robots, and independent oracles.
#pragma once

#include <algorithm>
#include <random>
#include <set>

#include "pathclass/jointcover.hpp"
#include "pathclass/robot.hpp"

namespace fixtures {

using namespace pathclass;

inline ObstaclePiece box2(double x0, double y0, double x1, double y1) {
  ObstaclePiece p;
  p.vertices = {Point::from_doubles2(x0, y0), Point::from_doubles2(x1, y0),
                Point::from_doubles2(x1, y1), Point::from_doubles2(x0, y1)};
  return p;
}

inline ObstaclePiece box3(double x0, double y0, double z0, double x1, double y1, double z1) {
  ObstaclePiece p;
  const double xs[2] = {x0, x1}, ys[2] = {y0, y1}, zs[2] = {z0, z1};
  // corner order: v0..v3 bottom ring, v4..v7 top ring
  const int ring[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (int z = 0; z < 2; ++z)
    for (auto& rc : ring)
      p.vertices.push_back(Point::from_doubles3(xs[rc[0]], ys[rc[1]], zs[z]));
  p.faces = {{0, 2, 1}, {0, 3, 2},  // bottom
             {4, 5, 6}, {4, 6, 7},  // top
             {0, 1, 5}, {0, 5, 4},  // y = y0
             {2, 3, 7}, {2, 7, 6},  // y = y1
             {0, 4, 7}, {0, 7, 3},  // x = x0
             {1, 2, 6}, {1, 6, 5}}; // x = x1
  return p;
}

inline Scene workspace2(double x0, double y0, double x1, double y1) {
  Scene s;
  s.dim = 2;
  s.ws_min = Point::from_doubles2(x0, y0);
  s.ws_max = Point::from_doubles2(x1, y1);
  return s;
}

inline Scene workspace3(double x0, double y0, double z0, double x1, double y1, double z1) {
  Scene s;
  s.dim = 3;
  s.ws_min = Point::from_doubles3(x0, y0, z0);
  s.ws_max = Point::from_doubles3(x1, y1, z1);
  return s;
}

// ── 2D fixture scenes ───────────────────────────────────────────────

inline Scene two_squares() {
  Scene s = workspace2(-2, -2, 6, 3);
  s.obstacles.push_back({1, {box2(0, 0, 1, 1)}});
  s.obstacles.push_back({2, {box2(3, 0, 4, 1)}});
  return s;
}

inline Scene single_box() {
  Scene s = workspace2(-2, -2, 3, 3);
  s.obstacles.push_back({1, {box2(0, 0, 1, 1)}});
  return s;
}

inline Scene triangle_of_boxes() {
  Scene s = workspace2(-3, -3, 7, 7);
  s.obstacles.push_back({1, {box2(0, 0, 1, 1)}});
  s.obstacles.push_back({2, {box2(3, 0, 4, 1)}});
  s.obstacles.push_back({3, {box2(1.5, 2.6, 2.5, 3.6)}});
  return s;
}

// deliberately irregular so the central diagonal is generic, not a
// cocircular tie
inline Scene four_box_ring() {
  Scene s = workspace2(-3, -3, 8, 8);
  s.obstacles.push_back({1, {box2(0, 0, 1.6, 1.5)}});
  s.obstacles.push_back({2, {box2(3.6, 0.2, 5.2, 1.8)}});
  s.obstacles.push_back({3, {box2(3.3, 3.6, 4.9, 5.2)}});
  s.obstacles.push_back({4, {box2(0.2, 3.8, 1.7, 5.3)}});
  return s;
}

// concave L-shaped obstacle, pre-split into two convex pieces sharing id 1
inline Scene l_shape() {
  Scene s = workspace2(-2, -2, 5, 5);
  s.obstacles.push_back({1, {box2(0, 0, 3, 1), box2(0, 1, 1, 3)}});
  s.obstacles.push_back({2, {box2(2.2, 2.2, 3.2, 3.2)}});
  return s;
}

// square annulus made of four rectangles sharing id 1; encloses a cavity
inline Scene annulus() {
  Scene s = workspace2(-2, -2, 5, 5);
  s.obstacles.push_back({1,
                         {box2(0, 0, 3, 0.5), box2(0, 2.5, 3, 3), box2(0, 0.5, 0.5, 2.5),
                          box2(2.5, 0.5, 3, 2.5)}});
  return s;
}

// a wall across the workspace with one horizontal slot of the given height;
// the slot is the only route between the left and right halves
inline Scene gap_corridor(double gap_width) {
  Scene s = workspace2(-6, 0, 10, 8);
  s.obstacles.push_back({1, {box2(3, 0, 4, 4 - gap_width / 2)}});
  s.obstacles.push_back({2, {box2(3, 4 + gap_width / 2, 4, 8)}});
  return s;
}

// goal chamber sealed off by one wall spanning the full workspace height
inline Scene walled_goal() {
  Scene s = workspace2(-3, 0, 6, 6);
  s.obstacles.push_back({1, {box2(2, 0, 3, 6)}});
  return s;
}

// ── 3D fixture scenes ───────────────────────────────────────────────

inline Scene two_cubes() {
  Scene s = workspace3(-2, -2, -2, 6, 3, 3);
  s.obstacles.push_back({1, {box3(0, 0, 0, 1, 1, 1)}});
  s.obstacles.push_back({2, {box3(3, 0, 0, 4, 1, 1)}});
  return s;
}

// two pillars (below the ceiling) with floating platform slabs beside them;
// hosts the five scripted class-distinct paths
inline Scene pillars() {
  Scene s = workspace3(0, 0, 0, 12, 12, 8);
  s.obstacles.push_back({1, {box3(4.0, 5.0, 0.0, 5.0, 7.0, 6.5)}});   // left pillar
  s.obstacles.push_back({2, {box3(7.0, 5.0, 0.0, 8.0, 7.0, 6.5)}});   // right pillar
  s.obstacles.push_back({3, {box3(1.5, 5.0, 3.0, 3.8, 7.0, 3.6)}});   // left platform
  s.obstacles.push_back({4, {box3(8.2, 5.0, 3.0, 10.5, 7.0, 3.6)}});  // right platform
  return s;
}

// ── robots ──────────────────────────────────────────────────────────

inline RobotSpec point_robot() {
  RobotSpec r;
  r.key_point_names = {"p"};
  return r;
}

inline RobotSpec open_chain(int links, double length, double width) {
  RobotSpec r;
  for (int i = 0; i <= links; ++i) r.key_point_names.push_back("p" + std::to_string(i));
  for (int i = 0; i < links; ++i) r.links.push_back({i, i + 1, length});
  r.link_width = width;
  return r;
}

inline RobotSpec star_robot() {
  RobotSpec r;
  r.key_point_names = {"torso", "head", "left", "right", "leg"};
  r.links = {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {0, 4, 1.0}};
  r.link_width = 0.05;
  return r;
}

inline RobotSpec cycle_robot() {
  RobotSpec r;
  r.key_point_names = {"a", "b", "c", "d"};
  r.links = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 0, 1.0}};
  r.link_width = 0.05;
  return r;
}

// random disjoint axis-aligned boxes, some spanning the full height so real
// disconnections occur
inline Scene random_boxes(std::mt19937_64& rng, int max_boxes, bool allow_walls) {
  Scene s = workspace2(0, 0, 10, 10);
  std::uniform_real_distribution<double> U(0, 1);
  int id = 1;
  for (int attempt = 0; attempt < 40 && id <= max_boxes; ++attempt) {
    double w = 0.6 + 1.6 * U(rng);
    double x0 = 0.5 + 8.0 * U(rng);
    double y0, h;
    if (allow_walls && U(rng) < 0.3) {
      y0 = 0;
      h = 10;
    } else {
      h = 0.6 + 2.0 * U(rng);
      y0 = 0.5 + (9.0 - h) * U(rng);
    }
    double x1 = std::min(x0 + w, 9.8);
    Obstacle candidate{id, {box2(x0, y0, x1, y0 + h)}};
    Scene trial = s;
    trial.obstacles.push_back(candidate);
    try {
      trial.validate();
    } catch (const ValidationError&) {
      continue;
    }
    s = trial;
    ++id;
  }
  return s;
}

// ── oracles ─────────────────────────────────────────────────────────

// brute-force Delaunay: every (d+1)-subset with nonzero orientation whose
// perturbed circumsphere is empty; canonical lex-rank tuples
inline std::set<std::vector<int>> brute_force_delaunay(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  const int dim = pts[0].dim;
  std::vector<int> order(n), rank(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pts[a].lex_less(pts[b]); });
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  std::set<std::vector<int>> out;
  std::vector<int> idx(dim + 1);
  auto rec = [&](auto&& self, int start, int k) -> void {
    if (k == dim + 1) {
      std::vector<Point> simp;
      std::vector<int> rk;
      for (int i : idx) {
        simp.push_back(pts[i]);
        rk.push_back(rank[i]);
      }
      if (orient(simp) == Sign::zero) return;
      for (int q = 0; q < n; ++q) {
        if (std::find(idx.begin(), idx.end(), q) != idx.end()) continue;
        if (perturbed_in_sphere(simp, rk, pts[q], rank[q]) == SpherePosition::inside)
          return;
      }
      std::vector<int> key;
      for (int i : idx) key.push_back(rank[i]);
      std::sort(key.begin(), key.end());
      out.insert(key);
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[k] = i;
      self(self, i + 1, k + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline std::set<std::vector<int>> canonical_simplices(const Triangulation& tri) {
  const int n = static_cast<int>(tri.vertices().size());
  std::vector<int> order(n), rank(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return tri.vertex_point(a).lex_less(tri.vertex_point(b));
  });
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  std::set<std::vector<int>> out;
  for (const auto& s : tri.simplices()) {
    std::vector<int> key;
    for (int i = 0; i <= tri.dim(); ++i) key.push_back(rank[s.v[i]]);
    std::sort(key.begin(), key.end());
    out.insert(key);
  }
  return out;
}

// dense-grid BFS connectivity oracle for 2D point paths
inline bool grid_path_exists(const Scene& scene, const Position& start, const Position& goal,
                             int cells = 200) {
  const double x0 = scene.ws_min.d[0], y0 = scene.ws_min.d[1];
  const double dx = (scene.ws_max.d[0] - x0) / cells;
  const double dy = (scene.ws_max.d[1] - y0) / cells;
  std::vector<char> open(cells * cells, 0);
  for (int j = 0; j < cells; ++j)
    for (int i = 0; i < cells; ++i) {
      Point c = Point::from_doubles2(x0 + (i + 0.5) * dx, y0 + (j + 0.5) * dy);
      open[j * cells + i] = scene.classify_any(c) == Placement::exterior;
    }
  auto cell_of = [&](const Position& p) {
    int i = std::clamp(static_cast<int>((p[0] - x0) / dx), 0, cells - 1);
    int j = std::clamp(static_cast<int>((p[1] - y0) / dy), 0, cells - 1);
    return std::pair<int, int>{i, j};
  };
  auto [si, sj] = cell_of(start);
  auto [gi, gj] = cell_of(goal);
  if (!open[sj * cells + si] || !open[gj * cells + gi]) return false;
  std::vector<char> seen(cells * cells, 0);
  std::vector<std::pair<int, int>> stack{{si, sj}};
  seen[sj * cells + si] = 1;
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    if (i == gi && j == gj) return true;
    const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
    for (int k = 0; k < 4; ++k) {
      int ni = i + di[k], nj = j + dj[k];
      if (ni < 0 || nj < 0 || ni >= cells || nj >= cells) continue;
      if (!open[nj * cells + ni] || seen[nj * cells + ni]) continue;
      seen[nj * cells + ni] = 1;
      stack.push_back({ni, nj});
    }
  }
  return false;
}

}  // namespace fixtures
