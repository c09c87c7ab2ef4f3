// Scene model: an axis-aligned workspace box with polytope obstacles,
// validation (simple/closed geometry, dense ids, pairwise positive
// separation), and exact point classification against obstacle unions.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathclass/geom.hpp"

namespace pathclass {

// One convex (or, in 2D, simple) piece of an obstacle. 3D pieces carry a
// closed triangulated boundary.
struct ObstaclePiece {
  std::vector<Point> vertices;              // 2D: CCW simple polygon
  std::vector<std::array<int, 3>> faces;    // 3D only
};

struct Obstacle {
  int id = 0;
  std::vector<ObstaclePiece> pieces;
};

struct Scene {
  int dim = 2;
  Point ws_min, ws_max;
  std::vector<Obstacle> obstacles;

  int num_obstacles() const { return static_cast<int>(obstacles.size()); }
  const Obstacle& obstacle_by_id(int id) const;

  // the 2^d workspace box corners, lexicographic order
  std::vector<Point> corners() const;
  bool point_in_workspace(const Point& p) const;  // closed box

  // classification against the union of one obstacle's pieces
  Placement classify(const Point& p, const Obstacle& ob) const;
  // interior of any obstacle? returns the obstacle id or 0
  int inside_obstacle_id(const Point& p) const;
  Placement classify_any(const Point& p) const;

  // minimum distance between any two distinct obstacles (doubles);
  // +inf when fewer than two obstacles
  double min_obstacle_separation() const;
  double obstacle_distance(int id_a, int id_b) const;

  void validate() const;  // throws ValidationError / InputError
  std::uint64_t content_hash() const;
};

// FNV-1a, used for provenance fingerprints throughout
std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed = 14695981039346656037ull);
std::uint64_t fnv1a(const std::string& s, std::uint64_t seed = 14695981039346656037ull);

}  // namespace pathclass
