// Robot structural complex S_B: named key points with fixed-length links,
// decomposition into open/closed chains, planar forward geometry, and
// collision checks for width-inflated links.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathclass/scene.hpp"

namespace pathclass {

using Position = std::array<double, 3>;            // [0..dim)
using Configuration = std::vector<Position>;       // one Position per key point

struct LinkSpec {
  int a = 0, b = 0;
  double length = 0.0;
};

struct RobotSpec {
  std::vector<std::string> key_point_names;
  std::vector<LinkSpec> links;
  double link_width = 0.0;  // half-width of the collision capsule
  // optional per-link absolute angle range [lo, hi] (radians, 2D chains)
  std::vector<std::optional<std::array<double, 2>>> joint_limits;

  int key_point(const std::string& name) const;
  std::uint64_t content_hash() const;
};

struct Chain {
  std::vector<int> key_points;  // path order; closed chains repeat no vertex
  std::vector<int> links;       // link indices, key_points[i] -- key_points[i+1]
  bool closed = false;
};

struct RobotComplex {
  RobotSpec spec;
  std::vector<Chain> chains;
  std::vector<std::vector<std::pair<int, int>>> adjacency;  // kp -> (nbr, link)
  std::uint64_t fingerprint = 0;

  int key_point_count() const { return static_cast<int>(spec.key_point_names.size()); }
};

// Validates the spec and decomposes the link graph into maximal chains
// between branch/leaf vertices plus cycles.
RobotComplex build_complex(const RobotSpec& spec);

// Forward geometry of an open chain in the plane: base position plus one
// absolute angle per link. Positions are exact successive displacements.
std::vector<Position> chain_pose(const RobotComplex& rc, int chain_index,
                                 const Position& base, const std::vector<double>& angles);

// True when any width-inflated link (or bare key point) contacts an
// obstacle or leaves the workspace box.
bool pose_collides(const Scene& scene, const RobotSpec& spec, const Configuration& positions);

// Largest violation of the fixed link lengths over a configuration.
double max_link_length_error(const RobotSpec& spec, const Configuration& positions);

// Distance from segment [a,b] to the nearest obstacle boundary (doubles);
// 0 when the segment crosses or sits inside an obstacle.
double segment_obstacle_distance(const Scene& scene, const Position& a, const Position& b);

// Closed-set collision test for a segment inflated by `inflate`.
bool segment_collides(const Scene& scene, const Position& a, const Position& b, double inflate);

}  // namespace pathclass
