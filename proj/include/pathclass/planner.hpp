// Planning over the joint cover: search class-distinct topological paths on
// the region graph, realize workspace point paths through shared facets,
// split them into visible pieces, interpolate planar chain motion, and
// certify non-existence by connectivity and clearance pruning.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathclass/states.hpp"

namespace pathclass {

struct TopologicalPath {
  std::vector<int> base_regions;        // loop-free region ids for the base key point
  std::vector<ContractedRep> sequence;  // contracted states along the path
};

struct PrunedSequence {
  std::vector<int> regions;
  std::string reason;
};

struct NonExistenceCertificate {
  enum class Kind { connectivity, embedding_infeasible };
  Kind kind = Kind::connectivity;
  bool heuristic = false;  // clearance pruning is necessary-condition only
  std::vector<PrunedSequence> sequences;
  std::string message;
};

struct TopoSearchResult {
  std::vector<TopologicalPath> paths;
  std::optional<NonExistenceCertificate> certificate;
};

// Up to k shortest (by transition count) distinct region sequences from the
// base key point's start region to its goal region; lexicographic ties.
TopoSearchResult search_topological(const StateRep& start, const StateRep& goal,
                                    const Decomposition& d, const RobotComplex& rc,
                                    int k, int length_bound);

// Point path through the shared-facet centroids of consecutive regions,
// start and goal appended. Segments that leave the union of their bridged
// regions are replaced by simplex-level detours, checked exactly.
std::vector<Position> realize_point_path(const TopologicalPath& tp, const Decomposition& d,
                                         const Position& start, const Position& goal);

// Maximal polyline pieces whose endpoints see each other (segment free of
// obstacles after inflation).
std::vector<std::vector<Position>> split_visible(const std::vector<Position>& path,
                                                 const Decomposition& d, double inflate = 0.0);

struct PlanParams {
  int alternatives = 1;
  double step = 0.25;       // max key-point displacement per waypoint
  int length_bound = 12;    // region-sequence length cap
  int angle_samples = 64;   // discretization per joint ring
  int max_retries = 3;      // ring radius for the angle search
};

struct GeometricPlan {
  std::vector<Configuration> waypoints;
  TopologicalPath topo;
  PathRepresentation representation;
};

struct PlanResult {
  std::vector<GeometricPlan> plans;
  std::optional<NonExistenceCertificate> certificate;
};

// Follow-the-base chain interpolation along a realized polyline; returns
// nothing when no collision-free motion was found within the retry budget.
std::optional<std::vector<Configuration>> interpolate_chain(
    const std::vector<Position>& base_path, const Configuration& start,
    const Configuration& goal, const Decomposition& d, const RobotComplex& rc,
    const PlanParams& params);

struct ExistenceResult {
  bool exists = false;
  std::optional<NonExistenceCertificate> certificate;
};

// The three-step procedure: region connectivity, clearance pruning of
// sequences, verdict. Start/goal regions are never pruned (the robot
// demonstrably fits there).
ExistenceResult check_existence(const StateRep& start, const StateRep& goal,
                                const Decomposition& d, const RobotComplex& rc,
                                int length_bound);

// Full pipeline: validity checks, existence, search, realization,
// interpolation, class-distinct filtering.
PlanResult plan(const Decomposition& d, const RobotComplex& rc, const Configuration& start,
                const Configuration& goal, const PlanParams& params);

// Configurations sampled along a polyline at the given spacing (single key
// point per configuration).
std::vector<Configuration> sample_polyline(const std::vector<Position>& path, double step);

}  // namespace pathclass
