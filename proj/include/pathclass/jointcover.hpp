// Joint cover construction: merge free simplices into labeled regions,
// derive the obstacle-adjacency graph G_A and the workspace complex S_W,
// and answer region-membership and obstacle-removal what-if queries.
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pathclass/delaunay.hpp"

namespace pathclass {

struct FreeRegion {
  int id = 0;
  std::vector<int> obstacles;  // sorted adjacent-obstacle ids
  BigInt label = 0;
  int hole_index = 0;          // k >= 1: k-th hole inside obstacles[0]
  bool compact = false;        // no facet on the workspace hull
  bool in_pair_hull = false;   // pair region inside CH(O_i u O_j)
  std::vector<int> simplices;
};

struct AdjacencyGraph {
  std::vector<int> nodes;                    // obstacle ids
  std::vector<std::vector<int>> hyperedges;  // sorted sets, size >= 2, unique
  std::vector<std::array<int, 2>> pair_edges() const;
  bool has_hyperedge(const std::vector<int>& set) const;
};

// Clique complex of region adjacency truncated at dimension d-1:
// a graph in 2D, plus triangles of mutually adjacent regions in 3D.
struct WorkspaceComplex {
  int vertex_count = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> triangles;
  bool adjacent(int a, int b) const;
  std::vector<std::vector<int>> neighbor_lists() const;
};

struct Decomposition {
  std::shared_ptr<const Scene> scene;
  std::shared_ptr<const Triangulation> triangulation;
  int label_modulus = 0;  // N used for pair labels (the source scene's N)
  std::vector<FreeRegion> regions;
  std::vector<int> simplex_region;  // simplex id -> region id, -1 inside obstacle
  std::vector<std::array<int, 2>> region_adjacency;
  AdjacencyGraph adjacency_graph;
  WorkspaceComplex workspace_complex;
  std::uint64_t fingerprint = 0;
  bool derived = false;  // produced by what_if_remove (graph-level only)

  const FreeRegion& region(int id) const { return regions.at(id); }
};

// The paper's label scheme: {i} -> i; k-th hole in O_i -> -i*k;
// {i,j}, j<i -> N*i+j; larger sets -> Goedel number with descending
// obstacle ids as exponents of consecutive primes.
BigInt label_region(const std::vector<int>& adjacent, int num_obstacles,
                    int hole_index = 0);

Decomposition decompose(std::shared_ptr<const Scene> scene);
inline Decomposition decompose(const Scene& scene) {
  return decompose(std::make_shared<const Scene>(scene));
}

// Graph-level obstacle removal: reduced adjacent sets, re-merged regions,
// shrunken G_A; geometry is not re-triangulated.
Decomposition what_if_remove(const Decomposition& d, int obstacle_id);

// Region containing p; boundary points resolve to the smallest adjacent
// region id. Throws ContainmentError for obstacle-interior or
// out-of-workspace points.
int region_of_point(const Decomposition& d, const Point& p);

// All regions whose closure contains p (the singleton interior case and the
// multi-region boundary case); used where boundary ambiguity matters.
std::vector<int> regions_of_point(const Decomposition& d, const Point& p);

}  // namespace pathclass
