// Incremental Delaunay triangulation (2D) / tetrahedralization (3D) of the
// obstacle vertices plus workspace corners. Conflict regions are decided by
// the exact, symbolically perturbed in-sphere predicate, so the output is a
// deterministic function of the input point set regardless of insertion
// order.
#pragma once

#include <array>
#include <vector>

#include "pathclass/geom.hpp"
#include "pathclass/scene.hpp"

namespace pathclass {

struct VertexInfo {
  Point position;
  std::vector<int> obstacle_ids;  // sorted; empty for pure workspace corners
  bool workspace_corner = false;
  int rank = 0;                   // lexicographic perturbation rank
};

struct Simplex {
  std::array<int, 4> v{-1, -1, -1, -1};    // vertex ids, v[0..dim]
  std::array<int, 4> nbr{-1, -1, -1, -1};  // neighbor opposite v[i]; -1 = hull
  bool inside_obstacle = false;
  std::vector<int> adjacent_obstacles;     // sorted union of vertex provenance
};

class Triangulation {
 public:
  int dim() const { return dim_; }
  const std::vector<VertexInfo>& vertices() const { return vertices_; }
  const std::vector<Simplex>& simplices() const { return simplices_; }

  const Point& vertex_point(int v) const { return vertices_[v].position; }
  Point simplex_centroid(int s) const;

  // ids of obstacles the simplex touches through its vertices; throws
  // QueryError for inside-obstacle simplices
  std::vector<int> simplex_adjacent_obstacles(int s) const;

  // every simplex whose closure contains p (2 or more when p lies on shared
  // facets); empty when p is outside the triangulated hull
  std::vector<int> containing_simplices(const Point& p) const;

  // membership of p in the triangulated convex hull
  Placement hull_placement(const Point& p) const;

  // facet f of simplex s as vertex ids (the dim vertices other than v[f])
  std::array<int, 3> facet_vertices(int s, int f) const;
  bool facet_on_hull(int s, int f) const { return simplices_[s].nbr[f] == -1; }

 private:
  friend Triangulation triangulate_points(const std::vector<Point>&);
  friend Triangulation triangulate(const Scene&);
  int dim_ = 2;
  std::vector<VertexInfo> vertices_;
  std::vector<Simplex> simplices_;
};

// Core engine over a set of distinct points (throws InputError on
// duplicates, DegeneracyError when all points are affinely dependent).
Triangulation triangulate_points(const std::vector<Point>& points);

// Scene-level triangulation: validates the scene, merges duplicate
// vertices' provenance, inserts workspace corners, flags inside-obstacle
// simplices by exact centroid classification.
Triangulation triangulate(const Scene& scene);

}  // namespace pathclass
