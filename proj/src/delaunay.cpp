#include "pathclass/delaunay.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <numeric>

namespace pathclass {

namespace {

constexpr int kInf = -9;  // symbolic infinite vertex during construction

struct BSimplex {
  std::array<int, 4> v{kInf, kInf, kInf, kInf};
  std::array<int, 4> nbr{-1, -1, -1, -1};
  bool alive = true;
  bool infinite = false;
};

class Builder {
 public:
  Builder(const std::vector<Point>& pts, int dim) : pts_(pts), dim_(dim) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pts[a].lex_less(pts[b]); });
    ranks_.resize(n);
    for (int i = 0; i < n; ++i) {
      if (i > 0 && pts[order[i]].same_coords(pts[order[i - 1]]))
        throw InputError("duplicate points in triangulation input");
      ranks_[order[i]] = i;
    }
  }

  const std::vector<int>& ranks() const { return ranks_; }

  void run() {
    inserted_.assign(pts_.size(), false);
    init_first_simplex();
    for (int i = 0; i < static_cast<int>(pts_.size()); ++i)
      if (!inserted_[i]) insert(i);
  }

  // compacted finite simplices: (vertex array, neighbor array with -1 hull)
  void extract(std::vector<Simplex>& out) const {
    std::vector<int> remap(simplices_.size(), -1);
    int next = 0;
    for (int s = 0; s < static_cast<int>(simplices_.size()); ++s)
      if (simplices_[s].alive && !simplices_[s].infinite) remap[s] = next++;
    out.clear();
    out.resize(next);
    for (int s = 0; s < static_cast<int>(simplices_.size()); ++s) {
      if (remap[s] < 0) continue;
      Simplex& t = out[remap[s]];
      t.v = simplices_[s].v;
      for (int i = 0; i <= dim_; ++i) {
        int nb = simplices_[s].nbr[i];
        t.nbr[i] = (nb >= 0 && remap[nb] >= 0) ? remap[nb] : -1;
      }
    }
  }

 private:
  const std::vector<Point>& pts_;
  int dim_;
  std::vector<int> ranks_;
  std::vector<char> inserted_;
  std::vector<BSimplex> simplices_;

  Sign orient_of(std::span<const int> vids) const {
    std::vector<Point> p;
    p.reserve(vids.size());
    for (int v : vids) p.push_back(pts_[v]);
    return orient(p);
  }

  void init_first_simplex() {
    const int n = static_cast<int>(pts_.size());
    if (n < dim_ + 1) throw DegeneracyError("need at least d+1 points");
    std::vector<int> base;
    base.push_back(0);
    // first point with distinct coordinates is index 1 (inputs are distinct)
    base.push_back(1);
    if (dim_ == 2) {
      int k = -1;
      for (int j = 2; j < n; ++j) {
        int ids[3] = {base[0], base[1], j};
        if (orient_of(std::span<const int>(ids, 3)) != Sign::zero) {
          k = j;
          break;
        }
      }
      if (k < 0) throw DegeneracyError("all points collinear");
      base.push_back(k);
    } else {
      int k = -1;
      for (int j = 2; j < n; ++j) {
        // non-collinear with base[0], base[1]
        auto& a = pts_[base[0]];
        auto& b = pts_[base[1]];
        auto& c = pts_[j];
        Rational ux = b.x[0] - a.x[0], uy = b.x[1] - a.x[1], uz = b.x[2] - a.x[2];
        Rational wx = c.x[0] - a.x[0], wy = c.x[1] - a.x[1], wz = c.x[2] - a.x[2];
        if (uy * wz - uz * wy != 0 || uz * wx - ux * wz != 0 || ux * wy - uy * wx != 0) {
          k = j;
          break;
        }
      }
      if (k < 0) throw DegeneracyError("all points collinear");
      base.push_back(k);
      int m = -1;
      for (int j = 2; j < n; ++j) {
        if (j == k) continue;
        int ids[4] = {base[0], base[1], base[2], j};
        if (orient_of(std::span<const int>(ids, 4)) != Sign::zero) {
          m = j;
          break;
        }
      }
      if (m < 0) throw DegeneracyError("all points coplanar");
      base.push_back(m);
    }
    if (orient_of(base) == Sign::negative) std::swap(base[0], base[1]);

    BSimplex first;
    for (int i = 0; i <= dim_; ++i) first.v[i] = base[i];
    simplices_.push_back(first);
    for (int i = 0; i <= dim_; ++i) {
      BSimplex wall;
      wall.infinite = true;
      int t = 0;
      for (int j = 0; j <= dim_; ++j)
        if (j != i) wall.v[t++] = base[j];
      wall.v[dim_] = kInf;
      simplices_.push_back(wall);
    }
    relink_all();
    for (int b : base) inserted_[b] = true;
  }

  // facet key: sorted vertex ids of a simplex minus one slot
  std::array<int, 3> facet_key(const BSimplex& s, int slot) const {
    std::array<int, 3> key{atom(), atom(), atom()};
    int t = 0;
    for (int j = 0; j <= dim_; ++j)
      if (j != slot) key[t++] = s.v[j];
    std::sort(key.begin(), key.begin() + dim_);
    return key;
  }
  static constexpr int atom() { return 1 << 29; }

  void relink_all() {
    std::map<std::array<int, 3>, std::pair<int, int>> open;
    for (int s = 0; s < static_cast<int>(simplices_.size()); ++s) {
      if (!simplices_[s].alive) continue;
      for (int i = 0; i <= dim_; ++i) {
        auto key = facet_key(simplices_[s], i);
        auto it = open.find(key);
        if (it == open.end()) {
          open[key] = {s, i};
        } else {
          simplices_[s].nbr[i] = it->second.first;
          simplices_[it->second.first].nbr[it->second.second] = s;
          open.erase(it);
        }
      }
    }
    assert(open.empty());
  }

  bool conflicts(int s, int pid) const {
    const BSimplex& sx = simplices_[s];
    if (!sx.infinite) {
      Point simp[4];
      int ranks[4];
      for (int i = 0; i <= dim_; ++i) {
        simp[i] = pts_[sx.v[i]];
        ranks[i] = ranks_[sx.v[i]];
      }
      return perturbed_in_sphere(std::span<const Point>(simp, dim_ + 1),
                                 std::span<const int>(ranks, dim_ + 1), pts_[pid],
                                 ranks_[pid]) == SpherePosition::inside;
    }
    // hull wall: strictly outside its facet conflicts; on the facet's
    // supporting flat the adjacent finite simplex's circumsphere decides
    // (its sphere meets the flat exactly in the facet's circumcircle)
    int inf_slot = -1;
    for (int i = 0; i <= dim_; ++i)
      if (sx.v[i] == kInf) inf_slot = i;
    assert(inf_slot >= 0);
    const int finite_nbr = sx.nbr[inf_slot];
    assert(finite_nbr >= 0 && !simplices_[finite_nbr].infinite);
    std::array<int, 3> facet{};
    int t = 0;
    for (int i = 0; i <= dim_; ++i)
      if (i != inf_slot) facet[t++] = sx.v[i];
    int apex = -1;
    for (int i = 0; i <= dim_; ++i) {
      int cand = simplices_[finite_nbr].v[i];
      if (cand != facet[0] && cand != facet[1] && (dim_ == 2 || cand != facet[2]))
        apex = cand;
    }
    assert(apex >= 0);
    Sign inward, side;
    if (dim_ == 2) {
      inward = orient2(pts_[facet[0]], pts_[facet[1]], pts_[apex]);
      side = orient2(pts_[facet[0]], pts_[facet[1]], pts_[pid]);
    } else {
      inward = orient3(pts_[facet[0]], pts_[facet[1]], pts_[facet[2]], pts_[apex]);
      side = orient3(pts_[facet[0]], pts_[facet[1]], pts_[facet[2]], pts_[pid]);
    }
    assert(inward != Sign::zero);
    if (side == opposite(inward)) return true;
    if (side == inward) return false;
    return conflicts(finite_nbr, pid);
  }

  void insert(int pid) {
    inserted_[pid] = true;
    std::vector<int> dead;
    std::vector<char> in_conflict(simplices_.size(), 0);
    for (int s = 0; s < static_cast<int>(simplices_.size()); ++s) {
      if (!simplices_[s].alive) continue;
      if (conflicts(s, pid)) {
        in_conflict[s] = 1;
        dead.push_back(s);
      }
    }
    if (dead.empty())
      throw DegeneracyError("insertion found no conflict region (internal)");

    // cavity boundary facets -> one new simplex each, facet order kept,
    // inserted point last
    struct NewSimplex {
      int id;
      int outer;  // surviving neighbor across the base facet
    };
    std::map<std::array<int, 3>, std::pair<int, int>> ridge_open;
    std::vector<NewSimplex> created;
    for (int s : dead) {
      const BSimplex sx = simplices_[s];
      for (int i = 0; i <= dim_; ++i) {
        const int outer = sx.nbr[i];
        if (outer < 0 || in_conflict[outer]) continue;
        BSimplex ns;
        ns.alive = true;
        int t = 0;
        for (int j = 0; j <= dim_; ++j)
          if (j != i) ns.v[t++] = sx.v[j];
        ns.v[dim_] = pid;
        ns.infinite = false;
        for (int j = 0; j < dim_; ++j)
          if (ns.v[j] == kInf) ns.infinite = true;
        const int nid = static_cast<int>(simplices_.size());
        simplices_.push_back(ns);
        in_conflict.push_back(0);
        // link across the base facet
        simplices_[nid].nbr[dim_] = outer;
        for (int j = 0; j <= dim_; ++j)
          if (simplices_[outer].nbr[j] == s) simplices_[outer].nbr[j] = nid;
        created.push_back({nid, outer});
      }
    }
    for (int s : dead) simplices_[s].alive = false;
    // link the new simplices among themselves along ridges containing pid
    for (const auto& ns : created) {
      for (int i = 0; i < dim_; ++i) {
        auto key = facet_key(simplices_[ns.id], i);
        auto it = ridge_open.find(key);
        if (it == ridge_open.end()) {
          ridge_open[key] = {ns.id, i};
        } else {
          simplices_[ns.id].nbr[i] = it->second.first;
          simplices_[it->second.first].nbr[it->second.second] = ns.id;
          ridge_open.erase(it);
        }
      }
    }
    assert(ridge_open.empty());
  }
};

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// ── exact obstacle-overlap flagging ─────────────────────────────────
// A Delaunay simplex may slice through an obstacle whose vertices all stay
// outside its circumsphere, so the flag comes from exact overlap tests, not
// from the centroid alone.

// halfspace description of a convex cell: facet point tuples plus the sign
// an interior point takes under homogeneous_orient
struct ConvexCell {
  std::vector<std::vector<Point>> facets;
  std::vector<int> inside_sign;
};

ConvexCell cell_from_facets(const std::vector<std::vector<Point>>& facets,
                            const Point& interior) {
  ConvexCell cell;
  for (const auto& f : facets) {
    std::vector<Point> probe = f;
    probe.push_back(interior);
    const int s = static_cast<int>(sign_of(homogeneous_orient(probe)));
    if (s == 0) continue;  // degenerate facet plane through the witness
    cell.facets.push_back(f);
    cell.inside_sign.push_back(s);
  }
  return cell;
}

bool point_strictly_in_simplex(const Triangulation& tri, int s, const Point& p) {
  const Simplex& sx = tri.simplices()[s];
  const int dim = tri.dim();
  std::vector<Point> verts(dim + 1);
  for (int i = 0; i <= dim; ++i) verts[i] = tri.vertex_point(sx.v[i]);
  Sign so = orient(verts);
  for (int i = 0; i <= dim; ++i) {
    std::vector<Point> repl = verts;
    repl[i] = p;
    if (orient(repl) != so) return false;
  }
  return true;
}

struct BBox {
  double lo[3] = {1e300, 1e300, 1e300};
  double hi[3] = {-1e300, -1e300, -1e300};
  void grow(const Point& p, int dim) {
    for (int k = 0; k < dim; ++k) {
      lo[k] = std::min(lo[k], p.d[k]);
      hi[k] = std::max(hi[k], p.d[k]);
    }
  }
  bool overlaps(const BBox& o, int dim) const {
    for (int k = 0; k < dim; ++k)
      if (hi[k] < o.lo[k] - 1e-9 || o.hi[k] < lo[k] - 1e-9) return false;
    return true;
  }
};

struct PieceGeometry {
  int obstacle_id;
  const ObstaclePiece* piece;
  Polytope polygon;                             // 2D
  ConvexCell cell;                              // 3D
  std::vector<std::pair<int, int>> edges;       // boundary edges
  BBox bbox;
};

std::vector<PieceGeometry> collect_piece_geometry(const Scene& scene) {
  std::vector<PieceGeometry> out;
  for (const auto& ob : scene.obstacles)
    for (const auto& piece : ob.pieces) {
      PieceGeometry g;
      g.obstacle_id = ob.id;
      g.piece = &piece;
      if (scene.dim == 2) {
        g.polygon = Polytope{ob.id, 2, piece.vertices, {}};
        const int n = static_cast<int>(piece.vertices.size());
        for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n});
      } else {
        std::vector<Rational> mean(3, Rational(0));
        for (const auto& v : piece.vertices)
          for (int k = 0; k < 3; ++k) mean[k] += v.x[k];
        for (int k = 0; k < 3; ++k) mean[k] /= static_cast<int>(piece.vertices.size());
        std::vector<std::vector<Point>> facets;
        std::set<std::pair<int, int>> edge_set;
        for (const auto& f : piece.faces) {
          facets.push_back({piece.vertices[f[0]], piece.vertices[f[1]], piece.vertices[f[2]]});
          for (int k = 0; k < 3; ++k)
            edge_set.insert({std::min(f[k], f[(k + 1) % 3]), std::max(f[k], f[(k + 1) % 3])});
        }
        g.cell = cell_from_facets(facets, Point::from_rationals(mean));
        g.edges.assign(edge_set.begin(), edge_set.end());
      }
      for (const auto& v : piece.vertices) g.bbox.grow(v, scene.dim);
      out.push_back(std::move(g));
    }
  return out;
}

// Steiner points are snapped to the nearest double grid so the floating
// filters keep working across refinement rounds; for axis-aligned faces the
// snapped point still lies exactly on the face plane.
Point lerp_point(const Point& a, const Point& b, const Rational& t, int dim) {
  std::vector<double> coords(dim);
  for (int k = 0; k < dim; ++k)
    coords[k] = Rational(a.x[k] + t * (b.x[k] - a.x[k])).convert_to<double>();
  return Point::from_doubles(coords);
}

// filtered sign of the plane function through a facet at point x, with the
// same sign convention as homogeneous_orient (which flips orient's sign in
// the four-point case)
int plane_side(const std::vector<Point>& facet, const Point& x) {
  std::vector<Point> probe = facet;
  probe.push_back(x);
  const int s = static_cast<int>(orient(probe));
  return probe.size() == 4 ? -s : s;
}

// exact clip interval of [a,b] against the cell; empty when no interior hit.
// Signs go through the floating filters; rational parameters are computed
// only for planes the segment actually straddles.
std::optional<std::pair<Rational, Rational>> cell_clip(const Point& a, const Point& b,
                                                       const ConvexCell& cell) {
  const int nf = static_cast<int>(cell.facets.size());
  std::vector<int> sa(nf), sb(nf);
  for (int i = 0; i < nf; ++i) {
    sa[i] = plane_side(cell.facets[i], a) * cell.inside_sign[i];
    sb[i] = plane_side(cell.facets[i], b) * cell.inside_sign[i];
    if (sa[i] == 0 && sb[i] == 0) return std::nullopt;  // slides along a plane
    if (sa[i] <= 0 && sb[i] <= 0) return std::nullopt;
  }
  Rational t0(0), t1(1);
  for (int i = 0; i < nf; ++i) {
    if (sa[i] >= 0 && sb[i] >= 0) continue;
    std::vector<Point> probe = cell.facets[i];
    probe.push_back(a);
    Rational fa = homogeneous_orient(probe) * cell.inside_sign[i];
    probe.back() = b;
    Rational fb = homogeneous_orient(probe) * cell.inside_sign[i];
    if (sa[i] < 0) t0 = std::max(t0, Rational(fa / (fa - fb)));
    if (sb[i] < 0) t1 = std::min(t1, Rational(fa / (fa - fb)));
  }
  if (t0 < t1) return std::make_pair(t0, t1);
  return std::nullopt;
}

// interior-crossing spans of [a,b] against a simple polygon
std::vector<std::pair<Rational, Rational>> polygon_clip(const Point& a, const Point& b,
                                                        const Polytope& poly) {
  std::vector<Rational> params = {Rational(0), Rational(1)};
  const int n = static_cast<int>(poly.vertices.size());
  for (int i = 0; i < n; ++i) {
    const std::vector<Point> facet = {poly.vertices[i], poly.vertices[(i + 1) % n]};
    const int sa = plane_side(facet, a);
    const int sb = plane_side(facet, b);
    if (sa == sb || sa == 0 || sb == 0) {
      if (sa != sb) {  // one endpoint on the line: split there exactly
        std::vector<Point> probe = facet;
        probe.push_back(a);
        Rational fa = homogeneous_orient(probe);
        probe.back() = b;
        Rational fb = homogeneous_orient(probe);
        if (fa != fb) {
          Rational t = fa / (fa - fb);
          if (t > 0 && t < 1) params.push_back(t);
        }
      }
      continue;
    }
    std::vector<Point> probe = facet;
    probe.push_back(a);
    Rational fa = homogeneous_orient(probe);
    probe.back() = b;
    Rational fb = homogeneous_orient(probe);
    Rational t = fa / (fa - fb);
    if (t > 0 && t < 1) params.push_back(t);
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  std::vector<std::pair<Rational, Rational>> spans;
  for (std::size_t i = 0; i + 1 < params.size(); ++i) {
    Rational m = (params[i] + params[i + 1]) / 2;
    std::vector<Rational> coords = {a.x[0] + m * (b.x[0] - a.x[0]),
                                    a.x[1] + m * (b.x[1] - a.x[1])};
    if (point_in_polytope(Point::from_rationals(coords), poly) == Placement::interior)
      spans.push_back({params[i], params[i + 1]});
  }
  return spans;
}

// Overlap scan: true when simplex s has interior intersection with any
// obstacle; Steiner boundary points that would resolve the crossing are
// appended when a collector is given.
bool simplex_overlaps_obstacles(const Triangulation& tri, int s, const Scene& scene,
                                const std::vector<PieceGeometry>& pieces,
                                std::vector<std::pair<Point, int>>* steiner) {
  const int dim = tri.dim();
  const Simplex& sx = tri.simplices()[s];
  std::vector<Point> verts(dim + 1);
  BBox sbox;
  for (int i = 0; i <= dim; ++i) {
    verts[i] = tri.vertex_point(sx.v[i]);
    sbox.grow(verts[i], dim);
  }
  bool overlap = false;

  // fully-inside case: a connected simplex fits inside one obstacle only if
  // every vertex belongs to it
  std::vector<int> common = tri.vertices()[sx.v[0]].obstacle_ids;
  for (int i = 1; i <= dim && !common.empty(); ++i) {
    std::vector<int> next;
    const auto& ids = tri.vertices()[sx.v[i]].obstacle_ids;
    std::set_intersection(common.begin(), common.end(), ids.begin(), ids.end(),
                          std::back_inserter(next));
    common = std::move(next);
  }
  if (!common.empty()) {
    Point centroid = tri.simplex_centroid(s);
    for (int id : common)
      if (scene.classify(centroid, scene.obstacle_by_id(id)) == Placement::interior)
        return true;  // wholly inside; no refinement point wanted
  }

  // simplex facets as a convex cell (for obstacle-edge crossings)
  std::optional<ConvexCell> scell;
  auto simplex_cell = [&]() -> const ConvexCell& {
    if (!scell) {
      std::vector<std::vector<Point>> sfacets;
      for (int f = 0; f <= dim; ++f) {
        std::vector<Point> facet;
        for (int i = 0; i <= dim; ++i)
          if (i != f) facet.push_back(verts[i]);
        sfacets.push_back(std::move(facet));
      }
      scell = cell_from_facets(sfacets, tri.simplex_centroid(s));
    }
    return *scell;
  };

  for (const auto& g : pieces) {
    if (!sbox.overlaps(g.bbox, dim)) continue;
    // obstacle vertex strictly inside the simplex (cannot happen once the
    // vertex participates in the triangulation; kept for completeness)
    for (const auto& v : g.piece->vertices)
      if (point_strictly_in_simplex(tri, s, v)) overlap = true;
    // simplex edge through the piece interior: refine at the boundary
    // entry/exit points
    for (int i = 0; i <= dim; ++i)
      for (int j = i + 1; j <= dim; ++j) {
        if (scene.dim == 2) {
          for (const auto& [t0, t1] : polygon_clip(verts[i], verts[j], g.polygon)) {
            overlap = true;
            if (!steiner) return true;
            if (t0 > 0) steiner->push_back({lerp_point(verts[i], verts[j], t0, 2), g.obstacle_id});
            if (t1 < 1) steiner->push_back({lerp_point(verts[i], verts[j], t1, 2), g.obstacle_id});
          }
        } else if (auto span = cell_clip(verts[i], verts[j], g.cell)) {
          overlap = true;
          if (!steiner) return true;
          if (span->first > 0)
            steiner->push_back({lerp_point(verts[i], verts[j], span->first, 3), g.obstacle_id});
          if (span->second < 1)
            steiner->push_back({lerp_point(verts[i], verts[j], span->second, 3), g.obstacle_id});
        }
      }
    // piece edge through the simplex interior: refine at the midpoint of the
    // crossing span (a boundary point of the obstacle inside the simplex)
    for (const auto& [u, w] : g.edges) {
      const Point& pu = g.piece->vertices[u];
      const Point& pw = g.piece->vertices[w];
      if (auto span = cell_clip(pu, pw, simplex_cell())) {
        overlap = true;
        if (!steiner) return true;
        steiner->push_back(
            {lerp_point(pu, pw, (span->first + span->second) / 2, scene.dim), g.obstacle_id});
      }
    }
  }
  return overlap;
}

}  // namespace

Point Triangulation::simplex_centroid(int s) const {
  const Simplex& sx = simplices_[s];
  std::vector<Rational> c(dim_, Rational(0));
  for (int i = 0; i <= dim_; ++i)
    for (int k = 0; k < dim_; ++k) c[k] += vertices_[sx.v[i]].position.x[k];
  for (int k = 0; k < dim_; ++k) c[k] /= dim_ + 1;
  return Point::from_rationals(c);
}

std::vector<int> Triangulation::simplex_adjacent_obstacles(int s) const {
  if (s < 0 || s >= static_cast<int>(simplices_.size()))
    throw QueryError("simplex id out of range");
  if (simplices_[s].inside_obstacle)
    throw QueryError("simplex " + std::to_string(s) + " lies inside an obstacle");
  return simplices_[s].adjacent_obstacles;
}

std::array<int, 3> Triangulation::facet_vertices(int s, int f) const {
  std::array<int, 3> out{-1, -1, -1};
  int t = 0;
  for (int i = 0; i <= dim_; ++i)
    if (i != f) out[t++] = simplices_[s].v[i];
  return out;
}

namespace {

bool simplex_contains(const Triangulation& tri, int s, const Point& p,
                      std::array<bool, 4>* on_facet) {
  const Simplex& sx = tri.simplices()[s];
  const int dim = tri.dim();
  std::vector<Point> verts(dim + 1);
  for (int i = 0; i <= dim; ++i) verts[i] = tri.vertex_point(sx.v[i]);
  Sign so = orient(verts);
  if (so == Sign::zero) return false;
  if (on_facet) on_facet->fill(false);
  for (int i = 0; i <= dim; ++i) {
    std::vector<Point> repl = verts;
    repl[i] = p;
    Sign oi = orient(repl);
    if (oi == Sign::zero) {
      if (on_facet) (*on_facet)[i] = true;
      continue;
    }
    if (oi != so) return false;
  }
  return true;
}

}  // namespace

std::vector<int> Triangulation::containing_simplices(const Point& p) const {
  std::vector<int> out;
  for (int s = 0; s < static_cast<int>(simplices_.size()); ++s)
    if (simplex_contains(*this, s, p, nullptr)) out.push_back(s);
  return out;
}

Placement Triangulation::hull_placement(const Point& p) const {
  auto containing = containing_simplices(p);
  if (containing.empty()) return Placement::exterior;
  for (int s : containing) {
    std::array<bool, 4> on_facet{};
    simplex_contains(*this, s, p, &on_facet);
    for (int i = 0; i <= dim_; ++i)
      if (on_facet[i] && simplices_[s].nbr[i] == -1) return Placement::boundary;
  }
  return Placement::interior;
}

Triangulation triangulate_points(const std::vector<Point>& points) {
  if (points.empty()) throw InputError("no points to triangulate");
  const int dim = points[0].dim;
  for (const auto& p : points)
    if (p.dim != dim) throw InputError("dimension mismatch among points");
  Builder builder(points, dim);
  builder.run();
  Triangulation tri;
  tri.dim_ = dim;
  tri.vertices_.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    tri.vertices_[i].position = points[i];
    tri.vertices_[i].rank = builder.ranks()[i];
  }
  builder.extract(tri.simplices_);
  return tri;
}

Triangulation triangulate(const Scene& scene) {
  scene.validate();
  // gather points with provenance, merging exact duplicates
  std::vector<Point> points;
  std::vector<std::vector<int>> provenance;
  std::vector<char> corner_flag;
  auto key_less = [](const Point& a, const Point& b) { return a.lex_less(b); };
  std::map<Point, int, decltype(key_less)> index(key_less);
  auto add = [&](const Point& p, int obstacle_id, bool corner) {
    auto it = index.find(p);
    int id;
    if (it == index.end()) {
      id = static_cast<int>(points.size());
      index.emplace(p, id);
      points.push_back(p);
      provenance.emplace_back();
      corner_flag.push_back(0);
    } else {
      id = it->second;
    }
    if (obstacle_id > 0) provenance[id] = sorted_union(provenance[id], {obstacle_id});
    if (corner) corner_flag[id] = 1;
    return id;
  };
  for (const auto& ob : scene.obstacles)
    for (const auto& piece : ob.pieces)
      for (const auto& v : piece.vertices) add(v, ob.id, false);
  for (const auto& c : scene.corners()) add(c, 0, true);

  const auto pieces = collect_piece_geometry(scene);
  Triangulation tri;
  // refinement loop: a Delaunay simplex can slice an obstacle whose corners
  // all avoid its circumsphere; split such crossings at exact boundary
  // points until the triangulation conforms
  for (int round = 0;; ++round) {
    tri = triangulate_points(points);
    for (std::size_t i = 0; i < points.size(); ++i) {
      tri.vertices_[i].obstacle_ids = provenance[i];
      tri.vertices_[i].workspace_corner = corner_flag[i] != 0;
    }
    if (round >= 16) break;  // safety stop; remaining crossings stay flagged
    std::vector<std::pair<Point, int>> steiner;
    for (int s = 0; s < static_cast<int>(tri.simplices_.size()); ++s)
      simplex_overlaps_obstacles(tri, s, scene, pieces, &steiner);
    std::size_t before = points.size();
    for (const auto& [p, pid] : steiner) add(p, pid, false);
    if (points.size() == before) break;
  }

  for (auto& sx : tri.simplices_) {
    std::vector<int> adj;
    for (int i = 0; i <= tri.dim(); ++i)
      adj = sorted_union(adj, tri.vertices_[sx.v[i]].obstacle_ids);
    sx.adjacent_obstacles = std::move(adj);
  }
  for (int s = 0; s < static_cast<int>(tri.simplices_.size()); ++s)
    tri.simplices_[s].inside_obstacle =
        simplex_overlaps_obstacles(tri, s, scene, pieces, nullptr);
  return tri;
}

}  // namespace pathclass
