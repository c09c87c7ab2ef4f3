#include "pathclass/jointcover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace pathclass {

namespace {

const int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                       43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// membership tester for the convex hull of an obstacle pair's vertices
class PairHull {
 public:
  PairHull(const Scene& scene, int i, int j) {
    std::vector<Point> pts;
    auto gather = [&](int id) {
      for (const auto& piece : scene.obstacle_by_id(id).pieces)
        for (const auto& v : piece.vertices) pts.push_back(v);
    };
    gather(i);
    gather(j);
    std::sort(pts.begin(), pts.end(),
              [](const Point& a, const Point& b) { return a.lex_less(b); });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point& a, const Point& b) { return a.same_coords(b); }),
              pts.end());
    if (scene.dim == 2) {
      hull_ = convex_hull(pts);
    } else {
      tri_ = std::make_unique<Triangulation>(triangulate_points(pts));
    }
  }

  bool contains(const Point& p) const {
    if (tri_) return tri_->hull_placement(p) != Placement::exterior;
    const int n = static_cast<int>(hull_.vertices.size());
    for (int i = 0; i < n; ++i) {
      const Point pts[3] = {hull_.vertices[i], hull_.vertices[(i + 1) % n], p};
      if (orient(std::span<const Point>(pts, 3)) == Sign::negative) return false;
    }
    return true;
  }

 private:
  Polytope hull_;
  std::unique_ptr<Triangulation> tri_;
};

std::vector<std::array<int, 2>> dedupe_pairs(std::vector<std::array<int, 2>> pairs) {
  for (auto& p : pairs)
    if (p[0] > p[1]) std::swap(p[0], p[1]);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

AdjacencyGraph build_adjacency_graph(const std::vector<FreeRegion>& regions, int n_obstacles,
                                     const std::vector<int>& keep_nodes) {
  AdjacencyGraph g;
  g.nodes = keep_nodes;
  std::set<std::vector<int>> sets;
  for (const auto& r : regions)
    if (r.obstacles.size() >= 2) sets.insert(r.obstacles);
  g.hyperedges.assign(sets.begin(), sets.end());
  (void)n_obstacles;
  return g;
}

WorkspaceComplex build_workspace_complex(int region_count,
                                         const std::vector<std::array<int, 2>>& adjacency,
                                         int dim) {
  WorkspaceComplex sw;
  sw.vertex_count = region_count;
  sw.edges = adjacency;
  if (dim == 3) {
    std::set<std::array<int, 2>> adj(adjacency.begin(), adjacency.end());
    auto has = [&](int a, int b) {
      return adj.count({std::min(a, b), std::max(a, b)}) > 0;
    };
    for (const auto& e : adjacency)
      for (int c = e[1] + 1; c < region_count; ++c)
        if (has(e[0], c) && has(e[1], c)) sw.triangles.push_back({e[0], e[1], c});
  }
  return sw;
}

}  // namespace

std::vector<std::array<int, 2>> AdjacencyGraph::pair_edges() const {
  std::vector<std::array<int, 2>> out;
  for (const auto& h : hyperedges)
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = i + 1; j < h.size(); ++j) out.push_back({h[i], h[j]});
  return dedupe_pairs(out);
}

bool AdjacencyGraph::has_hyperedge(const std::vector<int>& set) const {
  return std::find(hyperedges.begin(), hyperedges.end(), set) != hyperedges.end();
}

bool WorkspaceComplex::adjacent(int a, int b) const {
  std::array<int, 2> key{std::min(a, b), std::max(a, b)};
  return std::binary_search(edges.begin(), edges.end(), key);
}

std::vector<std::vector<int>> WorkspaceComplex::neighbor_lists() const {
  std::vector<std::vector<int>> out(vertex_count);
  for (const auto& e : edges) {
    out[e[0]].push_back(e[1]);
    out[e[1]].push_back(e[0]);
  }
  for (auto& l : out) std::sort(l.begin(), l.end());
  return out;
}

BigInt label_region(const std::vector<int>& adjacent, int num_obstacles, int hole_index) {
  std::vector<int> ids = adjacent;
  std::sort(ids.begin(), ids.end());
  for (int id : ids)
    if (id < 1 || id > num_obstacles) throw InputError("obstacle id out of range");
  if (hole_index > 0) {
    if (ids.size() != 1)
      throw InputError("hole label requires a single adjacent obstacle");
    return BigInt(-ids[0]) * hole_index;
  }
  if (ids.empty()) return 0;
  if (ids.size() == 1) return ids[0];
  if (ids.size() == 2) return BigInt(num_obstacles) * ids[1] + ids[0];
  if (ids.size() > std::size(kPrimes)) throw InputError("too many adjacent obstacles");
  BigInt label = 1;
  for (std::size_t t = 0; t < ids.size(); ++t) {
    const int exponent = ids[ids.size() - 1 - t];  // descending ids
    BigInt power = 1;
    for (int e = 0; e < exponent; ++e) power *= kPrimes[t];
    label *= power;
  }
  return label;
}

Decomposition decompose(std::shared_ptr<const Scene> scene) {
  Decomposition d;
  d.scene = scene;
  d.triangulation = std::make_shared<const Triangulation>(triangulate(*scene));
  d.label_modulus = scene->num_obstacles();
  const Triangulation& tri = *d.triangulation;
  const int dim = tri.dim();
  const int ns = static_cast<int>(tri.simplices().size());

  // merge key per free simplex: adjacent set + pair-hull membership
  std::map<std::pair<int, int>, PairHull> pair_hulls;
  std::vector<char> in_hull(ns, 0);
  std::vector<char> free_flag(ns, 0);
  for (int s = 0; s < ns; ++s) {
    const Simplex& sx = tri.simplices()[s];
    if (sx.inside_obstacle) continue;
    free_flag[s] = 1;
    if (sx.adjacent_obstacles.size() == 2) {
      std::pair<int, int> key{sx.adjacent_obstacles[0], sx.adjacent_obstacles[1]};
      auto it = pair_hulls.find(key);
      if (it == pair_hulls.end())
        it = pair_hulls.emplace(key, PairHull(*scene, key.first, key.second)).first;
      bool inside = true;
      for (int i = 0; i <= dim && inside; ++i)
        inside = it->second.contains(tri.vertex_point(sx.v[i]));
      in_hull[s] = inside ? 1 : 0;
    }
  }
  auto same_key = [&](int a, int b) {
    return tri.simplices()[a].adjacent_obstacles == tri.simplices()[b].adjacent_obstacles &&
           in_hull[a] == in_hull[b];
  };

  UnionFind uf(ns);
  for (int s = 0; s < ns; ++s) {
    if (!free_flag[s]) continue;
    for (int f = 0; f <= dim; ++f) {
      int n = tri.simplices()[s].nbr[f];
      if (n < 0 || !free_flag[n]) continue;
      if (same_key(s, n)) uf.unite(s, n);
    }
  }
  std::map<int, std::vector<int>> components;
  for (int s = 0; s < ns; ++s)
    if (free_flag[s]) components[uf.find(s)].push_back(s);

  // region ids in order of smallest member simplex
  std::vector<std::vector<int>> member_lists;
  for (auto& [root, members] : components) member_lists.push_back(members);
  std::sort(member_lists.begin(), member_lists.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  d.simplex_region.assign(ns, -1);
  std::map<int, int> hole_counter;
  for (int rid = 0; rid < static_cast<int>(member_lists.size()); ++rid) {
    FreeRegion r;
    r.id = rid;
    r.simplices = member_lists[rid];
    r.obstacles = tri.simplices()[r.simplices.front()].adjacent_obstacles;
    r.in_pair_hull = in_hull[r.simplices.front()] != 0;
    bool hull_facet = false;
    bool frontier_free = false;
    for (int s : r.simplices) {
      d.simplex_region[s] = rid;
      for (int f = 0; f <= dim; ++f) {
        int n = tri.simplices()[s].nbr[f];
        if (n == -1)
          hull_facet = true;
        else if (free_flag[n] && !same_key(s, n))
          frontier_free = true;
      }
    }
    r.compact = !hull_facet;
    if (r.obstacles.size() == 1 && !hull_facet && !frontier_free)
      r.hole_index = ++hole_counter[r.obstacles[0]];
    r.label = label_region(r.obstacles, d.label_modulus, r.hole_index);
    d.regions.push_back(std::move(r));
  }

  // region adjacency from shared facets
  std::vector<std::array<int, 2>> adj;
  for (int s = 0; s < ns; ++s) {
    if (!free_flag[s]) continue;
    for (int f = 0; f <= dim; ++f) {
      int n = tri.simplices()[s].nbr[f];
      if (n < 0 || !free_flag[n]) continue;
      int ra = d.simplex_region[s], rb = d.simplex_region[n];
      if (ra != rb) adj.push_back({ra, rb});
    }
  }
  d.region_adjacency = dedupe_pairs(std::move(adj));

  std::vector<int> nodes;
  for (const auto& ob : scene->obstacles) nodes.push_back(ob.id);
  std::sort(nodes.begin(), nodes.end());
  d.adjacency_graph = build_adjacency_graph(d.regions, d.label_modulus, nodes);
  d.workspace_complex =
      build_workspace_complex(static_cast<int>(d.regions.size()), d.region_adjacency, dim);
  d.fingerprint = fnv1a(std::string("decomposition"), scene->content_hash());
  return d;
}

Decomposition what_if_remove(const Decomposition& d, int obstacle_id) {
  const auto& nodes = d.adjacency_graph.nodes;
  if (std::find(nodes.begin(), nodes.end(), obstacle_id) == nodes.end())
    throw QueryError("unknown obstacle id " + std::to_string(obstacle_id));

  const int nr = static_cast<int>(d.regions.size());
  std::vector<std::vector<int>> reduced(nr);
  std::vector<int> hole_kept(nr, 0);
  for (int r = 0; r < nr; ++r) {
    for (int id : d.regions[r].obstacles)
      if (id != obstacle_id) reduced[r].push_back(id);
    if (d.regions[r].hole_index > 0 && d.regions[r].obstacles[0] != obstacle_id)
      hole_kept[r] = d.regions[r].hole_index;
  }
  UnionFind uf(nr);
  for (const auto& e : d.region_adjacency)
    if (reduced[e[0]] == reduced[e[1]] && hole_kept[e[0]] == hole_kept[e[1]])
      uf.unite(e[0], e[1]);
  // regions that only bordered the removed obstacle are left with an empty
  // set; absorb each into its smallest adjacent region
  for (int r = 0; r < nr; ++r) {
    const bool changed =
        std::find(d.regions[r].obstacles.begin(), d.regions[r].obstacles.end(),
                  obstacle_id) != d.regions[r].obstacles.end();
    if (!changed || !reduced[r].empty() || hole_kept[r] > 0) continue;
    int target = -1;
    for (const auto& e : d.region_adjacency) {
      if (e[0] == r) target = target < 0 ? e[1] : std::min(target, e[1]);
      if (e[1] == r) target = target < 0 ? e[0] : std::min(target, e[0]);
    }
    if (target >= 0) {
      reduced[r] = reduced[target];
      uf.unite(r, target);
    }
  }

  std::map<int, std::vector<int>> groups;
  for (int r = 0; r < nr; ++r) groups[uf.find(r)].push_back(r);
  std::vector<std::vector<int>> group_lists;
  for (auto& [root, members] : groups) group_lists.push_back(members);
  std::sort(group_lists.begin(), group_lists.end(), [&](const auto& a, const auto& b) {
    return d.regions[a.front()].simplices.front() < d.regions[b.front()].simplices.front();
  });

  Decomposition out;
  out.scene = d.scene;
  out.triangulation = d.triangulation;
  out.label_modulus = d.label_modulus;
  out.derived = true;
  out.fingerprint = fnv1a("remove:" + std::to_string(obstacle_id), d.fingerprint);
  out.simplex_region.assign(d.simplex_region.size(), -1);

  std::vector<int> old_to_new(nr, -1);
  for (int nid = 0; nid < static_cast<int>(group_lists.size()); ++nid) {
    FreeRegion r;
    r.id = nid;
    r.obstacles = reduced[group_lists[nid].front()];
    r.hole_index = hole_kept[group_lists[nid].front()];
    bool unchanged = group_lists[nid].size() == 1 &&
                     d.regions[group_lists[nid].front()].obstacles == r.obstacles;
    r.in_pair_hull = unchanged && d.regions[group_lists[nid].front()].in_pair_hull;
    r.compact = true;
    for (int old : group_lists[nid]) {
      old_to_new[old] = nid;
      r.compact = r.compact && d.regions[old].compact;
      r.simplices.insert(r.simplices.end(), d.regions[old].simplices.begin(),
                         d.regions[old].simplices.end());
    }
    std::sort(r.simplices.begin(), r.simplices.end());
    for (int s : r.simplices) out.simplex_region[s] = nid;
    r.label = label_region(r.obstacles, out.label_modulus, r.hole_index);
    out.regions.push_back(std::move(r));
  }

  std::vector<std::array<int, 2>> adj;
  for (const auto& e : d.region_adjacency) {
    int a = old_to_new[e[0]], b = old_to_new[e[1]];
    if (a != b) adj.push_back({a, b});
  }
  out.region_adjacency = dedupe_pairs(std::move(adj));

  std::vector<int> keep;
  for (int id : nodes)
    if (id != obstacle_id) keep.push_back(id);
  out.adjacency_graph = build_adjacency_graph(out.regions, out.label_modulus, keep);
  out.workspace_complex = build_workspace_complex(static_cast<int>(out.regions.size()),
                                                  out.region_adjacency, d.triangulation->dim());
  return out;
}

std::vector<int> regions_of_point(const Decomposition& d, const Point& p) {
  if (!d.scene->point_in_workspace(p))
    throw ContainmentError("point outside workspace");
  if (d.scene->classify_any(p) == Placement::interior)
    throw ContainmentError("point inside an obstacle");
  auto containing = d.triangulation->containing_simplices(p);
  std::set<int> rids;
  for (int s : containing)
    if (d.simplex_region[s] >= 0) rids.insert(d.simplex_region[s]);
  if (rids.empty())
    throw ContainmentError("point not covered by any free region");
  return std::vector<int>(rids.begin(), rids.end());
}

int region_of_point(const Decomposition& d, const Point& p) {
  return regions_of_point(d, p).front();
}

}  // namespace pathclass
