// Acceptance suite: one binary, one pass/fail line per criterion, nonzero
// exit when any criterion fails. Tolerances and bounds are pinned here.
#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "pathclass/planner.hpp"

using namespace pathclass;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int number, const char* name, bool pass, const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Point sample_point(const Scene& scene, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(0, 1);
  std::vector<double> c(scene.dim);
  for (int i = 0; i < scene.dim; ++i)
    c[i] = scene.ws_min.d[i] + (scene.ws_max.d[i] - scene.ws_min.d[i]) * U(rng);
  return Point::from_doubles(c);
}

Point sample_free(const Scene& scene, std::mt19937_64& rng) {
  for (;;) {
    Point p = sample_point(scene, rng);
    if (scene.classify_any(p) == Placement::exterior) return p;
  }
}

std::vector<Configuration> sampled_polyline(const std::vector<Position>& pl, double step) {
  return sample_polyline(pl, step);
}

bool segment_free(const Scene& scene, const Position& a, const Position& b) {
  return !segment_collides(scene, a, b, 0.0);
}

std::vector<Position> random_polyline(const Scene& scene, const Position& s,
                                      const Position& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> K(0, 3);
  for (int attempt = 0; attempt < 60; ++attempt) {
    std::vector<Position> pl{s};
    const int vias = K(rng);
    for (int i = 0; i < vias; ++i) {
      Point p = sample_free(scene, rng);
      pl.push_back({p.d[0], p.d[1], 0});
    }
    pl.push_back(g);
    bool ok = true;
    for (std::size_t i = 1; i < pl.size() && ok; ++i)
      ok = segment_free(scene, pl[i - 1], pl[i]);
    if (ok) return pl;
  }
  return {};
}

// representation of a sampled polyline; nullopt when the raw contracted
// sequence revisits a state (windings alias to their de-looped class, so
// the 2D lemma harness compares only loop-free representatives)
std::optional<PathRepresentation> loop_free_rep(const std::vector<Position>& pl,
                                                const Decomposition& d,
                                                const RobotComplex& rc, double step) {
  auto configs = sampled_polyline(pl, step);
  std::vector<ContractedRep> raw;
  for (const auto& c : configs) {
    ContractedRep cr = contract(state_of(c, d), d, rc);
    if (raw.empty() || !(raw.back() == cr)) raw.push_back(std::move(cr));
  }
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t j = i + 1; j < raw.size(); ++j)
      if (raw[i] == raw[j]) return std::nullopt;
  return path_representation(configs, d, rc);
}

// ── criterion 1 ─────────────────────────────────────────────────────

void criterion_1() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> U(0, 1);
  long long mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 47);  // n <= 50
    std::set<std::pair<double, double>> seen;
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
      double x = U(rng), y = U(rng);
      if (seen.insert({x, y}).second) pts.push_back(Point::from_doubles2(x, y));
    }
    if (fixtures::canonical_simplices(triangulate_points(pts)) !=
        fixtures::brute_force_delaunay(pts))
      ++mismatches;
  }
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 21);  // n <= 25
    std::set<std::tuple<double, double, double>> seen;
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
      double x = U(rng), y = U(rng), z = U(rng);
      if (seen.insert({x, y, z}).second) pts.push_back(Point::from_doubles3(x, y, z));
    }
    if (fixtures::canonical_simplices(triangulate_points(pts)) !=
        fixtures::brute_force_delaunay(pts))
      ++mismatches;
  }
  const double elapsed = seconds_since(t0);
  report(1, "Delaunay equals brute-force empty-circumsphere triangulation",
         mismatches == 0 && elapsed < 60.0,
         std::to_string(mismatches) + " mismatches, " + std::to_string(elapsed) + " s");
}

// ── criterion 2 ─────────────────────────────────────────────────────

void criterion_2() {
  std::mt19937_64 rng(1002);
  const Scene scenes[5] = {fixtures::two_squares(), fixtures::triangle_of_boxes(),
                           fixtures::four_box_ring(), fixtures::l_shape(),
                           fixtures::annulus()};
  long long violations = 0;
  for (const Scene& scene : scenes) {
    auto d = decompose(scene);
    for (int i = 0; i < 10000; ++i) {
      Point p = sample_free(scene, rng);
      try {
        auto ids = regions_of_point(d, p);
        if (ids.size() != 1) ++violations;  // interior free point in two regions
        // pair-region exclusivity with disjoint pairs is partitionwise
        // immediate; verify the id maps to a unique label set
        const auto& r = d.regions[ids.front()];
        if (r.obstacles.size() == 2 && !d.adjacency_graph.has_hyperedge(r.obstacles))
          ++violations;
      } catch (const ContainmentError&) {
        ++violations;  // a free point not covered by any region
      }
    }
  }
  report(2, "joint cover partitions sampled free points uniquely", violations == 0,
         std::to_string(violations) + " violations over 50000 samples");
}

// ── criteria 3 and 5 ────────────────────────────────────────────────

void criteria_3_and_5() {
  std::mt19937_64 rng(1003);
  const Scene scenes[3] = {fixtures::two_squares(), fixtures::triangle_of_boxes(),
                           fixtures::four_box_ring()};
  int compared = 0, lemma_mismatch = 0, theorem_violations = 0;
  for (const Scene& scene : scenes) {
    auto d = decompose(scene);
    auto rc = build_complex(fixtures::point_robot());
    int fixture_pairs = 0;
    while (fixture_pairs < 100) {
      Point ps = sample_free(scene, rng), pg = sample_free(scene, rng);
      Position s{ps.d[0], ps.d[1], 0}, g{pg.d[0], pg.d[1], 0};
      auto pl1 = random_polyline(scene, s, g, rng);
      auto pl2 = random_polyline(scene, s, g, rng);
      if (pl1.empty() || pl2.empty()) continue;
      std::optional<PathRepresentation> r1, r2;
      try {
        r1 = loop_free_rep(pl1, d, rc, 0.04);
        r2 = loop_free_rep(pl2, d, rc, 0.04);
      } catch (const ResolutionError&) {
        continue;
      }
      if (!r1 || !r2) continue;
      HSignature h1 = h_signature(pl1, scene);
      HSignature h2 = h_signature(pl2, scene);
      ++fixture_pairs;
      ++compared;
      const bool same = same_class(*r1, *r2);
      const bool homotopic = h1 == h2;
      if (same != homotopic) ++lemma_mismatch;
      if (!homotopic && same) ++theorem_violations;
    }
  }
  report(3, "2D point-robot classes equal h-signature homotopy classes",
         lemma_mismatch == 0,
         std::to_string(lemma_mismatch) + " disagreements over " + std::to_string(compared) +
             " pairs");
  report(5, "different h-signature implies different representation",
         theorem_violations == 0, std::to_string(theorem_violations) + " violations");
}

// ── criterion 4 ─────────────────────────────────────────────────────

void criterion_4() {
  Scene scene = fixtures::pillars();
  auto d = decompose(scene);
  auto rc = build_complex(fixtures::point_robot());

  // hole-free verification: nothing reaches the ceiling, and the workspace
  // complex is connected (no enclosing cycle of disconnected regions)
  bool below_ceiling = true;
  for (const auto& ob : scene.obstacles)
    for (const auto& piece : ob.pieces)
      for (const auto& v : piece.vertices)
        if (!(v.x[2] < scene.ws_max.x[2])) below_ceiling = false;
  auto nbr = d.workspace_complex.neighbor_lists();
  std::vector<char> seen(d.regions.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : nbr[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  const bool connected = reached == static_cast<int>(d.regions.size());

  // five scripted paths, one per corridor: left-far, left-near (the
  // platform-pillar slot), over-platform, right-near, right-far; sampling
  // refines until no region boundary is skipped
  auto scripted = [&](Position a, Position b) {
    for (double step : {0.1, 0.05, 0.02, 0.01, 0.004}) {
      try {
        return path_representation(sampled_polyline({a, b}, step), d, rc);
      } catch (const ResolutionError&) {
        continue;
      }
    }
    return path_representation(sampled_polyline({a, b}, 0.002), d, rc);
  };
  std::vector<PathRepresentation> reps;
  reps.push_back(scripted({0.7, 1, 2}, {0.7, 11, 2}));        // left-far
  reps.push_back(scripted({3.9, 5.2, 3.3}, {3.9, 6.8, 3.3})); // left-near slot
  reps.push_back(scripted({2.6, 1, 5}, {2.6, 11, 5}));        // over the left platform
  reps.push_back(scripted({8.1, 5.2, 3.3}, {8.1, 6.8, 3.3})); // right-near slot
  reps.push_back(scripted({11.2, 1, 2}, {11.2, 11, 2}));      // right-far
  int distinct_pairs = 0;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (!same_class(reps[i], reps[j])) ++distinct_pairs;

  // corridor substance: the near paths thread the joint-hull slots of their
  // platform-pillar pairs
  auto visits = [&](const PathRepresentation& rep, std::vector<int> obs, bool in_hull) {
    for (const auto& c : rep.sequence)
      for (const auto& pair : c.pairs)
        for (int rid : pair.regions) {
          const auto& r = d.regions[rid];
          if (r.obstacles == obs && r.in_pair_hull == in_hull) return true;
        }
    return false;
  };
  const bool signatures = visits(reps[1], {1, 3}, true) && visits(reps[3], {2, 4}, true);

  report(4, "3D pillar fixture: 5 scripted paths in 5 distinct classes, scene hole-free",
         below_ceiling && connected && distinct_pairs == 10 && signatures,
         std::to_string(distinct_pairs) + "/10 distinct pairs, hole-free=" +
             std::to_string(below_ceiling && connected) +
             ", signatures=" + std::to_string(signatures));
}

// ── criterion 6 ─────────────────────────────────────────────────────

void criterion_6() {
  std::mt19937_64 rng(1006);
  const Scene scenes[2] = {fixtures::two_squares(), fixtures::triangle_of_boxes()};
  long long violations = 0;
  for (const Scene& scene : scenes) {
    auto d = decompose(scene);
    auto rc = build_complex(fixtures::open_chain(3, 0.5, 0.02));
    std::map<std::string, std::vector<ContractedPair>> by_encoding;
    std::uniform_real_distribution<double> A(-M_PI, M_PI);
    int produced = 0;
    while (produced < 1000) {
      Point base = sample_free(scene, rng);
      std::vector<double> angles = {A(rng), A(rng), A(rng)};
      auto pts = chain_pose(rc, 0, {base.d[0], base.d[1], 0}, angles);
      Configuration config(pts.begin(), pts.end());
      StateRep s;
      try {
        s = state_of(config, d);
      } catch (const ContainmentError&) {
        continue;
      }
      ++produced;
      ContractedRep c1 = contract(s, d, rc);
      ContractedRep c2 = contract(s, d, rc);
      if (!(c1 == c2) || c1.encoding != c2.encoding) ++violations;
      auto [it, fresh] = by_encoding.insert({c1.encoding.str(), c1.pairs});
      if (!fresh && !(it->second == c1.pairs)) ++violations;  // encoding collision
    }
  }
  report(6, "contraction idempotent, canonical encodings injective", violations == 0,
         std::to_string(violations) + " violations over 2000 states");
}

// ── criterion 7 ─────────────────────────────────────────────────────

void criterion_7() {
  std::mt19937_64 rng(1007);
  const Scene scenes[3] = {fixtures::two_squares(), fixtures::triangle_of_boxes(),
                           fixtures::four_box_ring()};
  int failed_trials = 0;
  for (const Scene& base : scenes) {
    auto d0 = decompose(base);
    std::multiset<std::string> labels0;
    for (const auto& r : d0.regions) labels0.insert(r.label.str());
    const double radius = 0.01 * base.min_obstacle_separation();
    std::uniform_real_distribution<double> U(-radius, radius);
    for (int trial = 0; trial < 20; ++trial) {
      Scene s = base;
      for (auto& ob : s.obstacles)
        for (auto& piece : ob.pieces)
          for (auto& v : piece.vertices)
            v = Point::from_doubles2(v.d[0] + U(rng), v.d[1] + U(rng));
      auto d = decompose(s);
      std::multiset<std::string> labels;
      for (const auto& r : d.regions) labels.insert(r.label.str());
      if (d.adjacency_graph.hyperedges != d0.adjacency_graph.hyperedges ||
          labels != labels0)
        ++failed_trials;
    }
  }
  report(7, "1% vertex perturbations keep G_A and the label multiset", failed_trials == 0,
         std::to_string(failed_trials) + " failed trials of 60");
}

// ── criterion 8 ─────────────────────────────────────────────────────

void criterion_8() {
  auto t0 = Clock::now();
  const double width = 0.2;
  const int links = 4;
  auto chain_at = [&](double x0) {
    Configuration c;
    for (int i = 0; i <= links; ++i) c.push_back({x0 + i, 4.0, 0});
    return c;
  };
  bool wide_ok = false, narrow_ok = false;
  std::string detail;
  {
    Scene scene = fixtures::gap_corridor(3 * width);
    auto d = decompose(scene);
    auto rc = build_complex(fixtures::open_chain(links, 1.0, width));
    PlanParams params;
    params.step = 0.2;
    PlanResult result = plan(d, rc, chain_at(-5.5), chain_at(5.0), params);
    wide_ok = !result.certificate && result.plans.size() == 1;
    if (wide_ok) {
      for (const auto& w : result.plans[0].waypoints) {
        if (pose_collides(scene, rc.spec, w)) wide_ok = false;
        if (max_link_length_error(rc.spec, w) > 1e-9) wide_ok = false;
      }
    }
  }
  {
    Scene scene = fixtures::gap_corridor(1.5 * width);
    auto d = decompose(scene);
    auto rc = build_complex(fixtures::open_chain(links, 1.0, width));
    PlanResult result = plan(d, rc, chain_at(-5.5), chain_at(5.0), PlanParams{});
    narrow_ok = result.certificate &&
                result.certificate->kind ==
                    NonExistenceCertificate::Kind::embedding_infeasible &&
                result.certificate->heuristic;
  }
  const double elapsed = seconds_since(t0);
  report(8, "4R chain passes a 3w gap; 1.5w gap certifies embedding-infeasible",
         wide_ok && narrow_ok && elapsed < 30.0,
         "wide=" + std::to_string(wide_ok) + " narrow=" + std::to_string(narrow_ok) + ", " +
             std::to_string(elapsed) + " s");
}

// ── criterion 9 ─────────────────────────────────────────────────────

void criterion_9() {
  std::mt19937_64 rng(1009);
  auto rc = build_complex(fixtures::point_robot());
  int contradictions = 0, certificates = 0, queries = 0;
  for (int trial = 0; trial < 10; ++trial) {
    Scene scene = fixtures::random_boxes(rng, 5, true);
    auto d = decompose(scene);
    for (int q = 0; q < 8; ++q) {
      Point ps = sample_free(scene, rng), pg = sample_free(scene, rng);
      Position s{ps.d[0], ps.d[1], 0}, g{pg.d[0], pg.d[1], 0};
      auto er = check_existence(state_of({s}, d), state_of({g}, d), d, rc, 24);
      ++queries;
      if (er.certificate &&
          er.certificate->kind == NonExistenceCertificate::Kind::connectivity) {
        ++certificates;
        if (fixtures::grid_path_exists(scene, s, g)) ++contradictions;
      }
    }
  }
  report(9, "connectivity certificates never contradict the 200x200 grid oracle",
         contradictions == 0,
         std::to_string(contradictions) + " contradictions; " +
             std::to_string(certificates) + " certificates over " + std::to_string(queries) +
             " queries");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criteria_3_and_5();
  criterion_4();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::printf("%s\n", g_failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
  return g_failures == 0 ? 0 : 1;
}
