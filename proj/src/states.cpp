#include "pathclass/states.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace pathclass {

namespace {

Point to_point(const Position& p, int dim) {
  return dim == 2 ? Point::from_doubles2(p[0], p[1])
                  : Point::from_doubles3(p[0], p[1], p[2]);
}

// fixed table so concurrent encoders share immutable state
const std::vector<int>& prime_table() {
  static const std::vector<int> primes = [] {
    std::vector<int> out = {2, 3};
    while (out.size() < 1024) {
      int c = out.back() + 2;
      for (;; c += 2) {
        bool ok = true;
        for (int p : out) {
          if (p * p > c) break;
          if (c % p == 0) {
            ok = false;
            break;
          }
        }
        if (ok) break;
      }
      out.push_back(c);
    }
    return out;
  }();
  return primes;
}

int nth_prime(int n) {
  const auto& primes = prime_table();
  if (n >= static_cast<int>(primes.size()))
    throw InputError("encoding exceeds the prime table");
  return primes[n];
}

}  // namespace

StateRep state_of(const Configuration& config, const Decomposition& d) {
  StateRep s;
  s.provenance = d.fingerprint;
  s.region_of_kp.reserve(config.size());
  for (const auto& p : config)
    s.region_of_kp.push_back(region_of_point(d, to_point(p, d.scene->dim)));
  return s;
}

BigInt encode_contracted(const std::vector<ContractedPair>& pairs) {
  // positional prime powers over the flattened structure; every exponent is
  // value+1 so the encoding is injective on sequences
  std::vector<int> flat;
  flat.push_back(static_cast<int>(pairs.size()));
  for (const auto& p : pairs) {
    flat.push_back(static_cast<int>(p.regions.size()));
    for (int r : p.regions) flat.push_back(r);
    flat.push_back(static_cast<int>(p.key_points.size()));
    for (int k : p.key_points) flat.push_back(k);
  }
  BigInt enc = 1;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    BigInt power = 1;
    for (int e = 0; e <= flat[i]; ++e) power *= nth_prime(static_cast<int>(i));
    enc *= power;
  }
  return enc;
}

ContractedRep contract(const StateRep& state, const Decomposition& d,
                       const RobotComplex& rc) {
  if (state.provenance != d.fingerprint)
    throw ComparisonError("state built over a different cover");
  const int n = rc.key_point_count();
  if (static_cast<int>(state.region_of_kp.size()) != n)
    throw InputError("state size does not match robot key points");

  // blocks = connected components over links kept when both endpoints share
  // a region, or when their regions are S_W-adjacent and both compact;
  // equivalent to iterating Algorithm 2's contractions to the fixed point
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& l : rc.spec.links) {
    const int ra = state.region_of_kp[l.a];
    const int rb = state.region_of_kp[l.b];
    bool keep = false;
    if (ra == rb) {
      keep = true;
    } else if (d.workspace_complex.adjacent(ra, rb)) {
      keep = d.regions[ra].compact && d.regions[rb].compact;
    }
    if (keep) parent[find(l.a)] = find(l.b);
  }

  std::map<int, ContractedPair> blocks;
  for (int k = 0; k < n; ++k) {
    ContractedPair& b = blocks[find(k)];
    b.key_points.push_back(k);
    b.regions.push_back(state.region_of_kp[k]);
  }
  ContractedRep out;
  out.provenance = fnv1a(&rc.fingerprint, sizeof(rc.fingerprint), d.fingerprint);
  for (auto& [root, b] : blocks) {
    std::sort(b.key_points.begin(), b.key_points.end());
    std::sort(b.regions.begin(), b.regions.end());
    b.regions.erase(std::unique(b.regions.begin(), b.regions.end()), b.regions.end());
    out.pairs.push_back(std::move(b));
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  out.encoding = encode_contracted(out.pairs);
  return out;
}

PathRepresentation path_representation(const std::vector<Configuration>& configs,
                                       const Decomposition& d, const RobotComplex& rc) {
  if (configs.empty()) throw InputError("empty configuration sequence");
  PathRepresentation rep;

  std::vector<StateRep> states;
  states.reserve(configs.size());
  for (const auto& c : configs) states.push_back(state_of(c, d));
  rep.provenance = fnv1a(&rc.fingerprint, sizeof(rc.fingerprint), d.fingerprint);

  for (std::size_t i = 1; i < states.size(); ++i) {
    for (int k = 0; k < rc.key_point_count(); ++k) {
      const int ra = states[i - 1].region_of_kp[k];
      const int rb = states[i].region_of_kp[k];
      if (ra == rb || d.workspace_complex.adjacent(ra, rb)) continue;
      throw ResolutionError(static_cast<int>(i),
                            "key point " + std::to_string(k) + " skipped a region between "
                            "steps " + std::to_string(i - 1) + " and " + std::to_string(i) +
                            "; sample the path more densely");
    }
  }

  // contracted states, consecutive duplicates dropped, loops excised by
  // truncating back to the earlier occurrence
  for (const auto& s : states) {
    ContractedRep c = contract(s, d, rc);
    if (!rep.sequence.empty() && rep.sequence.back() == c) continue;
    bool truncated = false;
    for (std::size_t j = 0; j < rep.sequence.size(); ++j) {
      if (rep.sequence[j] == c) {
        rep.sequence.resize(j + 1);
        truncated = true;
        break;
      }
    }
    if (!truncated) rep.sequence.push_back(std::move(c));
  }
  return rep;
}

bool same_class(const PathRepresentation& a, const PathRepresentation& b) {
  if (a.provenance != b.provenance)
    throw ComparisonError("representations built over different covers or robots");
  if (a.sequence.size() != b.sequence.size()) return false;
  for (std::size_t i = 0; i < a.sequence.size(); ++i)
    if (a.sequence[i] != b.sequence[i]) return false;
  return true;
}

// ── h-signature ─────────────────────────────────────────────────────

std::string HSignature::str() const {
  if (word.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << ' ';
    os << 'a' << std::abs(word[i]);
    if (word[i] < 0) os << "^-1";
  }
  return os.str();
}

Point obstacle_anchor(const Scene& scene, const Obstacle& ob) {
  const ObstaclePiece& piece = ob.pieces.front();
  // vertex mean first; fall back to a corner-triangle point for concave shapes
  std::vector<Rational> mean(scene.dim, Rational(0));
  for (const auto& v : piece.vertices)
    for (int k = 0; k < scene.dim; ++k) mean[k] += v.x[k];
  for (int k = 0; k < scene.dim; ++k) mean[k] /= static_cast<int>(piece.vertices.size());
  Point candidate = Point::from_rationals(mean);
  if (scene.classify(candidate, ob) == Placement::interior) return candidate;
  const int n = static_cast<int>(piece.vertices.size());
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> c(scene.dim, Rational(0));
    for (int k = 0; k < scene.dim; ++k)
      c[k] = (piece.vertices[i].x[k] * 2 + piece.vertices[(i + 1) % n].x[k] +
              piece.vertices[(i + n - 1) % n].x[k]) /
             4;
    Point p = Point::from_rationals(c);
    if (scene.classify(p, ob) == Placement::interior) return p;
  }
  throw DegeneracyError("no interior anchor found for obstacle " + std::to_string(ob.id));
}

HSignature h_signature(const std::vector<Position>& polyline, const Scene& scene) {
  if (scene.dim != 2) throw InputError("h_signature is a 2D oracle");
  if (polyline.size() < 2) throw InputError("path needs at least two points");
  for (const auto& p : polyline) {
    Point pt = to_point(p, 2);
    if (!scene.point_in_workspace(pt)) throw InputError("path leaves the workspace");
    if (scene.classify_any(pt) == Placement::interior)
      throw InputError("path endpoint or vertex inside an obstacle");
  }
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    Point a = to_point(polyline[i - 1], 2), b = to_point(polyline[i], 2);
    for (const auto& ob : scene.obstacles)
      for (const auto& piece : ob.pieces) {
        const int n = static_cast<int>(piece.vertices.size());
        for (int e = 0; e < n; ++e)
          if (segments_touch(a, b, piece.vertices[e], piece.vertices[(e + 1) % n]))
            throw InputError("path intersects obstacle " + std::to_string(ob.id));
      }
  }

  std::vector<std::array<double, 2>> anchors;
  for (const auto& ob : scene.obstacles) {
    Point a = obstacle_anchor(scene, ob);
    anchors.push_back({a.d[0], a.d[1]});
  }

  std::vector<int> word;
  auto push = [&](int letter) {
    if (!word.empty() && word.back() == -letter)
      word.pop_back();
    else
      word.push_back(letter);
  };
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    const auto& p = polyline[i - 1];
    const auto& q = polyline[i];
    std::vector<std::pair<double, int>> hits;  // (param along segment, letter)
    for (std::size_t o = 0; o < anchors.size(); ++o) {
      const double ax = anchors[o][0], ay = anchors[o][1];
      // crossing of the vertical ray below the anchor; half-open rule on x
      int dir = 0;
      if (p[0] <= ax && q[0] > ax) dir = +1;
      if (q[0] <= ax && p[0] > ax) dir = -1;
      if (dir == 0) continue;
      const double t = (ax - p[0]) / (q[0] - p[0]);
      const double y = p[1] + t * (q[1] - p[1]);
      if (y < ay) hits.push_back({t, dir * static_cast<int>(o + 1)});
    }
    std::sort(hits.begin(), hits.end());
    for (const auto& [t, letter] : hits) push(letter);
  }
  HSignature sig;
  sig.word = std::move(word);
  return sig;
}

}  // namespace pathclass
