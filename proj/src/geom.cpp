#include "pathclass/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>

#include "pathclass/delaunay.hpp"

namespace pathclass {

namespace {

constexpr double kEps = 1.1102230246251565e-16;  // 2^-53

// Generous multiples of Shewchuk's A-stage constants for the same
// evaluation shapes; inconclusive filters fall through to rationals.
constexpr double kOrient2Bound = 8.0 * kEps;
constexpr double kOrient3Bound = 16.0 * kEps;
constexpr double kInCircleBound = 24.0 * kEps;
constexpr double kInSphereBound = 48.0 * kEps;

bool filter_ok(const Point& p) { return p.exact_in_double; }

Sign sign_of_double(double v) {
  return v < 0 ? Sign::negative : (v > 0 ? Sign::positive : Sign::zero);
}

// exact 2x2 / 3x3 / 4x4 determinants
Rational det2(const Rational& a, const Rational& b, const Rational& c,
              const Rational& d) {
  return a * d - b * c;
}

Rational det3(const std::array<Rational, 3>& r0, const std::array<Rational, 3>& r1,
              const std::array<Rational, 3>& r2) {
  return r0[0] * det2(r1[1], r1[2], r2[1], r2[2]) -
         r0[1] * det2(r1[0], r1[2], r2[0], r2[2]) +
         r0[2] * det2(r1[0], r1[1], r2[0], r2[1]);
}

Rational det4(const std::array<Rational, 4>& r0, const std::array<Rational, 4>& r1,
              const std::array<Rational, 4>& r2, const std::array<Rational, 4>& r3) {
  Rational result = 0;
  std::array<std::array<Rational, 3>, 3> minor;
  for (int col = 0; col < 4; ++col) {
    const std::array<const std::array<Rational, 4>*, 3> rows = {&r1, &r2, &r3};
    for (int i = 0; i < 3; ++i) {
      int m = 0;
      for (int j = 0; j < 4; ++j) {
        if (j == col) continue;
        minor[i][m++] = (*rows[i])[j];
      }
    }
    Rational term = r0[col] * det3(minor[0], minor[1], minor[2]);
    if (col % 2 == 0)
      result += term;
    else
      result -= term;
  }
  return result;
}

std::array<Rational, 3> sub(const Point& p, const Point& q) {
  return {p.x[0] - q.x[0], p.x[1] - q.x[1], p.x[2] - q.x[2]};
}

// homogeneous [x,y,1] determinant of three 2D points
Rational homog3(const Point& a, const Point& b, const Point& c) {
  return det2(b.x[0] - a.x[0], b.x[1] - a.x[1], c.x[0] - a.x[0], c.x[1] - a.x[1]);
}

// homogeneous [x,y,z,1] determinant of four 3D points
Rational homog4(const Point& a, const Point& b, const Point& c, const Point& d) {
  auto u = sub(b, a), v = sub(c, a), w = sub(d, a);
  return -det3(u, v, w);
}

Rational orient2_exact(const Point& a, const Point& b, const Point& c) {
  return det2(b.x[0] - a.x[0], b.x[1] - a.x[1], c.x[0] - a.x[0], c.x[1] - a.x[1]);
}

Rational orient3_exact(const Point& a, const Point& b, const Point& c,
                       const Point& d) {
  auto u = sub(b, a), v = sub(c, a), w = sub(d, a);
  return det3(u, v, w);
}

Sign orient2_sign(const Point& a, const Point& b, const Point& c) {
  if (filter_ok(a) && filter_ok(b) && filter_ok(c)) {
    const double detleft = (a.d[0] - c.d[0]) * (b.d[1] - c.d[1]);
    const double detright = (a.d[1] - c.d[1]) * (b.d[0] - c.d[0]);
    const double det = detleft - detright;
    const double bound = kOrient2Bound * (std::fabs(detleft) + std::fabs(detright));
    if (det > bound || -det > bound) return sign_of_double(det);
  }
  return sign_of(orient2_exact(a, b, c));
}

Sign orient3_sign(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (filter_ok(a) && filter_ok(b) && filter_ok(c) && filter_ok(d)) {
    const double adx = a.d[0] - d.d[0], ady = a.d[1] - d.d[1], adz = a.d[2] - d.d[2];
    const double bdx = b.d[0] - d.d[0], bdy = b.d[1] - d.d[1], bdz = b.d[2] - d.d[2];
    const double cdx = c.d[0] - d.d[0], cdy = c.d[1] - d.d[1], cdz = c.d[2] - d.d[2];
    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    // det3(a-d, b-d, c-d) = -det3(b-a, c-a, d-a); negate for our convention
    const double det = -(adz * (bdxcdy - cdxbdy) + bdz * (cdxady - adxcdy) +
                         cdz * (adxbdy - bdxady));
    const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * std::fabs(adz) +
                             (std::fabs(cdxady) + std::fabs(adxcdy)) * std::fabs(bdz) +
                             (std::fabs(adxbdy) + std::fabs(bdxady)) * std::fabs(cdz);
    const double bound = kOrient3Bound * permanent;
    if (det > bound || -det > bound) return sign_of_double(det);
  }
  return sign_of(orient3_exact(a, b, c, d));
}

// 3x3 in-circle determinant, rows (a,b,c) translated by q, lift column last.
// Positive = q inside when (a,b,c) counter-clockwise.
Rational incircle_exact(const Point& a, const Point& b, const Point& c,
                        const Point& q) {
  std::array<std::array<Rational, 3>, 3> m;
  const Point* pts[3] = {&a, &b, &c};
  for (int i = 0; i < 3; ++i) {
    Rational dx = pts[i]->x[0] - q.x[0];
    Rational dy = pts[i]->x[1] - q.x[1];
    m[i] = {dx, dy, dx * dx + dy * dy};
  }
  return det3(m[0], m[1], m[2]);
}

// 4x4 in-sphere determinant, rows (a,b,c,d) translated by q.
// Negative = q inside when (a,b,c,d) positively oriented.
Rational insphere_exact(const Point& a, const Point& b, const Point& c,
                        const Point& d, const Point& q) {
  std::array<std::array<Rational, 4>, 4> m;
  const Point* pts[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i) {
    Rational dx = pts[i]->x[0] - q.x[0];
    Rational dy = pts[i]->x[1] - q.x[1];
    Rational dz = pts[i]->x[2] - q.x[2];
    m[i] = {dx, dy, dz, dx * dx + dy * dy + dz * dz};
  }
  return det4(m[0], m[1], m[2], m[3]);
}

// Filtered sign of the raw in-circle determinant; nullopt when inconclusive.
std::optional<Sign> incircle_filtered(const Point& a, const Point& b,
                                      const Point& c, const Point& q) {
  if (!(filter_ok(a) && filter_ok(b) && filter_ok(c) && filter_ok(q)))
    return std::nullopt;
  const double adx = a.d[0] - q.d[0], ady = a.d[1] - q.d[1];
  const double bdx = b.d[0] - q.d[0], bdy = b.d[1] - q.d[1];
  const double cdx = c.d[0] - q.d[0], cdy = c.d[1] - q.d[1];
  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;
  const double det =
      alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
  const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                           (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                           (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
  const double bound = kInCircleBound * permanent;
  if (det > bound || -det > bound) return sign_of_double(det);
  return std::nullopt;
}

std::optional<Sign> insphere_filtered(const Point& a, const Point& b, const Point& c,
                                      const Point& d, const Point& q) {
  if (!(filter_ok(a) && filter_ok(b) && filter_ok(c) && filter_ok(d) && filter_ok(q)))
    return std::nullopt;
  double ex[4], ey[4], ez[4], lift[4];
  const Point* pts[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i) {
    ex[i] = pts[i]->d[0] - q.d[0];
    ey[i] = pts[i]->d[1] - q.d[1];
    ez[i] = pts[i]->d[2] - q.d[2];
    lift[i] = ex[i] * ex[i] + ey[i] * ey[i] + ez[i] * ez[i];
  }
  // cofactor expansion along the lift column
  double det = 0.0, permanent = 0.0;
  for (int i = 0; i < 4; ++i) {
    int r[3], m = 0;
    for (int j = 0; j < 4; ++j)
      if (j != i) r[m++] = j;
    const double d3 = ex[r[0]] * (ey[r[1]] * ez[r[2]] - ez[r[1]] * ey[r[2]]) -
                      ey[r[0]] * (ex[r[1]] * ez[r[2]] - ez[r[1]] * ex[r[2]]) +
                      ez[r[0]] * (ex[r[1]] * ey[r[2]] - ey[r[1]] * ex[r[2]]);
    const double p3 =
        std::fabs(ex[r[0]]) * (std::fabs(ey[r[1]] * ez[r[2]]) + std::fabs(ez[r[1]] * ey[r[2]])) +
        std::fabs(ey[r[0]]) * (std::fabs(ex[r[1]] * ez[r[2]]) + std::fabs(ez[r[1]] * ex[r[2]])) +
        std::fabs(ez[r[0]]) * (std::fabs(ex[r[1]] * ey[r[2]]) + std::fabs(ey[r[1]] * ex[r[2]]));
    const double signf = ((i + 3) % 2 == 0) ? 1.0 : -1.0;
    det += signf * lift[i] * d3;
    permanent += lift[i] * p3;
  }
  const double bound = kInSphereBound * permanent;
  if (det > bound || -det > bound) return sign_of_double(det);
  return std::nullopt;
}

void check_dims(std::span<const Point> pts, int expected_count) {
  if (static_cast<int>(pts.size()) != expected_count)
    throw InputError("expected " + std::to_string(expected_count) + " points, got " +
                     std::to_string(pts.size()));
  const int dim = pts[0].dim;
  if (dim != 2 && dim != 3) throw InputError("dimension must be 2 or 3");
  for (const Point& p : pts)
    if (p.dim != dim) throw InputError("dimension mismatch among points");
}

}  // namespace

// ── parsing and construction ────────────────────────────────────────

Rational rational_from_string(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw InputError("empty coordinate string");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  bool negative = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  long exponent = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      exponent = std::stol(s.substr(i + 1));
      break;
    } else {
      throw InputError("bad coordinate string '" + text + "'");
    }
  }
  if (!seen_digit) throw InputError("bad coordinate string '" + text + "'");
  BigInt num(digits.empty() ? "0" : digits);
  if (negative) num = -num;
  long scale = exponent - frac_digits;
  BigInt pow10 = 1;
  for (long k = 0; k < std::labs(scale); ++k) pow10 *= 10;
  return scale >= 0 ? Rational(num * pow10, 1) : Rational(num, pow10);
}

Point Point::from_doubles(std::span<const double> coords) {
  if (coords.size() != 2 && coords.size() != 3)
    throw InputError("points must have 2 or 3 coordinates");
  Point p;
  p.dim = static_cast<int>(coords.size());
  for (int i = 0; i < p.dim; ++i) {
    if (!std::isfinite(coords[i])) throw InputError("coordinate not finite");
    p.d[i] = coords[i];
    p.x[i] = Rational(coords[i]);
  }
  p.exact_in_double = true;
  return p;
}

Point Point::from_rationals(std::span<const Rational> coords) {
  if (coords.size() != 2 && coords.size() != 3)
    throw InputError("points must have 2 or 3 coordinates");
  Point p;
  p.dim = static_cast<int>(coords.size());
  p.exact_in_double = true;
  for (int i = 0; i < p.dim; ++i) {
    p.x[i] = coords[i];
    p.d[i] = p.x[i].convert_to<double>();
    if (Rational(p.d[i]) != p.x[i]) p.exact_in_double = false;
  }
  return p;
}

Point Point::from_strings(std::span<const std::string> coords) {
  std::vector<Rational> r;
  r.reserve(coords.size());
  for (const auto& s : coords) r.push_back(rational_from_string(s));
  return from_rationals(r);
}

bool Point::same_coords(const Point& o) const {
  if (dim != o.dim) return false;
  for (int i = 0; i < dim; ++i)
    if (x[i] != o.x[i]) return false;
  return true;
}

bool Point::lex_less(const Point& o) const {
  for (int i = 0; i < dim; ++i) {
    if (x[i] < o.x[i]) return true;
    if (x[i] > o.x[i]) return false;
  }
  return false;
}

// ── predicates ──────────────────────────────────────────────────────

Rational homogeneous_orient(std::span<const Point> pts) {
  if (pts.size() == 3) return homog3(pts[0], pts[1], pts[2]);
  if (pts.size() == 4) return homog4(pts[0], pts[1], pts[2], pts[3]);
  throw InputError("homogeneous_orient takes 3 or 4 points");
}

Sign orient(std::span<const Point> simplex) {
  const int dim = simplex.empty() ? 0 : simplex[0].dim;
  if (dim == 2) {
    check_dims(simplex, 3);
    return orient2_sign(simplex[0], simplex[1], simplex[2]);
  }
  check_dims(simplex, 4);
  return orient3_sign(simplex[0], simplex[1], simplex[2], simplex[3]);
}

SpherePosition in_sphere(std::span<const Point> simplex, const Point& query) {
  const int dim = simplex.empty() ? 0 : simplex[0].dim;
  if (query.dim != dim) throw InputError("dimension mismatch");
  Sign o = orient(simplex);
  if (o == Sign::zero) throw InputError("degenerate simplex in in_sphere");
  Sign raw;
  if (dim == 2) {
    auto f = incircle_filtered(simplex[0], simplex[1], simplex[2], query);
    raw = f ? *f : sign_of(incircle_exact(simplex[0], simplex[1], simplex[2], query));
  } else {
    auto f = insphere_filtered(simplex[0], simplex[1], simplex[2], simplex[3], query);
    raw = f ? *f
            : sign_of(insphere_exact(simplex[0], simplex[1], simplex[2], simplex[3], query));
  }
  // normalized: 2D inside <=> raw*orient > 0; 3D inside <=> raw*orient < 0
  int s = static_cast<int>(raw) * static_cast<int>(o) * (dim == 2 ? 1 : -1);
  if (s > 0) return SpherePosition::inside;
  if (s < 0) return SpherePosition::outside;
  return SpherePosition::on;
}

SpherePosition perturbed_in_sphere(std::span<const Point> simplex,
                                   std::span<const int> simplex_ranks,
                                   const Point& query, int query_rank) {
  const int dim = simplex.empty() ? 0 : simplex[0].dim;
  if (simplex_ranks.size() != simplex.size())
    throw InputError("rank count mismatch");
  SpherePosition base = in_sphere(simplex, query);
  if (base != SpherePosition::on) return base;

  // Tie: expand det(eps) = det0 - sum eps^(rank+1) * C_v over all rows; the
  // lowest-rank nonzero cofactor decides. Cofactors are homogeneous
  // orientation determinants of the complementary points.
  const int n = dim + 2;
  std::vector<const Point*> rows(n);
  std::vector<int> ranks(n);
  for (int i = 0; i < n - 1; ++i) {
    rows[i] = &simplex[i];
    ranks[i] = simplex_ranks[i];
  }
  rows[n - 1] = &query;
  ranks[n - 1] = query_rank;

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return ranks[a] < ranks[b]; });

  Sign o = orient(simplex);
  const int norm = static_cast<int>(o) * (dim == 2 ? 1 : -1);
  for (int idx : order) {
    std::vector<const Point*> rest;
    for (int i = 0; i < n; ++i)
      if (i != idx) rest.push_back(rows[i]);
    Rational minor = dim == 2 ? homog3(*rest[0], *rest[1], *rest[2])
                              : homog4(*rest[0], *rest[1], *rest[2], *rest[3]);
    if (minor == 0) continue;
    // cofactor C = (-1)^(idx + dim) * minor  (lift column index = dim)
    int cof = ((idx + dim) % 2 == 0 ? 1 : -1) * minor.sign();
    int s = -cof * norm;  // sign of the dominant -eps^k * C term, normalized
    return s > 0 ? SpherePosition::inside : SpherePosition::outside;
  }
  throw DegeneracyError("perturbed_in_sphere: all points affinely dependent");
}

// ── convex hulls ────────────────────────────────────────────────────

namespace {

std::vector<Point> dedupe_sorted(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.lex_less(b);
  });
  std::vector<Point> out;
  for (auto& p : pts)
    if (out.empty() || !out.back().same_coords(p)) out.push_back(std::move(p));
  return out;
}

Polytope convex_hull_2d(std::vector<Point> pts, int id) {
  pts = dedupe_sorted(std::move(pts));
  const int n = static_cast<int>(pts.size());
  if (n < 3) throw DegeneracyError("convex hull needs at least 3 distinct points");
  auto build = [&](bool lower) {
    std::vector<Point> chain;
    for (int ii = 0; ii < n; ++ii) {
      const Point& p = lower ? pts[ii] : pts[n - 1 - ii];
      while (chain.size() >= 2 &&
             orient2_sign(chain[chain.size() - 2], chain.back(), p) != Sign::positive)
        chain.pop_back();
      chain.push_back(p);
    }
    return chain;
  };
  auto lower = build(true);
  auto upper = build(false);
  Polytope hull;
  hull.id = id;
  hull.dim = 2;
  hull.vertices.assign(lower.begin(), lower.end() - 1);
  hull.vertices.insert(hull.vertices.end(), upper.begin(), upper.end() - 1);
  if (hull.vertices.size() < 3)
    throw DegeneracyError("all points affinely dependent");
  return hull;
}

Polytope convex_hull_3d(const std::vector<Point>& input, int id) {
  auto pts = dedupe_sorted(input);
  if (pts.size() < 4) throw DegeneracyError("convex hull needs at least 4 distinct points");
  Triangulation tri = triangulate_points(pts);  // throws DegeneracyError if flat

  // boundary vertices and their boundary-facet neighbor sets
  std::map<int, std::vector<int>> nbrs;
  std::vector<std::array<int, 3>> boundary_facets;
  for (int s = 0; s < static_cast<int>(tri.simplices().size()); ++s) {
    const auto& sx = tri.simplices()[s];
    for (int f = 0; f < 4; ++f) {
      if (sx.nbr[f] != -1) continue;
      std::array<int, 3> facet{};
      int t = 0;
      for (int j = 0; j < 4; ++j)
        if (j != f) facet[t++] = sx.v[j];
      // orient outward: opposite vertex on the negative side
      const Point& apex = tri.vertices()[sx.v[f]].position;
      const Point* fp[3] = {&tri.vertices()[facet[0]].position,
                            &tri.vertices()[facet[1]].position,
                            &tri.vertices()[facet[2]].position};
      if (orient3_sign(*fp[0], *fp[1], *fp[2], apex) == Sign::positive)
        std::swap(facet[1], facet[2]);
      boundary_facets.push_back(facet);
      for (int a : facet)
        for (int b : facet)
          if (a != b) nbrs[a].push_back(b);
    }
  }
  // extreme vertices: not inside the hull of their boundary neighbors
  std::vector<Point> extreme;
  for (auto& [vid, nb] : nbrs) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    std::vector<Point> neighbor_pts;
    neighbor_pts.reserve(nb.size());
    for (int b : nb) neighbor_pts.push_back(tri.vertices()[b].position);
    const Point& p = tri.vertices()[vid].position;
    if (point_in_convex_hull(p, neighbor_pts) == Placement::exterior)
      extreme.push_back(p);
  }
  if (extreme.size() < 4) throw DegeneracyError("all points affinely dependent");
  if (extreme.size() == pts.size()) {
    // every boundary vertex extreme: reuse the facets directly
    Polytope hull;
    hull.id = id;
    hull.dim = 3;
    std::map<int, int> remap;
    for (const auto& f : boundary_facets)
      for (int v : f)
        if (!remap.count(v)) {
          remap[v] = static_cast<int>(hull.vertices.size());
          hull.vertices.push_back(tri.vertices()[v].position);
        }
    for (const auto& f : boundary_facets)
      hull.faces.push_back({remap[f[0]], remap[f[1]], remap[f[2]]});
    return hull;
  }
  // rebuild on the extreme set so faces reference only hull vertices
  return convex_hull_3d(extreme, id);
}

}  // namespace

Polytope convex_hull(const std::vector<Point>& points, int id) {
  if (points.empty()) throw InputError("convex_hull: no points");
  const int dim = points[0].dim;
  for (const auto& p : points)
    if (p.dim != dim) throw InputError("dimension mismatch");
  if (static_cast<int>(points.size()) < dim + 1)
    throw DegeneracyError("convex hull needs at least d+1 points");
  return dim == 2 ? convex_hull_2d(points, id) : convex_hull_3d(points, id);
}

// ── membership ──────────────────────────────────────────────────────

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (p.dim == 2) {
    if (orient2_sign(a, b, p) != Sign::zero) return false;
  } else {
    auto u = sub(b, a), w = sub(p, a);
    if (u[1] * w[2] - u[2] * w[1] != 0 || u[2] * w[0] - u[0] * w[2] != 0 ||
        u[0] * w[1] - u[1] * w[0] != 0)
      return false;
  }
  for (int i = 0; i < p.dim; ++i) {
    if (p.x[i] < std::min(a.x[i], b.x[i])) return false;
    if (p.x[i] > std::max(a.x[i], b.x[i])) return false;
  }
  return true;
}

namespace {

Placement point_in_polygon(const Point& p, const std::vector<Point>& poly) {
  const int n = static_cast<int>(poly.size());
  for (int i = 0; i < n; ++i)
    if (on_segment(p, poly[i], poly[(i + 1) % n])) return Placement::boundary;
  // exact crossing parity with a horizontal ray to +x
  bool inside = false;
  for (int i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    const bool a_below = a.x[1] <= p.x[1];
    const bool b_below = b.x[1] <= p.x[1];
    if (a_below == b_below) continue;
    // edge straddles the ray's line; crossing is right of p iff the
    // orientation of (a,b,p) matches the edge direction
    Sign o = orient2_sign(a, b, p);
    if (o == Sign::zero) continue;  // touches only at endpoints, handled above
    const bool upward = b.x[1] > a.x[1];
    if (upward == (o == Sign::positive)) inside = !inside;
  }
  return inside ? Placement::interior : Placement::exterior;
}

// closed point-in-triangle within the chart plane (3D coplanar points)
bool point_in_triangle_chart(const Point& p, const Point& a, const Point& b,
                             const Point& c, int ci, int cj) {
  auto o2 = [&](const Point& u, const Point& v, const Point& w) {
    return sign_of(det2(v.x[ci] - u.x[ci], v.x[cj] - u.x[cj], w.x[ci] - u.x[ci],
                        w.x[cj] - u.x[cj]));
  };
  Sign s1 = o2(a, b, p), s2 = o2(b, c, p), s3 = o2(c, a, p);
  bool has_pos = s1 == Sign::positive || s2 == Sign::positive || s3 == Sign::positive;
  bool has_neg = s1 == Sign::negative || s2 == Sign::negative || s3 == Sign::negative;
  return !(has_pos && has_neg);
}

int dominant_axis(const std::array<Rational, 3>& n) {
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (abs(n[i]) > abs(n[k])) k = i;
  return k;
}

Placement point_in_mesh(const Point& p, const Polytope& poly) {
  // boundary: on any face triangle
  for (const auto& f : poly.faces) {
    const Point &a = poly.vertices[f[0]], &b = poly.vertices[f[1]],
                &c = poly.vertices[f[2]];
    if (orient3_sign(a, b, c, p) != Sign::zero) continue;
    auto u = sub(b, a), v = sub(c, a);
    std::array<Rational, 3> n = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                 u[0] * v[1] - u[1] * v[0]};
    int drop = dominant_axis(n);
    int ci = drop == 0 ? 1 : 0, cj = drop == 2 ? 1 : 2;
    if (point_in_triangle_chart(p, a, b, c, ci, cj)) return Placement::boundary;
  }
  // exact parity ray cast; deterministic retry on degenerate hits
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Rational s(attempt + 2);
    Point far;  // direction (1, s, s^2) as a displaced point
    far.dim = 3;
    far.x = {p.x[0] + 1, p.x[1] + s, p.x[2] + s * s};
    far.d = {far.x[0].convert_to<double>(), far.x[1].convert_to<double>(),
             far.x[2].convert_to<double>()};
    far.exact_in_double = false;
    bool degenerate = false;
    int crossings = 0;
    for (const auto& f : poly.faces) {
      const Point &a = poly.vertices[f[0]], &b = poly.vertices[f[1]],
                  &c = poly.vertices[f[2]];
      Rational fp = orient3_exact(a, b, c, p);
      Rational fq = orient3_exact(a, b, c, far);
      Rational g = fq - fp;  // proportional to normal . direction
      if (g == 0) continue;  // ray parallel to the face plane; p not on face
      // crossing parameter t = -fp / g must be > 0
      if (fp == 0 || fp.sign() == g.sign()) continue;
      Sign s1 = sign_of(orient3_exact(p, far, a, b));
      Sign s2 = sign_of(orient3_exact(p, far, b, c));
      Sign s3 = sign_of(orient3_exact(p, far, c, a));
      if (s1 == Sign::zero || s2 == Sign::zero || s3 == Sign::zero) {
        degenerate = true;
        break;
      }
      if (s1 == s2 && s2 == s3) ++crossings;
    }
    if (!degenerate) return (crossings % 2 == 1) ? Placement::interior : Placement::exterior;
  }
  throw DegeneracyError("point_in_mesh: no valid ray direction found");
}

}  // namespace

Placement point_in_polytope(const Point& p, const Polytope& poly) {
  if (p.dim != poly.dim) throw InputError("dimension mismatch");
  if (poly.dim == 2) return point_in_polygon(p, poly.vertices);
  return point_in_mesh(p, poly);
}

Placement point_in_convex_hull(const Point& p, const std::vector<Point>& hull_points) {
  const int dim = p.dim;
  if (dim == 2) {
    Polytope hull;
    try {
      hull = convex_hull_2d(hull_points, 0);
    } catch (const DegeneracyError&) {
      // collinear set: membership means lying on the extreme segment
      auto pts = dedupe_sorted(hull_points);
      if (pts.empty()) return Placement::exterior;
      return on_segment(p, pts.front(), pts.back()) ? Placement::boundary
                                                    : Placement::exterior;
    }
    const int n = static_cast<int>(hull.vertices.size());
    bool on_edge = false;
    for (int i = 0; i < n; ++i) {
      Sign o = orient2_sign(hull.vertices[i], hull.vertices[(i + 1) % n], p);
      if (o == Sign::negative) return Placement::exterior;
      if (o == Sign::zero) on_edge = true;
    }
    return on_edge ? Placement::boundary : Placement::interior;
  }
  auto pts = dedupe_sorted(hull_points);
  if (pts.size() >= 4) {
    try {
      Triangulation tri = triangulate_points(pts);
      return tri.hull_placement(p);
    } catch (const DegeneracyError&) {
      // coplanar or collinear set; fall through to the flat cases
    }
  }
  if (pts.empty()) return Placement::exterior;
  if (pts.size() == 1)
    return p.same_coords(pts[0]) ? Placement::boundary : Placement::exterior;
  // collinear set?
  bool collinear = true;
  std::size_t k = 1;
  while (k < pts.size() && pts[k].same_coords(pts[0])) ++k;
  for (std::size_t i = k + 1; i < pts.size() && collinear; ++i)
    if (!on_segment(pts[i], pts[0], pts[k]) && !on_segment(pts[k], pts[0], pts[i]) &&
        !on_segment(pts[0], pts[i], pts[k]))
      collinear = false;
  if (collinear)
    return on_segment(p, pts.front(), pts.back()) ? Placement::boundary
                                                  : Placement::exterior;
  // coplanar set: p must lie on the plane and inside the chart hull
  std::size_t j = k + 1;
  while (j < pts.size()) {
    auto u = sub(pts[k], pts[0]), w = sub(pts[j], pts[0]);
    if (u[1] * w[2] - u[2] * w[1] != 0 || u[2] * w[0] - u[0] * w[2] != 0 ||
        u[0] * w[1] - u[1] * w[0] != 0)
      break;
    ++j;
  }
  if (j >= pts.size()) return Placement::exterior;
  if (orient3_sign(pts[0], pts[k], pts[j], p) != Sign::zero) return Placement::exterior;
  auto u = sub(pts[k], pts[0]), w = sub(pts[j], pts[0]);
  std::array<Rational, 3> n = {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2],
                               u[0] * w[1] - u[1] * w[0]};
  const int drop = dominant_axis(n);
  const int ci = drop == 0 ? 1 : 0;
  const int cj = drop == 2 ? 1 : 2;
  auto flat = [&](const Point& q) {
    const Rational cs[2] = {q.x[ci], q.x[cj]};
    return Point::from_rationals(std::span<const Rational>(cs, 2));
  };
  std::vector<Point> flat_pts;
  flat_pts.reserve(pts.size());
  for (const auto& q : pts) flat_pts.push_back(flat(q));
  Placement inner = point_in_convex_hull(flat(p), flat_pts);
  // interior of a flat polygon is still on the 3D hull's boundary
  return inner == Placement::exterior ? Placement::exterior : Placement::boundary;
}

// ── segment contact ─────────────────────────────────────────────────

bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
  Sign d1 = orient2_sign(c, d, a);
  Sign d2 = orient2_sign(c, d, b);
  Sign d3 = orient2_sign(a, b, c);
  Sign d4 = orient2_sign(a, b, d);
  if (d1 == Sign::zero && d2 == Sign::zero && d3 == Sign::zero && d4 == Sign::zero) {
    int axis = (a.x[0] != b.x[0] || c.x[0] != d.x[0]) ? 0 : 1;
    Rational lo1 = std::min(a.x[axis], b.x[axis]), hi1 = std::max(a.x[axis], b.x[axis]);
    Rational lo2 = std::min(c.x[axis], d.x[axis]), hi2 = std::max(c.x[axis], d.x[axis]);
    return hi1 >= lo2 && hi2 >= lo1;
  }
  if (static_cast<int>(d1) * static_cast<int>(d2) <= 0 &&
      static_cast<int>(d3) * static_cast<int>(d4) <= 0)
    return true;
  return false;
}

bool segment_triangle_touch(const Point& a, const Point& b, const Point& t0,
                            const Point& t1, const Point& t2) {
  Sign sa = orient3_sign(t0, t1, t2, a);
  Sign sb = orient3_sign(t0, t1, t2, b);
  if (sa != Sign::zero && sb == sa) return false;
  if (sa == Sign::zero && sb == Sign::zero) {
    // coplanar: 2D overlap in the triangle's chart plane
    auto u = sub(t1, t0), v = sub(t2, t0);
    std::array<Rational, 3> n = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                 u[0] * v[1] - u[1] * v[0]};
    int drop = dominant_axis(n);
    int ci = drop == 0 ? 1 : 0, cj = drop == 2 ? 1 : 2;
    auto flat = [&](const Point& p) {
      Point q;
      q.dim = 2;
      q.x = {p.x[ci], p.x[cj], Rational(0)};
      q.d = {q.x[0].convert_to<double>(), q.x[1].convert_to<double>(), 0.0};
      q.exact_in_double = false;
      return q;
    };
    Point fa = flat(a), fb = flat(b), f0 = flat(t0), f1 = flat(t1), f2 = flat(t2);
    if (segments_touch(fa, fb, f0, f1) || segments_touch(fa, fb, f1, f2) ||
        segments_touch(fa, fb, f2, f0))
      return true;
    return point_in_triangle_chart(a, t0, t1, t2, ci, cj) ||
           point_in_triangle_chart(b, t0, t1, t2, ci, cj);
  }
  // segment meets the plane within [a,b]; does the line pass the closed triangle?
  Sign s1 = sign_of(orient3_exact(a, b, t0, t1));
  Sign s2 = sign_of(orient3_exact(a, b, t1, t2));
  Sign s3 = sign_of(orient3_exact(a, b, t2, t0));
  bool has_pos = s1 == Sign::positive || s2 == Sign::positive || s3 == Sign::positive;
  bool has_neg = s1 == Sign::negative || s2 == Sign::negative || s3 == Sign::negative;
  return !(has_pos && has_neg);
}

// ── double-precision metric helpers ─────────────────────────────────

double squared_distance_point_segment(const std::array<double, 3>& p,
                                      const std::array<double, 3>& a,
                                      const std::array<double, 3>& b, int dim) {
  double ab2 = 0, ap_ab = 0;
  for (int i = 0; i < dim; ++i) {
    ab2 += (b[i] - a[i]) * (b[i] - a[i]);
    ap_ab += (p[i] - a[i]) * (b[i] - a[i]);
  }
  double t = ab2 > 0 ? std::clamp(ap_ab / ab2, 0.0, 1.0) : 0.0;
  double d2 = 0;
  for (int i = 0; i < dim; ++i) {
    double diff = p[i] - (a[i] + t * (b[i] - a[i]));
    d2 += diff * diff;
  }
  return d2;
}

double squared_distance_segment_segment(const std::array<double, 3>& a,
                                        const std::array<double, 3>& b,
                                        const std::array<double, 3>& c,
                                        const std::array<double, 3>& d, int dim) {
  // sampled-free exact-enough evaluation via the standard clamped closest
  // point parameters
  std::array<double, 3> u{}, v{}, w{};
  for (int i = 0; i < dim; ++i) {
    u[i] = b[i] - a[i];
    v[i] = d[i] - c[i];
    w[i] = a[i] - c[i];
  }
  double A = 0, B = 0, C = 0, D = 0, E = 0;
  for (int i = 0; i < dim; ++i) {
    A += u[i] * u[i];
    B += u[i] * v[i];
    C += v[i] * v[i];
    D += u[i] * w[i];
    E += v[i] * w[i];
  }
  double denom = A * C - B * B;
  double s = 0, t = 0;
  if (denom > 1e-30) s = std::clamp((B * E - C * D) / denom, 0.0, 1.0);
  t = C > 1e-30 ? std::clamp((B * s + E) / C, 0.0, 1.0) : 0.0;
  // re-clamp s for the chosen t
  s = A > 1e-30 ? std::clamp((B * t - D) / A, 0.0, 1.0) : 0.0;
  double d2 = 0;
  for (int i = 0; i < dim; ++i) {
    double diff = (a[i] + s * u[i]) - (c[i] + t * v[i]);
    d2 += diff * diff;
  }
  return d2;
}

}  // namespace pathclass
