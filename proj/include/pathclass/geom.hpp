// Exact geometric primitives: points with rational coordinates, sign
// predicates (orientation, in-sphere, symbolically perturbed in-sphere),
// convex hulls, and polytope membership. Everything combinatorial in the
// decomposition pipeline rests on these signs being exact.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pathclass {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// ── errors ──────────────────────────────────────────────────────────

struct InputError : std::runtime_error {
  explicit InputError(const std::string& m) : std::runtime_error(m) {}
};
struct DegeneracyError : std::runtime_error {
  explicit DegeneracyError(const std::string& m) : std::runtime_error(m) {}
};
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};
struct ContainmentError : std::runtime_error {
  explicit ContainmentError(const std::string& m) : std::runtime_error(m) {}
};
struct QueryError : std::runtime_error {
  explicit QueryError(const std::string& m) : std::runtime_error(m) {}
};
struct ComparisonError : std::runtime_error {
  explicit ComparisonError(const std::string& m) : std::runtime_error(m) {}
};
// Raised when a sampled path steps over more than one region boundary at
// once; carries the offending step so callers can resample.
struct ResolutionError : std::runtime_error {
  int step;
  ResolutionError(int step_, const std::string& m)
      : std::runtime_error(m), step(step_) {}
};

// ── scalars and points ──────────────────────────────────────────────

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(const Rational& r) {
  int s = r.sign();
  return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}
inline Sign opposite(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

// Parses "-1.25", "3", "1e-3", or "7/10" into an exact rational.
Rational rational_from_string(const std::string& text);

// Point with exact coordinates plus a nearest-double view for the
// floating-point predicate filters and for metric (non-combinatorial) math.
struct Point {
  int dim = 2;
  std::array<Rational, 3> x{};
  std::array<double, 3> d{0.0, 0.0, 0.0};
  // true when every exact coordinate equals its double view, i.e. the
  // double filter may be trusted to describe the exact input.
  bool exact_in_double = true;

  Point() = default;
  static Point from_doubles(std::span<const double> coords);
  static Point from_doubles2(double a, double b) {
    const double c[2] = {a, b};
    return from_doubles(std::span<const double>(c, 2));
  }
  static Point from_doubles3(double a, double b, double c) {
    const double v[3] = {a, b, c};
    return from_doubles(std::span<const double>(v, 3));
  }
  static Point from_rationals(std::span<const Rational> coords);
  static Point from_strings(std::span<const std::string> coords);

  bool same_coords(const Point& o) const;
  // lexicographic exact comparison, the perturbation-rank order
  bool lex_less(const Point& o) const;
};

// ── sign predicates ─────────────────────────────────────────────────

// Sign of the orientation determinant of d+1 points (d = 2 or 3).
// 2D: positive = counter-clockwise. 3D: positive = right-handed.
Sign orient(std::span<const Point> simplex);

inline Sign orient2(const Point& a, const Point& b, const Point& c) {
  const Point pts[3] = {a, b, c};
  return orient(std::span<const Point>(pts, 3));
}
inline Sign orient3(const Point& a, const Point& b, const Point& c,
                    const Point& d) {
  const Point pts[4] = {a, b, c, d};
  return orient(std::span<const Point>(pts, 4));
}

// Exact homogeneous orientation determinant of 3 points (2D) or 4 points
// (3D); affine in its last argument, zero on the points' flat.
Rational homogeneous_orient(std::span<const Point> pts);

enum class SpherePosition { inside, on, outside };

// Exact position of `query` relative to the circumscribed circle/sphere of a
// non-degenerate simplex. Orientation of the simplex does not matter.
SpherePosition in_sphere(std::span<const Point> simplex, const Point& query);

// in_sphere with cocircular/cospherical ties broken by the symbolic
// perturbation: point with rank r has its paraboloid lift lowered by
// eps^(r+1), so the lowest-rank point with a nonzero orientation cofactor
// decides. Never returns `on`. Ranks must be distinct.
SpherePosition perturbed_in_sphere(std::span<const Point> simplex,
                                   std::span<const int> simplex_ranks,
                                   const Point& query, int query_rank);

// ── polytopes ───────────────────────────────────────────────────────

struct Polytope {
  int id = 0;
  int dim = 2;
  std::vector<Point> vertices;              // 2D: CCW simple polygon
  std::vector<std::array<int, 3>> faces;    // 3D: outward-oriented triangles
};

enum class Placement { interior, boundary, exterior };

// Minimal convex polytope over the input points; vertices are the extreme
// subset of the inputs (2D: CCW order, 3D: triangulated boundary).
Polytope convex_hull(const std::vector<Point>& points, int id = 0);

// Exact classification against a simple polygon (2D, may be concave) or a
// closed triangulated boundary (3D).
Placement point_in_polytope(const Point& p, const Polytope& poly);

// Exact membership in the convex hull of a point set, without building the
// hull's face structure.
Placement point_in_convex_hull(const Point& p, const std::vector<Point>& hull_points);

// ── segment helpers ─────────────────────────────────────────────────

// Closed-set contact test: do segments [a,b] and [c,d] share any point?
bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d);

// Exact: does p lie on the closed segment [a,b]?
bool on_segment(const Point& p, const Point& a, const Point& b);

// Closed-set contact between segment [a,b] and triangle (t0,t1,t2) in 3D.
bool segment_triangle_touch(const Point& a, const Point& b, const Point& t0,
                            const Point& t1, const Point& t2);

// ── double-precision metric helpers (non-combinatorial uses) ────────

double squared_distance_point_segment(const std::array<double, 3>& p,
                                      const std::array<double, 3>& a,
                                      const std::array<double, 3>& b, int dim);
double squared_distance_segment_segment(const std::array<double, 3>& a,
                                        const std::array<double, 3>& b,
                                        const std::array<double, 3>& c,
                                        const std::array<double, 3>& d, int dim);

}  // namespace pathclass
