#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "pathclass/geom.hpp"

using namespace pathclass;

namespace {

Point P(double x, double y) { return Point::from_doubles2(x, y); }
Point Q(double x, double y, double z) { return Point::from_doubles3(x, y, z); }

}  // namespace

TEST_CASE("orientation signs") {
  CHECK(orient2(P(0, 0), P(1, 0), P(0, 1)) == Sign::positive);
  CHECK(orient2(P(0, 0), P(1, 1), P(2, 2)) == Sign::zero);
  CHECK(orient2(P(0, 0), P(0, 1), P(1, 0)) == Sign::negative);
  CHECK(orient3(Q(0, 0, 0), Q(1, 0, 0), Q(0, 1, 0), Q(0, 0, 1)) == Sign::positive);
  CHECK(orient3(Q(0, 0, 0), Q(1, 0, 0), Q(2, 0, 0), Q(3, 0, 0)) == Sign::zero);
}

TEST_CASE("orientation rejects dimension mismatch") {
  std::vector<Point> mixed = {P(0, 0), P(1, 0), Q(0, 1, 0)};
  CHECK_THROWS_AS(orient(mixed), InputError);
}

TEST_CASE("in_sphere 2D examples") {
  std::vector<Point> tri = {P(0, 0), P(1, 0), P(0, 1)};
  CHECK(in_sphere(tri, P(0.25, 0.25)) == SpherePosition::inside);
  // circumcenter (0.5, 0.5), radius^2 = 0.5; (1,1) is at exactly that distance
  CHECK(in_sphere(tri, P(1, 1)) == SpherePosition::on);
  CHECK(in_sphere(tri, P(5, 5)) == SpherePosition::outside);
}

TEST_CASE("in_sphere 3D against the circumsphere") {
  std::vector<Point> tet = {Q(0, 0, 0), Q(1, 0, 0), Q(0, 1, 0), Q(0, 0, 1)};
  CHECK(in_sphere(tet, Q(0.5, 0.5, 0.5)) == SpherePosition::inside);
  CHECK(in_sphere(tet, Q(1, 1, 1)) == SpherePosition::on);
  CHECK(in_sphere(tet, Q(3, 3, 3)) == SpherePosition::outside);
}

TEST_CASE("degenerate simplex is an input error") {
  std::vector<Point> flat = {P(0, 0), P(1, 1), P(2, 2)};
  CHECK_THROWS_AS(in_sphere(flat, P(0, 1)), InputError);
}

TEST_CASE("orient and in_sphere flip under odd permutations") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> U(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point> tri = {P(U(rng), U(rng)), P(U(rng), U(rng)), P(U(rng), U(rng))};
    if (orient(tri) == Sign::zero) continue;
    std::vector<Point> swapped = {tri[1], tri[0], tri[2]};
    CHECK(orient(swapped) == opposite(orient(tri)));
    Point q = P(U(rng), U(rng));
    CHECK(in_sphere(tri, q) == in_sphere(swapped, q));  // normalized by orientation
  }
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Point> tet = {Q(U(rng), U(rng), U(rng)), Q(U(rng), U(rng), U(rng)),
                              Q(U(rng), U(rng), U(rng)), Q(U(rng), U(rng), U(rng))};
    if (orient(tet) == Sign::zero) continue;
    std::vector<Point> swapped = {tet[0], tet[2], tet[1], tet[3]};
    CHECK(orient(swapped) == opposite(orient(tet)));
    Point q = Q(U(rng), U(rng), U(rng));
    CHECK(in_sphere(tet, q) == in_sphere(swapped, q));
  }
}

TEST_CASE("in_sphere agrees with floating-point circumcircle when margins are clear") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-2, 2);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Point a = P(U(rng), U(rng)), b = P(U(rng), U(rng)), c = P(U(rng), U(rng));
    std::vector<Point> tri = {a, b, c};
    if (orient(tri) == Sign::zero) continue;
    // circumcenter by doubles
    double ax = a.d[0], ay = a.d[1], bx = b.d[0], by = b.d[1], cx = c.d[0], cy = c.d[1];
    double dd = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) +
                 (cx * cx + cy * cy) * (ay - by)) /
                dd;
    double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) +
                 (cx * cx + cy * cy) * (bx - ax)) /
                dd;
    double r2 = (ax - ux) * (ax - ux) + (ay - uy) * (ay - uy);
    Point q = P(U(rng), U(rng));
    double q2 = (q.d[0] - ux) * (q.d[0] - ux) + (q.d[1] - uy) * (q.d[1] - uy);
    if (std::fabs(q2 - r2) < 1e-9) continue;  // margin too small for doubles
    SpherePosition expect = q2 < r2 ? SpherePosition::inside : SpherePosition::outside;
    CHECK(in_sphere(tri, q) == expect);
    ++checked;
  }
  CHECK(checked > 300);
}

TEST_CASE("perturbed_in_sphere breaks cocircular ties deterministically") {
  // unit square: all four points cocircular
  Point a = P(0, 0), b = P(1, 0), c = P(0, 1), d = P(1, 1);
  std::vector<Point> tri = {a, b, c};
  std::vector<int> ranks = {0, 2, 1};  // lex ranks within {a,b,c,d}
  CHECK(in_sphere(tri, d) == SpherePosition::on);
  auto r1 = perturbed_in_sphere(tri, ranks, d, 3);
  CHECK(r1 != SpherePosition::on);
  // same answer regardless of simplex vertex order
  std::vector<Point> tri2 = {c, a, b};
  std::vector<int> ranks2 = {1, 0, 2};
  CHECK(perturbed_in_sphere(tri2, ranks2, d, 3) == r1);
}

TEST_CASE("convex hull drops interior and collinear points") {
  std::vector<Point> pts = {P(0, 0), P(1, 0), P(1, 1), P(0, 1), P(0.5, 0.5), P(0.5, 0)};
  Polytope hull = convex_hull(pts);
  CHECK(hull.vertices.size() == 4);
  // CCW from the lexicographic minimum
  CHECK(hull.vertices[0].same_coords(P(0, 0)));
  CHECK(orient2(hull.vertices[0], hull.vertices[1], hull.vertices[2]) == Sign::positive);
}

TEST_CASE("convex hull of a triangle is the triangle") {
  std::vector<Point> pts = {P(0, 0), P(2, 0), P(1, 3)};
  Polytope hull = convex_hull(pts);
  CHECK(hull.vertices.size() == 3);
}

TEST_CASE("convex hull of the cube corners") {
  std::vector<Point> pts;
  for (int z = 0; z < 2; ++z)
    for (int y = 0; y < 2; ++y)
      for (int x = 0; x < 2; ++x) pts.push_back(Q(x, y, z));
  pts.push_back(Q(0.5, 0.5, 0.5));
  pts.push_back(Q(0.5, 0.5, 0.0));  // interior to a face, not extreme
  Polytope hull = convex_hull(pts);
  CHECK(hull.vertices.size() == 8);
  CHECK(hull.faces.size() == 12);
}

TEST_CASE("convex hull idempotence on random point sets") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Point> pts;
    for (int i = 0; i < 20; ++i) pts.push_back(P(U(rng), U(rng)));
    Polytope h1 = convex_hull(pts);
    Polytope h2 = convex_hull(h1.vertices);
    REQUIRE(h1.vertices.size() == h2.vertices.size());
    for (std::size_t i = 0; i < h1.vertices.size(); ++i)
      CHECK(h1.vertices[i].same_coords(h2.vertices[i]));
  }
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Point> pts;
    for (int i = 0; i < 15; ++i) pts.push_back(Q(U(rng), U(rng), U(rng)));
    Polytope h1 = convex_hull(pts);
    Polytope h2 = convex_hull(h1.vertices);
    CHECK(h1.vertices.size() == h2.vertices.size());
  }
}

TEST_CASE("convex hull degeneracy error") {
  std::vector<Point> collinear = {P(0, 0), P(1, 1), P(2, 2), P(3, 3)};
  CHECK_THROWS_AS(convex_hull(collinear), DegeneracyError);
  std::vector<Point> coplanar = {Q(0, 0, 0), Q(1, 0, 0), Q(0, 1, 0), Q(1, 1, 0)};
  CHECK_THROWS_AS(convex_hull(coplanar), DegeneracyError);
}

TEST_CASE("point in polygon: unit square") {
  Polytope square{1, 2, {P(0, 0), P(1, 0), P(1, 1), P(0, 1)}, {}};
  CHECK(point_in_polytope(P(0.5, 0.5), square) == Placement::interior);
  CHECK(point_in_polytope(P(1, 0.5), square) == Placement::boundary);
  CHECK(point_in_polytope(P(2, 2), square) == Placement::exterior);
  CHECK(point_in_polytope(P(0, 0), square) == Placement::boundary);
}

TEST_CASE("point in concave polygon") {
  // L-shape: notch at the top right
  Polytope ell{1, 2,
               {P(0, 0), P(3, 0), P(3, 1), P(1, 1), P(1, 3), P(0, 3)},
               {}};
  CHECK(point_in_polytope(P(0.5, 2.5), ell) == Placement::interior);
  CHECK(point_in_polytope(P(2, 2), ell) == Placement::exterior);  // in the notch
  CHECK(point_in_polytope(P(1, 2), ell) == Placement::boundary);
  CHECK(point_in_polytope(P(2, 0.5), ell) == Placement::interior);
}

TEST_CASE("point in 3D mesh") {
  auto piece = fixtures::box3(0, 0, 0, 2, 2, 2);
  Polytope cube{1, 3, piece.vertices, piece.faces};
  CHECK(point_in_polytope(Q(1, 1, 1), cube) == Placement::interior);
  CHECK(point_in_polytope(Q(2, 1, 1), cube) == Placement::boundary);
  CHECK(point_in_polytope(Q(0, 0, 0), cube) == Placement::boundary);
  CHECK(point_in_polytope(Q(3, 1, 1), cube) == Placement::exterior);
  CHECK(point_in_polytope(Q(-0.001, 1, 1), cube) == Placement::exterior);
}

TEST_CASE("segment contact tests") {
  CHECK(segments_touch(P(0, 0), P(2, 2), P(0, 2), P(2, 0)));
  CHECK(segments_touch(P(0, 0), P(2, 0), P(1, 0), P(3, 0)));   // collinear overlap
  CHECK(segments_touch(P(0, 0), P(2, 0), P(2, 0), P(3, 1)));   // shared endpoint
  CHECK(!segments_touch(P(0, 0), P(1, 0), P(0, 1), P(1, 1)));
  CHECK(!segments_touch(P(0, 0), P(1, 0), P(2, 0), P(3, 0)));  // collinear disjoint
}

TEST_CASE("segment-triangle contact") {
  Point t0 = Q(0, 0, 0), t1 = Q(2, 0, 0), t2 = Q(0, 2, 0);
  CHECK(segment_triangle_touch(Q(0.5, 0.5, -1), Q(0.5, 0.5, 1), t0, t1, t2));
  CHECK(!segment_triangle_touch(Q(3, 3, -1), Q(3, 3, 1), t0, t1, t2));
  CHECK(segment_triangle_touch(Q(0.5, 0.5, 0), Q(0.5, 0.5, 1), t0, t1, t2));  // endpoint on
  CHECK(segment_triangle_touch(Q(-1, 0.5, 0), Q(1, 0.5, 0), t0, t1, t2));     // coplanar
  CHECK(!segment_triangle_touch(Q(-1, -1, 0), Q(-1, 3, 0), t0, t1, t2));      // coplanar miss
}

TEST_CASE("decimal and fraction coordinate strings are exact") {
  CHECK(rational_from_string("0.1") == Rational(1, 10));
  CHECK(rational_from_string("-2.5e-2") == Rational(-1, 40));
  CHECK(rational_from_string("7/10") == Rational(7, 10));
  CHECK(rational_from_string("3") == Rational(3));
  CHECK_THROWS_AS(rational_from_string("abc"), InputError);
  std::vector<std::string> coords = {"0.1", "1/3"};
  Point p = Point::from_strings(coords);
  CHECK(p.x[0] == Rational(1, 10));
  CHECK(p.x[1] == Rational(1, 3));
  CHECK(!p.exact_in_double);  // 1/10 and 1/3 are not binary fractions
}

TEST_CASE("non-finite coordinates rejected") {
  double bad[2] = {std::nan(""), 0.0};
  CHECK_THROWS_AS(Point::from_doubles(bad), InputError);
}
