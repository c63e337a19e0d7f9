#include "support.hpp"

#include <doctest.h>

using namespace banded;
using namespace testing;

namespace {

Point2 P(long x, long y) { return {Rational(x), Rational(y)}; }
Point3 P3(Rational x, Rational y, Rational z) { return {std::move(x), std::move(y), std::move(z)}; }

Point2 random_grid_point(gen::Rng& rng, long range) {
  return P(gen::uniform_int(rng, -range, range), gen::uniform_int(rng, -range, range));
}

Point3 random_point3(gen::Rng& rng, long range, long den) {
  auto c = [&] { return ratio(gen::uniform_int(rng, -range * den, range * den), den); };
  return P3(c(), c(), c());
}

Triangle3 random_triangle3(gen::Rng& rng, long range, long den) {
  for (;;) {
    Triangle3 t{random_point3(rng, range, den), random_point3(rng, range, den), random_point3(rng, range, den)};
    if (!triangle_is_degenerate(t)) return t;
  }
}

}  // namespace

TEST_CASE("orient2d examples") {
  CHECK(orient2d(P(0, 0), P(1, 0), P(0, 1)) == 1);
  CHECK(orient2d(P(0, 0), P(1, 0), P(2, 0)) == 0);
  CHECK(orient2d(P(0, 0), P(1, 0), P(0, -1)) == -1);
}

TEST_CASE("orient2d flips sign under any swap") {
  gen::Rng rng(101);
  for (int k = 0; k < 1000; ++k) {
    Point2 a = random_grid_point(rng, 5), b = random_grid_point(rng, 5), c = random_grid_point(rng, 5);
    int s = orient2d(a, b, c);
    CHECK(orient2d(b, a, c) == -s);
    CHECK(orient2d(a, c, b) == -s);
    CHECK(orient2d(c, b, a) == -s);
    CHECK(orient2d(b, c, a) == s);
  }
}

TEST_CASE("ccw_angle classification") {
  CHECK(ccw_angle(P(1, 0), P(0, 1)).cls == AngleClass::LessPi);
  CHECK(ccw_angle(P(1, 0), P(-1, 0)).cls == AngleClass::EqualPi);
  CHECK(ccw_angle(P(1, 0), P(0, -1)).cls == AngleClass::GreaterPi);
  CHECK(ccw_angle(P(1, 0), P(3, 0)).is_zero());
  CHECK(ccw_angle(P(1, 0), P(1, 1)) < ccw_angle(P(1, 0), P(0, 1)));
  CHECK(ccw_angle(P(1, 0), P(0, 1)) < ccw_angle(P(1, 0), P(-1, -1)));
  CHECK(ccw_angle(P(1, 0), P(2, 2)) == ccw_angle(P(0, 1), P(-1, 1)));
  CHECK_THROWS_AS(ccw_angle(P(0, 0), P(1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(ccw_angle(P(1, 0), P(0, 0)), std::invalid_argument);
}

TEST_CASE("ccw_angle order agrees with atan2 on random vectors") {
  gen::Rng rng(7);
  auto angle = [](const Point2& u, const Point2& v) {
    double a = std::atan2(v.y.get_d(), v.x.get_d()) - std::atan2(u.y.get_d(), u.x.get_d());
    while (a < 0) a += 2 * std::numbers::pi;
    while (a >= 2 * std::numbers::pi) a -= 2 * std::numbers::pi;
    return a;
  };
  for (int k = 0; k < 500; ++k) {
    Point2 u = random_grid_point(rng, 9), v = random_grid_point(rng, 9), w = random_grid_point(rng, 9);
    if (u == P(0, 0) || v == P(0, 0) || w == P(0, 0)) continue;
    double av = angle(u, v), aw = angle(u, w);
    if (std::abs(av - aw) < 1e-9) continue;
    CHECK((ccw_angle(u, v) < ccw_angle(u, w)) == (av < aw));
    auto cls = ccw_angle(u, v).cls;
    if (std::abs(av - std::numbers::pi) > 1e-9) CHECK((cls == AngleClass::LessPi) == (av < std::numbers::pi));
  }
}

TEST_CASE("segment intersection examples") {
  CHECK(segments_intersect_2d(Segment2{P(0, 0), P(2, 2)}, Segment2{P(0, 2), P(2, 0)}, SegmentMode::Proper));
  CHECK_FALSE(segments_intersect_2d(Segment2{P(0, 0), P(1, 0)}, Segment2{P(1, 0), P(2, 0)}, SegmentMode::Proper));
  CHECK(segments_intersect_2d(Segment2{P(0, 0), P(1, 0)}, Segment2{P(1, 0), P(2, 0)}, SegmentMode::Any));
  // Collinear overlap beyond a shared endpoint is a proper intersection.
  CHECK(segments_intersect_2d(Segment2{P(0, 0), P(2, 0)}, Segment2{P(0, 0), P(1, 0)}, SegmentMode::Proper));
  // T-junction: endpoint of one on the interior of the other.
  CHECK(segments_intersect_2d(Segment2{P(0, 0), P(2, 0)}, Segment2{P(1, 0), P(1, 1)}, SegmentMode::Proper));
}

TEST_CASE("segment intersection agrees with the parametric oracle") {
  gen::Rng rng(3);
  int hits = 0;
  for (int k = 0; k < 3000; ++k) {
    Point2 a = random_grid_point(rng, 3), b = random_grid_point(rng, 3), c = random_grid_point(rng, 3), d = random_grid_point(rng, 3);
    if (a == b || c == d) continue;
    bool any = segments_intersect_2d(a, b, c, d, SegmentMode::Any);
    CHECK(any == closed_segments_meet(a, b, c, d));
    hits += any;
  }
  CHECK(hits > 300);  // the small grid produces plenty of touching cases
}

TEST_CASE("polygon predicates on small examples") {
  auto square = pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(polygon_is_simple(square));
  CHECK(polygon_is_ccw(square));
  CHECK(polygon_is_convex(square));

  auto cw = std::vector<Point2>(square.rbegin(), square.rend());
  CHECK_FALSE(polygon_is_ccw(cw));
  CHECK(polygon_is_convex(gen::ccw(cw)));

  auto bowtie = pts({{0, 0}, {2, 2}, {2, 0}, {0, 2}});
  CHECK_FALSE(polygon_is_simple(bowtie));
  CHECK_THROWS(polygon_is_ccw(bowtie));
  CHECK_THROWS(polygon_is_convex(bowtie));
  CHECK_THROWS_AS(polygon_is_simple(pts({{0, 0}, {1, 0}})), std::invalid_argument);

  // A vertex touching a non-adjacent edge.
  CHECK_FALSE(polygon_is_simple(pts({{0, 0}, {4, 0}, {4, 4}, {2, 0}, {0, 4}})));
  // A collinear vertex is fine and does not count as a corner.
  auto with_flat = pts({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}});
  CHECK(polygon_is_simple(with_flat));
  CHECK(polygon_is_convex(with_flat));
  CHECK(polygon_corners(with_flat).size() == 4);
  // Folding back along an edge is not simple.
  CHECK_FALSE(polygon_is_simple(pts({{0, 0}, {2, 0}, {1, 0}, {1, 2}})));
}

TEST_CASE("the star fixture is simple, ccw and not convex") {
  auto star = figure("fig7_star");
  CHECK(polygon_is_simple(star.source.vertices));
  CHECK(polygon_is_ccw(star.source.span()));
  CHECK_FALSE(polygon_is_convex(star.source.span()));
}

TEST_CASE("polygon_is_simple agrees with the pairwise oracle") {
  gen::Rng rng(19);
  int simple = 0;
  for (int k = 0; k < 200; ++k) {
    std::size_t n = static_cast<std::size_t>(gen::uniform_int(rng, 3, 9));
    std::vector<Point2> p;
    if (k % 2 == 0) {
      // Tiny grid: many collinear contacts and repeated points.
      for (std::size_t i = 0; i < n; ++i) p.push_back(random_grid_point(rng, 2));
    } else {
      p = gen::polygon(rng, k % 4 == 1 ? gen::Shape::Star : gen::Shape::TwoOpt, n);
      // Nudge one vertex onto a grid point to provoke near-contacts.
      std::size_t i = static_cast<std::size_t>(gen::uniform_int(rng, 0, static_cast<long>(n) - 1));
      p[i] = {Rational(std::lround(p[i].x.get_d())), Rational(std::lround(p[i].y.get_d()))};
    }
    bool expected = simple_oracle(p);
    CAPTURE(k);
    CHECK(polygon_is_simple(p) == expected);
    simple += expected;
  }
  CHECK(simple > 40);
  CHECK(simple < 180);
}

TEST_CASE("3D triangle examples") {
  // Hinge: shared edge AB, different planes.
  Triangle3 a{P3(0, 0, 0), P3(1, 0, 0), P3(0, 1, 0)};
  Triangle3 b{P3(0, 0, 0), P3(1, 0, 0), P3(0, 0, 1)};
  CHECK_FALSE(open_triangles_intersect_3d(a, b));

  // Stabbing through the interior of a horizontal triangle at z = 1/2.
  Triangle3 flat{P3(0, 0, Rational(1, 2)), P3(4, 0, Rational(1, 2)), P3(0, 4, Rational(1, 2))};
  Triangle3 spike{P3(1, 1, 0), P3(1, 1, 1), P3(2, 1, 1)};
  CHECK(open_triangles_intersect_3d(flat, spike));

  // Shared vertex only.
  Triangle3 c{P3(0, 0, 0), P3(-1, 0, 0), P3(0, -1, 0)};
  CHECK_FALSE(open_triangles_intersect_3d(a, c));
  // Shared vertex but overlapping coplanar wedges.
  Triangle3 d{P3(0, 0, 0), P3(2, 1, 0), P3(1, 2, 0)};
  CHECK(open_triangles_intersect_3d(a, d));
  // Same plane, sharing an edge, folded onto each other.
  Triangle3 e{P3(0, 0, 0), P3(1, 0, 0), P3(1, 1, 0)};
  CHECK(open_triangles_intersect_3d(a, e));
  // Same plane, sharing an edge, on opposite sides.
  Triangle3 f{P3(0, 0, 0), P3(1, 0, 0), P3(0, -1, 0)};
  CHECK_FALSE(open_triangles_intersect_3d(a, f));
  // A vertex of one touching the interior of the other's edge.
  Triangle3 g{P3(Rational(1, 2), 0, 0), P3(1, -1, 1), P3(0, -1, 1)};
  CHECK(open_triangles_intersect_3d(a, g));

  Triangle3 degenerate{P3(0, 0, 0), P3(1, 1, 1), P3(2, 2, 2)};
  CHECK(triangle_is_degenerate(degenerate));
  CHECK_THROWS_AS(open_triangles_intersect_3d(a, degenerate), std::invalid_argument);
}

TEST_CASE("Schonhardt bands do not conflict") {
  auto inst = figure("fig1_twisted_prism");
  for (std::size_t i = 0; i < 3; ++i) {
    auto ti = chord_triangles(inst, i, Chord::Right);
    auto tj = chord_triangles(inst, (i + 1) % 3, Chord::Right);
    for (const auto& x : ti.faces) {
      for (const auto& y : tj.faces) CHECK_FALSE(open_triangles_intersect_3d(x, y));
    }
  }
}

TEST_CASE("triangle test is symmetric") {
  gen::Rng rng(23);
  int hits = 0;
  for (int k = 0; k < 1000; ++k) {
    // Coarse grid so that shared vertices, coplanar pairs and contacts occur.
    Triangle3 a = random_triangle3(rng, 2, 1);
    Triangle3 b = random_triangle3(rng, 2, 1);
    if (k % 3 == 0) b.a = a.b;  // force a shared vertex
    if (k % 9 == 0) b.b = a.c;  // and sometimes a shared edge
    if (triangle_is_degenerate(b)) continue;
    bool ab = open_triangles_intersect_3d(a, b);
    CHECK(ab == open_triangles_intersect_3d(b, a));
    Triangle3 a_rot{a.b, a.c, a.a}, b_flip{b.a, b.c, b.b};
    CHECK(ab == open_triangles_intersect_3d(a_rot, b_flip));
    hits += ab;
  }
  CHECK(hits > 100);
}

TEST_CASE("triangle test agrees with the edge-piercing oracle on generic pairs") {
  gen::Rng rng(29);
  int checked = 0, hits = 0;
  while (checked < 500) {
    Triangle3 a = random_triangle3(rng, 2, 64);
    Triangle3 b = random_triangle3(rng, 2, 64);
    Point3 nrm = cross(a.b - a.a, a.c - a.a);
    bool coplanar = dot(nrm, b.a - a.a) == 0 && dot(nrm, b.b - a.a) == 0 && dot(nrm, b.c - a.a) == 0;
    if (coplanar) continue;
    ++checked;
    bool expected = generic_triangles_meet(a, b);
    CHECK(open_triangles_intersect_3d(a, b) == expected);
    hits += expected;
  }
  CHECK(hits > 50);
}
