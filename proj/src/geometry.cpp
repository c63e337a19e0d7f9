#include "banded/geometry.hpp"

#include <optional>

namespace banded {

Rational dot(const Point3& u, const Point3& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }

Point3 cross(const Point3& u, const Point3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

bool polygon_is_ccw(std::span<const Point2> poly) {
  if (!polygon_is_simple(poly)) throw std::invalid_argument("polygon_is_ccw: polygon is not simple");
  return sign(signed_area2(poly)) > 0;
}

bool polygon_is_convex(std::span<const Point2> poly) {
  if (!polygon_is_simple(poly)) throw std::invalid_argument("polygon_is_convex: polygon is not simple");
  const std::size_t n = poly.size();
  int strict_left = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int o = orient2d(poly[(i + n - 1) % n], poly[i], poly[(i + 1) % n]);
    if (o < 0) return false;
    if (o > 0) ++strict_left;
  }
  return strict_left >= 3;
}

std::vector<std::size_t> polygon_corners(std::span<const Point2> poly) {
  std::vector<std::size_t> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orient2d(poly[(i + n - 1) % n], poly[i], poly[(i + 1) % n]) != 0) out.push_back(i);
  }
  return out;
}

namespace {

int half_plane(const Vector2& w) { return (sign(w.y) > 0 || (sign(w.y) == 0 && sign(w.x) > 0)) ? 0 : 1; }

}  // namespace

bool operator<(const CcwAngle& l, const CcwAngle& r) {
  int hl = half_plane(l.witness);
  int hr = half_plane(r.witness);
  if (hl != hr) return hl < hr;
  return sign(cross2(l.witness, r.witness)) > 0;
}

bool operator==(const CcwAngle& l, const CcwAngle& r) {
  return half_plane(l.witness) == half_plane(r.witness) && sign(cross2(l.witness, r.witness)) == 0;
}

CcwAngle ccw_angle(const Vector2& u, const Vector2& v) {
  if ((sign(u.x) == 0 && sign(u.y) == 0) || (sign(v.x) == 0 && sign(v.y) == 0)) {
    throw std::invalid_argument("ccw_angle: zero vector");
  }
  Vector2 w{dot2(u, v), cross2(u, v)};
  AngleClass cls;
  if (sign(w.y) > 0) {
    cls = AngleClass::LessPi;
  } else if (sign(w.y) < 0) {
    cls = AngleClass::GreaterPi;
  } else {
    cls = sign(w.x) > 0 ? AngleClass::LessPi : AngleClass::EqualPi;
  }
  return {cls, w};
}

bool triangle_is_degenerate(const Triangle3& t) {
  Point3 n = cross(t.b - t.a, t.c - t.a);
  return sign(n.x) == 0 && sign(n.y) == 0 && sign(n.z) == 0;
}

namespace {

// Closed triangle intersected with a plane that is not its own plane:
// empty, a point, or a segment (returned as its two extreme points).
std::optional<std::pair<Point3, Point3>> clip_to_plane(const Triangle3& t, const Point3& normal,
                                                       const Point3& origin, const Point3& axis) {
  std::array<Rational, 3> d;
  for (std::size_t i = 0; i < 3; ++i) d[i] = dot(normal, t[i] - origin);
  std::vector<Point3> pts;
  for (std::size_t i = 0; i < 3; ++i) {
    if (sign(d[i]) == 0) pts.push_back(t[i]);
    std::size_t j = (i + 1) % 3;
    if (sign(d[i]) * sign(d[j]) < 0) {
      Rational s = d[i] / (d[i] - d[j]);
      pts.push_back(t[i] + s * (t[j] - t[i]));
    }
  }
  if (pts.empty()) return std::nullopt;
  auto key_less = [&](const Point3& l, const Point3& r) { return dot(axis, l) < dot(axis, r); };
  auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), key_less);
  return std::make_pair(*lo, *hi);
}

bool on_segment_3d(const Point3& a, const Point3& b, const Point3& p) {
  Point3 c = cross(b - a, p - a);
  if (sign(c.x) != 0 || sign(c.y) != 0 || sign(c.z) != 0) return false;
  return sign(dot(p - a, p - b)) <= 0;
}

struct SharedSimplex {
  std::vector<Point3> vertices;  // 0, 1 or 2 shared points (3 handled by caller)

  bool contains(const Point3& p) const {
    if (vertices.empty()) return false;
    if (vertices.size() == 1) return p == vertices[0];
    return on_segment_3d(vertices[0], vertices[1], p);
  }
};

using P2 = Point2;

// Projects a point of a plane with normal n onto the coordinate plane that
// keeps the projection injective.
int drop_axis(const Point3& n) {
  Rational ax = abs(n.x), ay = abs(n.y), az = abs(n.z);
  if (ax >= ay && ax >= az) return 0;
  if (ay >= az) return 1;
  return 2;
}

P2 project(const Point3& p, int axis) {
  switch (axis) {
    case 0: return {p.y, p.z};
    case 1: return {p.z, p.x};
    default: return {p.x, p.y};
  }
}

// Sutherland-Hodgman against closed half-planes of a CCW triangle.
std::vector<P2> clip_convex(std::vector<P2> subject, const std::array<P2, 3>& clip) {
  for (std::size_t e = 0; e < 3 && !subject.empty(); ++e) {
    const P2& a = clip[e];
    const P2& b = clip[(e + 1) % 3];
    std::vector<P2> out;
    const std::size_t m = subject.size();
    for (std::size_t i = 0; i < m; ++i) {
      const P2& p = subject[i];
      const P2& q = subject[(i + 1) % m];
      Rational sp = cross2(P2(b - a), P2(p - a));
      Rational sq = cross2(P2(b - a), P2(q - a));
      if (sign(sp) >= 0) out.push_back(p);
      if (sign(sp) * sign(sq) < 0) {
        Rational s = sp / (sp - sq);
        out.push_back(p + s * P2(q - p));
      }
    }
    subject = std::move(out);
  }
  return subject;
}

}  // namespace

bool open_triangles_intersect_3d(const Triangle3& t1, const Triangle3& t2) {
  if (triangle_is_degenerate(t1) || triangle_is_degenerate(t2)) {
    throw std::invalid_argument("open_triangles_intersect_3d: degenerate triangle");
  }
  // Separated bounding boxes: only comparisons, no arithmetic.
  for (int axis = 0; axis < 3; ++axis) {
    auto coord = [axis](const Point3& p) -> const Rational& { return axis == 0 ? p.x : (axis == 1 ? p.y : p.z); };
    auto extent = [&](const Triangle3& t) {
      const Rational* lo = &coord(t.a);
      const Rational* hi = lo;
      for (const Point3* p : {&t.b, &t.c}) {
        if (cmp(coord(*p), *lo) < 0) lo = &coord(*p);
        if (cmp(coord(*p), *hi) > 0) hi = &coord(*p);
      }
      return std::pair{lo, hi};
    };
    auto [lo1, hi1] = extent(t1);
    auto [lo2, hi2] = extent(t2);
    if (cmp(*hi1, *lo2) < 0 || cmp(*hi2, *lo1) < 0) return false;
  }

  SharedSimplex shared;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (t1[i] == t2[j]) shared.vertices.push_back(t1[i]);
    }
  }
  if (shared.vertices.size() >= 3) return true;  // the same face twice

  const Point3 n1 = cross(t1.b - t1.a, t1.c - t1.a);
  const Point3 n2 = cross(t2.b - t2.a, t2.c - t2.a);

  bool coplanar = true;
  for (std::size_t i = 0; i < 3 && coplanar; ++i) coplanar = sign(dot(n2, t1[i] - t2.a)) == 0;

  if (!coplanar) {
    Point3 axis = cross(n1, n2);
    if (sign(axis.x) == 0 && sign(axis.y) == 0 && sign(axis.z) == 0) {
      return false;  // parallel distinct planes
    }
    auto s1 = clip_to_plane(t1, n2, t2.a, axis);
    if (!s1) return false;
    auto s2 = clip_to_plane(t2, n1, t1.a, axis);
    if (!s2) return false;
    Rational lo1 = dot(axis, s1->first), hi1 = dot(axis, s1->second);
    Rational lo2 = dot(axis, s2->first), hi2 = dot(axis, s2->second);
    const Point3& lo = lo1 >= lo2 ? s1->first : s2->first;
    const Point3& hi = hi1 <= hi2 ? s1->second : s2->second;
    if (dot(axis, lo) > dot(axis, hi)) return false;
    return !(shared.contains(lo) && shared.contains(hi));
  }

  int axis = drop_axis(n1);
  std::array<P2, 3> clip{project(t1.a, axis), project(t1.b, axis), project(t1.c, axis)};
  if (orient2d(clip[0], clip[1], clip[2]) < 0) std::swap(clip[1], clip[2]);
  std::vector<P2> subject{project(t2.a, axis), project(t2.b, axis), project(t2.c, axis)};
  auto region = clip_convex(std::move(subject), clip);
  if (region.empty()) return false;

  std::vector<P2> shared2;
  for (const auto& v : shared.vertices) shared2.push_back(project(v, axis));
  for (const auto& p : region) {
    bool inside = false;
    if (shared2.size() == 1) inside = p == shared2[0];
    if (shared2.size() == 2) inside = on_segment(shared2[0], shared2[1], p);
    if (!inside) return true;
  }
  return false;
}

}  // namespace banded
