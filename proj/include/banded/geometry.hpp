#pragma once

#include "banded/rational.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace banded {

template <class T>
struct BasicPoint2 {
  T x;
  T y;

  friend bool operator==(const BasicPoint2& a, const BasicPoint2& b) { return a.x == b.x && a.y == b.y; }
  friend BasicPoint2 operator+(const BasicPoint2& a, const BasicPoint2& b) { return {a.x + b.x, a.y + b.y}; }
  friend BasicPoint2 operator-(const BasicPoint2& a, const BasicPoint2& b) { return {a.x - b.x, a.y - b.y}; }
  friend BasicPoint2 operator*(const T& s, const BasicPoint2& a) { return {s * a.x, s * a.y}; }
};

using Point2 = BasicPoint2<Rational>;
using Vector2 = Point2;

struct Point3 {
  Rational x;
  Rational y;
  Rational z;

  friend bool operator==(const Point3& a, const Point3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
  friend Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Point3 operator*(const Rational& s, const Point3& a) { return {s * a.x, s * a.y, s * a.z}; }

  Point2 xy() const { return {x, y}; }
};

inline Point3 lift(const Point2& p, const Rational& z) { return {p.x, p.y, z}; }

struct Segment2 {
  Point2 a;
  Point2 b;
};

struct Triangle3 {
  Point3 a;
  Point3 b;
  Point3 c;

  const Point3& operator[](std::size_t i) const { return i == 0 ? a : (i == 1 ? b : c); }
};

Rational dot(const Point3& u, const Point3& v);
Point3 cross(const Point3& u, const Point3& v);

// ---------------------------------------------------------------------------
// 2D orientation family. Templated on the scalar so the morph analysis can run
// the same predicates over quadratic extension fields.

template <class T>
T cross2(const BasicPoint2<T>& u, const BasicPoint2<T>& v) {
  return u.x * v.y - u.y * v.x;
}

template <class T>
T dot2(const BasicPoint2<T>& u, const BasicPoint2<T>& v) {
  return u.x * v.x + u.y * v.y;
}

/// +1 if c is strictly left of the directed line ab, -1 if right, 0 if collinear.
template <class T>
int orient2d(const BasicPoint2<T>& a, const BasicPoint2<T>& b, const BasicPoint2<T>& c) {
  return sign(T(cross2(BasicPoint2<T>(b - a), BasicPoint2<T>(c - a))));
}

inline int orient2d(const Point2& a, const Point2& b, const Point2& c) {
  Rational l = (b.x - a.x) * (c.y - a.y);
  Rational r = (b.y - a.y) * (c.x - a.x);
  return cmp(l, r) > 0 ? 1 : (cmp(l, r) < 0 ? -1 : 0);
}

/// c lies on the closed segment ab (a may equal b).
template <class T>
bool on_segment(const BasicPoint2<T>& a, const BasicPoint2<T>& b, const BasicPoint2<T>& c) {
  if (orient2d(a, b, c) != 0) return false;
  return sign(T(dot2(BasicPoint2<T>(c - a), BasicPoint2<T>(c - b)))) <= 0;
}

enum class SegmentMode { Proper, Any };

/// Exact segment intersection. Proper excludes contact at endpoints shared by
/// both segments; Any treats every touching as an intersection.
template <class T>
bool segments_intersect_2d(const BasicPoint2<T>& p1, const BasicPoint2<T>& p2, const BasicPoint2<T>& q1,
                           const BasicPoint2<T>& q2, SegmentMode mode) {
  int o1 = orient2d(p1, p2, q1);
  int o2 = orient2d(p1, p2, q2);
  int o3 = orient2d(q1, q2, p1);
  int o4 = orient2d(q1, q2, p2);

  if (mode == SegmentMode::Proper) {
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    // Any other contact counts unless it happens only at a shared endpoint.
    std::vector<BasicPoint2<T>> contacts;
    auto add = [&](const BasicPoint2<T>& p) {
      if (std::find(contacts.begin(), contacts.end(), p) == contacts.end()) contacts.push_back(p);
    };
    if (o1 == 0 && on_segment(p1, p2, q1)) add(q1);
    if (o2 == 0 && on_segment(p1, p2, q2)) add(q2);
    if (o3 == 0 && on_segment(q1, q2, p1)) add(p1);
    if (o4 == 0 && on_segment(q1, q2, p2)) add(p2);
    if (contacts.empty()) return false;
    auto shared = [&](const BasicPoint2<T>& p) { return (p == p1 || p == p2) && (p == q1 || p == q2); };
    if (contacts.size() == 1 && shared(contacts.front())) return false;
    return true;
  }

  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

inline bool segments_intersect_2d(const Segment2& s1, const Segment2& s2, SegmentMode mode) {
  return segments_intersect_2d(s1.a, s1.b, s2.a, s2.b, mode);
}

template <class T>
T signed_area2(std::span<const BasicPoint2<T>> poly) {
  T acc = T(0);
  for (std::size_t i = 0, n = poly.size(); i < n; ++i) acc += cross2(poly[i], poly[(i + 1) % n]);
  return acc;
}

/// The closed edges i and j of a polygon fail the simplicity rule.
template <class T>
bool polygon_edges_clash(std::span<const BasicPoint2<T>> poly, std::size_t i, std::size_t j) {
  const std::size_t n = poly.size();
  const auto& a = poly[i];
  const auto& b = poly[(i + 1) % n];
  const auto& c = poly[j];
  const auto& d = poly[(j + 1) % n];
  bool adjacent_ij = (i + 1) % n == j;
  bool adjacent_ji = (j + 1) % n == i;
  if (!adjacent_ij && !adjacent_ji) return segments_intersect_2d(a, b, c, d, SegmentMode::Any);
  if (adjacent_ij && adjacent_ji) {
    // n == 2 never reaches here (n >= 3); kept for completeness.
    return true;
  }
  // Adjacent edges u-v, v-w meet at v; they clash if w doubles back onto u-v
  // or u onto v-w (collinear fold).
  const auto& u = adjacent_ij ? a : c;
  const auto& v = adjacent_ij ? b : d;
  const auto& w = adjacent_ij ? d : b;
  if (orient2d(u, v, w) != 0) return false;
  return sign(T(dot2(BasicPoint2<T>(v - u), BasicPoint2<T>(w - v)))) <= 0;
}

/// Exact simplicity test with a sorted-x sweep to skip disjoint edge pairs.
template <class T>
bool polygon_is_simple(std::span<const BasicPoint2<T>> poly) {
  const std::size_t n = poly.size();
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (poly[i] == poly[(i + 1) % n]) return false;
  }
  // Edge bounding boxes by reference into the polygon.
  struct Box {
    std::size_t edge;
    const T* x_lo;
    const T* x_hi;
    const T* y_lo;
    const T* y_hi;
  };
  std::vector<Box> boxes;
  boxes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % n];
    bool ax = compare(a.x, b.x) <= 0;
    bool ay = compare(a.y, b.y) <= 0;
    boxes.push_back({i, ax ? &a.x : &b.x, ax ? &b.x : &a.x, ay ? &a.y : &b.y, ay ? &b.y : &a.y});
  }
  std::sort(boxes.begin(), boxes.end(), [](const Box& l, const Box& r) { return compare(*l.x_lo, *r.x_lo) < 0; });
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t r = s + 1; r < n; ++r) {
      if (compare(*boxes[r].x_lo, *boxes[s].x_hi) > 0) break;
      if (compare(*boxes[r].y_lo, *boxes[s].y_hi) > 0 || compare(*boxes[s].y_lo, *boxes[r].y_hi) > 0) continue;
      if (polygon_edges_clash(poly, boxes[s].edge, boxes[r].edge)) return false;
    }
  }
  return true;
}

inline bool polygon_is_simple(const std::vector<Point2>& poly) {
  return polygon_is_simple(std::span<const Point2>(poly));
}

/// Signed-area sign test. Throws on non-simple input.
bool polygon_is_ccw(std::span<const Point2> poly);

/// All turns non-right with at least three strict left turns, in the given
/// orientation. Throws on non-simple input.
bool polygon_is_convex(std::span<const Point2> poly);

/// Indices of vertices where the boundary makes a strict turn.
std::vector<std::size_t> polygon_corners(std::span<const Point2> poly);

// ---------------------------------------------------------------------------
// Angles without trigonometry.

enum class AngleClass { LessPi, EqualPi, GreaterPi };

/// Counterclockwise angle from u to v, kept as the vector (u.v, u x v): its
/// polar angle in [0, 2pi) is the angle itself, so two witnesses compare
/// exactly by half-plane and cross product.
struct CcwAngle {
  AngleClass cls;
  Vector2 witness;

  bool is_zero() const { return sign(witness.y) == 0 && sign(witness.x) > 0; }
  friend bool operator<(const CcwAngle& l, const CcwAngle& r);
  friend bool operator==(const CcwAngle& l, const CcwAngle& r);
};

CcwAngle ccw_angle(const Vector2& u, const Vector2& v);

// ---------------------------------------------------------------------------
// 3D.

bool triangle_is_degenerate(const Triangle3& t);

/// True iff the two closed triangles meet anywhere outside the simplex they
/// share (common vertex, or common full edge). Shared vertices are detected by
/// exact coordinate equality. Throws std::invalid_argument on degenerate input.
bool open_triangles_intersect_3d(const Triangle3& t1, const Triangle3& t2);

}  // namespace banded
