#pragma once

// Helpers shared by the test executables: fixture paths and slow but
// independent reference implementations used as oracles.

#include "banded/chord_solver.hpp"
#include "banded/generators.hpp"
#include "banded/io.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace testing {

using namespace banded;

inline std::filesystem::path figure_path(const std::string& name) {
  return std::filesystem::path(BANDED_FIGURES_DIR) / (name + ".json");
}

inline SliceInstance figure(const std::string& name) { return load_instance(figure_path(name)); }

inline std::vector<Point2> pts(std::initializer_list<std::pair<long, long>> xy) {
  std::vector<Point2> out;
  for (auto [x, y] : xy) out.push_back({Rational(x), Rational(y)});
  return out;
}

inline bool valid_surface(const SliceInstance& inst, const ChordAssignment& a) {
  VerifyOptions opts;
  opts.fail_fast = true;
  return verify_banded_surface(assignment_to_surface(inst, a), opts).passed();
}

// ---------------------------------------------------------------------------
// Segment oracle: solve p1 + s (p2 - p1) = q1 + u (q2 - q1) by Cramer's rule,
// with the collinear case handled by projecting onto the dominant axis.

// Source and target from independent, possibly different, shape families.
// Rotated copies are mixed in since large turns are the usual UNSAT source.
inline SliceInstance steiner_instance(gen::Rng& rng, std::size_t n) {
  auto shape = [&] { return static_cast<gen::Shape>(gen::uniform_int(rng, 0, 3)); };
  auto src = gen::polygon(rng, shape(), n);
  if (gen::uniform_int(rng, 0, 2) == 0) {
    auto [cs, sn] = gen::random_rotation(rng, 1.0, 3.1);
    return SliceInstance::make(src, gen::rotated(src, {0, 0}, cs, sn));
  }
  return SliceInstance::make(src, gen::polygon(rng, shape(), n));
}

inline bool closed_segments_meet(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2) {
  Rational dx1 = p2.x - p1.x, dy1 = p2.y - p1.y;
  Rational dx2 = q2.x - q1.x, dy2 = q2.y - q1.y;
  Rational det = dx1 * (-dy2) - (-dx2) * dy1;
  Rational rx = q1.x - p1.x, ry = q1.y - p1.y;
  if (det != 0) {
    Rational s = (rx * (-dy2) - (-dx2) * ry) / det;
    Rational u = (dx1 * ry - dy1 * rx) / det;
    return s >= 0 && s <= 1 && u >= 0 && u <= 1;
  }
  // Parallel: meet only if collinear with overlapping projections.
  if (rx * dy1 - ry * dx1 != 0) return false;
  bool use_x = dx1 != 0 || dx2 != 0;
  auto coord = [&](const Point2& p) { return use_x ? p.x : p.y; };
  Rational a0 = std::min(coord(p1), coord(p2)), a1 = std::max(coord(p1), coord(p2));
  Rational b0 = std::min(coord(q1), coord(q2)), b1 = std::max(coord(q1), coord(q2));
  return a0 <= b1 && b0 <= a1;
}

// The two closed segments meet in more than the single point x.
inline bool segments_meet_beyond(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2, const Point2& x) {
  if (!closed_segments_meet(p1, p2, q1, q2)) return false;
  Rational dx1 = p2.x - p1.x, dy1 = p2.y - p1.y;
  Rational dx2 = q2.x - q1.x, dy2 = q2.y - q1.y;
  if (dx1 * dy2 - dy1 * dx2 != 0) return false;  // transversal: the single point is x
  // Collinear overlap; it is more than x unless the segments point away from x.
  auto dir = [&](const Point2& a, const Point2& b) -> Rational { return (b.x - a.x) * dx1 + (b.y - a.y) * dy1; };
  const Point2& pfar = p1 == x ? p2 : p1;
  const Point2& qfar = q1 == x ? q2 : q1;
  return sgn(dir(x, pfar)) == sgn(dir(x, qfar));
}

// O(n^2) simplicity over every edge pair.
inline bool simple_oracle(const std::vector<Point2>& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p[i] == p[j]) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point2 &a = p[i], &b = p[(i + 1) % n], &c = p[j], &d = p[(j + 1) % n];
      if (j == i + 1) {
        if (segments_meet_beyond(a, b, c, d, b)) return false;
      } else if (i == 0 && j == n - 1) {
        if (segments_meet_beyond(a, b, c, d, a)) return false;
      } else if (closed_segments_meet(a, b, c, d)) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Triangle oracle for pairs in general position (no shared vertices, not
// coplanar): the closed triangles meet iff an edge of one pierces the other.
// Each edge/plane crossing is computed as an explicit point and tested with
// barycentric coordinates.

inline std::optional<Point3> segment_plane_point(const Point3& p, const Point3& q, const Triangle3& t) {
  Point3 nrm = cross(t.b - t.a, t.c - t.a);
  Rational dp = dot(nrm, p - t.a), dq = dot(nrm, q - t.a);
  if (dp == dq) return std::nullopt;  // parallel
  Rational s = dp / (dp - dq);
  if (s < 0 || s > 1) return std::nullopt;
  return p + s * (q - p);
}

inline bool point_in_triangle(const Point3& x, const Triangle3& t) {
  // Barycentric coordinates via the Gram system.
  Point3 v0 = t.b - t.a, v1 = t.c - t.a, v2 = x - t.a;
  Rational d00 = dot(v0, v0), d01 = dot(v0, v1), d11 = dot(v1, v1), d20 = dot(v2, v0), d21 = dot(v2, v1);
  Rational den = d00 * d11 - d01 * d01;
  Rational v = (d11 * d20 - d01 * d21) / den;
  Rational w = (d00 * d21 - d01 * d20) / den;
  return v >= 0 && w >= 0 && v + w <= 1;
}

inline bool generic_triangles_meet(const Triangle3& t1, const Triangle3& t2) {
  auto pierces = [](const Triangle3& a, const Triangle3& b) {
    for (int k = 0; k < 3; ++k) {
      auto x = segment_plane_point(a[k], a[(k + 1) % 3], b);
      if (x && point_in_triangle(*x, b)) return true;
    }
    return false;
  };
  return pierces(t1, t2) || pierces(t2, t1);
}

// ---------------------------------------------------------------------------

inline std::optional<std::vector<bool>> enumerate_2sat(std::size_t n, const std::vector<Clause2>& clauses) {
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<bool> a(n);
    for (std::size_t v = 0; v < n; ++v) a[v] = (mask >> v) & 1;
    bool ok = true;
    for (const auto& c : clauses) {
      if (a[c.a.var] != c.a.positive && a[c.b.var] != c.b.positive) {
        ok = false;
        break;
      }
    }
    if (ok) return a;
  }
  return std::nullopt;
}

}  // namespace testing
