#pragma once

// Seeded random polygons and instances for tests and the generate command.

#include "banded/morph.hpp"
#include "banded/surface.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace banded::gen {

using banded::Point2;
using banded::Rational;
using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
inline double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// Snap a double to the grid of spacing 1/den.
inline Rational snap(double v, long den = 256) { return banded::ratio(std::lround(v * static_cast<double>(den)), den); }

inline Point2 snap_point(double x, double y, long den = 256) { return {snap(x, den), snap(y, den)}; }

inline bool usable(const std::vector<Point2>& p) {
  return !banded::polygon_defect(banded::LabeledPolygon{p, 0}).has_value();
}

inline std::vector<Point2> ccw(std::vector<Point2> p) {
  if (banded::polygon_is_simple(std::span<const Point2>(p)) && !banded::polygon_is_ccw(p)) std::reverse(p.begin(), p.end());
  return p;
}

// Unit vector from a random rational half-angle tangent.
inline std::pair<Rational, Rational> random_rotation(Rng& rng, double lo_angle, double hi_angle) {
  double a = uniform_real(rng, lo_angle, hi_angle);
  Rational s = snap(std::tan(a / 2), 512);
  return banded::rational_rotation(s);
}

// Strictly convex: rational points on a circle at distinct sorted angles.
inline std::vector<Point2> convex_polygon(Rng& rng, std::size_t n) {
  for (;;) {
    std::vector<double> angles;
    for (std::size_t i = 0; i < n; ++i) angles.push_back(uniform_real(rng, -3.1, 3.1));
    std::sort(angles.begin(), angles.end());
    Rational r(uniform_int(rng, 2, 6));
    Point2 c = snap_point(uniform_real(rng, -2, 2), uniform_real(rng, -2, 2), 8);
    std::vector<Point2> p;
    for (double a : angles) {
      auto [cs, sn] = banded::rational_rotation(snap(std::tan(a / 2), 512));
      p.push_back({c.x + r * cs, c.y + r * sn});
    }
    if (usable(p) && banded::polygon_is_convex(p) && banded::polygon_corners(p).size() == n) return p;
  }
}

// Star-shaped about a centre: sorted angles, random radii.
inline std::vector<Point2> star_polygon(Rng& rng, std::size_t n) {
  for (;;) {
    std::vector<double> angles;
    for (std::size_t i = 0; i < n; ++i) angles.push_back(uniform_real(rng, 0, 2 * std::numbers::pi));
    std::sort(angles.begin(), angles.end());
    std::vector<Point2> p;
    for (double a : angles) {
      double r = uniform_real(rng, 0.6, 3.0);
      p.push_back(snap_point(r * std::cos(a), r * std::sin(a)));
    }
    p = ccw(p);
    if (usable(p)) return p;
  }
}

// Thick spiral arm: an outer chain winding out and an inner chain winding back.
inline std::vector<Point2> spiral_polygon(Rng& rng, std::size_t n) {
  if (n < 6) return star_polygon(rng, n);
  for (;;) {
    std::size_t outer = n / 2 + n % 2;
    std::size_t inner = n - outer;
    double turns = uniform_real(rng, 0.9, 1.6);
    double span = std::min(turns * 2 * std::numbers::pi, 1.4 * static_cast<double>(inner - 1));
    double growth = uniform_real(rng, 1.2, 2.0);
    double width = uniform_real(rng, 0.25, 0.45) * growth;
    auto radius = [&](double t) { return 1.0 + growth * t / (2 * std::numbers::pi); };
    std::vector<Point2> p;
    for (std::size_t k = 0; k < outer; ++k) {
      double t = span * static_cast<double>(k) / static_cast<double>(outer - 1);
      double r = radius(t) + width;
      p.push_back(snap_point(r * std::cos(t), r * std::sin(t)));
    }
    for (std::size_t k = 0; k < inner; ++k) {
      double t = span * (1.0 - static_cast<double>(k) / static_cast<double>(std::max<std::size_t>(inner - 1, 1)));
      double r = radius(t);
      p.push_back(snap_point(r * std::cos(t), r * std::sin(t)));
    }
    p = ccw(p);
    if (usable(p)) return p;
  }
}

// Random points untangled by 2-opt moves into a simple polygon.
inline std::vector<Point2> two_opt_polygon(Rng& rng, std::size_t n) {
  for (;;) {
    std::vector<Point2> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(snap_point(uniform_real(rng, -3, 3), uniform_real(rng, -3, 3), 16));
    for (int round = 0; round < 200; ++round) {
      bool changed = false;
      for (std::size_t i = 0; i < n && !changed; ++i) {
        for (std::size_t j = i + 2; j < n && !changed; ++j) {
          if (i == 0 && j == n - 1) continue;
          if (banded::segments_intersect_2d(p[i], p[i + 1], p[j], p[(j + 1) % n], banded::SegmentMode::Proper)) {
            std::reverse(p.begin() + static_cast<long>(i) + 1, p.begin() + static_cast<long>(j) + 1);
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    p = ccw(p);
    if (usable(p)) return p;
  }
}

enum class Shape { Convex, Star, Spiral, TwoOpt };

inline std::vector<Point2> polygon(Rng& rng, Shape s, std::size_t n) {
  switch (s) {
    case Shape::Convex: return convex_polygon(rng, n);
    case Shape::Star: return star_polygon(rng, n);
    case Shape::Spiral: return spiral_polygon(rng, n);
    case Shape::TwoOpt: return two_opt_polygon(rng, n);
  }
  return {};
}

inline std::vector<Point2> rotated(const std::vector<Point2>& p, const Point2& c, const Rational& cs, const Rational& sn) {
  std::vector<Point2> out;
  for (const Point2& v : p) {
    Point2 r = v - c;
    out.push_back({c.x + cs * r.x - sn * r.y, c.y + sn * r.x + cs * r.y});
  }
  return out;
}

inline std::vector<Point2> translated(const std::vector<Point2>& p, const Point2& d) {
  std::vector<Point2> out;
  for (const Point2& v : p) out.push_back(v + d);
  return out;
}

inline std::vector<Point2> scaled(const std::vector<Point2>& p, const Point2& c, const Rational& k) {
  std::vector<Point2> out;
  for (const Point2& v : p) out.push_back(c + k * Point2(v - c));
  return out;
}

// Source from one of the shape families; target either an independent polygon
// of the same family, a rotated and shifted copy, or a jittered copy.
inline banded::SliceInstance mixed_instance(Rng& rng, std::size_t n) {
  static const Shape shapes[] = {Shape::Convex, Shape::Star, Shape::Spiral};
  Shape s = shapes[uniform_int(rng, 0, 2)];
  for (;;) {
    auto src = polygon(rng, s, n);
    std::vector<Point2> dst;
    switch (uniform_int(rng, 0, 2)) {
      case 0: dst = polygon(rng, s, n); break;
      case 1: {
        auto [cs, sn] = random_rotation(rng, -3.0, 3.0);
        dst = translated(rotated(src, {0, 0}, cs, sn), snap_point(uniform_real(rng, -1, 1), uniform_real(rng, -1, 1), 8));
        break;
      }
      default: {
        for (const Point2& v : src) dst.push_back(v + snap_point(uniform_real(rng, -0.3, 0.3), uniform_real(rng, -0.3, 0.3), 64));
        break;
      }
    }
    if (usable(dst)) return banded::SliceInstance::make(src, dst);
  }
}

}  // namespace banded::gen
