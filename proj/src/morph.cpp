#include "banded/morph.hpp"

#include "banded/chord_solver.hpp"

#include <sstream>

namespace banded {

MorphSnapshot morph_position(const SliceInstance& inst, const Rational& t) {
  if (t < 0 || t > 1) throw std::invalid_argument("morph_position: t must lie in [0, 1]");
  MorphSnapshot snap{t, {{}, t}};
  snap.polygon.vertices.reserve(inst.n());
  const Rational s = 1 - t;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    const Point2& p = inst.source[i];
    const Point2& q = inst.target[i];
    snap.polygon.vertices.push_back({s * p.x + t * q.x, s * p.y + t * q.y});
  }
  return snap;
}

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::EdgeCrossing: return "edge crossing";
    case ViolationKind::CollapsedAngle: return "collapsed angle";
    case ViolationKind::ZeroLengthEdge: return "zero-length edge";
  }
  return "?";
}

std::string PlanarityVerdict::describe() const {
  if (preserved) return "preserved";
  std::ostringstream out;
  out << "violated: " << to_string(kind) << " between edges " << edge_a << " and " << edge_b;
  if (instantaneous) {
    out << " at t = " << start.to_string();
  } else {
    out << " for t in [" << start.to_string() << ", " << end.to_string() << "]";
  }
  out << " (bracket [" << lo.get_d() << ", " << hi.get_d() << "])";
  return out.str();
}

namespace {

using QPoint = BasicPoint2<QuadNumber>;

// Vertex position base + t * velocity.
struct Moving {
  Point2 base;
  Vector2 velocity;
};

std::vector<Moving> moving_vertices(const SliceInstance& inst) {
  std::vector<Moving> out;
  for (std::size_t i = 0; i < inst.n(); ++i) out.push_back({inst.source[i], inst.target[i] - inst.source[i]});
  return out;
}

// (u0 + t u1) x (w0 + t w1) or the dot product, as a polynomial in t.
Quadratic product(const Moving& u, const Moving& w, bool use_cross) {
  auto op = [&](const Vector2& l, const Vector2& r) { return use_cross ? cross2(l, r) : dot2(l, r); };
  return {op(u.base, w.base), Rational(op(u.base, w.velocity) + op(u.velocity, w.base)), op(u.velocity, w.velocity)};
}

Moving diff(const Moving& a, const Moving& b) { return {a.base - b.base, a.velocity - b.velocity}; }

Quadratic orient_poly(const Moving& a, const Moving& b, const Moving& c) { return product(diff(b, a), diff(c, a), true); }

Quadratic dot_poly(const Moving& a, const Moving& b, const Moving& c, const Moving& d) {
  return product(diff(b, a), diff(d, c), false);
}

std::vector<Quadratic> critical_polynomials(const std::vector<Moving>& m) {
  const std::size_t n = m.size();
  std::vector<Quadratic> polys;
  auto at = [&](std::size_t i) -> const Moving& { return m[i % n]; };
  for (std::size_t i = 0; i < n; ++i) {
    Moving e = diff(at(i + 1), at(i));
    polys.push_back({e.base.x, e.velocity.x, 0});
    polys.push_back({e.base.y, e.velocity.y, 0});
    const Moving& prev = at(i + n - 1);
    polys.push_back(orient_poly(prev, at(i), at(i + 1)));
    polys.push_back(dot_poly(prev, at(i), at(i), at(i + 1)));
  }
  Quadratic area;
  for (std::size_t i = 0; i < n; ++i) {
    Quadratic term = product(at(i), at(i + 1), true);
    area = {area.c0 + term.c0, area.c1 + term.c1, area.c2 + term.c2};
  }
  polys.push_back(area);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 2; l < n; ++l) {
      if (k == 0 && l == n - 1) continue;
      const Moving &a = at(k), &b = at(k + 1), &c = at(l), &d = at(l + 1);
      polys.push_back(orient_poly(a, b, c));
      polys.push_back(orient_poly(a, b, d));
      polys.push_back(orient_poly(c, d, a));
      polys.push_back(orient_poly(c, d, b));
      polys.push_back(dot_poly(c, a, c, b));
      polys.push_back(dot_poly(d, a, d, b));
      polys.push_back(dot_poly(a, c, a, d));
      polys.push_back(dot_poly(b, c, b, d));
    }
  }
  return polys;
}

std::vector<QPoint> positions(const std::vector<Moving>& m, const QuadNumber& t) {
  std::vector<QPoint> out;
  out.reserve(m.size());
  for (const Moving& v : m) {
    out.push_back({QuadNumber(v.base.x) + QuadNumber(v.velocity.x) * t, QuadNumber(v.base.y) + QuadNumber(v.velocity.y) * t});
  }
  return out;
}

struct Clash {
  ViolationKind kind;
  std::size_t a;
  std::size_t b;
};

std::optional<Clash> first_clash(const std::vector<QPoint>& poly) {
  const std::size_t n = poly.size();
  std::span<const QPoint> view(poly);
  for (std::size_t i = 0; i < n; ++i) {
    if (poly[i] == poly[(i + 1) % n]) return Clash{ViolationKind::ZeroLengthEdge, i, i};
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t prev = (i + n - 1) % n;
    if (polygon_edges_clash(view, prev, i)) return Clash{ViolationKind::CollapsedAngle, prev, i};
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 2; l < n; ++l) {
      if (k == 0 && l == n - 1) continue;
      if (polygon_edges_clash(view, k, l)) return Clash{ViolationKind::EdgeCrossing, k, l};
    }
  }
  return std::nullopt;
}

// Non-simple, or simple but turned clockwise.
bool bad_at(const std::vector<Moving>& m, const QuadNumber& t) {
  auto pts = positions(m, t);
  if (first_clash(pts)) return true;
  return sign(signed_area2(std::span<const QPoint>(pts))) <= 0;
}

}  // namespace

bool morph_is_simple_at(const SliceInstance& inst, const QuadNumber& t) {
  auto pts = positions(moving_vertices(inst), t);
  return polygon_is_simple(std::span<const QPoint>(pts));
}

PlanarityVerdict planarity_preserving(const SliceInstance& inst) {
  const auto moving = moving_vertices(inst);
  std::vector<QuadNumber> roots;
  for (const Quadratic& q : critical_polynomials(moving)) {
    if (q.is_zero()) continue;
    auto r = roots_in_unit_interval(q);
    roots.insert(roots.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  sort_unique(roots);

  // Alternating sequence: open interval, root, open interval, ..., open interval.
  struct Event {
    QuadNumber lo;
    QuadNumber hi;
    QuadNumber probe;
    bool instant;
  };
  std::vector<Event> events;
  QuadNumber prev(0);
  for (const QuadNumber& r : roots) {
    events.push_back({prev, r, QuadNumber(rational_between(prev, r)), false});
    events.push_back({r, r, r, true});
    prev = r;
  }
  events.push_back({prev, QuadNumber(1), QuadNumber(rational_between(prev, QuadNumber(1))), false});

  PlanarityVerdict verdict;
  std::size_t first = events.size();
  std::optional<Clash> clash;
  for (std::size_t e = 0; e < events.size(); ++e) {
    clash = first_clash(positions(moving, events[e].probe));
    if (clash) {
      first = e;
      break;
    }
  }
  if (first == events.size()) return verdict;

  std::size_t last = first;
  while (last + 1 < events.size() && bad_at(moving, events[last + 1].probe)) ++last;

  verdict.preserved = false;
  verdict.kind = clash->kind;
  verdict.edge_a = clash->a;
  verdict.edge_b = clash->b;
  verdict.start = events[first].lo;
  verdict.end = events[last].hi;
  verdict.instantaneous = first == last && events[first].instant;
  verdict.lo = rational_bound(verdict.start, true);
  verdict.hi = rational_bound(verdict.end, false);
  return verdict;
}

ChordAssignment convex_chord_rule(const SliceInstance& inst) {
  if (!polygon_is_convex(inst.source.span())) throw PreconditionError("convex_chord_rule: source polygon is not convex");
  if (!polygon_is_convex(inst.target.span())) throw PreconditionError("convex_chord_rule: target polygon is not convex");
  auto planar = planarity_preserving(inst);
  if (!planar.preserved) throw PreconditionError("convex_chord_rule: morph does not preserve planarity (" + planar.describe() + ")");

  ChordAssignment a;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    Vector2 v0 = inst.source.at(i + 1) - inst.source.at(i);
    Vector2 v1 = inst.target.at(i + 1) - inst.target.at(i);
    a.choices.push_back(ccw_angle(v0, v1).cls == AngleClass::LessPi ? Chord::Left : Chord::Right);
  }
  auto report = verify_banded_surface(assignment_to_surface(inst, a));
  if (!report.passed()) {
    throw std::logic_error("convex_chord_rule produced an invalid surface for " + a.to_string() + ":\n" + report.summary());
  }
  return a;
}

SliceInstance rotate_copy_instance(const LabeledPolygon& source, const Point2& center, const Rational& cos_a,
                                   const Rational& sin_a) {
  if (cos_a * cos_a + sin_a * sin_a != 1) throw std::invalid_argument("rotate_copy_instance: (cos, sin) is not a unit vector");
  std::vector<Point2> target;
  target.reserve(source.size());
  for (const Point2& p : source.vertices) {
    Vector2 r = p - center;
    target.push_back({center.x + cos_a * r.x - sin_a * r.y, center.y + sin_a * r.x + cos_a * r.y});
  }
  return SliceInstance::make(source.vertices, std::move(target));
}

std::pair<Rational, Rational> rational_rotation(const Rational& s) {
  Rational den = 1 + s * s;
  return {(1 - s * s) / den, 2 * s / den};
}

std::optional<Similarity> similarity_witness(const LabeledPolygon& a, const LabeledPolygon& b) {
  if (a.size() != b.size()) throw std::invalid_argument("similarity_witness: vertex counts differ");
  std::size_t k = 1;
  while (k < a.size() && a[k] == a[0]) ++k;
  if (k == a.size()) throw DegeneratePolygon("similarity_witness: all points equal");

  Vector2 da = a[k] - a[0];
  Vector2 db = b[k] - b[0];
  Rational norm = da.x * da.x + da.y * da.y;
  Similarity s;
  s.re = (db.x * da.x + db.y * da.y) / norm;
  s.im = (db.y * da.x - db.x * da.y) / norm;
  if (sgn(s.re) == 0 && sgn(s.im) == 0) return std::nullopt;
  auto apply = [&](const Point2& p) { return Point2{s.re * p.x - s.im * p.y, s.im * p.x + s.re * p.y}; };
  s.shift = b[0] - apply(a[0]);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(apply(a[i]) + s.shift == b[i])) return std::nullopt;
  }
  return s;
}

}  // namespace banded
