#include "banded/steiner.hpp"

#include "banded/morph.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace banded {

namespace {

using Corners = std::vector<std::size_t>;

Corners corners_of(const LabeledPolygon& p) { return polygon_corners(p.span()); }

bool in_closed_triangle(const Point2& a, const Point2& b, const Point2& c, const Point2& v) {
  return orient2d(a, b, v) >= 0 && orient2d(b, c, v) >= 0 && orient2d(c, a, v) >= 0;
}

// Labels strictly inside the boundary run from label `from` to label `to`.
std::vector<std::size_t> run_between(std::size_t n, std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t k = (from + 1) % n; k != to; k = (k + 1) % n) out.push_back(k);
  return out;
}

// Position of v along the segment a -> b as a fraction.
Rational fraction_along(const Point2& a, const Point2& b, const Point2& v) {
  Vector2 d = b - a;
  return dot2(Vector2(v - a), d) / dot2(d, d);
}

Point2 lerp(const Point2& a, const Point2& b, const Rational& s) { return a + Rational(s) * Point2(b - a); }

bool ear_valid(const LabeledPolygon& poly, const Corners& cs, std::size_t j) {
  const std::size_t m = cs.size();
  const std::size_t ia = cs[(j + m - 1) % m], ib = cs[j], ic = cs[(j + 1) % m];
  const Point2 &a = poly[ia], &b = poly[ib], &c = poly[ic];
  if (orient2d(a, b, c) <= 0) return false;
  std::vector<bool> chain(poly.size(), false);
  for (std::size_t k = ia;; k = (k + 1) % poly.size()) {
    chain[k] = true;
    if (k == ic) break;
  }
  for (std::size_t v = 0; v < poly.size(); ++v) {
    if (!chain[v] && in_closed_triangle(a, b, c, poly[v])) return false;
  }
  return true;
}

// Tips given as ordinals into cs.
LabeledPolygon collapse_ordinals(const LabeledPolygon& poly, const Corners& cs, const std::vector<std::size_t>& tips) {
  const std::size_t m = cs.size();
  const std::size_t n = poly.size();
  LabeledPolygon out = poly;
  for (std::size_t j : tips) {
    const std::size_t ia = cs[(j + m - 1) % m], ib = cs[j], ic = cs[(j + 1) % m];
    const Point2 &a = poly[ia], &b = poly[ib], &c = poly[ic];
    const Point2 mid = Rational(1, 2) * Point2(a + c);
    for (std::size_t k : run_between(n, ia, ib)) out.vertices[k] = lerp(a, mid, fraction_along(a, b, poly[k]));
    for (std::size_t k : run_between(n, ib, ic)) out.vertices[k] = lerp(c, mid, fraction_along(c, b, poly[k]));
    out.vertices[ib] = mid;
  }
  return out;
}

std::size_t ordinal_of(const Corners& cs, std::size_t label) {
  auto it = std::find(cs.begin(), cs.end(), label);
  if (it == cs.end()) throw std::invalid_argument("label " + std::to_string(label) + " is not a corner");
  return static_cast<std::size_t>(it - cs.begin());
}

bool acceptable_layer(const LabeledPolygon& p) {
  if (!polygon_is_simple(p.span())) return false;
  return !polygon_defect(p).has_value() && corners_of(p).size() >= 3;
}

// A gap between consecutive layers: the polygons in bottom-to-top order.
struct Route {
  std::vector<Layer> layers;
  std::vector<ChordAssignment> gaps;
};

// One collapse layer above (or below) `cur`. `upward` decides which polygon
// is the lower one for the join certificate.
std::pair<Layer, ChordAssignment> collapse_step(const LabeledPolygon& cur, bool upward,
                                                const std::set<std::size_t>& protect) {
  const Corners cs = corners_of(cur);
  const std::size_t m = cs.size();
  std::vector<std::size_t> ears;
  for (std::size_t j = 0; j < m; ++j) {
    if (ear_valid(cur, cs, j)) ears.push_back(j);
  }
  if (ears.empty()) throw std::logic_error("collapse_step: simple polygon without an ear");
  std::stable_partition(ears.begin(), ears.end(), [&](std::size_t j) { return !protect.count(cs[j]); });

  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::size_t> multi;
  std::vector<bool> blocked(m, false);
  for (std::size_t j : ears) {
    if (m - multi.size() <= 3) break;
    if (blocked[j]) continue;
    multi.push_back(j);
    blocked[j] = blocked[(j + 1) % m] = blocked[(j + m - 1) % m] = true;
  }
  if (multi.size() > 1) candidates.push_back(multi);
  for (std::size_t j : ears) candidates.push_back({j});

  for (const auto& tips : candidates) {
    LabeledPolygon next = collapse_ordinals(cur, cs, tips);
    if (!acceptable_layer(next)) continue;
    auto join = upward ? joinable(cur, next) : joinable(next, cur);
    if (!join) continue;
    Layer layer{std::move(next), {}, "ear"};
    for (std::size_t j : tips) layer.moved.push_back(cs[j]);
    return {std::move(layer), std::move(*join)};
  }
  throw std::logic_error("collapse_step: no ear collapse admits a Steiner-free join");
}

// ---------------------------------------------------------------------------
// Triangle join helpers.

struct Mat2 {
  Rational a, b, c, d;  // [a b; c d]

  Rational det() const { return a * d - b * c; }
  Rational trace() const { return a + d; }
  Point2 apply(const Point2& p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
  Mat2 transpose() const { return {a, c, b, d}; }
  Mat2 inverse() const {
    Rational k = det();
    return {d / k, -b / k, -c / k, a / k};
  }
  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 blend(const Mat2& l, const Mat2& r, const Rational& s) {
    Rational u = 1 - s;
    return {u * l.a + s * r.a, u * l.b + s * r.b, u * l.c + s * r.c, u * l.d + s * r.d};
  }
};

// No eigenvalue on (-inf, 0]: (1 - s) I + s M stays invertible for s in [0, 1].
bool smooth_path(const Mat2& m) {
  Rational det = m.det(), tr = m.trace();
  if (sgn(det) <= 0) return false;
  return !(sgn(tr) < 0 && tr * tr >= 4 * det);
}

Point2 corner_centroid(const LabeledPolygon& p, const Corners& cs) {
  Point2 acc{0, 0};
  for (std::size_t k : cs) acc = acc + p[k];
  return Rational(1, static_cast<long>(cs.size())) * acc;
}

// Linear part of the affine map taking the corners of `from` to those of `to`
// (same corner labels).
Mat2 corner_map(const LabeledPolygon& from, const LabeledPolygon& to, const Corners& cs) {
  Vector2 a1 = from[cs[1]] - from[cs[0]], a2 = from[cs[2]] - from[cs[0]];
  Vector2 b1 = to[cs[1]] - to[cs[0]], b2 = to[cs[2]] - to[cs[0]];
  Mat2 A{a1.x, a2.x, a1.y, a2.y};
  Mat2 B{b1.x, b2.x, b1.y, b2.y};
  return B * A.inverse();
}

LabeledPolygon transformed(const LabeledPolygon& p, const Mat2& m, const Point2& center, const Point2& to_center) {
  LabeledPolygon out = p;
  for (auto& v : out.vertices) v = m.apply(v - center) + to_center;
  return out;
}

// Moves the collinear vertices of `cur` along its sides to the fractions they
// have in `target`. Both share corner labels.
LabeledPolygon slide_to(const LabeledPolygon& cur, const LabeledPolygon& target, const Corners& cs) {
  LabeledPolygon out = cur;
  const std::size_t m = cs.size();
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t u = cs[j], v = cs[(j + 1) % m];
    for (std::size_t k : run_between(cur.size(), u, v)) {
      out.vertices[k] = lerp(cur[u], cur[v], fraction_along(target[u], target[v], target[k]));
    }
  }
  return out;
}

// Pushes label x, collinear on a side of the triangle `cur`, out to a new
// corner and carries the vertices of that side along. Returns a convex
// quadrilateral-shaped polygon.
LabeledPolygon pop_vertex(const LabeledPolygon& cur, const Corners& cs, std::size_t x) {
  const std::size_t n = cur.size();
  const std::size_t m = cs.size();
  std::size_t u = 0, v = 0;
  for (std::size_t j = 0; j < m; ++j) {
    auto run = run_between(n, cs[j], cs[(j + 1) % m]);
    if (std::find(run.begin(), run.end(), x) != run.end()) {
      u = cs[j];
      v = cs[(j + 1) % m];
    }
  }
  Vector2 d = cur[v] - cur[u];
  Vector2 outward{d.y, -d.x};
  Rational h(1, 4);
  for (int attempt = 0; attempt < 64; ++attempt, h /= 2) {
    Point2 apex = cur[x] + Rational(h) * outward;
    LabeledPolygon out = cur;
    for (std::size_t k : run_between(n, u, x)) out.vertices[k] = lerp(cur[u], apex, fraction_along(cur[u], cur[x], cur[k]));
    for (std::size_t k : run_between(n, x, v)) out.vertices[k] = lerp(cur[v], apex, fraction_along(cur[v], cur[x], cur[k]));
    out.vertices[x] = apex;
    if (acceptable_layer(out) && polygon_is_convex(out.span()) && corners_of(out).size() == m + 1) return out;
  }
  throw std::logic_error("pop_vertex: no admissible pop height");
}

// Layers strictly between `from` and `to` (same corner labels, three corners)
// along an exact affine path split into `steps` pieces, each a rational
// rotation times a partial shear/scale. Intermediate polygons keep the side
// fractions of `from`; `to` may differ in them.
std::optional<Route> affine_route(const LabeledPolygon& from, const LabeledPolygon& to, const Corners& cs,
                                  std::size_t steps) {
  Mat2 L = corner_map(from, to, cs);
  double phi = std::atan2(Rational(L.c - L.b).get_d(), Rational(L.a + L.d).get_d());
  Rational s = ratio(static_cast<long>(std::llround(std::tan(phi / (2.0 * static_cast<double>(steps))) * 65536.0)), 65536L);
  auto [cs_, sn] = rational_rotation(s);
  Mat2 rho{cs_, -sn, sn, cs_};
  Mat2 rho_m = Mat2::identity();
  for (std::size_t k = 0; k < steps; ++k) rho_m = rho_m * rho;
  Mat2 G = rho_m.transpose() * L;
  if (!smooth_path(G)) return std::nullopt;

  const Point2 c_from = corner_centroid(from, cs);
  const Point2 c_to = corner_centroid(to, cs);
  Route route;
  LabeledPolygon prev = from;
  Mat2 rho_j = Mat2::identity();
  for (std::size_t j = 1; j < steps; ++j) {
    rho_j = rho_j * rho;
    Rational frac = ratio(static_cast<long>(j), static_cast<long>(steps));
    Mat2 M = rho_j * Mat2::blend(Mat2::identity(), G, frac);
    LabeledPolygon next = transformed(from, M, c_from, lerp(c_from, c_to, frac));
    if (!acceptable_layer(next)) return std::nullopt;
    auto join = joinable(prev, next);
    if (!join) return std::nullopt;
    route.gaps.push_back(std::move(*join));
    route.layers.push_back({next, {}, "affine"});
    prev = std::move(next);
  }
  auto join = joinable(prev, to);
  if (!join) return std::nullopt;
  route.gaps.push_back(std::move(*join));
  return route;
}

Route join_triangle_route(const LabeledPolygon& t_low, const LabeledPolygon& t_high) {
  Corners low = corners_of(t_low), high = corners_of(t_high);
  if (low.size() != 3 || high.size() != 3) throw std::invalid_argument("join_triangles: both layers need exactly three corners");
  Route route;
  if (auto direct = joinable(t_low, t_high)) {
    route.gaps.push_back(std::move(*direct));
    return route;
  }

  // Match corner labels.
  LabeledPolygon cur = t_low;
  Corners cs = low;
  auto push = [&](LabeledPolygon next, ChordAssignment gap, std::vector<std::size_t> moved, std::string step) {
    route.gaps.push_back(std::move(gap));
    route.layers.push_back({next, std::move(moved), std::move(step)});
    cur = std::move(next);
    cs = corners_of(cur);
  };
  for (;;) {
    std::set<std::size_t> have(cs.begin(), cs.end());
    std::optional<std::size_t> x, y;
    for (std::size_t k : high) {
      if (!have.count(k)) { x = k; break; }
    }
    if (!x) break;
    for (std::size_t k : cs) {
      if (std::find(high.begin(), high.end(), k) == high.end()) { y = k; break; }
    }
    LabeledPolygon quad = pop_vertex(cur, cs, *x);
    Corners qcs = corners_of(quad);
    LabeledPolygon tri = collapse_ordinals(quad, qcs, {ordinal_of(qcs, *y)});
    if (!acceptable_layer(tri) || corners_of(tri).size() != 3) throw std::logic_error("join_triangles: corner move failed");
    if (auto direct = joinable(cur, tri)) {
      push(std::move(tri), std::move(*direct), {*x, *y}, "corner-move");
      continue;
    }
    auto up = joinable(cur, quad);
    auto down = joinable(quad, tri);
    if (!up || !down) throw std::logic_error("join_triangles: corner move has no Steiner-free join");
    push(std::move(quad), std::move(*up), {*x}, "pop");
    push(std::move(tri), std::move(*down), {*y}, "ear");
  }

  if (!route.layers.empty()) {
    if (auto direct = joinable(cur, t_high)) {
      route.gaps.push_back(std::move(*direct));
      return route;
    }
  }

  auto append = [&](Route tail) {
    for (auto& l : tail.layers) route.layers.push_back(std::move(l));
    for (auto& g : tail.gaps) route.gaps.push_back(std::move(g));
  };
  for (std::size_t steps = 2; steps <= 8; ++steps) {
    if (auto r = affine_route(cur, t_high, cs, steps)) {
      append(std::move(*r));
      return route;
    }
  }
  LabeledPolygon slid = slide_to(cur, t_high, cs);
  if (!(slid.vertices == cur.vertices)) {
    auto gap = joinable(cur, slid);
    if (!gap) throw std::logic_error("join_triangles: slide layer has no Steiner-free join");
    push(std::move(slid), std::move(*gap), {}, "slide");
  }
  for (std::size_t steps = 1; steps <= 32; ++steps) {
    if (auto r = affine_route(cur, t_high, cs, steps)) {
      append(std::move(*r));
      return route;
    }
  }
  throw std::logic_error("join_triangles: no affine route found");
}

}  // namespace

std::vector<std::size_t> ear_tips(const LabeledPolygon& poly) {
  Corners cs = corners_of(poly);
  std::vector<std::size_t> out;
  if (cs.size() < 4) return out;
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (ear_valid(poly, cs, j)) out.push_back(cs[j]);
  }
  return out;
}

EarCollapse collapse_ear(const LabeledPolygon& poly) {
  Corners cs = corners_of(poly);
  if (cs.size() < 4) throw AlreadyTriangle("collapse_ear: polygon is already a triangle");
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (!ear_valid(poly, cs, j)) continue;
    LabeledPolygon out = collapse_ordinals(poly, cs, {j});
    if (!polygon_is_simple(out.span())) throw std::logic_error("collapse_ear: collapse of a valid ear is not simple");
    return {std::move(out), cs[j]};
  }
  throw std::logic_error("collapse_ear: no valid ear in a polygon with four or more corners");
}

LabeledPolygon collapse_ears(const LabeledPolygon& poly, const std::vector<std::size_t>& tips) {
  Corners cs = corners_of(poly);
  std::vector<std::size_t> ordinals;
  for (std::size_t t : tips) {
    std::size_t j = ordinal_of(cs, t);
    if (!ear_valid(poly, cs, j)) throw std::invalid_argument("collapse_ears: " + std::to_string(t) + " is not an ear tip");
    ordinals.push_back(j);
  }
  const std::size_t m = cs.size();
  if (m < ordinals.size() + 3) throw std::invalid_argument("collapse_ears: too many tips");
  for (std::size_t a : ordinals) {
    for (std::size_t b : ordinals) {
      if (a != b && ((a + 1) % m == b || (b + 1) % m == a)) throw std::invalid_argument("collapse_ears: neighbouring tips");
    }
  }
  return collapse_ordinals(poly, cs, ordinals);
}

std::optional<ChordAssignment> joinable(const LabeledPolygon& lower, const LabeledPolygon& upper) {
  return find_assignment(SliceInstance::make(lower.vertices, upper.vertices));
}

ChordAssignment join_consecutive_layers(const LabeledPolygon& lower, const LabeledPolygon& upper) {
  if (!(lower.z_level < upper.z_level)) throw std::invalid_argument("join_consecutive_layers: lower layer must lie strictly below");
  auto a = joinable(lower, upper);
  if (!a) throw std::logic_error("join_consecutive_layers: no Steiner-free join between the layers");
  return *a;
}

std::vector<Layer> join_triangles(const LabeledPolygon& t_low, const LabeledPolygon& t_high) {
  return join_triangle_route(t_low, t_high).layers;
}

LayerStack build_layer_stack(const SliceInstance& inst) {
  LayerStack stack;
  std::vector<ChordAssignment> bottom_gaps;
  LabeledPolygon cur = inst.source;
  while (corners_of(cur).size() > 3) {
    auto [layer, gap] = collapse_step(cur, true, {});
    cur = layer.polygon;
    stack.layers.push_back(std::move(layer));
    bottom_gaps.push_back(std::move(gap));
  }
  stack.bottom = stack.layers.size();
  const LabeledPolygon t_low = cur;

  Corners keep = corners_of(t_low);
  std::set<std::size_t> protect(keep.begin(), keep.end());
  std::vector<Layer> top;
  std::vector<ChordAssignment> top_gaps;  // top_gaps[k] joins top[k] (below) to the layer above it
  cur = inst.target;
  while (corners_of(cur).size() > 3) {
    auto [layer, gap] = collapse_step(cur, false, protect);
    cur = layer.polygon;
    top.push_back(std::move(layer));
    top_gaps.push_back(std::move(gap));
  }
  const LabeledPolygon t_high = cur;

  Route mid = join_triangle_route(t_low, t_high);
  stack.middle = mid.layers.size();
  for (auto& l : mid.layers) stack.layers.push_back(std::move(l));
  stack.top = top.size();
  for (auto it = top.rbegin(); it != top.rend(); ++it) stack.layers.push_back(std::move(*it));

  stack.gaps = std::move(bottom_gaps);
  for (auto& g : mid.gaps) stack.gaps.push_back(std::move(g));
  for (auto it = top_gaps.rbegin(); it != top_gaps.rend(); ++it) stack.gaps.push_back(std::move(*it));

  const long total = static_cast<long>(stack.layers.size()) + 1;
  for (std::size_t k = 0; k < stack.layers.size(); ++k) stack.layers[k].polygon.z_level = ratio(static_cast<long>(k) + 1, total);
  return stack;
}

BandedSurface stack_to_surface(const SliceInstance& inst, const LayerStack& stack) {
  const std::size_t n = inst.n();
  const std::size_t levels = stack.layers.size() + 2;
  if (stack.gaps.size() != levels - 1) throw std::invalid_argument("stack_to_surface: gap count does not match layers");
  const long denom = static_cast<long>(levels) - 1;

  BandedSurface s;
  s.paths.assign(n, {});
  std::size_t steiner_id = 0;
  for (std::size_t k = 0; k < levels; ++k) {
    const LabeledPolygon& poly = k == 0 ? inst.source : (k + 1 == levels ? inst.target : stack.layers[k - 1].polygon);
    if (poly.size() != n) throw std::invalid_argument("stack_to_surface: layer with wrong vertex count");
    Rational z = ratio(static_cast<long>(k), static_cast<long>(denom));
    for (std::size_t i = 0; i < n; ++i) {
      VertexLabel label;
      if (k == 0 || k + 1 == levels) {
        label = {VertexLabel::Kind::Original, k == 0 ? 0 : 1, i};
      } else {
        label = {VertexLabel::Kind::Steiner, 0, steiner_id++};
      }
      s.paths[i].push_back(s.vertices.size());
      s.vertices.push_back({lift(poly[i], z), label});
    }
  }
  s.bands.assign(n, {});
  for (std::size_t k = 0; k + 1 < levels; ++k) {
    const auto& gap = stack.gaps[k];
    if (gap.size() != n) throw std::invalid_argument("stack_to_surface: gap assignment with wrong size");
    for (std::size_t i = 0; i < n; ++i) {
      for (Face f : band_faces(n, i, gap.choices[i])) {
        for (auto& v : f) v = v < n ? k * n + v : (k + 1) * n + (v - n);
        s.bands[i].push_back(s.faces.size());
        s.faces.push_back(f);
      }
    }
  }
  return s;
}

std::size_t steiner_bound(std::size_t n) { return 2 * n * (n - 3) + 12; }

namespace {

// Drops layers while the Steiner count is over the bound, greedily joining
// each kept layer to the farthest one it admits a direct join with.
void shortcut(const SliceInstance& inst, LayerStack& stack) {
  std::vector<const LabeledPolygon*> polys{&inst.source};
  for (const auto& l : stack.layers) polys.push_back(&l.polygon);
  polys.push_back(&inst.target);

  LayerStack out;
  std::size_t i = 0;
  while (i + 1 < polys.size()) {
    std::size_t next = i + 1;
    ChordAssignment gap = stack.gaps[i];
    for (std::size_t j = polys.size() - 1; j > i + 1; --j) {
      if (auto a = joinable(*polys[i], *polys[j])) {
        next = j;
        gap = std::move(*a);
        break;
      }
    }
    out.gaps.push_back(std::move(gap));
    if (next + 1 < polys.size()) out.layers.push_back(stack.layers[next - 1]);
    i = next;
  }
  const long total = static_cast<long>(out.layers.size()) + 1;
  for (std::size_t k = 0; k < out.layers.size(); ++k) out.layers[k].polygon.z_level = ratio(static_cast<long>(k) + 1, total);
  out.middle = out.layers.size();
  stack = std::move(out);
}

}  // namespace

SteinerBuild build_layered(const SliceInstance& inst, const VerifyOptions& opts) {
  SteinerBuild out;
  auto direct = solve_no_steiner(inst, opts);
  if (direct.sat()) {
    out.surface = std::move(*direct.surface);
    out.direct = true;
    return out;
  }
  out.stack = build_layer_stack(inst);
  if (out.stack.layers.size() * inst.n() > steiner_bound(inst.n())) shortcut(inst, out.stack);
  out.surface = stack_to_surface(inst, out.stack);
  auto report = verify_banded_surface(out.surface, opts);
  if (!report.passed()) throw std::logic_error("build_layered: layered surface fails verification:\n" + report.summary());
  return out;
}

BandedSurface build_layered_surface(const SliceInstance& inst, const VerifyOptions& opts) {
  return build_layered(inst, opts).surface;
}

}  // namespace banded
