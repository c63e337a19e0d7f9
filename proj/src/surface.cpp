#include "banded/surface.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace banded {

std::optional<std::string> polygon_defect(const LabeledPolygon& poly) {
  if (poly.size() < 3) return "fewer than 3 vertices";
  std::vector<Point2> sorted = poly.vertices;
  std::sort(sorted.begin(), sorted.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "repeated vertex";
  if (!polygon_is_simple(poly.span())) return "not simple";
  if (!polygon_is_ccw(poly.span())) return "not counterclockwise";
  return std::nullopt;
}

SliceInstance SliceInstance::make(std::vector<Point2> source, std::vector<Point2> target) {
  if (source.size() != target.size()) {
    throw InvalidInstance("source has " + std::to_string(source.size()) + " vertices, target has " +
                          std::to_string(target.size()));
  }
  SliceInstance inst{{std::move(source), Rational(0)}, {std::move(target), Rational(1)}};
  if (auto d = polygon_defect(inst.source)) throw InvalidInstance("source polygon: " + *d);
  if (auto d = polygon_defect(inst.target)) throw InvalidInstance("target polygon: " + *d);
  return inst;
}

std::string ChordAssignment::to_string() const {
  std::string s;
  s.reserve(choices.size());
  for (Chord c : choices) s.push_back(c == Chord::Right ? 'R' : 'L');
  return s;
}

ChordAssignment ChordAssignment::parse(const std::string& rl) {
  ChordAssignment a;
  for (char ch : rl) {
    if (ch == 'R' || ch == 'r') {
      a.choices.push_back(Chord::Right);
    } else if (ch == 'L' || ch == 'l') {
      a.choices.push_back(Chord::Left);
    } else {
      throw std::invalid_argument("assignment must consist of R and L, got '" + rl + "'");
    }
  }
  return a;
}

Triangle3 BandedSurface::triangle(std::size_t f) const {
  const Face& face = faces[f];
  return {vertices[face[0]].position, vertices[face[1]].position, vertices[face[2]].position};
}

std::size_t BandedSurface::steiner_count() const {
  return static_cast<std::size_t>(std::count_if(vertices.begin(), vertices.end(), [](const SurfaceVertex& v) {
    return v.label.kind == VertexLabel::Kind::Steiner;
  }));
}

std::array<Face, 2> band_faces(std::size_t n, std::size_t i, Chord c) {
  const std::size_t p0 = i, p1 = (i + 1) % n, q0 = n + i, q1 = n + (i + 1) % n;
  if (c == Chord::Right) return {Face{p0, p1, q1}, Face{p0, q1, q0}};
  return {Face{p0, p1, q0}, Face{p1, q1, q0}};
}

BandedSurface assignment_to_surface(const SliceInstance& inst, const ChordAssignment& a) {
  const std::size_t n = inst.n();
  if (a.size() != n) {
    throw std::invalid_argument("assignment has " + std::to_string(a.size()) + " chords for " +
                                std::to_string(n) + " bands");
  }
  BandedSurface s;
  s.vertices.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    s.vertices.push_back({lift(inst.source[i], inst.source.z_level), {VertexLabel::Kind::Original, 0, i}});
  }
  for (std::size_t i = 0; i < n; ++i) {
    s.vertices.push_back({lift(inst.target[i], inst.target.z_level), {VertexLabel::Kind::Original, 1, i}});
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto f = band_faces(n, i, a.choices[i]);
    s.bands.push_back({s.faces.size(), s.faces.size() + 1});
    s.faces.push_back(f[0]);
    s.faces.push_back(f[1]);
    s.paths.push_back({i, n + i});
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

using EdgeKey = std::uint64_t;

EdgeKey edge_key(std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  return (static_cast<EdgeKey>(u) << 32) | static_cast<EdgeKey>(v);
}

std::pair<std::size_t, std::size_t> edge_ends(EdgeKey k) {
  return {static_cast<std::size_t>(k >> 32), static_cast<std::size_t>(k & 0xffffffffu)};
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::unordered_map<EdgeKey, std::vector<std::size_t>> edge_faces(const BandedSurface& s) {
  std::unordered_map<EdgeKey, std::vector<std::size_t>> out;
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    const Face& face = s.faces[f];
    for (std::size_t k = 0; k < 3; ++k) out[edge_key(face[k], face[(k + 1) % 3])].push_back(f);
  }
  return out;
}

std::vector<std::size_t> face_band_map(const BandedSurface& s) {
  std::vector<std::size_t> band(s.faces.size(), SIZE_MAX);
  for (std::size_t b = 0; b < s.bands.size(); ++b) {
    for (std::size_t f : s.bands[b]) {
      if (f < band.size()) band[f] = b;
    }
  }
  return band;
}

// Path index of each path edge.
std::unordered_map<EdgeKey, std::size_t> path_edges(const BandedSurface& s) {
  std::unordered_map<EdgeKey, std::size_t> out;
  for (std::size_t k = 0; k < s.paths.size(); ++k) {
    for (std::size_t j = 0; j + 1 < s.paths[k].size(); ++j) out[edge_key(s.paths[k][j], s.paths[k][j + 1])] = k;
  }
  return out;
}

}  // namespace

const char* to_string(SectionError e) {
  switch (e) {
    case SectionError::VertexOnLevel: return "vertex on section level";
    case SectionError::OpenChain: return "open chain";
    case SectionError::MultipleCycles: return "multiple cycles";
    case SectionError::NotSimple: return "not simple";
  }
  return "?";
}

SectionResult cross_section(const BandedSurface& s, const Rational& t) {
  SectionResult result;
  auto fail = [&](SectionError e, std::string detail) {
    result.error = e;
    result.detail = std::move(detail);
    return result;
  };

  for (std::size_t v = 0; v < s.vertices.size(); ++v) {
    if (s.vertices[v].position.z == t) return fail(SectionError::VertexOnLevel, "vertex " + std::to_string(v));
  }

  // Nodes are mesh edges crossing the level; links are faces.
  std::unordered_map<EdgeKey, std::size_t> node_of;
  std::vector<EdgeKey> node_edge;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> links;  // (other node, face)
  auto node = [&](std::size_t u, std::size_t v) {
    auto [it, inserted] = node_of.emplace(edge_key(u, v), node_edge.size());
    if (inserted) {
      node_edge.push_back(it->first);
      links.emplace_back();
    }
    return it->second;
  };
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    const Face& face = s.faces[f];
    std::vector<std::size_t> crossing;
    for (std::size_t k = 0; k < 3; ++k) {
      std::size_t u = face[k], v = face[(k + 1) % 3];
      if ((s.vertices[u].position.z < t) != (s.vertices[v].position.z < t)) crossing.push_back(node(u, v));
    }
    if (crossing.empty()) continue;
    links[crossing[0]].push_back({crossing[1], f});
    links[crossing[1]].push_back({crossing[0], f});
  }
  if (node_edge.empty()) return fail(SectionError::OpenChain, "surface does not reach the level");
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (links[i].size() != 2) {
      auto [u, v] = edge_ends(node_edge[i]);
      return fail(SectionError::OpenChain, "edge " + std::to_string(u) + "-" + std::to_string(v) + " meets " +
                                               std::to_string(links[i].size()) + " section pieces");
    }
  }

  const auto band_of = face_band_map(s);
  const auto on_path = path_edges(s);
  const bool structured = !s.paths.empty() && !s.bands.empty();

  std::size_t start = 0;
  std::size_t first_link = 0;
  if (structured) {
    for (std::size_t i = 0; i < node_edge.size(); ++i) {
      auto it = on_path.find(node_edge[i]);
      if (it != on_path.end() && it->second == 0) {
        start = i;
        break;
      }
    }
    if (band_of[links[start][0].second] != 0 && band_of[links[start][1].second] == 0) first_link = 1;
  }

  std::vector<std::size_t> order{start};
  std::vector<bool> seen(node_edge.size(), false);
  seen[start] = true;
  std::size_t prev = start, cur = links[start][first_link].first;
  while (cur != start) {
    if (seen[cur]) return fail(SectionError::OpenChain, "inconsistent chaining");
    seen[cur] = true;
    order.push_back(cur);
    std::size_t next = links[cur][0].first == prev ? links[cur][1].first : links[cur][0].first;
    if (links[cur][0].first == prev && links[cur][1].first == prev) next = prev;  // two-node loop
    prev = cur;
    cur = next;
  }
  if (order.size() != node_edge.size()) {
    return fail(SectionError::MultipleCycles, std::to_string(node_edge.size() - order.size()) +
                                                  " section vertices off the first cycle");
  }

  auto position = [&](std::size_t node_index) {
    auto [u, v] = edge_ends(node_edge[node_index]);
    const Point3& a = s.vertices[u].position;
    const Point3& b = s.vertices[v].position;
    Rational r = (t - a.z) / (b.z - a.z);
    return Point2{a.x + r * (b.x - a.x), a.y + r * (b.y - a.y)};
  };

  CrossSection section;
  section.t = t;
  section.polygon.z_level = t;
  if (!structured) {
    for (std::size_t i : order) section.polygon.vertices.push_back(position(i));
    if (sign(signed_area2(section.polygon.span())) < 0) {
      std::reverse(section.polygon.vertices.begin(), section.polygon.vertices.end());
    }
  } else {
    // Straighten collinear band pieces between consecutive path crossings.
    std::vector<Point2> piece;
    auto flush = [&](const Point2& end) {
      bool collinear = piece.size() > 1;
      for (std::size_t k = 1; k < piece.size() && collinear; ++k) collinear = orient2d(piece.front(), end, piece[k]) == 0;
      if (collinear && !(piece.front() == end)) {
        section.polygon.vertices.push_back(piece.front());
        ++section.degenerate_bands;
      } else {
        section.polygon.vertices.insert(section.polygon.vertices.end(), piece.begin(), piece.end());
      }
      piece.clear();
    };
    for (std::size_t k = 0; k < order.size(); ++k) {
      Point2 p = position(order[k]);
      if (k > 0 && on_path.count(node_edge[order[k]])) flush(p);
      piece.push_back(std::move(p));
    }
    flush(position(order.front()));
  }

  if (section.polygon.size() < 3 || !polygon_is_simple(section.polygon.span())) {
    return fail(SectionError::NotSimple, "section at t=" + format_rational(t) + " is not a simple polygon");
  }
  result.section = std::move(section);
  return result;
}

Rational section_level_near(const BandedSurface& s, const Rational& level) {
  auto hits_vertex = [&](const Rational& t) {
    return std::any_of(s.vertices.begin(), s.vertices.end(), [&](const SurfaceVertex& v) { return v.position.z == t; });
  };
  Rational t = level;
  Rational step(1, 1 << 20);
  for (int attempt = 0; attempt < 16 && hits_vertex(t); ++attempt) {
    t = level + ((attempt % 2 == 0) ? Rational(step) : Rational(-step));
    if (attempt % 2 == 1) step /= 2;
  }
  return t;
}

// ---------------------------------------------------------------------------

std::vector<Rational> VerifyOptions::default_section_levels() {
  std::vector<Rational> levels;
  for (int j = 1; j <= 15; ++j) levels.push_back(ratio(j, 16));
  return levels;
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  auto line = [&](const char* name, const CheckResult& c) {
    out << name << ": " << (c.passed ? "pass" : "FAIL");
    if (!c.passed) out << " (" << c.witness << ")";
    out << "\n";
  };
  line("topology", topology);
  line("paths", paths);
  line("intersections", intersections);
  line("sections", sections);
  out << "overall: " << (passed() ? "pass" : "FAIL") << "\n";
  return out.str();
}

namespace {

CheckResult failed(std::string why) { return {false, std::move(why)}; }

std::string edge_name(std::size_t u, std::size_t v) { return std::to_string(u) + "-" + std::to_string(v); }

bool is_original(const SurfaceVertex& v, int slice, std::size_t index) {
  return v.label.kind == VertexLabel::Kind::Original && v.label.slice == slice && v.label.index == index;
}

CheckResult check_topology(const BandedSurface& s) {
  const std::size_t n = s.n();
  if (n < 3) return failed("fewer than 3 paths");
  if (s.bands.size() != n) return failed("band count differs from path count");

  std::vector<int> face_seen(s.faces.size(), 0);
  for (const auto& band : s.bands) {
    for (std::size_t f : band) ++face_seen[f];
  }
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    if (face_seen[f] != 1) return failed("face " + std::to_string(f) + " is in " + std::to_string(face_seen[f]) + " bands");
  }

  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    const Face& face = s.faces[f];
    if (face[0] == face[1] || face[1] == face[2] || face[0] == face[2]) {
      return failed("face " + std::to_string(f) + " repeats a vertex");
    }
  }

  auto edges = edge_faces(s);
  std::vector<std::pair<std::size_t, std::size_t>> boundary;
  for (const auto& [key, fs] : edges) {
    auto [u, v] = edge_ends(key);
    if (fs.size() > 2) return failed("edge " + edge_name(u, v) + " borders " + std::to_string(fs.size()) + " faces");
    if (fs.size() == 1) boundary.emplace_back(u, v);
  }

  std::vector<bool> used(s.vertices.size(), false);
  for (const Face& face : s.faces) {
    for (std::size_t v : face) used[v] = true;
  }
  for (std::size_t v = 0; v < used.size(); ++v) {
    if (!used[v]) return failed("vertex " + std::to_string(v) + " is in no face");
  }

  long chi = static_cast<long>(s.vertices.size()) - static_cast<long>(edges.size()) + static_cast<long>(s.faces.size());
  if (chi != 0) return failed("Euler characteristic " + std::to_string(chi));

  UnionFind faces_uf(s.faces.size());
  for (const auto& [key, fs] : edges) {
    if (fs.size() == 2) faces_uf.unite(fs[0], fs[1]);
  }
  for (std::size_t f = 1; f < s.faces.size(); ++f) {
    if (faces_uf.find(f) != faces_uf.find(0)) return failed("faces are not connected");
  }

  // Each vertex must see a single fan of faces.
  std::vector<std::vector<std::size_t>> vertex_faces(s.vertices.size());
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    for (std::size_t v : s.faces[f]) vertex_faces[v].push_back(f);
  }
  for (std::size_t v = 0; v < s.vertices.size(); ++v) {
    const auto& fan = vertex_faces[v];
    UnionFind uf(fan.size());
    for (std::size_t a = 0; a < fan.size(); ++a) {
      for (std::size_t b = a + 1; b < fan.size(); ++b) {
        int common = 0;
        for (std::size_t x : s.faces[fan[a]]) {
          for (std::size_t y : s.faces[fan[b]]) common += x == y;
        }
        if (common >= 2) uf.unite(a, b);
      }
    }
    for (std::size_t a = 1; a < fan.size(); ++a) {
      if (uf.find(a) != uf.find(0)) return failed("vertex " + std::to_string(v) + " is a pinch point");
    }
  }

  // Boundary must be exactly the two input polygons.
  std::map<std::size_t, std::vector<std::size_t>> boundary_adj;
  for (auto [u, v] : boundary) {
    boundary_adj[u].push_back(v);
    boundary_adj[v].push_back(u);
  }
  if (boundary.size() != 2 * n) return failed(std::to_string(boundary.size()) + " boundary edges, expected " + std::to_string(2 * n));
  for (const auto& [u, v] : boundary) {
    const auto& a = s.vertices[u];
    const auto& b = s.vertices[v];
    bool ok = a.label.kind == VertexLabel::Kind::Original && b.label.kind == VertexLabel::Kind::Original &&
              a.label.slice == b.label.slice &&
              ((a.label.index + 1) % n == b.label.index || (b.label.index + 1) % n == a.label.index);
    if (!ok) return failed("boundary edge " + edge_name(u, v) + " is not a polygon edge");
  }
  for (const auto& [v, nb] : boundary_adj) {
    if (nb.size() != 2) return failed("boundary vertex " + std::to_string(v) + " has degree " + std::to_string(nb.size()));
  }
  for (int slice = 0; slice < 2; ++slice) {
    std::vector<int> found(n, 0);
    for (const auto& [v, nb] : boundary_adj) {
      const auto& label = s.vertices[v].label;
      if (label.slice == slice && label.index < n) ++found[label.index];
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (found[i] != 1) return failed("boundary cycle " + std::to_string(slice) + " misses polygon vertex " + std::to_string(i));
    }
  }

  // Bands may only meet along paths, band k and k+1 along path k+1.
  const auto band_of = face_band_map(s);
  const auto on_path = path_edges(s);
  for (const auto& [key, fs] : edges) {
    if (fs.size() != 2) continue;
    std::size_t a = band_of[fs[0]], b = band_of[fs[1]];
    if (a == b) continue;
    auto it = on_path.find(key);
    auto [u, v] = edge_ends(key);
    if (it == on_path.end()) return failed("bands " + std::to_string(a) + " and " + std::to_string(b) + " meet off-path at " + edge_name(u, v));
    std::size_t k = it->second;
    bool ok = (a == (k + n - 1) % n && b == k) || (b == (k + n - 1) % n && a == k);
    if (!ok) return failed("path " + std::to_string(k) + " separates bands " + std::to_string(a) + " and " + std::to_string(b));
  }
  return {};
}

CheckResult check_paths(const BandedSurface& s) {
  const std::size_t n = s.n();
  auto edges = edge_faces(s);
  std::vector<long> owner(s.vertices.size(), -1);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& path = s.paths[k];
    if (path.size() < 2) return failed("path " + std::to_string(k) + " has fewer than 2 vertices");
    if (!is_original(s.vertices[path.front()], 0, k)) return failed("path " + std::to_string(k) + " does not start at source vertex " + std::to_string(k));
    if (!is_original(s.vertices[path.back()], 1, k)) return failed("path " + std::to_string(k) + " does not end at target vertex " + std::to_string(k));
    for (std::size_t j = 0; j < path.size(); ++j) {
      std::size_t v = path[j];
      if (owner[v] >= 0) {
        return failed("paths " + std::to_string(owner[v]) + " and " + std::to_string(k) + " share vertex " + std::to_string(v));
      }
      owner[v] = static_cast<long>(k);
      if (j + 1 < path.size()) {
        std::size_t w = path[j + 1];
        if (!edges.count(edge_key(v, w))) return failed("path " + std::to_string(k) + " step " + edge_name(v, w) + " is not a mesh edge");
        if (!(s.vertices[v].position.z < s.vertices[w].position.z)) {
          return failed("path " + std::to_string(k) + " is not strictly rising at " + edge_name(v, w));
        }
      }
    }
  }
  return {};
}

struct Box {
  Rational lo[3];
  Rational hi[3];
};

Box face_box(const Triangle3& t) {
  Box b;
  const Rational* coords[3][3] = {{&t.a.x, &t.a.y, &t.a.z}, {&t.b.x, &t.b.y, &t.b.z}, {&t.c.x, &t.c.y, &t.c.z}};
  for (int axis = 0; axis < 3; ++axis) {
    b.lo[axis] = *coords[0][axis];
    b.hi[axis] = *coords[0][axis];
    for (int k = 1; k < 3; ++k) {
      if (*coords[k][axis] < b.lo[axis]) b.lo[axis] = *coords[k][axis];
      if (*coords[k][axis] > b.hi[axis]) b.hi[axis] = *coords[k][axis];
    }
  }
  return b;
}

bool shares_edge(const Face& a, const Face& b) {
  int common = 0;
  for (std::size_t x : a) {
    for (std::size_t y : b) common += x == y;
  }
  return common == 2;
}

bool coplanar(const Triangle3& a, const Triangle3& b) {
  Point3 n = cross(a.b - a.a, a.c - a.a);
  for (std::size_t k = 0; k < 3; ++k) {
    if (sign(dot(n, b[k] - a.a)) != 0) return false;
  }
  return true;
}

CheckResult check_intersections(const BandedSurface& s) {
  std::vector<std::size_t> idx(s.vertices.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto less = [&](std::size_t l, std::size_t r) {
    const Point3& a = s.vertices[l].position;
    const Point3& b = s.vertices[r].position;
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  };
  std::sort(idx.begin(), idx.end(), less);
  for (std::size_t k = 1; k < idx.size(); ++k) {
    if (s.vertices[idx[k]].position == s.vertices[idx[k - 1]].position) {
      return failed("vertices " + std::to_string(idx[k - 1]) + " and " + std::to_string(idx[k]) + " coincide");
    }
  }

  const std::size_t m = s.faces.size();
  std::vector<Triangle3> tris;
  std::vector<Box> boxes;
  tris.reserve(m);
  boxes.reserve(m);
  for (std::size_t f = 0; f < m; ++f) {
    tris.push_back(s.triangle(f));
    if (triangle_is_degenerate(tris.back())) return failed("face " + std::to_string(f) + " is degenerate");
    boxes.push_back(face_box(tris.back()));
  }
  const auto band_of = face_band_map(s);

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return boxes[l].lo[2] < boxes[r].lo[2]; });
  for (std::size_t a = 0; a < m; ++a) {
    const std::size_t f = order[a];
    for (std::size_t b = a + 1; b < m; ++b) {
      const std::size_t g = order[b];
      if (boxes[g].lo[2] > boxes[f].hi[2]) break;
      bool apart = false;
      for (int axis = 0; axis < 2 && !apart; ++axis) {
        apart = boxes[g].lo[axis] > boxes[f].hi[axis] || boxes[f].lo[axis] > boxes[g].hi[axis];
      }
      if (apart) continue;
      // A coplanar band folded onto itself is the collapsed-edge case.
      if (band_of[f] == band_of[g] && shares_edge(s.faces[f], s.faces[g]) && coplanar(tris[f], tris[g])) continue;
      if (open_triangles_intersect_3d(tris[f], tris[g])) {
        return failed("faces " + std::to_string(std::min(f, g)) + " and " + std::to_string(std::max(f, g)) + " intersect");
      }
    }
  }
  return {};
}

CheckResult check_sections(const BandedSurface& s, const std::vector<Rational>& levels) {
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    const Face& face = s.faces[f];
    const auto& z0 = s.vertices[face[0]].position.z;
    if (z0 == s.vertices[face[1]].position.z && z0 == s.vertices[face[2]].position.z) {
      return failed("face " + std::to_string(f) + " is horizontal");
    }
  }
  for (const Rational& level : levels) {
    Rational t = section_level_near(s, level);
    auto r = cross_section(s, t);
    if (!r.ok()) return failed("t=" + format_rational(t) + ": " + to_string(r.error) + " (" + r.detail + ")");
  }
  return {};
}

}  // namespace

VerificationReport verify_banded_surface(const BandedSurface& s, const VerifyOptions& opts) {
  const std::size_t nv = s.vertices.size();
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    for (std::size_t v : s.faces[f]) {
      if (v >= nv) throw std::invalid_argument("face " + std::to_string(f) + " references missing vertex " + std::to_string(v));
    }
  }
  for (const auto& path : s.paths) {
    for (std::size_t v : path) {
      if (v >= nv) throw std::invalid_argument("path references missing vertex " + std::to_string(v));
    }
  }
  for (const auto& band : s.bands) {
    for (std::size_t f : band) {
      if (f >= s.faces.size()) throw std::invalid_argument("band references missing face " + std::to_string(f));
    }
  }

  VerificationReport report;
  auto skip = [&]() { return opts.fail_fast && !report.passed(); };
  report.topology = check_topology(s);
  if (skip()) return report;
  report.paths = check_paths(s);
  if (skip()) return report;
  report.intersections = check_intersections(s);
  if (skip()) return report;
  report.sections = check_sections(s, opts.section_levels);
  return report;
}

}  // namespace banded
