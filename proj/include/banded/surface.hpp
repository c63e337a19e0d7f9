#pragma once

#include "banded/geometry.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace banded {

/// n labelled vertices in the plane z = z_level, listed counterclockwise.
struct LabeledPolygon {
  std::vector<Point2> vertices;
  Rational z_level;

  std::size_t size() const { return vertices.size(); }
  const Point2& operator[](std::size_t i) const { return vertices[i]; }
  /// Cyclic access.
  const Point2& at(std::size_t i) const { return vertices[i % vertices.size()]; }
  std::span<const Point2> span() const { return vertices; }
};

/// Empty when the polygon satisfies every LabeledPolygon invariant, else a
/// human-readable reason.
std::optional<std::string> polygon_defect(const LabeledPolygon& poly);

class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Source polygon at z = 0, target at z = 1, vertex i corresponding to i.
struct SliceInstance {
  LabeledPolygon source;
  LabeledPolygon target;

  std::size_t n() const { return source.size(); }

  /// Validates both polygons and the pairing; throws InvalidInstance.
  static SliceInstance make(std::vector<Point2> source, std::vector<Point2> target);
};

enum class Chord { Right, Left };

/// One chord per band; band i lies between paths i and i+1 (cyclic).
struct ChordAssignment {
  std::vector<Chord> choices;

  std::size_t size() const { return choices.size(); }
  /// "RRL..." form used by the CLI.
  std::string to_string() const;
  static ChordAssignment parse(const std::string& rl);
  friend bool operator==(const ChordAssignment&, const ChordAssignment&) = default;
};

struct VertexLabel {
  enum class Kind { Original, Steiner };
  Kind kind = Kind::Original;
  int slice = 0;          // 0 = source, 1 = target (Original only)
  std::size_t index = 0;  // polygon index, or Steiner id
};

struct SurfaceVertex {
  Point3 position;
  VertexLabel label;
};

using Face = std::array<std::size_t, 3>;

struct BandedSurface {
  std::vector<SurfaceVertex> vertices;
  std::vector<Face> faces;
  std::vector<std::vector<std::size_t>> bands;  // face indices per band
  std::vector<std::vector<std::size_t>> paths;  // vertex indices per path, bottom to top

  std::size_t n() const { return paths.size(); }
  Triangle3 triangle(std::size_t f) const;
  std::size_t steiner_count() const;
};

/// Faces of band i for the given chord, as vertex indices into the standard
/// Steiner-free layout (source vertex i at i, target vertex i at n + i).
std::array<Face, 2> band_faces(std::size_t n, std::size_t i, Chord c);

BandedSurface assignment_to_surface(const SliceInstance& inst, const ChordAssignment& a);

// ---------------------------------------------------------------------------
// Cross-sections.

struct CrossSection {
  Rational t;
  LabeledPolygon polygon;
  std::size_t degenerate_bands = 0;  // bands whose section collapsed to one straight edge
};

enum class SectionError { VertexOnLevel, OpenChain, MultipleCycles, NotSimple };

const char* to_string(SectionError e);

struct SectionResult {
  std::optional<CrossSection> section;
  SectionError error = SectionError::OpenChain;
  std::string detail;

  bool ok() const { return section.has_value(); }
};

/// Intersects the surface with z = t and chains the pieces along shared mesh
/// edges. When the surface carries bands and paths, each band's piece is
/// straightened if it is collinear.
SectionResult cross_section(const BandedSurface& s, const Rational& t);

/// `level` itself unless some vertex lies at that height; then the nearest of
/// level +- 2^-20, 2^-21, ... that avoids every vertex. The verifier sections
/// at these levels.
Rational section_level_near(const BandedSurface& s, const Rational& level);

// ---------------------------------------------------------------------------
// Verification.

struct CheckResult {
  bool passed = true;
  std::string witness;  // first counterexample when failed
};

struct VerificationReport {
  CheckResult topology;
  CheckResult paths;
  CheckResult intersections;
  CheckResult sections;

  bool passed() const { return topology.passed && paths.passed && intersections.passed && sections.passed; }
  std::string summary() const;
};

struct VerifyOptions {
  std::vector<Rational> section_levels = default_section_levels();
  /// Skip the remaining checks once one fails.
  bool fail_fast = false;

  static std::vector<Rational> default_section_levels();
};

/// Runs the topology, path, pairwise-face and cross-section checks. Throws
/// std::invalid_argument when face or path indices are out of range.
VerificationReport verify_banded_surface(const BandedSurface& s, const VerifyOptions& opts = {});

}  // namespace banded
