#pragma once

#include "banded/quadratic.hpp"
#include "banded/surface.hpp"

#include <optional>
#include <string>
#include <utility>

namespace banded {

/// Polygon of the linear morph at time t, placed at z = t.
struct MorphSnapshot {
  Rational t;
  LabeledPolygon polygon;
};

/// Throws std::invalid_argument unless 0 <= t <= 1.
MorphSnapshot morph_position(const SliceInstance& inst, const Rational& t);

enum class ViolationKind { EdgeCrossing, CollapsedAngle, ZeroLengthEdge };

const char* to_string(ViolationKind k);

struct PlanarityVerdict {
  bool preserved = true;

  // First maximal run of non-simple or clockwise-turned intermediate
  // polygons, when violated.
  QuadNumber start;       // exact first bad time
  QuadNumber end;         // exact last bad time of that run
  Rational lo;            // rational bracket: lo <= start, end <= hi
  Rational hi;
  bool instantaneous = false;  // the run is the single time `start`
  ViolationKind kind = ViolationKind::EdgeCrossing;
  std::size_t edge_a = 0;  // offending edges (edge k joins vertex k and k+1);
  std::size_t edge_b = 0;  // for a collapsed angle, the two edges at the vertex

  std::string describe() const;
};

/// Exact decision over t in (0, 1): every orientation and ordering test used
/// by the simplicity check is a polynomial of degree <= 2 in t, so the
/// polygon's simplicity can only change at their roots. Each root is checked
/// exactly and each open interval between roots at a rational interior point.
PlanarityVerdict planarity_preserving(const SliceInstance& inst);

/// Simplicity of the morph polygon at an exact time.
bool morph_is_simple_at(const SliceInstance& inst, const QuadNumber& t);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Chord choice from the angle between matching edges: left when the target
/// edge is turned by less than pi towards the inside, right when by more,
/// right for exactly pi. Requires convex polygons and a planar morph
/// (PreconditionError otherwise). The resulting surface is verified; a
/// failure throws std::logic_error.
ChordAssignment convex_chord_rule(const SliceInstance& inst);

/// Target = source rotated about center by the angle with the given exact
/// cosine and sine. Throws std::invalid_argument unless cos^2 + sin^2 = 1.
SliceInstance rotate_copy_instance(const LabeledPolygon& source, const Point2& center, const Rational& cos_a,
                                   const Rational& sin_a);

/// Rational point on the unit circle from the tangent half-angle s = p/q.
std::pair<Rational, Rational> rational_rotation(const Rational& half_angle_tangent);

class DegeneratePolygon : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// b_i = m * a_i + shift, with m acting as the complex number (re, im).
struct Similarity {
  Rational re;
  Rational im;
  Point2 shift;

  Rational scale_squared() const { return re * re + im * im; }
};

/// The orientation-preserving similarity carrying a onto b label by label,
/// if one exists. Throws DegeneratePolygon when all points of a coincide.
std::optional<Similarity> similarity_witness(const LabeledPolygon& a, const LabeledPolygon& b);

}  // namespace banded
