#pragma once

#include "banded/chord_solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace banded {

/// An intermediate polygon of the layered construction.
struct Layer {
  LabeledPolygon polygon;
  std::vector<std::size_t> moved;  // labels whose collapse or move produced this layer
  std::string step;                // "ear", "pop", "slide", "affine", ...
};

/// Layers strictly between the source (z = 0) and the target (z = 1), bottom
/// group from the source's collapse, then the triangle join, then the
/// target's collapse in upward order.
struct LayerStack {
  std::vector<Layer> layers;
  std::size_t bottom = 0;
  std::size_t middle = 0;
  std::size_t top = 0;
  /// Chord choices for each gap, layers.size() + 1 entries, bottom first.
  std::vector<ChordAssignment> gaps;
};

class AlreadyTriangle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EarCollapse {
  LabeledPolygon polygon;
  std::size_t tip = 0;
};

/// Valid ear tips: convex corners whose triangle with the neighbouring
/// corners holds no other vertex. Vertices between two corners are ignored
/// when forming triangles and ride along with the collapse.
std::vector<std::size_t> ear_tips(const LabeledPolygon& poly);

/// Collapses the lowest-index valid ear: the tip goes to the midpoint of its
/// neighbouring corners and the collinear vertices on its two sides are
/// projected onto the new side. Vertex count is unchanged, corner count drops
/// by one. Throws AlreadyTriangle for fewer than four corners.
EarCollapse collapse_ear(const LabeledPolygon& poly);

/// Collapses several ears at once; tips must be valid and pairwise
/// non-neighbouring corners. The result may be non-simple; callers check.
LabeledPolygon collapse_ears(const LabeledPolygon& poly, const std::vector<std::size_t>& tips);

/// A Steiner-free chord assignment joining two layers, or nothing.
std::optional<ChordAssignment> joinable(const LabeledPolygon& lower, const LabeledPolygon& upper);

/// Chord choices for the gap between two layers. Throws std::invalid_argument
/// unless lower.z_level < upper.z_level, std::logic_error when no
/// Steiner-free join exists.
ChordAssignment join_consecutive_layers(const LabeledPolygon& lower, const LabeledPolygon& upper);

/// Intermediate polygons (z levels unset) taking the triangle t_low to the
/// triangle t_high, each consecutive pair joinable; empty when the two join
/// directly. Both arguments must have exactly three corners
/// (std::invalid_argument). Throws std::logic_error if no route is found.
std::vector<Layer> join_triangles(const LabeledPolygon& t_low, const LabeledPolygon& t_high);

/// Full layered construction without the Steiner-free shortcut.
LayerStack build_layer_stack(const SliceInstance& inst);

/// Surface whose layer k sits at z = k / (layers + 1).
BandedSurface stack_to_surface(const SliceInstance& inst, const LayerStack& stack);

std::size_t steiner_bound(std::size_t n);

struct SteinerBuild {
  BandedSurface surface;
  LayerStack stack;   // empty when the instance is solvable without Steiner points
  bool direct = false;
};

/// Steiner-free surface if one exists, else the layered surface. The result
/// is verified; a verification failure throws std::logic_error.
SteinerBuild build_layered(const SliceInstance& inst, const VerifyOptions& opts = {});

BandedSurface build_layered_surface(const SliceInstance& inst, const VerifyOptions& opts = {});

}  // namespace banded
