#pragma once

#include "banded/surface.hpp"
#include "banded/two_sat.hpp"

#include <array>
#include <optional>
#include <vector>

namespace banded {

/// The two faces a chord choice puts into band i.
struct ChordChoiceTriangles {
  std::size_t band = 0;
  Chord choice = Chord::Right;
  std::array<Triangle3, 2> faces;
  bool coplanar = false;  // all four quad corners in one plane
};

ChordChoiceTriangles chord_triangles(const SliceInstance& inst, std::size_t i, Chord c);

/// Whether choice (i, ci) and choice (j, cj) put intersecting faces on the
/// surface. Contact along the shared path edge of adjacent bands is allowed.
bool conflicts(const SliceInstance& inst, std::size_t i, Chord ci, std::size_t j, Chord cj);

/// 2x2 conflict matrices for every band pair i < j.
class ConflictTable {
 public:
  explicit ConflictTable(const SliceInstance& inst);

  std::size_t n() const { return n_; }
  bool at(std::size_t i, Chord ci, std::size_t j, Chord cj) const;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;

  std::size_t n_;
  std::vector<std::array<bool, 4>> cells_;
};

inline Literal chord_literal(std::size_t band, Chord c) { return {band, c == Chord::Right}; }

struct ClauseSet {
  std::size_t n_vars = 0;
  std::vector<Clause2> clauses;
};

/// One clause !(x_i and x_j) per conflicting pair of chord choices; variable
/// i is true when band i takes its right chord.
ClauseSet build_clauses(const SliceInstance& inst);
ClauseSet build_clauses(const ConflictTable& table);

struct NoSteinerResult {
  std::optional<ChordAssignment> assignment;
  std::optional<BandedSurface> surface;
  UnsatWitness witness;
  ClauseSet clauses;

  bool sat() const { return assignment.has_value(); }
};

/// Builds the conflict clauses, solves them, and (on SAT) returns the
/// verified surface. A SAT assignment that fails verification throws
/// std::logic_error: it means the conflict predicate disagrees with the
/// verifier.
NoSteinerResult solve_no_steiner(const SliceInstance& inst, const VerifyOptions& opts = {});

/// Same decision without building or verifying the surface.
std::optional<ChordAssignment> find_assignment(const SliceInstance& inst);

/// Every assignment whose surface passes the full verifier. Throws
/// std::invalid_argument when n exceeds limit.
std::vector<ChordAssignment> brute_force_assignments(const SliceInstance& inst, std::size_t limit = 16,
                                                     const VerifyOptions& opts = {});

}  // namespace banded
