#include "banded/chord_solver.hpp"

#include <stdexcept>
#include <string>

namespace banded {

ChordChoiceTriangles chord_triangles(const SliceInstance& inst, std::size_t i, Chord c) {
  const std::size_t n = inst.n();
  const Point3 p0 = lift(inst.source.at(i), inst.source.z_level);
  const Point3 p1 = lift(inst.source.at(i + 1), inst.source.z_level);
  const Point3 q0 = lift(inst.target.at(i), inst.target.z_level);
  const Point3 q1 = lift(inst.target.at(i + 1), inst.target.z_level);

  ChordChoiceTriangles out;
  out.band = i % n;
  out.choice = c;
  if (c == Chord::Right) {
    out.faces = {Triangle3{p0, p1, q1}, Triangle3{p0, q1, q0}};
  } else {
    out.faces = {Triangle3{p0, p1, q0}, Triangle3{p1, q1, q0}};
  }
  Point3 normal = cross(p1 - p0, q0 - p0);
  out.coplanar = sign(dot(normal, q1 - p0)) == 0;
  return out;
}

bool conflicts(const SliceInstance& inst, std::size_t i, Chord ci, std::size_t j, Chord cj) {
  if (i == j) throw std::invalid_argument("conflicts: a band does not conflict with itself");
  const auto a = chord_triangles(inst, i, ci);
  const auto b = chord_triangles(inst, j, cj);
  for (const Triangle3& s : a.faces) {
    for (const Triangle3& t : b.faces) {
      if (open_triangles_intersect_3d(s, t)) return true;
    }
  }
  return false;
}

ConflictTable::ConflictTable(const SliceInstance& inst) : n_(inst.n()), cells_(n_ * (n_ - 1) / 2) {
  std::vector<ChordChoiceTriangles> tris;
  tris.reserve(2 * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    tris.push_back(chord_triangles(inst, i, Chord::Right));
    tris.push_back(chord_triangles(inst, i, Chord::Left));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      auto& cell = cells_[slot(i, j)];
      for (int ci = 0; ci < 2; ++ci) {
        for (int cj = 0; cj < 2; ++cj) {
          const auto& a = tris[2 * i + ci].faces;
          const auto& b = tris[2 * j + cj].faces;
          bool hit = false;
          for (std::size_t s = 0; s < 2 && !hit; ++s) {
            for (std::size_t t = 0; t < 2 && !hit; ++t) hit = open_triangles_intersect_3d(a[s], b[t]);
          }
          cell[2 * ci + cj] = hit;
        }
      }
    }
  }
}

std::size_t ConflictTable::slot(std::size_t i, std::size_t j) const {
  // Row-major upper triangle without the diagonal.
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

bool ConflictTable::at(std::size_t i, Chord ci, std::size_t j, Chord cj) const {
  if (i == j || i >= n_ || j >= n_) throw std::out_of_range("ConflictTable: bad band pair");
  if (i > j) {
    std::swap(i, j);
    std::swap(ci, cj);
  }
  int a = ci == Chord::Right ? 0 : 1;
  int b = cj == Chord::Right ? 0 : 1;
  return cells_[slot(i, j)][2 * a + b];
}

ClauseSet build_clauses(const ConflictTable& table) {
  ClauseSet set;
  set.n_vars = table.n();
  for (std::size_t i = 0; i < table.n(); ++i) {
    for (std::size_t j = i + 1; j < table.n(); ++j) {
      for (Chord ci : {Chord::Right, Chord::Left}) {
        for (Chord cj : {Chord::Right, Chord::Left}) {
          if (table.at(i, ci, j, cj)) set.clauses.push_back({!chord_literal(i, ci), !chord_literal(j, cj)});
        }
      }
    }
  }
  return set;
}

ClauseSet build_clauses(const SliceInstance& inst) { return build_clauses(ConflictTable(inst)); }

namespace {

ChordAssignment from_bits(const std::vector<bool>& bits) {
  ChordAssignment a;
  for (bool right : bits) a.choices.push_back(right ? Chord::Right : Chord::Left);
  return a;
}

}  // namespace

std::optional<ChordAssignment> find_assignment(const SliceInstance& inst) {
  auto clauses = build_clauses(inst);
  auto r = solve_2sat(clauses.n_vars, clauses.clauses);
  if (!r.satisfiable()) return std::nullopt;
  return from_bits(*r.assignment);
}

NoSteinerResult solve_no_steiner(const SliceInstance& inst, const VerifyOptions& opts) {
  NoSteinerResult result;
  result.clauses = build_clauses(inst);
  auto r = solve_2sat(result.clauses.n_vars, result.clauses.clauses);
  if (!r.satisfiable()) {
    result.witness = r.witness;
    return result;
  }
  result.assignment = from_bits(*r.assignment);
  result.surface = assignment_to_surface(inst, *result.assignment);
  auto report = verify_banded_surface(*result.surface, opts);
  if (!report.passed()) {
    throw std::logic_error("solve_no_steiner: assignment " + result.assignment->to_string() +
                           " satisfies every conflict clause but fails verification:\n" + report.summary());
  }
  return result;
}

std::vector<ChordAssignment> brute_force_assignments(const SliceInstance& inst, std::size_t limit,
                                                     const VerifyOptions& opts) {
  const std::size_t n = inst.n();
  if (n > limit) {
    throw std::invalid_argument("brute force limited to n <= " + std::to_string(limit) + ", got " + std::to_string(n));
  }
  VerifyOptions fast = opts;
  fast.fail_fast = true;
  std::vector<ChordAssignment> valid;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    ChordAssignment a;
    for (std::size_t i = 0; i < n; ++i) a.choices.push_back((mask >> i) & 1 ? Chord::Left : Chord::Right);
    if (verify_banded_surface(assignment_to_surface(inst, a), fast).passed()) valid.push_back(std::move(a));
  }
  return valid;
}

}  // namespace banded
