#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace banded {

struct Literal {
  std::size_t var = 0;
  bool positive = true;

  Literal operator!() const { return {var, !positive}; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(std::size_t v) { return {v, true}; }
inline Literal neg(std::size_t v) { return {v, false}; }

/// Disjunction of two literals.
struct Clause2 {
  Literal a;
  Literal b;
};

/// A variable forced both ways, with the clause indices along the implication
/// chains x -> ... -> !x and !x -> ... -> x.
struct UnsatWitness {
  std::size_t var = 0;
  std::vector<std::size_t> chain_to_negative;
  std::vector<std::size_t> chain_to_positive;
};

struct TwoSatResult {
  std::optional<std::vector<bool>> assignment;
  UnsatWitness witness;  // meaningful when !satisfiable()

  bool satisfiable() const { return assignment.has_value(); }
};

/// Implication-graph / SCC solver (iterative Tarjan). A variable is true iff
/// the component of its positive literal comes later in topological order
/// than that of its negation. Throws std::out_of_range on a bad index.
TwoSatResult solve_2sat(std::size_t n_vars, const std::vector<Clause2>& clauses);

bool evaluate_2sat(const std::vector<bool>& assignment, const std::vector<Clause2>& clauses);

}  // namespace banded
