#include "banded/two_sat.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace banded {

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

std::size_t node(const Literal& l) { return 2 * l.var + (l.positive ? 0 : 1); }

struct Edge {
  std::size_t to;
  std::size_t clause;
};

// Component ids in reverse topological order (Tarjan emits sinks first).
std::vector<std::size_t> tarjan(const std::vector<std::vector<Edge>>& graph) {
  const std::size_t n = graph.size();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, components = 0;

  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < graph[f.v].size()) {
        std::size_t w = graph[f.v][f.next++].to;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      std::size_t v = f.v;
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
    }
  }
  return comp;
}

// Clause indices along a shortest implication path from -> to (from != to).
std::vector<std::size_t> chain(const std::vector<std::vector<Edge>>& graph, std::size_t from, std::size_t to) {
  std::vector<std::size_t> via(graph.size(), kUnvisited), parent(graph.size(), kUnvisited);
  std::queue<std::size_t> q;
  q.push(from);
  parent[from] = from;
  while (!q.empty() && parent[to] == kUnvisited) {
    std::size_t v = q.front();
    q.pop();
    for (const Edge& e : graph[v]) {
      if (parent[e.to] != kUnvisited) continue;
      parent[e.to] = v;
      via[e.to] = e.clause;
      q.push(e.to);
    }
  }
  std::vector<std::size_t> out;
  if (parent[to] == kUnvisited) return out;
  for (std::size_t v = to; v != from; v = parent[v]) out.push_back(via[v]);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

TwoSatResult solve_2sat(std::size_t n_vars, const std::vector<Clause2>& clauses) {
  std::vector<std::vector<Edge>> graph(2 * n_vars);
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const Clause2& cl = clauses[c];
    if (cl.a.var >= n_vars || cl.b.var >= n_vars) {
      throw std::out_of_range("clause " + std::to_string(c) + " references a variable outside [0, " +
                              std::to_string(n_vars) + ")");
    }
    // (a or b) == (!a -> b) and (!b -> a)
    graph[node(!cl.a)].push_back({node(cl.b), c});
    graph[node(!cl.b)].push_back({node(cl.a), c});
  }
  auto comp = tarjan(graph);

  TwoSatResult result;
  std::vector<bool> values(n_vars);
  for (std::size_t v = 0; v < n_vars; ++v) {
    std::size_t p = comp[node(pos(v))], q = comp[node(neg(v))];
    if (p == q) {
      result.witness.var = v;
      result.witness.chain_to_negative = chain(graph, node(pos(v)), node(neg(v)));
      result.witness.chain_to_positive = chain(graph, node(neg(v)), node(pos(v)));
      return result;
    }
    // Reverse topological numbering: smaller id is later in topological order.
    values[v] = p < q;
  }
  result.assignment = std::move(values);
  return result;
}

bool evaluate_2sat(const std::vector<bool>& assignment, const std::vector<Clause2>& clauses) {
  auto holds = [&](const Literal& l) { return assignment.at(l.var) == l.positive; };
  return std::all_of(clauses.begin(), clauses.end(), [&](const Clause2& c) { return holds(c.a) || holds(c.b); });
}

}  // namespace banded
