#include "dagbook/dag.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace dagbook {

bool Dag::has_edge(int u, int v) const {
  for (const Edge& e : edges) {
    if (e.source == u && e.target == v) return true;
  }
  return false;
}

std::vector<std::vector<int>> Dag::out_adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) adj[e.source].push_back(e.target);
  return adj;
}

std::vector<std::vector<int>> Dag::in_adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) adj[e.target].push_back(e.source);
  return adj;
}

std::vector<std::vector<int>> Dag::undirected_adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) {
    adj[e.source].push_back(e.target);
    adj[e.target].push_back(e.source);
  }
  return adj;
}

std::vector<int> Dag::sources() const {
  std::vector<int> indeg(n, 0);
  for (const Edge& e : edges) indeg[e.target]++;
  std::vector<int> result;
  for (int v = 0; v < n; v++) {
    if (indeg[v] == 0) result.push_back(v);
  }
  return result;
}

std::vector<int> Dag::sinks() const {
  std::vector<int> outdeg(n, 0);
  for (const Edge& e : edges) outdeg[e.source]++;
  std::vector<int> result;
  for (int v = 0; v < n; v++) {
    if (outdeg[v] == 0) result.push_back(v);
  }
  return result;
}

int Dag::edge_index(int u, int v) const {
  for (int i = 0; i < edge_count(); i++) {
    if (edges[i].source == u && edges[i].target == v) return i;
  }
  return -1;
}

std::vector<int> topological_order(const Dag& g) {
  std::vector<int> indeg(g.n, 0);
  auto adj = g.out_adjacency();
  for (const Edge& e : g.edges) indeg[e.target]++;

  std::vector<int> order;
  order.reserve(g.n);
  std::queue<int> ready;
  for (int v = 0; v < g.n; v++) {
    if (indeg[v] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    order.push_back(v);
    for (int w : adj[v]) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(order.size()) != g.n) return {};
  return order;
}

namespace {

// A directed cycle in g, found by walking back-edges of a DFS.
std::vector<int> find_cycle(const Dag& g) {
  auto adj = g.out_adjacency();
  std::vector<int> state(g.n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> parent(g.n, -1);

  for (int start = 0; start < g.n; start++) {
    if (state[start] != 0) continue;
    std::vector<std::pair<int, size_t>> stack{{start, 0}};
    state[start] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < adj[v].size()) {
        int w = adj[v][idx++];
        if (state[w] == 1) {
          // unwind v -> ... -> w
          std::vector<int> cycle{w};
          for (int u = v; u != w; u = parent[u]) cycle.push_back(u);
          std::reverse(cycle.begin() + 1, cycle.end());
          return cycle;
        }
        if (state[w] == 0) {
          state[w] = 1;
          parent[w] = v;
          stack.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return {};
}

}  // namespace

DagValidation validate_dag(const Dag& g) {
  DagValidation result;
  for (const Edge& e : g.edges) {
    if (e.source < 0 || e.source >= g.n || e.target < 0 || e.target >= g.n) {
      result.ok = false;
      std::ostringstream msg;
      msg << "edge (" << e.source << "," << e.target << ") out of range for n=" << g.n;
      result.message = msg.str();
      return result;
    }
    if (e.source == e.target) {
      result.ok = false;
      result.message = "self loop at vertex " + std::to_string(e.source);
      return result;
    }
  }
  std::unordered_set<std::uint64_t> seen;
  for (const Edge& e : g.edges) {
    if (!seen.insert(unordered_edge_key(e.source, e.target)).second) {
      result.ok = false;
      std::ostringstream msg;
      msg << "duplicate edge on pair {" << e.source << "," << e.target << "}";
      result.message = msg.str();
      return result;
    }
  }
  if (topological_order(g).empty() && g.n > 0) {
    result.ok = false;
    result.cycle = find_cycle(g);
    std::ostringstream msg;
    msg << "cycle [";
    for (size_t i = 0; i < result.cycle.size(); i++) {
      if (i) msg << ",";
      msg << result.cycle[i];
    }
    msg << "]";
    result.message = msg.str();
    return result;
  }
  return result;
}

Dag reverse(const Dag& g) {
  Dag r;
  r.n = g.n;
  r.edges.reserve(g.edges.size());
  for (const Edge& e : g.edges) r.edges.push_back({e.target, e.source});
  return r;
}

}  // namespace dagbook
