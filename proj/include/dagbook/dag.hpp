#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dagbook {

/// A directed edge between two vertices.
struct Edge {
  int source = -1;
  int target = -1;

  bool operator==(const Edge& other) const = default;
};

/// Key identifying an edge regardless of direction.
inline std::uint64_t unordered_edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

/// Key identifying a directed edge.
inline std::uint64_t directed_edge_key(int u, int v) {
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

/// A simple directed acyclic graph on vertices 0..n-1.
/// Simplicity and acyclicity are not enforced on construction; call
/// validate_dag before trusting an untrusted instance.
struct Dag {
  int n = 0;
  std::vector<Edge> edges;

  Dag() = default;
  Dag(int n_, std::vector<Edge> edges_) : n(n_), edges(std::move(edges_)) {}

  int edge_count() const { return static_cast<int>(edges.size()); }

  bool has_edge(int u, int v) const;

  /// Out-neighbor lists indexed by vertex.
  std::vector<std::vector<int>> out_adjacency() const;
  /// In-neighbor lists indexed by vertex.
  std::vector<std::vector<int>> in_adjacency() const;
  /// Undirected neighbor lists indexed by vertex.
  std::vector<std::vector<int>> undirected_adjacency() const;

  /// Vertices with in-degree zero.
  std::vector<int> sources() const;
  /// Vertices with out-degree zero.
  std::vector<int> sinks() const;

  /// Index of directed edge (u, v), or -1.
  int edge_index(int u, int v) const;
};

/// Result of validate_dag. When not ok, message names the first violation
/// and cycle holds the offending vertex cycle when one exists.
struct DagValidation {
  bool ok = true;
  std::string message;
  std::vector<int> cycle;
};

/// Checks that g is simple (no self loops, at most one edge per vertex
/// pair in either direction) and acyclic.
DagValidation validate_dag(const Dag& g);

/// A topological order of g, or empty if g has a cycle.
std::vector<int> topological_order(const Dag& g);

/// The graph with every edge direction flipped.
Dag reverse(const Dag& g);

}  // namespace dagbook
