#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dagbook/dag.hpp"

namespace dagbook {

/// Stellation kinds: O1 places the apex between the base endpoints,
/// O2 makes it a sink of both, O3 a source of both.
enum class OpKind { O1, O2, O3 };

std::string op_kind_name(OpKind kind);

/// O1 <-> O1, O2 <-> O3 under edge reversal.
OpKind reversed_op_kind(OpKind kind);

/// One stellation: base is the directed edge that was stellated, apex the
/// added vertex. left/right index into ConstructionSequence::nodes for the
/// stellations of the two new edges ({base.source, apex} side and
/// {apex, base.target} side), -1 when that edge stays a leaf.
struct StellationOp {
  OpKind kind;
  Edge base;
  int apex = -1;
  int left = -1;
  int right = -1;

  /// The new edge incident to base.source, directed as in the graph.
  Edge source_side_edge() const;
  /// The new edge incident to base.target, directed as in the graph.
  Edge target_side_edge() const;
};

/// The stellation tree of a maximal outerplanar DAG rooted at a base edge.
struct ConstructionSequence {
  Edge base_edge;
  std::vector<StellationOp> nodes;
  int root = -1;  // -1 iff the graph is the bare base edge

  int vertex_count() const { return 2 + static_cast<int>(nodes.size()); }

  /// Rebuilds the graph the sequence describes.
  Dag replay() const;

  bool uses_only(std::initializer_list<OpKind> allowed) const;
  /// True iff every node has at most one child.
  bool is_path_tree() const;

  /// Debug format: one line per node,
  /// "<kind> base=<u>,<v> apex=<x> parent=<idx>" (-1 for the root).
  std::string format() const;
};

/// One apex insertion of a 3-tree construction. host lists the host
/// triangle as (local source, middle, local sink); edges are the three
/// apex edges as directed in the graph, aligned with host.
struct ApexInsertion {
  std::array<int, 3> host;
  int apex = -1;
  std::array<Edge, 3> edges;
  bool face_consistent = false;
};

/// A planar 3-tree peeled down to its outer triangle (s, m, t), with the
/// insertions listed in construction order.
struct ThreeTreeDecomposition {
  std::array<int, 3> outer_triangle;  // (source, middle, sink)
  std::vector<ApexInsertion> insertions;
  bool face_consistent = true;

  int vertex_count() const { return 3 + static_cast<int>(insertions.size()); }
  Dag replay() const;
};

struct ClassTags {
  bool maximal_outerplanar = false;
  bool transitive_only = false;
  bool single_source = false;
  bool single_sink = false;
  bool monotone = false;
  bool outerpath = false;
  bool three_tree = false;
  bool face_consistent_3tree = false;
};

/// Reverse-constructs the stellation tree by repeatedly removing a
/// degree-2 vertex (lowest id first) whose neighbors are adjacent, leaving
/// the base edge. Throws std::invalid_argument when g is not maximal
/// outerplanar or base is not an edge of g.
ConstructionSequence peel_outerplanar(const Dag& g, Edge base);

/// Non-throwing variant; nullopt on failure.
std::optional<ConstructionSequence> try_peel_outerplanar(const Dag& g, Edge base);

/// Base-edge candidates for peeling: edges whose endpoints share at most
/// one common neighbor (the outer edges of a maximal outerplanar graph).
std::vector<Edge> outer_edge_candidates(const Dag& g);

/// Graph classes the constructive layouts accept.
enum class OdagClass { Transitive, SingleSource, Monotone, Outerpath };

/// First construction sequence (by candidate base order) whose operations
/// fit the class: {O1} transitive, {O1,O2} single-source, {O2,O3} monotone,
/// any ops but a path tree for outerpath. nullopt if none fits.
std::optional<ConstructionSequence> decompose_as(const Dag& g, OdagClass cls);

/// Peels a planar 3-tree by repeatedly removing a simplicial degree-3
/// vertex (lowest id first). Throws std::invalid_argument when the
/// underlying undirected graph is not a planar 3-tree.
ThreeTreeDecomposition peel_3tree(const Dag& g);

std::optional<ThreeTreeDecomposition> try_peel_3tree(const Dag& g);

/// Flags for every recognized class.
ClassTags classify(const Dag& g);

/// Planarity of an undirected edge set (Boyer-Myrvold).
bool is_planar(int n, const std::vector<Edge>& edges);

/// For a DAG with exactly one source s and one sink t: true iff g plus the
/// edge (s, t), when missing, is planar. Throws std::invalid_argument when
/// g has several sources or sinks.
bool st_upward_check(const Dag& g);

}  // namespace dagbook
