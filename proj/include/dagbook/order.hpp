#pragma once

#include <string>
#include <vector>

#include "dagbook/dag.hpp"

namespace dagbook {

/// A total order of the vertices 0..n-1, stored as position[v] = rank.
struct LinearOrder {
  std::vector<int> position;

  LinearOrder() = default;
  explicit LinearOrder(std::vector<int> pos) : position(std::move(pos)) {}

  static LinearOrder from_sequence(const std::vector<int>& seq);

  int size() const { return static_cast<int>(position.size()); }
  int pos(int v) const { return position[v]; }

  /// Vertices listed left to right.
  std::vector<int> sequence() const;

  /// The mirrored order (position n-1-p for every vertex).
  LinearOrder reversed() const;

  /// True iff position is a permutation of 0..n-1.
  bool is_permutation() const;
};

/// True iff every edge points left to right under sigma.
/// Throws std::invalid_argument if sigma and g disagree on the vertex count.
bool is_linear_extension(const Dag& g, const LinearOrder& sigma);

/// True iff e and f share no endpoint and their endpoints interleave under
/// sigma. For directed edges under a linear extension only two interleaving
/// patterns exist: se < sf < te < tf and sf < se < tf < te.
bool edges_cross(const LinearOrder& sigma, const Edge& e, const Edge& f);

/// Labels for the blocks of a PartitionedOrder. Six-part orders use
/// H1,s,H2,H3,t,H4; five-part orders use s,H1,m,H2,t.
enum class PartLabel { H1, S, H2, H3, T, H4, M };

std::string part_label_name(PartLabel label);

/// A contiguous block of positions [begin, end).
struct Part {
  PartLabel label;
  int begin = 0;
  int end = 0;

  int length() const { return end - begin; }
};

/// A linear order together with the block structure used by the
/// constructive layout algorithms. Blocks are contiguous, disjoint, cover
/// all positions in listed order, and singleton labels (s, t, m) have
/// length exactly one. Empty blocks are kept with zero length.
struct PartitionedOrder {
  LinearOrder order;
  std::vector<Part> parts;

  /// Index of the part holding the given position.
  int part_of_position(int p) const;
  PartLabel label_of_vertex(int v) const;

  /// Checks the block invariants; returns an error message or empty.
  std::string check_structure() const;
};

}  // namespace dagbook
