#pragma once

#include "dagbook/dag.hpp"
#include "dagbook/layout.hpp"
#include "dagbook/order.hpp"
#include "dagbook/recognition.hpp"
#include "dagbook/twist.hpp"

namespace dagbook {

enum class LayoutClass { SingleSource, Monotone, Outerpath, UpwardThreeTree };

std::string layout_class_name(LayoutClass cls);

/// A partitioned order certified against its class bound. twist holds the
/// measured maximum twist (twist.k() <= bound, rechecked on construction).
struct AnnotatedOrder {
  PartitionedOrder order;
  LayoutClass layout_class;
  int bound = 0;
  TwistCertificate twist;
};

struct LayoutOptions {
  /// Re-check the per-frame invariants of every recursion frame
  /// (quadratic; meant for small instances and debugging).
  bool check_frames = false;
};

/// Order with twist at most 3 for a single-source construction (ops O1/O2
/// only, base incident to the unique source).
/// Throws std::invalid_argument if seq contains O3 or does not match g.
AnnotatedOrder order_single_source(const Dag& g, const ConstructionSequence& seq,
                                   const LayoutOptions& options = {});

/// 4-stack layout for a single-source construction; the vertex order is
/// exactly order_single_source's. Throws std::logic_error if the produced
/// assignment has a same-page crossing.
StackLayout stacks_single_source(const Dag& g, const ConstructionSequence& seq,
                                 const LayoutOptions& options = {});

/// Order with twist at most 4 for a monotone construction (ops O2/O3 only).
AnnotatedOrder order_monotone(const Dag& g, const ConstructionSequence& seq,
                              const LayoutOptions& options = {});

/// Order with twist at most 4 for an outerpath construction (path-shaped
/// stellation tree, any ops).
AnnotatedOrder order_outerpath(const Dag& g, const ConstructionSequence& seq,
                               const LayoutOptions& options = {});

/// Order with twist at most 5 for a face-consistent 3-tree.
AnnotatedOrder order_up3tree(const Dag& g, const ThreeTreeDecomposition& dec,
                             const LayoutOptions& options = {});

}  // namespace dagbook
