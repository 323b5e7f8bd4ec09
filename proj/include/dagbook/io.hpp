#pragma once

#include <iosfwd>
#include <string>

#include "dagbook/dag.hpp"
#include "dagbook/layout.hpp"
#include "dagbook/order.hpp"

namespace dagbook {

/// Graph text format: line 1 "dag <n> <m>", then m lines "<u> <v>".
/// '#' starts a comment anywhere on a line; blank lines are skipped.
Dag read_dag(std::istream& in);
Dag read_dag_file(const std::string& path);
void write_dag(std::ostream& out, const Dag& g);
void write_dag_file(const std::string& path, const Dag& g);

/// Layout text format: line "order: v0 v1 ... v(n-1)", then m lines
/// "<u> <v> <page>". The edges must match g exactly.
StackLayout read_layout(std::istream& in, const Dag& g);
StackLayout read_layout_file(const std::string& path, const Dag& g);
void write_layout(std::ostream& out, const Dag& g, const StackLayout& layout);

/// Reads just the vertex order from a layout file (page lines optional).
LinearOrder read_order(std::istream& in, int n);

/// Part boundaries as "parts: H1=0..2 s=2 H2=3..3 ..." (end exclusive;
/// singleton labels print a single position).
std::string format_parts(const PartitionedOrder& po);

}  // namespace dagbook
