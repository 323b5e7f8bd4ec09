#pragma once

#include <string>
#include <vector>

#include "dagbook/dag.hpp"
#include "dagbook/order.hpp"

namespace dagbook {

/// A vertex order plus an edge-to-page assignment. page_of is indexed by
/// edge index in the owning Dag; -1 marks an unassigned edge.
struct StackLayout {
  LinearOrder order;
  std::vector<int> page_of;
  int pages = 0;
};

struct LayoutValidation {
  bool ok = true;
  std::string message;
};

/// Ok iff layout.order is a linear extension of g, every edge has a page in
/// [0, pages), and no two same-page edges cross. The report names the first
/// violating pair and its page.
LayoutValidation validate_layout(const Dag& g, const StackLayout& layout);

/// The layout of reverse(g) obtained by mirroring the order and keeping
/// pages; valid iff the original is.
StackLayout reverse_layout(const StackLayout& layout);

}  // namespace dagbook
