#include "dagbook/layout.hpp"

#include <sstream>

#include "dagbook/order.hpp"

namespace dagbook {

LayoutValidation validate_layout(const Dag& g, const StackLayout& layout) {
  LayoutValidation result;
  if (layout.order.size() != g.n) {
    result.ok = false;
    result.message = "order size does not match vertex count";
    return result;
  }
  if (!layout.order.is_permutation()) {
    result.ok = false;
    result.message = "order is not a permutation";
    return result;
  }
  if (static_cast<int>(layout.page_of.size()) != g.edge_count()) {
    result.ok = false;
    result.message = "page assignment size does not match edge count";
    return result;
  }
  for (int i = 0; i < g.edge_count(); i++) {
    if (layout.page_of[i] < 0) {
      std::ostringstream msg;
      msg << "edge (" << g.edges[i].source << "," << g.edges[i].target
          << ") has no page";
      result.ok = false;
      result.message = msg.str();
      return result;
    }
    if (layout.page_of[i] >= layout.pages) {
      std::ostringstream msg;
      msg << "edge (" << g.edges[i].source << "," << g.edges[i].target
          << ") on page " << layout.page_of[i] << " >= " << layout.pages;
      result.ok = false;
      result.message = msg.str();
      return result;
    }
  }
  if (!is_linear_extension(g, layout.order)) {
    result.ok = false;
    result.message = "order is not a linear extension";
    return result;
  }
  for (int i = 0; i < g.edge_count(); i++) {
    for (int j = i + 1; j < g.edge_count(); j++) {
      if (layout.page_of[i] != layout.page_of[j]) continue;
      if (edges_cross(layout.order, g.edges[i], g.edges[j])) {
        std::ostringstream msg;
        msg << "edges (" << g.edges[i].source << "," << g.edges[i].target << ") and ("
            << g.edges[j].source << "," << g.edges[j].target << ") cross on page "
            << layout.page_of[i];
        result.ok = false;
        result.message = msg.str();
        return result;
      }
    }
  }
  return result;
}

StackLayout reverse_layout(const StackLayout& layout) {
  StackLayout result = layout;
  result.order = layout.order.reversed();
  return result;
}

}  // namespace dagbook
