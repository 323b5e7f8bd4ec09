#include "dagbook/pages.hpp"

#include <algorithm>
#include <stdexcept>

#include "dagbook/twist.hpp"

namespace dagbook {

namespace {

std::vector<int> processing_order(const Dag& g, const LinearOrder& sigma) {
  std::vector<int> order(g.edge_count());
  for (int i = 0; i < g.edge_count(); i++) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int sa = sigma.pos(g.edges[a].source), sb = sigma.pos(g.edges[b].source);
    if (sa != sb) return sa < sb;
    return sigma.pos(g.edges[a].target) > sigma.pos(g.edges[b].target);
  });
  return order;
}

}  // namespace

StackLayout greedy_first_fit(const Dag& g, const LinearOrder& sigma) {
  if (!is_linear_extension(g, sigma)) {
    throw std::invalid_argument("order is not a linear extension of the graph");
  }
  StackLayout layout;
  layout.order = sigma;
  layout.page_of.assign(g.edge_count(), -1);

  std::vector<std::vector<int>> page_content;
  for (int e : processing_order(g, sigma)) {
    int page = 0;
    for (; page < static_cast<int>(page_content.size()); page++) {
      bool free = true;
      for (int other : page_content[page]) {
        if (edges_cross(sigma, g.edges[e], g.edges[other])) {
          free = false;
          break;
        }
      }
      if (free) break;
    }
    if (page == static_cast<int>(page_content.size())) page_content.push_back({});
    page_content[page].push_back(e);
    layout.page_of[e] = page;
  }
  layout.pages = static_cast<int>(page_content.size());
  if (layout.pages == 0) layout.pages = g.n > 0 ? 1 : 0;
  return layout;
}

namespace {

struct ColoringSearch {
  const std::vector<std::vector<int>>& conflicts;
  const std::vector<int>& order;
  std::vector<int> color;
  std::vector<int> best_color;
  int best = 0;      // best page count found so far (upper bound)
  int lower = 0;     // clique lower bound

  bool assign(size_t idx, int used) {
    if (used >= best) return false;
    if (idx == order.size()) {
      best = used;
      best_color = color;
      return best == lower;
    }
    int e = order[idx];
    int limit = std::min(used + 1, best - 1);
    std::vector<char> taken(limit, 0);
    for (int other : conflicts[e]) {
      if (color[other] >= 0 && color[other] < limit) taken[color[other]] = 1;
    }
    for (int c = 0; c < limit; c++) {
      if (taken[c]) continue;
      color[e] = c;
      if (assign(idx + 1, std::max(used, c + 1))) return true;
      color[e] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<StackLayout> min_pages_for_order(const Dag& g, const LinearOrder& sigma,
                                               int k_max) {
  if (!is_linear_extension(g, sigma)) {
    throw std::invalid_argument("order is not a linear extension of the graph");
  }
  const int m = g.edge_count();
  if (m == 0) {
    StackLayout layout;
    layout.order = sigma;
    layout.pages = g.n > 0 ? 1 : 0;
    return layout;
  }

  std::vector<std::vector<int>> conflicts(m);
  for (int i = 0; i < m; i++) {
    for (int j = i + 1; j < m; j++) {
      if (edges_cross(sigma, g.edges[i], g.edges[j])) {
        conflicts[i].push_back(j);
        conflicts[j].push_back(i);
      }
    }
  }

  StackLayout greedy = greedy_first_fit(g, sigma);
  int lower = max_twist(g, sigma).k();
  lower = std::max(lower, 1);

  if (greedy.pages > lower) {
    // decreasing conflict degree, ties by edge id
    std::vector<int> order(m);
    for (int i = 0; i < m; i++) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (conflicts[a].size() != conflicts[b].size()) {
        return conflicts[a].size() > conflicts[b].size();
      }
      return a < b;
    });

    ColoringSearch search{conflicts, order, std::vector<int>(m, -1), greedy.page_of,
                          greedy.pages, lower};
    search.assign(0, 0);
    greedy.page_of = search.best_color;
    greedy.pages = search.best;
  }

  if (greedy.pages > k_max) return std::nullopt;
  return greedy;
}

}  // namespace dagbook
