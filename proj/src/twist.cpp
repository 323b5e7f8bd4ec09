#include "dagbook/twist.hpp"

#include <algorithm>
#include <stdexcept>

namespace dagbook {

bool is_twist(const LinearOrder& sigma, const std::vector<Edge>& edges) {
  if (edges.empty()) return true;
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end(), [&](const Edge& a, const Edge& b) {
    return sigma.pos(a.source) < sigma.pos(b.source);
  });
  // sources strictly increase, targets strictly increase, last source
  // precedes first target; that forces pairwise independence too
  for (size_t i = 0; i + 1 < sorted.size(); i++) {
    if (sigma.pos(sorted[i].source) >= sigma.pos(sorted[i + 1].source)) return false;
    if (sigma.pos(sorted[i].target) >= sigma.pos(sorted[i + 1].target)) return false;
  }
  return sigma.pos(sorted.back().source) < sigma.pos(sorted.front().target);
}

TwistCertificate max_twist_of_edges(const std::vector<Edge>& edges,
                                    const std::vector<int>& position) {
  const int n = static_cast<int>(position.size());
  TwistCertificate best;
  if (edges.empty() || n == 0) return best;

  // Edges sorted once by (source asc, target desc); equal sources then
  // cannot both enter a strictly increasing target chain.
  std::vector<int> sorted(edges.size());
  for (size_t i = 0; i < edges.size(); i++) sorted[i] = static_cast<int>(i);
  std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
    int sa = position[edges[a].source], sb = position[edges[b].source];
    if (sa != sb) return sa < sb;
    return position[edges[a].target] > position[edges[b].target];
  });

  std::vector<int> spanning, tails, tail_edge, parent(edges.size(), -1);
  for (int gap = 0; gap + 1 < n; gap++) {
    spanning.clear();
    for (int idx : sorted) {
      if (position[edges[idx].source] <= gap && position[edges[idx].target] > gap) {
        spanning.push_back(idx);
      }
    }
    if (static_cast<int>(spanning.size()) <= best.k()) continue;

    // longest strictly increasing subsequence on target positions
    tails.clear();      // tails[len-1] = smallest tail target position
    tail_edge.clear();  // edge achieving it
    for (int idx : spanning) {
      int t = position[edges[idx].target];
      auto it = std::lower_bound(tails.begin(), tails.end(), t);
      size_t len = static_cast<size_t>(it - tails.begin());
      parent[idx] = len > 0 ? tail_edge[len - 1] : -1;
      if (it == tails.end()) {
        tails.push_back(t);
        tail_edge.push_back(idx);
      } else {
        *it = t;
        tail_edge[len] = idx;
      }
    }
    if (static_cast<int>(tails.size()) > best.k()) {
      best.edges.clear();
      for (int e = tail_edge.back(); e != -1; e = parent[e]) {
        best.edges.push_back(edges[e]);
      }
      std::reverse(best.edges.begin(), best.edges.end());
    }
  }
  return best;
}

namespace {

void require_extension(const Dag& g, const LinearOrder& sigma) {
  if (!is_linear_extension(g, sigma)) {
    throw std::invalid_argument("order is not a linear extension of the graph");
  }
}

}  // namespace

TwistCertificate max_twist(const Dag& g, const LinearOrder& sigma) {
  require_extension(g, sigma);
  return max_twist_of_edges(g.edges, sigma.position);
}

TwistCertificate max_twist_of_subset(const Dag& g, const LinearOrder& sigma,
                                     const EdgePredicate& pred) {
  require_extension(g, sigma);
  std::vector<Edge> subset;
  for (const Edge& e : g.edges) {
    if (pred(e)) subset.push_back(e);
  }
  return max_twist_of_edges(subset, sigma.position);
}

namespace {

// Extends the current pairwise-crossing set over edges sorted by source.
void extend_twist(const std::vector<Edge>& edges, const LinearOrder& sigma,
                  size_t from, std::vector<Edge>& current, std::vector<Edge>& best) {
  if (current.size() > best.size()) best = current;
  for (size_t i = from; i < edges.size(); i++) {
    if (current.size() + (edges.size() - i) <= best.size()) break;
    bool crosses_all = true;
    for (const Edge& chosen : current) {
      if (!edges_cross(sigma, chosen, edges[i])) {
        crosses_all = false;
        break;
      }
    }
    if (crosses_all) {
      current.push_back(edges[i]);
      extend_twist(edges, sigma, i + 1, current, best);
      current.pop_back();
    }
  }
}

}  // namespace

TwistCertificate max_twist_bruteforce(const Dag& g, const LinearOrder& sigma) {
  require_extension(g, sigma);
  std::vector<Edge> sorted = g.edges;
  std::sort(sorted.begin(), sorted.end(), [&](const Edge& a, const Edge& b) {
    return sigma.pos(a.source) < sigma.pos(b.source);
  });
  std::vector<Edge> current, best;
  extend_twist(sorted, sigma, 0, current, best);
  TwistCertificate cert;
  cert.edges = best;
  return cert;
}

}  // namespace dagbook
