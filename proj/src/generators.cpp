#include "dagbook/generators.hpp"

#include <stdexcept>

#include "dagbook/recognition.hpp"

namespace dagbook {

namespace {

Dag gen_odag(int n, std::uint64_t seed, const std::vector<OpKind>& allowed) {
  if (n < 2) throw std::invalid_argument("need at least 2 vertices");
  SplitMix64 rng(seed);
  Dag g;
  g.n = n;
  g.edges.push_back({0, 1});
  std::vector<int> free_edges = {0};  // indices of edges not yet stellated

  for (int x = 2; x < n; x++) {
    std::uint64_t pick = rng.below(free_edges.size());
    int edge_idx = free_edges[pick];
    OpKind kind = allowed[rng.below(allowed.size())];
    StellationOp op;
    op.kind = kind;
    op.base = g.edges[edge_idx];
    op.apex = x;
    free_edges[pick] = g.edge_count();
    g.edges.push_back(op.source_side_edge());
    free_edges.push_back(g.edge_count());
    g.edges.push_back(op.target_side_edge());
  }
  return g;
}

}  // namespace

Dag gen_transitive_odag(int n, std::uint64_t seed) {
  return gen_odag(n, seed, {OpKind::O1});
}

Dag gen_single_source_odag(int n, std::uint64_t seed) {
  return gen_odag(n, seed, {OpKind::O1, OpKind::O2});
}

Dag gen_monotone_odag(int n, std::uint64_t seed) {
  return gen_odag(n, seed, {OpKind::O2, OpKind::O3});
}

Dag gen_any_odag(int n, std::uint64_t seed) {
  return gen_odag(n, seed, {OpKind::O1, OpKind::O2, OpKind::O3});
}

Dag gen_outerpath(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need at least 2 vertices");
  SplitMix64 rng(seed);
  const std::vector<OpKind> allowed = {OpKind::O1, OpKind::O2, OpKind::O3};
  Dag g;
  g.n = n;
  g.edges.push_back({0, 1});
  int active = 0;  // the single edge that may still be stellated

  for (int x = 2; x < n; x++) {
    OpKind kind = allowed[rng.below(allowed.size())];
    StellationOp op;
    op.kind = kind;
    op.base = g.edges[active];
    op.apex = x;
    int source_side = g.edge_count();
    g.edges.push_back(op.source_side_edge());
    int target_side = g.edge_count();
    g.edges.push_back(op.target_side_edge());
    active = rng.below(2) == 0 ? source_side : target_side;
  }
  return g;
}

Dag gen_up3tree(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("need at least 3 vertices");
  SplitMix64 rng(seed);
  Dag g;
  g.n = n;
  g.edges.push_back({0, 1});
  g.edges.push_back({1, 2});
  g.edges.push_back({0, 2});
  // faces as (local source, middle, local sink)
  std::vector<std::array<int, 3>> faces = {{0, 1, 2}};

  for (int x = 3; x < n; x++) {
    std::uint64_t pick = rng.below(faces.size());
    auto [a, b, c] = faces[pick];
    bool apex_before_middle = rng.below(2) == 0;
    g.edges.push_back({a, x});
    g.edges.push_back(apex_before_middle ? Edge{x, b} : Edge{b, x});
    g.edges.push_back({x, c});
    // the host face splits into three; orientations fixed by the new edges
    if (apex_before_middle) {
      faces[pick] = {a, x, b};  // a->x, x->b, a->b
      faces.push_back({x, b, c});
    } else {
      faces[pick] = {a, b, x};  // a->b, b->x, a->x
      faces.push_back({b, x, c});
    }
    faces.push_back({a, x, c});
  }
  return g;
}

Dag gen_twist_gadget(int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  Dag g;
  if (k == 1) {
    g.n = 2;
    g.edges.push_back({0, 1});
    return g;
  }
  // u_i = i-1, v_i = k+i-1
  g.n = 2 * k;
  for (int i = 0; i + 1 < k; i++) g.edges.push_back({i, i + 1});
  for (int i = 0; i + 1 < k; i++) g.edges.push_back({k + i, k + i + 1});
  g.edges.push_back({k - 1, k});  // bridge u_k -> v_1
  for (int i = 0; i < k; i++) g.edges.push_back({i, k + i});
  return g;
}

}  // namespace dagbook
