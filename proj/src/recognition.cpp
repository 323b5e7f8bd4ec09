#include "dagbook/recognition.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace dagbook {

std::string op_kind_name(OpKind kind) {
  switch (kind) {
    case OpKind::O1: return "O1";
    case OpKind::O2: return "O2";
    case OpKind::O3: return "O3";
  }
  return "?";
}

OpKind reversed_op_kind(OpKind kind) {
  switch (kind) {
    case OpKind::O1: return OpKind::O1;
    case OpKind::O2: return OpKind::O3;
    case OpKind::O3: return OpKind::O2;
  }
  return kind;
}

Edge StellationOp::source_side_edge() const {
  if (kind == OpKind::O3) return {apex, base.source};
  return {base.source, apex};
}

Edge StellationOp::target_side_edge() const {
  if (kind == OpKind::O2) return {base.target, apex};
  return {apex, base.target};
}

Dag ConstructionSequence::replay() const {
  Dag g;
  g.n = vertex_count();
  g.edges.push_back(base_edge);
  for (const StellationOp& node : nodes) {
    g.edges.push_back(node.source_side_edge());
    g.edges.push_back(node.target_side_edge());
  }
  return g;
}

bool ConstructionSequence::uses_only(std::initializer_list<OpKind> allowed) const {
  for (const StellationOp& node : nodes) {
    if (std::find(allowed.begin(), allowed.end(), node.kind) == allowed.end()) {
      return false;
    }
  }
  return true;
}

bool ConstructionSequence::is_path_tree() const {
  for (const StellationOp& node : nodes) {
    if (node.left != -1 && node.right != -1) return false;
  }
  return true;
}

std::string ConstructionSequence::format() const {
  std::vector<int> parent(nodes.size(), -1);
  for (size_t i = 0; i < nodes.size(); i++) {
    if (nodes[i].left != -1) parent[nodes[i].left] = static_cast<int>(i);
    if (nodes[i].right != -1) parent[nodes[i].right] = static_cast<int>(i);
  }
  std::ostringstream out;
  for (size_t i = 0; i < nodes.size(); i++) {
    const StellationOp& node = nodes[i];
    out << op_kind_name(node.kind) << " base=" << node.base.source << ","
        << node.base.target << " apex=" << node.apex << " parent=" << parent[i]
        << "\n";
  }
  return out.str();
}

Dag ThreeTreeDecomposition::replay() const {
  Dag g;
  g.n = vertex_count();
  const auto& [s, m, t] = outer_triangle;
  g.edges.push_back({s, m});
  g.edges.push_back({m, t});
  g.edges.push_back({s, t});
  for (const ApexInsertion& ins : insertions) {
    for (const Edge& e : ins.edges) g.edges.push_back(e);
  }
  return g;
}

namespace {

struct AdjacencyState {
  std::vector<std::unordered_set<int>> adj;
  std::unordered_map<std::uint64_t, bool> forward;  // key(u,v) with u<v -> u->v?

  explicit AdjacencyState(const Dag& g) : adj(g.n) {
    for (const Edge& e : g.edges) {
      adj[e.source].insert(e.target);
      adj[e.target].insert(e.source);
      int u = e.source, v = e.target;
      bool fwd = u < v;
      if (!fwd) std::swap(u, v);
      forward[unordered_edge_key(u, v)] = fwd;
    }
  }

  bool adjacent(int u, int v) const { return adj[u].count(v) > 0; }

  // Directed edge between adjacent u, v.
  Edge directed(int u, int v) const {
    int a = std::min(u, v), b = std::max(u, v);
    bool fwd = forward.at(unordered_edge_key(a, b));
    return fwd ? Edge{a, b} : Edge{b, a};
  }

  void remove_edge(int u, int v) {
    adj[u].erase(v);
    adj[v].erase(u);
  }
};

[[noreturn]] void peel_fail(const std::string& what) {
  throw std::invalid_argument("peel: " + what);
}

}  // namespace

ConstructionSequence peel_outerplanar(const Dag& g, Edge base) {
  if (g.n < 2) peel_fail("graph has fewer than two vertices");
  if (!g.has_edge(base.source, base.target)) peel_fail("base is not an edge");
  if (g.edge_count() != 2 * g.n - 3 && g.n > 2) {
    peel_fail("edge count is not 2n-3");
  }
  if (g.n == 2) {
    if (g.edge_count() != 1) peel_fail("two vertices but several edges");
    return ConstructionSequence{base, {}, -1};
  }

  AdjacencyState state(g);
  std::vector<bool> alive(g.n, true);
  std::priority_queue<int, std::vector<int>, std::greater<int>> candidates;
  for (int v = 0; v < g.n; v++) {
    if (v != base.source && v != base.target && state.adj[v].size() == 2) {
      candidates.push(v);
    }
  }

  ConstructionSequence seq;
  seq.base_edge = base;
  // stellation hanging off each still-present edge
  std::unordered_map<std::uint64_t, int> pending;

  for (int step = 0; step < g.n - 2; step++) {
    int x = -1;
    while (!candidates.empty()) {
      int v = candidates.top();
      candidates.pop();
      if (!alive[v] || state.adj[v].size() != 2) continue;
      auto it = state.adj[v].begin();
      int a = *it++;
      int b = *it;
      if (!state.adjacent(a, b)) continue;  // never becomes removable again
      x = v;
      break;
    }
    if (x == -1) peel_fail("no removable degree-2 vertex; not maximal outerplanar");

    auto it = state.adj[x].begin();
    int a = *it++;
    int b = *it;
    Edge stellated = state.directed(a, b);
    int s = stellated.source, t = stellated.target;

    bool sx = state.directed(s, x).source == s;  // s -> x ?
    bool xt = state.directed(x, t).source == x;  // x -> t ?
    OpKind kind;
    if (sx && xt) {
      kind = OpKind::O1;
    } else if (sx && !xt) {
      kind = OpKind::O2;
    } else if (!sx && xt) {
      kind = OpKind::O3;
    } else {
      peel_fail("edge directions around apex form a cycle");
    }

    StellationOp node;
    node.kind = kind;
    node.base = stellated;
    node.apex = x;
    auto take = [&](int u, int v) {
      auto found = pending.find(unordered_edge_key(u, v));
      if (found == pending.end()) return -1;
      int idx = found->second;
      pending.erase(found);
      return idx;
    };
    node.left = take(s, x);
    node.right = take(x, t);
    int node_index = static_cast<int>(seq.nodes.size());
    seq.nodes.push_back(node);
    if (!pending.emplace(unordered_edge_key(s, t), node_index).second) {
      peel_fail("edge stellated twice; graph is a 2-tree, not outerplanar");
    }

    alive[x] = false;
    state.remove_edge(x, s);
    state.remove_edge(x, t);
    for (int v : {s, t}) {
      if (v != base.source && v != base.target && state.adj[v].size() == 2) {
        candidates.push(v);
      }
    }
  }

  auto root_it = pending.find(unordered_edge_key(base.source, base.target));
  if (root_it == pending.end() || pending.size() != 1) {
    peel_fail("peeling did not end at the base edge");
  }
  seq.root = root_it->second;
  return seq;
}

std::optional<ConstructionSequence> try_peel_outerplanar(const Dag& g, Edge base) {
  try {
    return peel_outerplanar(g, base);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::vector<Edge> outer_edge_candidates(const Dag& g) {
  if (g.n <= 3) return g.edges;
  auto adj = g.undirected_adjacency();
  std::vector<std::unordered_set<int>> sets(g.n);
  for (int v = 0; v < g.n; v++) sets[v] = {adj[v].begin(), adj[v].end()};
  std::vector<Edge> result;
  for (const Edge& e : g.edges) {
    int common = 0;
    const auto& small = sets[e.source].size() <= sets[e.target].size()
                            ? sets[e.source]
                            : sets[e.target];
    const auto& large = sets[e.source].size() <= sets[e.target].size()
                            ? sets[e.target]
                            : sets[e.source];
    for (int w : small) {
      if (large.count(w)) common++;
    }
    if (common <= 1) result.push_back(e);
  }
  return result;
}

std::optional<ConstructionSequence> decompose_as(const Dag& g, OdagClass cls) {
  for (const Edge& base : outer_edge_candidates(g)) {
    auto seq = try_peel_outerplanar(g, base);
    if (!seq) continue;
    bool fits = false;
    switch (cls) {
      case OdagClass::Transitive: fits = seq->uses_only({OpKind::O1}); break;
      case OdagClass::SingleSource: fits = seq->uses_only({OpKind::O1, OpKind::O2}); break;
      case OdagClass::Monotone: fits = seq->uses_only({OpKind::O2, OpKind::O3}); break;
      case OdagClass::Outerpath: fits = seq->is_path_tree(); break;
    }
    if (fits) return seq;
  }
  return std::nullopt;
}

namespace {

// (source, middle, sink) of an acyclically oriented triangle.
std::array<int, 3> orient_triangle(const AdjacencyState& state, int a, int b, int c) {
  std::array<int, 3> verts = {a, b, c};
  std::array<int, 3> outdeg = {0, 0, 0};
  for (int i = 0; i < 3; i++) {
    for (int j = 0; j < 3; j++) {
      if (i == j) continue;
      if (state.directed(verts[i], verts[j]).source == verts[i]) outdeg[i]++;
    }
  }
  std::array<int, 3> result = {-1, -1, -1};
  for (int i = 0; i < 3; i++) {
    if (outdeg[i] == 2) result[0] = verts[i];
    if (outdeg[i] == 1) result[1] = verts[i];
    if (outdeg[i] == 0) result[2] = verts[i];
  }
  if (result[0] == -1 || result[1] == -1 || result[2] == -1) {
    peel_fail("cyclically oriented triangle");
  }
  return result;
}

}  // namespace

namespace {

ThreeTreeDecomposition peel_3tree_impl(const Dag& g, const std::vector<bool>& forbidden);

std::uint64_t triple_key(int a, int b, int c) {
  std::array<int, 3> v = {a, b, c};
  std::sort(v.begin(), v.end());
  return (static_cast<std::uint64_t>(v[0]) << 42) |
         (static_cast<std::uint64_t>(v[1]) << 21) | static_cast<std::uint64_t>(v[2]);
}

}  // namespace

ThreeTreeDecomposition peel_3tree(const Dag& g) {
  ThreeTreeDecomposition dec = peel_3tree_impl(g, std::vector<bool>(g.n, false));

  // The peel may terminate at a separating triangle with apexes stacked on
  // both of its sides. Re-root at a genuine face: walk outward through the
  // second stack until an unhosted triple appears, then peel again keeping
  // that triple.
  std::unordered_map<std::uint64_t, std::vector<int>> hosts;
  for (size_t i = 0; i < dec.insertions.size(); i++) {
    const auto& h = dec.insertions[i].host;
    hosts[triple_key(h[0], h[1], h[2])].push_back(static_cast<int>(i));
  }
  auto root_it = hosts.find(
      triple_key(dec.outer_triangle[0], dec.outer_triangle[1], dec.outer_triangle[2]));
  if (root_it == hosts.end() || root_it->second.size() < 2) return dec;

  std::array<int, 3> cur = dec.outer_triangle;  // oriented (source, middle, sink)
  int outward = dec.insertions[root_it->second[1]].apex;
  while (true) {
    auto it = hosts.find(triple_key(cur[0], outward, cur[2]));
    if (it == hosts.end()) break;
    const ApexInsertion& next = dec.insertions[it->second[0]];
    cur = next.host;  // the oriented form of {cur[0], outward, cur[2]}
    outward = next.apex;
  }
  std::vector<bool> forbidden(g.n, false);
  forbidden[cur[0]] = forbidden[outward] = forbidden[cur[2]] = true;
  return peel_3tree_impl(g, forbidden);
}

namespace {

ThreeTreeDecomposition peel_3tree_impl(const Dag& g, const std::vector<bool>& forbidden) {
  if (g.n < 3) peel_fail("graph has fewer than three vertices");
  if (g.edge_count() != 3 * g.n - 6) peel_fail("edge count is not 3n-6");

  AdjacencyState state(g);
  std::vector<bool> alive(g.n, true);

  // A degree-3 vertex keeps its neighbor triple for as long as it stays at
  // degree 3, so its insertion record is stable from the moment it becomes
  // a candidate. Face-consistent removals are preferred (ranked first),
  // lowest id on ties; otherwise an arbitrary elimination order could break
  // the face pattern of a graph that does admit a consistent construction.
  auto make_insertion = [&](int v) {
    std::array<int, 3> nb{};
    int i = 0;
    for (int w : state.adj[v]) nb[i++] = w;
    ApexInsertion ins;
    ins.host = orient_triangle(state, nb[0], nb[1], nb[2]);
    ins.apex = v;
    for (int j = 0; j < 3; j++) ins.edges[j] = state.directed(ins.host[j], v);
    ins.face_consistent =
        ins.edges[0].source == ins.host[0] && ins.edges[2].target == ins.host[2];
    return ins;
  };
  auto simplicial = [&](int v) {
    if (state.adj[v].size() != 3) return false;
    std::array<int, 3> nb{};
    int i = 0;
    for (int w : state.adj[v]) nb[i++] = w;
    return state.adjacent(nb[0], nb[1]) && state.adjacent(nb[0], nb[2]) &&
           state.adjacent(nb[1], nb[2]);
  };

  using Candidate = std::pair<int, int>;  // (0 consistent / 1 not, vertex id)
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<Candidate>>
      candidates;
  auto push_candidate = [&](int v) {
    if (forbidden[v] || !simplicial(v)) return;
    candidates.push({make_insertion(v).face_consistent ? 0 : 1, v});
  };
  for (int v = 0; v < g.n; v++) push_candidate(v);

  std::vector<ApexInsertion> removed;
  for (int step = 0; step < g.n - 3; step++) {
    int x = -1;
    while (!candidates.empty()) {
      int v = candidates.top().second;
      candidates.pop();
      if (!alive[v] || !simplicial(v)) continue;
      x = v;
      break;
    }
    if (x == -1) peel_fail("no simplicial degree-3 vertex; not a planar 3-tree");

    ApexInsertion ins = make_insertion(x);
    removed.push_back(ins);
    alive[x] = false;
    for (int w : ins.host) state.remove_edge(x, w);
    for (int w : ins.host) {
      if (alive[w]) push_candidate(w);
    }
  }

  std::vector<int> rest;
  for (int v = 0; v < g.n; v++) {
    if (alive[v]) rest.push_back(v);
  }
  if (rest.size() != 3 || !state.adjacent(rest[0], rest[1]) ||
      !state.adjacent(rest[0], rest[2]) || !state.adjacent(rest[1], rest[2])) {
    peel_fail("peeling did not end at a triangle");
  }

  ThreeTreeDecomposition dec;
  dec.outer_triangle = orient_triangle(state, rest[0], rest[1], rest[2]);
  dec.insertions.assign(removed.rbegin(), removed.rend());
  dec.face_consistent = true;
  for (const ApexInsertion& ins : dec.insertions) {
    dec.face_consistent = dec.face_consistent && ins.face_consistent;
  }
  return dec;
}

}  // namespace

std::optional<ThreeTreeDecomposition> try_peel_3tree(const Dag& g) {
  try {
    return peel_3tree(g);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

ClassTags classify(const Dag& g) {
  ClassTags tags;
  if (g.n == 0) return tags;
  tags.single_source = g.sources().size() == 1;
  tags.single_sink = g.sinks().size() == 1;

  if (g.n >= 2 && (g.n == 2 ? g.edge_count() == 1 : g.edge_count() == 2 * g.n - 3)) {
    for (const Edge& base : outer_edge_candidates(g)) {
      auto seq = try_peel_outerplanar(g, base);
      if (!seq) continue;
      tags.maximal_outerplanar = true;
      tags.transitive_only = tags.transitive_only || seq->uses_only({OpKind::O1});
      tags.monotone = tags.monotone || seq->uses_only({OpKind::O2, OpKind::O3});
      tags.outerpath = tags.outerpath || seq->is_path_tree();
      if (tags.transitive_only && tags.monotone && tags.outerpath) break;
    }
  }

  if (g.n >= 3 && g.edge_count() == 3 * g.n - 6) {
    if (auto dec = try_peel_3tree(g)) {
      tags.three_tree = true;
      tags.face_consistent_3tree = dec->face_consistent;
    }
  }
  return tags;
}

bool st_upward_check(const Dag& g) {
  auto sources = g.sources();
  auto sinks = g.sinks();
  if (sources.size() != 1 || sinks.size() != 1) {
    throw std::invalid_argument(
        "st_upward_check needs exactly one source and one sink");
  }
  std::vector<Edge> edges = g.edges;
  if (!g.has_edge(sources[0], sinks[0]) && !g.has_edge(sinks[0], sources[0])) {
    edges.push_back({sources[0], sinks[0]});
  }
  return is_planar(g.n, edges);
}

}  // namespace dagbook
